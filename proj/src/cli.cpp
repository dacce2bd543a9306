#include "etaq/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "etaq/json_io.hpp"
#include "etaq/parse.hpp"

namespace etaq {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotSmooth: return 3;
        case ErrorKind::InternalConsistency: return 4;
        default: return 2;
    }
}

struct CurveOptions {
    std::string curve;
    std::string field = "Q";
    std::string bidegree;

    void attach(CLI::App* cmd) {
        cmd->add_option("--curve", curve, "curve equation, or @file to read one")->required();
        cmd->add_option("--field", field, "coefficient field: Q, Q(z<m>) or Fp:<p>");
        cmd->add_option("--bidegree", bidegree, "expected bidegree d1,d2");
    }

    BiForm load() const {
        std::string text = curve;
        if (!text.empty() && text.front() == '@') {
            std::ifstream in(text.substr(1));
            if (!in) fail(ErrorKind::IoError, "cannot read curve file '" + text.substr(1) + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        std::optional<std::pair<int, int>> bd;
        if (!bidegree.empty()) {
            const auto comma = bidegree.find(',');
            if (comma == std::string::npos)
                fail(ErrorKind::ParseError, "--bidegree expects d1,d2");
            try {
                bd = std::make_pair(std::stoi(bidegree.substr(0, comma)),
                                    std::stoi(bidegree.substr(comma + 1)));
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "--bidegree expects d1,d2");
            }
        }
        return parse_biform(text, FieldSpec::parse(field), bd);
    }
};

Json curve_info(const BiForm& h) {
    return Json{{"expression", to_expression(h)},
                {"field", h.field().name()},
                {"bidegree", Json::array({h.deg_x(), h.deg_y()})}};
}

void emit(std::ostream& out, const Json& doc, bool text, const std::string& rendered) {
    if (text) {
        out << rendered;
    } else {
        out << doc.dump(2) << "\n";
    }
}

std::string render_torsion(const TorsionReport& rep) {
    std::ostringstream s;
    s << "torsion kernel dims:";
    for (const auto& [n, d] : rep.kernel_dims) s << " " << n << "->" << d;
    if (rep.order) {
        s << "\norder: " << *rep.order << "\n";
    } else {
        s << "\norder: not found up to " << rep.n_max << "\n";
    }
    return s.str();
}

std::string render_symprod(const SymProdTable& t) {
    std::ostringstream s;
    s << "k = " << t.k << "   genus = " << t.g << "   genus(Gamma) = " << t.genus_gamma << "\n";
    s << "K^2 = " << t.K2 << "   K.Delta = " << t.KDelta << "   Delta^2 = " << t.Delta2 << "\n";
    s << "pairing matrix (Gamma, K, Delta):\n";
    for (const auto& row : t.gamma_matrix) {
        s << "  [";
        for (const auto& v : row) s << std::setw(12) << v;
        s << " ]\n";
    }
    s << "kernel vector: (" << t.kernel_vector[0] << ", " << t.kernel_vector[1] << ", "
      << t.kernel_vector[2] << ")\n";
    s << "nef rays (Delta,K)-coordinates: (" << t.nef_ray_diag[0] << "," << t.nef_ray_diag[1]
      << ") and (" << t.nef_ray_ruling[0] << "," << t.nef_ray_ruling[1] << ")\n";
    return s.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analyzer for curves of bidegree (k,k) on the quadric surface"};
    app.require_subcommand(1);
    bool text = false;
    app.add_flag("--text,!--json", text, "plain-text output instead of JSON");

    CurveOptions analyze_curve, grid_curve, torsion_curve, grilled_curve;
    int torsion_nmax = 0, analyze_nmax = 0, grilled_n = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "smoothness + grid + torsion + verdict");
    analyze->fallthrough();
    analyze_curve.attach(analyze);
    analyze->add_option("--nmax", analyze_nmax, "torsion search bound (default 4k)");

    CLI::App* grid = app.add_subcommand("grid-test", "coefficient rank and grid membership");
    grid->fallthrough();
    grid_curve.attach(grid);

    CLI::App* torsion = app.add_subcommand("torsion", "torsion order of the ruling difference");
    torsion->fallthrough();
    torsion_curve.attach(torsion);
    torsion->add_option("--nmax", torsion_nmax, "search bound (default 4k)");

    CLI::App* grilled = app.add_subcommand("grilled", "grilled-type test at a torsion twist");
    grilled->fallthrough();
    grilled_curve.attach(grilled);
    grilled->add_option("--n", grilled_n, "twist with n*eta = 0")->required();

    int sym_k = 3;
    CLI::App* symprod = app.add_subcommand("symprod", "intersection table of the symmetric square");
    symprod->fallthrough();
    symprod->add_option("--k", sym_k, "bidegree parameter k >= 3")->required();

    SamplerConfig sample_cfg;
    std::string sample_field = "Q";
    std::uint64_t sample_seed = 0;
    CLI::App* sample = app.add_subcommand("sample-grid", "deterministic grid-family samples");
    sample->fallthrough();
    sample->add_option("--k", sample_cfg.k, "bidegree parameter");
    sample->add_option("--seed", sample_seed, "RNG seed");
    sample->add_option("--height", sample_cfg.height, "coefficient height bound");
    sample->add_option("--count", sample_cfg.count, "number of samples");
    sample->add_option("--field", sample_field, "coefficient field");

    std::string sf_alpha, sf_beta, sf_gamma;
    CLI::App* sigma = app.add_subcommand("sigma-family", "genus-4 member with an order-5 twist");
    sigma->fallthrough();
    sigma->add_option("--alpha", sf_alpha, "alpha in Q(z5)")->required();
    sigma->add_option("--beta", sf_beta, "beta in Q(z5)")->required();
    sigma->add_option("--gamma", sf_gamma, "gamma in Q(z5)")->required();

    int secant_k = 3;
    std::uint64_t secant_seed = 7;
    CLI::App* secant = app.add_subcommand("secant-rank", "tangent rank of the rank-2 locus");
    secant->fallthrough();
    secant->add_option("--k", secant_k, "bidegree parameter")->required();
    secant->add_option("--seed", secant_seed, "RNG seed");

    SurveyConfig survey_cfg;
    std::string survey_csv_path;
    CLI::App* survey = app.add_subcommand("survey-fp", "finite-field torsion survey");
    survey->fallthrough();
    survey->add_option("--k", survey_cfg.k, "bidegree parameter");
    survey->add_option("--p", survey_cfg.p, "field characteristic (prime, > 2k)");
    survey->add_option("--nmax", survey_cfg.n_max, "torsion search bound");
    survey->add_option("--trials", survey_cfg.trials, "number of curves");
    survey->add_option("--seed", survey_cfg.seed, "base seed; trial t uses seed + t");
    survey->add_flag("--grid", survey_cfg.grid_sampler, "sample grid curves instead of dense ones");
    survey->add_option("--csv", survey_csv_path, "also write an order,count CSV file");

    std::vector<std::string> argv_copy = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("etaq");
        for (const auto& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Json doc{{"schema", 1}, {"ok", false},
                 {"error", Json{{"kind", "UsageError"}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        err << e.what() << "\n";
        return 2;
    }

    try {
        Json doc{{"schema", 1}, {"ok", true}};

        if (*analyze) {
            const BiForm h = analyze_curve.load();
            doc["command"] = "analyze";
            doc["curve"] = curve_info(h);
            const CurveContext ctx = CurveContext::analyze(h);
            doc["k"] = ctx.k();
            doc["genus"] = ctx.genus();
            doc["smoothness"] = to_json(ctx.smoothness());
            doc["grid"] = to_json(grid_rank(h));
            if (!ctx.is_smooth()) {
                doc["ok"] = false;
                emit(out, doc, text, "curve is singular; torsion analysis skipped\n");
                return 3;
            }
            const int nmax = analyze_nmax > 0 ? analyze_nmax : 4 * ctx.k();
            const TorsionReport rep = torsion_order(ctx, nmax);
            doc["torsion"] = to_json(rep);
            doc["verdict"] = to_json(finite_generation_verdict(ctx, nmax));
            std::ostringstream s;
            s << "curve over " << h.field().name() << ", k = " << ctx.k() << ", genus "
              << ctx.genus() << "\nsmooth: yes\ngrid rank: " << grid_rank(h).rank << "\n"
              << render_torsion(rep) << "verdict: " << doc["verdict"]["kind"].get<std::string>()
              << "\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*grid) {
            const BiForm h = grid_curve.load();
            const GridReport rep = grid_rank(h);
            doc["command"] = "grid-test";
            doc["curve"] = curve_info(h);
            doc["grid"] = to_json(rep);
            std::ostringstream s;
            s << "rank " << rep.rank << (rep.is_grid ? " (grid family member)" : " (not grid)")
              << "\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*torsion) {
            const BiForm h = torsion_curve.load();
            const CurveContext ctx = CurveContext::analyze(h);
            ctx.require_smooth("torsion");
            const int nmax = torsion_nmax > 0 ? torsion_nmax : 4 * ctx.k();
            const TorsionReport rep = torsion_order(ctx, nmax);
            doc["command"] = "torsion";
            doc["curve"] = curve_info(h);
            doc["torsion"] = to_json(rep);
            emit(out, doc, text, render_torsion(rep));
            return 0;
        }

        if (*grilled) {
            const BiForm h = grilled_curve.load();
            const CurveContext ctx = CurveContext::analyze(h);
            ctx.require_smooth("grilled");
            doc["command"] = "grilled";
            doc["curve"] = curve_info(h);
            // Refuse to run without a torsion certificate at the requested
            // twist, reporting which kernels were tried.
            Json tried = Json::array();
            bool have_section = false;
            for (int n = ctx.k(); n <= grilled_n; ++n) {
                const int d = kernel_dim_at(ctx, n);
                tried.push_back(Json::array({n, d}));
                if (n == grilled_n && d > 0) have_section = true;
            }
            if (grilled_n < ctx.k() || !have_section) {
                doc["ok"] = false;
                doc["error"] =
                    Json{{"kind", Error::kind_name(ErrorKind::NoTorsionSection)},
                         {"message", "no torsion section at n = " + std::to_string(grilled_n)},
                         {"tried_kernel_dims", tried}};
                emit(out, doc, text, "no torsion section at the requested twist\n");
                return 2;
            }
            const GrilledReport rep = is_grilled(ctx, grilled_n);
            doc["grilled"] = to_json(rep);
            std::ostringstream s;
            s << "n = " << rep.n << ": dim W1 = " << rep.dim_w1 << ", dim W2 = " << rep.dim_w2
              << ", intersection " << rep.dim_intersection << " in ambient " << rep.ambient
              << (rep.is_grilled ? " -> grilled" : " -> not grilled") << "\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*symprod) {
            const SymProdTable t = intersection_table(sym_k);
            doc["command"] = "symprod";
            doc["table"] = to_json(t);
            emit(out, doc, text, render_symprod(t));
            return 0;
        }

        if (*sample) {
            sample_cfg.field = &FieldSpec::parse(sample_field);
            doc["command"] = "sample-grid";
            Json curves = Json::array();
            std::ostringstream s;
            for (int i = 0; i < sample_cfg.count; ++i) {
                SamplerConfig cfg = sample_cfg;
                cfg.seed = sample_seed + static_cast<std::uint64_t>(i);
                const BiForm h = sample_grid_curve(cfg);
                curves.push_back(to_json(h));
                s << to_expression(h) << "\n";
            }
            doc["curves"] = std::move(curves);
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*sigma) {
            const FieldSpec& F5 = FieldSpec::cyclotomic(5);
            const SigmaCurve c = sigma_family_g4(
                {parse_scalar(sf_alpha, F5), parse_scalar(sf_beta, F5), parse_scalar(sf_gamma, F5)});
            doc["command"] = "sigma-family";
            doc["curve"] = to_json(c.h);
            doc["character"] = c.character;
            doc["order_divides"] = 5;
            doc["note"] = "the member carries an order-5 automorphism with rational quotient, "
                          "so the order of the ruling difference divides 5";
            std::ostringstream s;
            s << to_expression(c.h) << "\ncharacter: " << c.character << "\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*secant) {
            const int r = secant_jacobian_rank(secant_k, secant_seed);
            doc["command"] = "secant-rank";
            doc["k"] = secant_k;
            doc["rank"] = r;
            doc["expected"] = 4 * secant_k;
            std::ostringstream s;
            s << "rank " << r << " (expected " << 4 * secant_k << ")\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        if (*survey) {
            const SurveyHistogram h = survey_fp(survey_cfg);
            doc["command"] = "survey-fp";
            doc["survey"] = to_json(h);
            if (!survey_csv_path.empty()) {
                std::ofstream f(survey_csv_path);
                if (!f) fail(ErrorKind::IoError, "cannot write '" + survey_csv_path + "'");
                f << survey_csv(h);
            }
            std::ostringstream s;
            s << "trials " << h.trials << ", singular " << h.singular << ", open "
              << h.order_not_found << "\n";
            for (const auto& [order, count] : h.order_counts)
                s << "order " << order << ": " << count << "\n";
            emit(out, doc, text, s.str());
            return 0;
        }

        fail(ErrorKind::InternalConsistency, "no subcommand dispatched");
    } catch (const Error& e) {
        Json doc{{"schema", 1},
                 {"ok", false},
                 {"error", Json{{"kind", e.kind_name()}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        err << e.kind_name() << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        Json doc{{"schema", 1},
                 {"ok", false},
                 {"error", Json{{"kind", "Unexpected"}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        err << "unexpected error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace etaq
