#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "etaq/json_io.hpp"
#include "etaq/parse.hpp"

namespace py = pybind11;
using namespace etaq;

namespace {

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

BiForm load(const std::string& curve, const std::string& field) {
    return parse_biform(curve, FieldSpec::parse(field));
}

py::object analyze(const std::string& curve, const std::string& field, int nmax) {
    const BiForm h = load(curve, field);
    const CurveContext ctx = CurveContext::analyze(h);
    Json doc{{"expression", to_expression(h)},
             {"field", h.field().name()},
             {"k", ctx.k()},
             {"genus", ctx.genus()},
             {"smoothness", to_json(ctx.smoothness())},
             {"grid", to_json(grid_rank(h))}};
    if (ctx.is_smooth()) {
        const int bound = nmax > 0 ? nmax : 4 * ctx.k();
        doc["torsion"] = to_json(torsion_order(ctx, bound));
        doc["verdict"] = to_json(finite_generation_verdict(ctx, bound));
    }
    return to_py(doc);
}

py::object grid_test(const std::string& curve, const std::string& field) {
    return to_py(to_json(grid_rank(load(curve, field))));
}

py::object smoothness(const std::string& curve, const std::string& field) {
    return to_py(to_json(singular_locus(load(curve, field))));
}

py::object torsion(const std::string& curve, const std::string& field, int nmax) {
    const CurveContext ctx = CurveContext::analyze(load(curve, field));
    ctx.require_smooth("torsion");
    return to_py(to_json(torsion_order(ctx, nmax > 0 ? nmax : 4 * ctx.k())));
}

py::object grilled(const std::string& curve, int n, const std::string& field) {
    const CurveContext ctx = CurveContext::analyze(load(curve, field));
    ctx.require_smooth("grilled");
    return to_py(to_json(is_grilled(ctx, n)));
}

int h0(const std::string& curve, const std::string& field, int a, int b) {
    const CurveContext ctx = CurveContext::analyze(load(curve, field));
    return h0_curve(ctx, a, b).dimension;
}

py::object symprod_table(int k) { return to_py(to_json(intersection_table(k))); }

py::object sample_grid(int k, std::uint64_t seed, long height, const std::string& field,
                       int count) {
    py::list out;
    for (int i = 0; i < count; ++i) {
        SamplerConfig cfg;
        cfg.k = k;
        cfg.field = &FieldSpec::parse(field);
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        cfg.height = height;
        out.append(to_expression(sample_grid_curve(cfg)));
    }
    return out;
}

py::object sigma_family(const std::string& alpha, const std::string& beta,
                        const std::string& gamma) {
    const FieldSpec& F5 = FieldSpec::cyclotomic(5);
    const SigmaCurve c = sigma_family_g4(
        {parse_scalar(alpha, F5), parse_scalar(beta, F5), parse_scalar(gamma, F5)});
    return to_py(Json{{"expression", to_expression(c.h)}, {"character", c.character}});
}

py::object survey(int k, std::uint64_t p, int n_max, int trials, std::uint64_t seed, bool grid) {
    SurveyConfig cfg;
    cfg.k = k;
    cfg.p = p;
    cfg.n_max = n_max;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.grid_sampler = grid;
    return to_py(to_json(survey_fp(cfg)));
}

std::string canonical_expression(const std::string& curve, const std::string& field) {
    return to_expression(load(curve, field));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact torsion, grid and grilled-type analysis for curves of bidegree (k,k) "
              "on the quadric surface";

    static py::exception<Error> exc(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(e.kind_name()) + ": " + e.what()).c_str());
        }
    });

    m.def("analyze", &analyze, py::arg("curve"), py::arg("field") = "Q", py::arg("nmax") = 0,
          "smoothness, grid rank, torsion order and the finite-generation verdict");
    m.def("smoothness", &smoothness, py::arg("curve"), py::arg("field") = "Q");
    m.def("grid_test", &grid_test, py::arg("curve"), py::arg("field") = "Q");
    m.def("torsion", &torsion, py::arg("curve"), py::arg("field") = "Q", py::arg("nmax") = 0);
    m.def("grilled", &grilled, py::arg("curve"), py::arg("n"), py::arg("field") = "Q");
    m.def("h0", &h0, py::arg("curve"), py::arg("field"), py::arg("a"), py::arg("b"),
          "h^0(C, O_C(a,b)) for a certified smooth curve");
    m.def("h1_dim", &h1_dim, py::arg("a"), py::arg("b"), "dim H^1(Q, O(a,b)) on the quadric");
    m.def("symprod_table", &symprod_table, py::arg("k"));
    m.def("sample_grid", &sample_grid, py::arg("k") = 3, py::arg("seed") = 0,
          py::arg("height") = 9, py::arg("field") = "Q", py::arg("count") = 1);
    m.def("sigma_family", &sigma_family, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    m.def("secant_rank", &secant_jacobian_rank, py::arg("k"), py::arg("seed") = 7);
    m.def("survey_fp", &survey, py::arg("k") = 3, py::arg("p") = 7, py::arg("n_max") = 20,
          py::arg("trials") = 50, py::arg("seed") = 1, py::arg("grid") = false);
    m.def("canonical_expression", &canonical_expression, py::arg("curve"), py::arg("field") = "Q");
}
