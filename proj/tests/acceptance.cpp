// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "etaq/families.hpp"
#include "etaq/json_io.hpp"
#include "etaq/parse.hpp"
#include "etaq/symprod.hpp"

using namespace etaq;

namespace {

struct Checker {
    int failures = 0;
    std::ostringstream log;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            log << "      failed: " << what << "\n";
        }
    }
};

bool run_criterion(int number, const std::string& title,
                   const std::function<void(Checker&)>& body, int& failed_total) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    const bool ok = c.failures == 0;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << ms << " ms)\n";
    if (!ok) {
        std::cout << c.log.str();
        ++failed_total;
    }
    return ok;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

BiForm random_dense(Rng& rng, const FieldSpec& f, int k, long height) {
    BiForm h(f, k, k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            const long v = f.is_prime_field()
                               ? rng.uniform(0, static_cast<long>(f.characteristic()) - 1)
                               : rng.uniform(-height, height);
            h.set_coeff(i, j, Scalar::of_int(f, v));
        }
    return h;
}

BiForm random_grid(Rng& rng, const FieldSpec& f, int k, long height) {
    auto uni = [&](int deg) {
        std::vector<Scalar> v;
        for (int i = 0; i <= deg; ++i) {
            const long x = f.is_prime_field()
                               ? rng.uniform(0, static_cast<long>(f.characteristic()) - 1)
                               : rng.uniform(-height, height);
            v.push_back(Scalar::of_int(f, x));
        }
        return v;
    };
    return BiForm::outer(f, uni(k), uni(k)) + BiForm::outer(f, uni(k), uni(k));
}

std::vector<CurveContext> smooth_samples(Rng& rng, const FieldSpec& f, int k, int count,
                                         long height) {
    std::vector<CurveContext> out;
    while (static_cast<int>(out.size()) < count) {
        const BiForm h = random_dense(rng, f, k, height);
        if (h.is_zero()) continue;
        CurveContext ctx = CurveContext::analyze(h);
        if (ctx.is_smooth()) out.push_back(std::move(ctx));
    }
    return out;
}

// Pointwise singular test used by the exhaustive enumeration.
bool singular_at(const BiForm& h, const Scalar& x0, const Scalar& x1, const Scalar& y0,
                 const Scalar& y1) {
    if (!h.eval(x0, x1, y0, y1).is_zero()) return false;
    for (const BiForm& g : {h.d_x0(), h.d_x1(), h.d_y0(), h.d_y1()})
        if (!g.eval(x0, x1, y0, y1).is_zero()) return false;
    return true;
}

std::vector<ProjectivePoint> enumerate_singular(const BiForm& h) {
    const FieldSpec& f = h.field();
    const long p = static_cast<long>(f.characteristic());
    std::vector<std::pair<Scalar, Scalar>> line;
    for (long t = 0; t < p; ++t) line.emplace_back(Scalar::of_int(f, t), Scalar::one(f));
    line.emplace_back(Scalar::one(f), Scalar::zero(f));
    std::vector<ProjectivePoint> out;
    for (const auto& [a, b] : line)
        for (const auto& [c, d] : line)
            if (singular_at(h, a, b, c, d)) out.push_back({a, b, c, d});
    return out;
}

} // namespace

int main() {
    int failed = 0;

    run_criterion(1, "intersection tables for k = 3..20", [](Checker& c) {
        for (int k = 3; k <= 20; ++k) {
            const SymProdTable t = intersection_table(k);
            c.require(t.g == static_cast<std::int64_t>(k - 1) * (k - 1), "genus");
            c.require(t.K2 == (t.g - 1) * (4 * t.g - 9), "K^2 formula");
            c.require(t.KDelta == 6 * (t.g - 1), "K.Delta formula");
            c.require(t.Delta2 == -4 * (t.g - 1), "Delta^2 formula");
            c.require(t.kernel_annihilated, "kernel vector annihilated");
            c.require(t.ray_diag_orthogonal_delta, "(2K+3Delta).Delta = 0");
            c.require(t.ray_ruling_isotropic, "(2K+(5-2k)Delta)^2 = 0");
            c.require(t.presentations_agree, "two presentations agree");
            if (k == 3) {
                c.require(t.K2 == 21 && t.KDelta == 18 && t.Delta2 == -12 && t.g == 4,
                          "k = 3 values");
                c.require(t.genus_gamma == 4, "k = 3 ruling genus");
                c.require(t.kernel_vector == std::array<std::int64_t, 3>{4, -2, 1},
                          "k = 3 kernel vector");
            }
        }
    }, failed);

    // Criteria 2 and 3 share the same certified-smooth random curves.
    std::vector<CurveContext> sweep_curves;
    {
        Rng rng(20240601);
        const FieldSpec& Q = FieldSpec::rationals();
        auto k3 = smooth_samples(rng, Q, 3, 12, 5);
        auto k4 = smooth_samples(rng, Q, 4, 8, 4);
        for (auto& ctx : k3) sweep_curves.push_back(std::move(ctx));
        for (auto& ctx : k4) sweep_curves.push_back(std::move(ctx));
    }

    run_criterion(2, "cohomology regression on 20 random smooth curves", [&](Checker& c) {
        c.require(sweep_curves.size() >= 20, "at least 20 certified smooth curves");
        for (const CurveContext& ctx : sweep_curves) {
            const int k = ctx.k();
            for (int n = 1; n <= k - 1; ++n) {
                c.require(h0_curve(ctx, n, 0).dimension == n + 1, "h0(n,0) = n+1");
                c.require(h0_curve(ctx, k - 2 - n, k - 2).dimension == (k - n - 1) * (k - 1),
                          "Serre-dual h1 = (k-n-1)(k-1)");
            }
            c.require(h0_curve(ctx, k, 0).dimension == 2 * k, "h0(k,0) = 2k");
        }
    }, failed);

    run_criterion(3, "Riemann-Roch sweep over |a|,|b| <= k+2", [&](Checker& c) {
        for (const CurveContext& ctx : sweep_curves) {
            const int k = ctx.k();
            const int g = ctx.genus();
            for (int a = -(k + 2); a <= k + 2; ++a)
                for (int b = -(k + 2); b <= k + 2; ++b) {
                    const int lhs = h0_curve(ctx, a, b).dimension -
                                    h0_curve(ctx, k - 2 - a, k - 2 - b).dimension;
                    if (lhs != (a + b) * k + 1 - g) {
                        c.require(false, "RR identity at (" + std::to_string(a) + "," +
                                             std::to_string(b) + ")");
                        return;
                    }
                }
        }
    }, failed);

    run_criterion(4, "two-path torsion oracle on 100 smooth samples", [](Checker& c) {
        const FieldSpec& Q = FieldSpec::rationals();
        const FieldSpec& F101 = FieldSpec::prime_field(101);
        int tested = 0;
        for (const FieldSpec* f : {&Q, &F101}) {
            Rng rng(f->is_prime_field() ? 811 : 313);
            int used = 0;
            while (used < 50) {
                const bool grid = used % 2 == 0;
                const BiForm h = grid ? random_grid(rng, *f, 3, 9) : random_dense(rng, *f, 3, 9);
                if (h.is_zero()) continue;
                const CurveContext ctx = CurveContext::analyze(h);
                if (!ctx.is_smooth()) continue;
                ++used;
                ++tested;
                const bool minors = grid_rank(h).is_grid;
                const TorsionCheck kernel = is_n_torsion(ctx, 3);
                if (minors != kernel.torsion) {
                    c.require(false, "two-path disagreement over " + f->name());
                    return;
                }
                if (is_n_torsion(ctx, 1).torsion || is_n_torsion(ctx, 2).torsion ||
                    kernel_dim_at(ctx, 2) != 0) {
                    c.require(false, "torsion reported below k");
                    return;
                }
            }
        }
        c.require(tested == 100, "exactly 100 samples");
    }, failed);

    run_criterion(5, "grid family ranks and secant dimensions", [](Checker& c) {
        const FieldSpec& Q = FieldSpec::rationals();
        int grids = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            SamplerConfig cfg;
            cfg.k = 3;
            cfg.seed = seed;
            const BiForm h = sample_grid_curve(cfg);
            if (h.is_zero()) continue;
            ++grids;
            const GridReport rep = grid_rank(h);
            if (!rep.is_grid || !rep.factorization) {
                c.require(false, "grid sample with rank > 2");
                return;
            }
            const auto& fac = *rep.factorization;
            if (!(BiForm::outer(Q, fac.f1, fac.g2) + BiForm::outer(Q, fac.g1, fac.f2) == h)) {
                c.require(false, "factorization fails to reassemble");
                return;
            }
        }
        c.require(grids >= 99, "sample count");
        c.require(secant_jacobian_rank(3, 7) == 12, "secant rank k=3");
        c.require(secant_jacobian_rank(4, 7) == 16, "secant rank k=4");
        c.require(secant_jacobian_rank(5, 7) == 20, "secant rank k=5");
    }, failed);

    run_criterion(6, "order-5 genus-4 curves: torsion and grilled type", [](Checker& c) {
        const FieldSpec& F = FieldSpec::cyclotomic(5);
        const Scalar z = Scalar::zeta(F);

        const SigmaCurve grilled_member =
            sigma_family_g4({-z, z.pow(3) + z.pow(2) + z, z.pow(2) + z});
        const CurveContext ctx1 = CurveContext::analyze(grilled_member.h);
        c.require(ctx1.is_smooth(), "first member smooth");
        const TorsionReport t1 = torsion_order(ctx1, 10);
        c.require(t1.order && *t1.order == 5, "first member order 5");
        c.require(t1.kernel_dims.size() == 3 && t1.kernel_dims[0].second == 0 &&
                      t1.kernel_dims[1].second == 0 && t1.kernel_dims[2].second == 1,
                  "first member kernel dims 0,0,1");
        const GrilledReport g1 = is_grilled(ctx1, 5);
        c.require(g1.is_grilled, "first member grilled at n=5");

        const SigmaCurve plain_member =
            sigma_family_g4({-Scalar::one(F), Scalar::one(F), Scalar::one(F)});
        const CurveContext ctx2 = CurveContext::analyze(plain_member.h);
        c.require(ctx2.is_smooth(), "second member smooth");
        const TorsionReport t2 = torsion_order(ctx2, 10);
        c.require(t2.order && *t2.order == 5, "second member order 5");
        const GrilledReport g2 = is_grilled(ctx2, 5);
        c.require(!g2.is_grilled, "second member not grilled at n=5");
        c.require(g2.dim_w1 == 6 && g2.dim_w2 == 6, "dim W1 = dim W2 = 6");
        c.require(g2.ambient == 12, "ambient h0(C, O_C(5,0)) = 12");
    }, failed);

    run_criterion(7, "smoothness checker vs exhaustive enumeration", [](Checker& c) {
        const FieldSpec& Q = FieldSpec::rationals();
        const BiForm split = parse_biform("x0^3*y0^3 + x1^3*y1^3", Q);
        const SmoothnessReport rep = singular_locus(split);
        c.require(rep.verdict == SmoothVerdict::Singular, "split union flagged singular");
        c.require(rep.witnesses.size() == 2, "exactly two witnesses");
        const Scalar one = Scalar::one(Q), zero = Scalar::zero(Q);
        const ProjectivePoint w1{zero, one, one, zero};
        const ProjectivePoint w2{one, zero, zero, one};
        bool saw1 = false, saw2 = false;
        for (const auto& w : rep.witnesses) {
            if (!w.is_point()) continue;
            if (w.point().same_point(w1)) saw1 = true;
            if (w.point().same_point(w2)) saw2 = true;
        }
        c.require(saw1 && saw2, "witnesses are ([0:1],[1:0]) and ([1:0],[0:1])");

        int curves = 0;
        for (std::uint64_t p : {7ull, 11ull, 31ull}) {
            const FieldSpec& F = FieldSpec::prime_field(p);
            Rng rng(4000 + p);
            const int lot = p == 31 ? 16 : 17;
            for (int t = 0; t < lot; ++t) {
                BiForm h = random_dense(rng, F, 3, 0);
                if (h.is_zero()) continue;
                ++curves;
                const SmoothnessReport r = singular_locus(h);
                const auto enumerated = enumerate_singular(h);
                if (r.smooth() && !enumerated.empty()) {
                    c.require(false, "verdict smooth but enumeration found a singular point");
                    return;
                }
                if (!enumerated.empty() && r.smooth()) {
                    c.require(false, "enumeration contradicts the verdict");
                    return;
                }
                for (const auto& w : r.witnesses) {
                    if (!witness_checks(h, w)) {
                        c.require(false, "witness failed exact substitution");
                        return;
                    }
                    if (w.is_point()) {
                        bool found = false;
                        for (const auto& pnt : enumerated)
                            if (pnt.same_point(w.point())) found = true;
                        if (!found) {
                            c.require(false, "point witness missing from enumeration");
                            return;
                        }
                    }
                }
            }
        }
        c.require(curves == 50, "exactly 50 enumeration cross-checks");
    }, failed);

    run_criterion(8, "finite-field survey (k=3, p=7, n_max=20, 50 trials)", [](Checker& c) {
        SurveyConfig cfg;
        cfg.k = 3;
        cfg.p = 7;
        cfg.n_max = 20;
        cfg.trials = 50;
        cfg.seed = 1;
        const SurveyHistogram h = survey_fp(cfg);
        c.require(h.total() == 50, "histogram mass equals trials");
        for (const auto& [order, count] : h.order_counts) {
            c.require(order >= 3, "no mass below order 3");
            c.require(count > 0, "positive counts only");
        }
        cfg.grid_sampler = true;
        const SurveyHistogram g = survey_fp(cfg);
        c.require(g.total() == 50, "grid sub-survey mass");
        c.require(g.order_not_found == 0, "grid samples always resolve");
        for (const auto& [order, count] : g.order_counts)
            c.require(order == 3 && count > 0, "grid samples have order exactly 3");
    }, failed);

    if (failed == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failed << " criterion(s) failed\n";
    return 1;
}
