#include "etaq/families.hpp"

#include <random>
#include <sstream>

namespace etaq {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Scalar coefficient(const FieldSpec& f, long height) {
        if (f.is_prime_field())
            return Scalar::of_int(f, uniform(0, static_cast<long>(f.characteristic()) - 1));
        return Scalar::of_int(f, uniform(-height, height));
    }

    std::vector<Scalar> uni(const FieldSpec& f, int deg, long height) {
        std::vector<Scalar> v;
        for (int i = 0; i <= deg; ++i) v.push_back(coefficient(f, height));
        return v;
    }
};

} // namespace

BiForm sample_grid_curve(const SamplerConfig& cfg) {
    if (cfg.k < 3) fail(ErrorKind::RangeError, "grid sampling needs k >= 3");
    const FieldSpec& f = *cfg.field;
    Rng rng(cfg.seed);
    const auto f1 = rng.uni(f, cfg.k, cfg.height);
    const auto g1 = rng.uni(f, cfg.k, cfg.height);
    const auto f2 = rng.uni(f, cfg.k, cfg.height);
    const auto g2 = rng.uni(f, cfg.k, cfg.height);
    return BiForm::outer(f, f1, g2) + BiForm::outer(f, g1, f2);
}

BiForm sample_curve(const SamplerConfig& cfg) {
    if (cfg.k < 1) fail(ErrorKind::RangeError, "curve sampling needs k >= 1");
    const FieldSpec& f = *cfg.field;
    Rng rng(cfg.seed);
    BiForm h(f, cfg.k, cfg.k);
    for (int i = 0; i <= cfg.k; ++i)
        for (int j = 0; j <= cfg.k; ++j) h.set_coeff(i, j, rng.coefficient(f, cfg.height));
    return h;
}

SigmaCurve sigma_family_g4(const SigmaFamilySpec& spec) {
    const FieldSpec& f = spec.alpha.field();
    if (!f.is_cyclotomic() || f.zeta_order() != 5)
        fail(ErrorKind::FieldMismatch, "the genus-4 family lives over Q(z5)");
    if (!(spec.beta.field() == f) || !(spec.gamma.field() == f))
        fail(ErrorKind::FieldMismatch, "family parameters from different fields");
    if (spec.alpha.is_zero())
        fail(ErrorKind::Reducible, "alpha = 0 makes y1 divide the equation");
    if (spec.beta.is_zero())
        fail(ErrorKind::Reducible, "beta = 0 makes x1 divide the equation");
    if (spec.gamma.is_zero())
        fail(ErrorKind::Reducible, "gamma = 0 makes x0 divide the equation");

    BiForm h(f, 3, 3);
    h.set_coeff(1, 0, Scalar::one(f)); // x0 x1^2 y1^3
    h.set_coeff(2, 3, spec.alpha);     // x0^2 x1 y0^3
    h.set_coeff(3, 1, spec.beta);      // x0^3 y0 y1^2
    h.set_coeff(0, 2, spec.gamma);     // x1^3 y0^2 y1

    const AutoImage img = apply_auto(h, TorusAuto{5, 1, 0, 3, 0});
    if (!img.character)
        fail(ErrorKind::InternalConsistency, "family member is not an eigenform");
    return SigmaCurve{std::move(h), *img.character};
}

int secant_jacobian_rank(int k, std::uint64_t seed) {
    if (k < 2) fail(ErrorKind::RangeError, "secant rank needs k >= 2");
    const FieldSpec& Q = FieldSpec::rationals();
    Rng rng(seed);
    const auto u = rng.uni(Q, k, 9), v = rng.uni(Q, k, 9);
    const auto w = rng.uni(Q, k, 9), z = rng.uni(Q, k, 9);
    const std::size_t n = static_cast<std::size_t>(k) + 1;
    Matrix m(Q, n * n, 4 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t row = r * n + c;
            m.at(row, r) = v[c];          // d u_r
            m.at(row, n + c) = u[r];      // d v_c
            m.at(row, 2 * n + r) = z[c];  // d w_r
            m.at(row, 3 * n + c) = w[r];  // d z_c
        }
    return static_cast<int>(rank(m));
}

SurveyHistogram survey_fp(const SurveyConfig& cfg) {
    if (cfg.k < 3) fail(ErrorKind::RangeError, "survey needs k >= 3");
    if (cfg.n_max < cfg.k) fail(ErrorKind::RangeError, "survey needs n_max >= k");
    if (cfg.trials < 0) fail(ErrorKind::RangeError, "negative trial count");
    const FieldSpec& f = FieldSpec::prime_field(cfg.p); // InvalidPrime on composites
    if (cfg.p <= 2 * static_cast<std::uint64_t>(cfg.k))
        fail(ErrorKind::InvalidPrime, "survey primes are restricted to p > 2k");

    SurveyHistogram h;
    h.k = cfg.k;
    h.p = cfg.p;
    h.n_max = cfg.n_max;
    h.trials = cfg.trials;
    h.grid_sampler = cfg.grid_sampler;

    for (int trial = 0; trial < cfg.trials; ++trial) {
        SamplerConfig sc;
        sc.k = cfg.k;
        sc.field = &f;
        sc.seed = cfg.seed + static_cast<std::uint64_t>(trial);
        const BiForm curve = cfg.grid_sampler ? sample_grid_curve(sc) : sample_curve(sc);
        if (curve.is_zero()) {
            ++h.singular;
            continue;
        }
        const CurveContext ctx = CurveContext::analyze(curve);
        if (!ctx.is_smooth()) {
            ++h.singular;
            continue;
        }
        const TorsionReport rep = torsion_order(ctx, cfg.n_max);
        if (rep.order) {
            ++h.order_counts[*rep.order];
        } else {
            ++h.order_not_found;
        }
    }
    return h;
}

std::string survey_csv(const SurveyHistogram& h) {
    std::ostringstream out;
    out << "order,count\n";
    for (const auto& [order, count] : h.order_counts) out << order << "," << count << "\n";
    out << "singular," << h.singular << "\n";
    out << "not_found_up_to_" << h.n_max << "," << h.order_not_found << "\n";
    return out.str();
}

} // namespace etaq
