#ifndef ETAQ_FAMILIES_HPP
#define ETAQ_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <string>

#include "etaq/torsion.hpp"

namespace etaq {

/*
 * Deterministic samplers and the constructions behind the example families:
 * grid curves, the order-5 genus-4 family, the secant-variety tangent-space
 * rank, and the finite-field torsion survey.
 */

struct SamplerConfig {
    int k = 3;
    const FieldSpec* field = &FieldSpec::rationals();
    std::uint64_t seed = 0;
    long height = 9; // bound on random integer coefficients
    int count = 1;
};

// f1(x) g2(y) + g1(x) f2(y) with random coefficients; smoothness is not
// certified here, callers run singular_locus.
BiForm sample_grid_curve(const SamplerConfig& cfg);

// Dense random form of bidegree (k,k): uniform residues over F_p, uniform
// integers of |.| <= height otherwise.
BiForm sample_curve(const SamplerConfig& cfg);

struct SigmaFamilySpec {
    Scalar alpha, beta, gamma; // elements of Q(z5)
};

struct SigmaCurve {
    BiForm h;           // x0 x1^2 y1^3 + a x0^2 x1 y0^3 + b x0^3 y0 y1^2 + c x1^3 y0^2 y1
    unsigned character; // weight of every monomial under the order-5 twist
};

// The genus-4 family invariant under (x0,x1,y0,y1) -> (z5 x0, x1, z5^3 y0, y1);
// rejects parameter choices with a variable dividing the equation.
SigmaCurve sigma_family_g4(const SigmaFamilySpec& spec);

// Exact rank of the differential of (u,v,w,z) -> u v^T + w z^T at a random
// rational point; the affine cone over the rank-two locus has dimension 4k,
// so the generic value is 4k.
int secant_jacobian_rank(int k, std::uint64_t seed);

struct SurveyConfig {
    int k = 3;
    std::uint64_t p = 7;
    int n_max = 20;
    int trials = 50;
    std::uint64_t seed = 1;
    bool grid_sampler = false;
};

struct SurveyHistogram {
    int k = 0;
    std::uint64_t p = 0;
    int n_max = 0;
    int trials = 0;
    bool grid_sampler = false;
    std::map<int, int> order_counts;
    int singular = 0;
    int order_not_found = 0;

    int total() const {
        int t = singular + order_not_found;
        for (const auto& [o, c] : order_counts) t += c;
        return t;
    }
};

// Torsion-order survey over F_p: per trial, certify smoothness and scan the
// torsion order up to n_max.  Requires p prime with p > 2k (hence p does not
// divide k).
SurveyHistogram survey_fp(const SurveyConfig& cfg);

// Two-column CSV (order, count) with the singular/not-found tallies.
std::string survey_csv(const SurveyHistogram& h);

} // namespace etaq

#endif
