#ifndef ETAQ_SMOOTH_HPP
#define ETAQ_SMOOTH_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etaq/biform.hpp"
#include "etaq/bivar.hpp"

namespace etaq {

// Exact singular point with projective coordinate pairs in the base field.
struct ProjectivePoint {
    Scalar x0, x1, y0, y1;

    bool same_point(const ProjectivePoint& o) const;
};

/*
 * Triangular certificate of a singular point in an affine chart: q(X) is a
 * nonconstant squarefree modulus, r(X, Y) is monic in Y modulo q, and
 * the dehomogenized curve equation together with both affine partials
 * reduce to zero modulo (q, r).  The coordinates may be sheared: the
 * certificate lives in coordinates (X', Y') = (X + a Y, b X + Y).
 */
struct TriangularWitness {
    UPoly q;
    BPoly r;
    Scalar shear_a, shear_b;
    bool via_common_factor = false;
};

struct SingularWitness {
    int chart_u = 0; // chart {x_u != 0}
    int chart_v = 0; // chart {y_v != 0}
    // Witness produced on a common factor of the chart system (repeated or
    // derivative-degenerate factor); such reports need not list every
    // rational singular point.
    bool via_common_factor = false;
    std::variant<ProjectivePoint, TriangularWitness> data;

    bool is_point() const { return std::holds_alternative<ProjectivePoint>(data); }
    const ProjectivePoint& point() const { return std::get<ProjectivePoint>(data); }
    const TriangularWitness& triangular() const { return std::get<TriangularWitness>(data); }
};

enum class SmoothVerdict { Smooth, Singular, Unchecked };

struct SmoothnessReport {
    SmoothVerdict verdict = SmoothVerdict::Unchecked;
    std::vector<SingularWitness> witnesses;

    bool smooth() const { return verdict == SmoothVerdict::Smooth; }
};

/*
 * Chartwise Jacobian criterion, exact over Q, Q(z_m) and F_p.  Each affine
 * chart is tested for common zeros of the dehomogenized equation and its two
 * partials via resultant projection plus triangular gcds over factor rings
 * of the eliminant; degenerate projections retry under seeded shears and
 * finally fall back to a recursive gcd decomposition.
 */
SmoothnessReport singular_locus(const BiForm& h);

// Same verdict computed through the recursive gcd decomposition alone,
// bypassing the resultant projection; the fallback path of singular_locus,
// exposed so the two routes can be cross-checked.
SmoothnessReport singular_locus_by_decomposition(const BiForm& h);

// Exact verification that a witness annihilates h and all four partials.
bool witness_checks(const BiForm& h, const SingularWitness& w);

/*
 * Analysis context for a curve of bidegree (k,k), k >= 3, carrying the
 * adjunction genus (k-1)^2 and the smoothness verdict.
 */
class CurveContext {
public:
    static CurveContext analyze(const BiForm& h);
    static CurveContext unchecked(const BiForm& h);

    const BiForm& form() const { return h_; }
    int k() const { return k_; }
    int genus() const { return (k_ - 1) * (k_ - 1); }
    const SmoothnessReport& smoothness() const { return report_; }
    bool is_smooth() const { return report_.verdict == SmoothVerdict::Smooth; }

    void require_smooth(const std::string& op) const;

private:
    CurveContext(BiForm h, int k, SmoothnessReport r)
        : h_(std::move(h)), k_(k), report_(std::move(r)) {}

    BiForm h_;
    int k_;
    SmoothnessReport report_;
};

} // namespace etaq

#endif
