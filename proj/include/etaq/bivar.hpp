#ifndef ETAQ_BIVAR_HPP
#define ETAQ_BIVAR_HPP

#include <utility>
#include <vector>

#include "etaq/biform.hpp"
#include "etaq/field.hpp"

namespace etaq {

/*
 * Dense univariate and bivariate polynomial algebra over an exact field,
 * supporting the chart computations of the smoothness checker: primitive-PRS
 * gcds, Sylvester resultants (fraction-free), separable parts, and Euclidean
 * arithmetic modulo a univariate polynomial with zero-divisor splitting.
 *
 * A UPoly is a coefficient vector (index = degree); a BPoly is a vector of
 * UPoly coefficients of Y^j, each a polynomial in X.  The zero polynomial is
 * the empty vector; all routines keep representations trimmed.
 */

using UPoly = std::vector<Scalar>;
using BPoly = std::vector<UPoly>;

// ---- univariate ----

int udeg(const UPoly& p);
void utrim(UPoly& p);
bool uis_zero(const UPoly& p);
UPoly uconst(const FieldSpec& f, const Scalar& c);
UPoly umonomial(const FieldSpec& f, int deg, const Scalar& c);
Scalar ulead(const UPoly& p);
UPoly uadd(const UPoly& a, const UPoly& b, const FieldSpec& f);
UPoly usub(const UPoly& a, const UPoly& b, const FieldSpec& f);
UPoly umul(const UPoly& a, const UPoly& b, const FieldSpec& f);
UPoly uscale(const UPoly& a, const Scalar& c);
UPoly uderiv(const UPoly& a, const FieldSpec& f);
Scalar ueval(const UPoly& a, const Scalar& x, const FieldSpec& f);
// Division with remainder over the field.
void udivrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const FieldSpec& f);
// Exact division; raises InternalConsistency if the remainder is nonzero.
UPoly udiv_exact(const UPoly& a, const UPoly& b, const FieldSpec& f);
// Monic gcd via a content-stripped pseudo-remainder sequence.
UPoly ugcd(const UPoly& a, const UPoly& b, const FieldSpec& f);
UPoly umonic(const UPoly& a);
// Squarefree polynomial with the same roots, valid in any characteristic.
UPoly useparable_part(const UPoly& a, const FieldSpec& f);
// Roots lying in the base field (exhaustive over F_p, rational-root search
// over Q with a trial-division budget; cyclotomic fields return only easily
// visible roots of linear factors).
std::vector<Scalar> ubase_field_roots(const UPoly& a, const FieldSpec& f);

// ---- bivariate ----

int bdeg_y(const BPoly& p);
int bdeg_x(const BPoly& p);
void btrim(BPoly& p);
bool bis_zero(const BPoly& p);
bool bis_constant(const BPoly& p);
BPoly badd(const BPoly& a, const BPoly& b, const FieldSpec& f);
BPoly bsub(const BPoly& a, const BPoly& b, const FieldSpec& f);
BPoly bmul(const BPoly& a, const BPoly& b, const FieldSpec& f);
BPoly bscale(const BPoly& a, const Scalar& c);
BPoly bderiv_x(const BPoly& a, const FieldSpec& f);
BPoly bderiv_y(const BPoly& a, const FieldSpec& f);
UPoly beval_y(const BPoly& a, const Scalar& y, const FieldSpec& f); // substitute Y = y
UPoly beval_x(const BPoly& a, const Scalar& x, const FieldSpec& f); // substitute X = x, poly in Y
Scalar beval(const BPoly& a, const Scalar& x, const Scalar& y, const FieldSpec& f);

// Y-content (gcd of the coefficients) and primitive part.
UPoly bcontent(const BPoly& a, const FieldSpec& f);
BPoly bprimitive(const BPoly& a, const FieldSpec& f);
// gcd in F[X,Y] by Gauss's lemma: gcd of contents times primitive-PRS gcd.
BPoly bgcd(const BPoly& a, const BPoly& b, const FieldSpec& f);
BPoly bdiv_exact(const BPoly& a, const BPoly& b, const FieldSpec& f);
// Resultant with respect to Y, by fraction-free elimination of the Sylvester
// matrix over F[X]; zero iff the inputs share a factor of positive Y-degree.
UPoly bresultant_y(const BPoly& a, const BPoly& b, const FieldSpec& f);
// Substitution (X, Y) -> (X + a Y, b X + Y); invertible iff 1 - a b != 0.
BPoly bshear(const BPoly& p, const Scalar& a, const Scalar& b, const FieldSpec& f);

// Dehomogenization of a biform into the affine chart {x_u != 0, y_v != 0},
// with affine coordinates X = x_(1-u)/x_u and Y = y_(1-v)/y_v.
BPoly dehomogenize(const BiForm& h, int u, int v);

// ---- arithmetic modulo a univariate q(X), with dynamic splitting ----

// Raised when a gcd computation modulo q meets a zero divisor; d is a
// proper factor of the modulus, and the caller splits into (d, q/d).
struct SplitNeeded {
    UPoly divisor;
};

UPoly rmod(const UPoly& a, const UPoly& q, const FieldSpec& f);
UPoly rmul(const UPoly& a, const UPoly& b, const UPoly& q, const FieldSpec& f);
// Inverse of a modulo q; throws SplitNeeded when a is a nontrivial zero
// divisor, and InternalConsistency if a is zero mod q.
UPoly rinv(const UPoly& a, const UPoly& q, const FieldSpec& f);

// Polynomials in Y over F[X]/(q).
using RPoly = std::vector<UPoly>;
RPoly rpoly_from(const BPoly& p, const UPoly& q, const FieldSpec& f);
int rdeg(const RPoly& p);

struct TriangularGcd {
    UPoly modulus;  // q_i(X), the moduli multiply to the input modulus
    RPoly gcd;      // monic gcd in Y of the inputs modulo q_i; empty if all vanish
};

// Simultaneous monic gcd of the given Y-polynomials over F[X]/(q), refined
// over factors of q whenever a leading coefficient fails to be invertible.
std::vector<TriangularGcd> triangular_gcd(const UPoly& q, const std::vector<BPoly>& polys,
                                          const FieldSpec& f);

} // namespace etaq

#endif
