#ifndef ETAQ_CECH_HPP
#define ETAQ_CECH_HPP

#include <optional>
#include <vector>

#include "etaq/linalg.hpp"
#include "etaq/smooth.hpp"

namespace etaq {

/*
 * Cohomology of line bundles on the quadric Q = P1 x P1 in the two-chart
 * Laurent model: for a >= 0 and b <= -2 the group H^1(Q, O(a,b)) has the
 * monomial basis
 *
 *     x0^p x1^(a-p) y0^(-r) y1^(b+r),   p in [0,a],  r in [1,-b-1],
 *
 * ordered by p ascending then r ascending.  Monomials with a nonnegative
 * y-exponent are coboundaries.  Bundles with poles on the other side are
 * handled by transposing the two rulings.
 */
struct CohBasis {
    int a = 0;
    int b = -2;

    std::size_t size() const {
        return (a >= 0 && b <= -2) ? static_cast<std::size_t>(a + 1) * static_cast<std::size_t>(-b - 1)
                                   : 0;
    }
    // Column index -> (p, r).
    std::pair<int, int> monomial(std::size_t col) const {
        const int span = -b - 1;
        return {static_cast<int>(col) / span, 1 + static_cast<int>(col) % span};
    }
    std::size_t position(int p, int r) const {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(-b - 1) +
               static_cast<std::size_t>(r - 1);
    }
};

// dim H^1(Q, O(a,b)) over any base field.
int h1_dim(int a, int b);
// dim H^0(Q, O(a,b)).
int h0_quadric(int a, int b);

struct CohVector {
    CohBasis basis;
    std::vector<Scalar> coords;
};

// Matrix of multiplication by h from H^1(a,b) to H^1(a+k,b+k) in the bases
// above (columns indexed by source monomials).
Matrix mult_by_h_matrix(const BiForm& h, int a, int b);

// One Laurent term c * x0^i x1^(xdeg-i) y0^g y1^(ydeg-g); g may be negative.
struct LaurentTerm {
    int i;
    int g;
    Scalar c;
};

/*
 * Two-chart representative of a global section of O_C(a1,b1) arising from a
 * kernel class w of multiplication by h: the product h*w splits as
 * partA + partB with partA regular on {y1 != 0} and partB regular on
 * {y0 != 0}, and the section is (-partB on {y0 != 0}, partA on {y1 != 0}).
 */
struct ChartSection {
    int a1 = 0, b1 = 0;     // target bidegree
    bool transposed = false; // true when computed on the transposed rulings
    std::vector<LaurentTerm> partA;
    std::vector<LaurentTerm> partB;
    CohVector w;
    int clearing_exponent = 0; // minimal N with y1^N * partA polynomial

    // y1^N * partA as a biform of bidegree (a1, b1 + N).
    BiForm cleared_partA(const FieldSpec& f) const;
    // y0^M * partB with the minimal M, bidegree (a1, b1 + M).
    BiForm cleared_partB(const FieldSpec& f, int& M) const;
};

struct H0Basis {
    int a = 0, b = 0;
    bool transposed = false;
    std::vector<BiForm> pure_forms;     // restrictions of (a,b)-forms mod h
    std::vector<ChartSection> sections; // representatives from kernel classes
    std::size_t cardinality() const { return pure_forms.size() + sections.size(); }
};

struct H0Result {
    int dimension = 0;
    H0Basis basis;
};

// Exact h^0(C, O_C(a,b)) with an explicit basis, via the restriction
// sequence 0 -> O_Q(a-k,b-k) -> O_Q(a,b) -> O_C(a,b) -> 0.
H0Result h0_curve(const CurveContext& ctx, int a, int b);

// Chart sections spanning H^0(C, O_C(n,-n)) for n >= k (possibly empty).
std::vector<ChartSection> kernel_sections(const CurveContext& ctx, int n);

/*
 * The image of restriction H^0(Q, O(d1,d2)) -> H^0(C, O_C(d1,d2)) presented
 * as coordinates modulo the subspace h * Forms(d1-k, d2-k), with a canonical
 * reduction map for exact rank and membership computations.
 */
class FormQuotient {
public:
    FormQuotient(const BiForm& h, int d1, int d2);

    std::size_t ambient_dim() const { return static_cast<std::size_t>((d1_ + 1) * (d2_ + 1)); }
    std::size_t subspace_dim() const { return echelon_.pivot_cols.size(); }
    std::size_t dim() const { return ambient_dim() - subspace_dim(); }

    // Canonical coordinates of the class of v (zero vector iff v is in
    // h * Forms, i.e. vanishes on the curve).
    std::vector<Scalar> reduce(const BiForm& v) const;

    int d1() const { return d1_; }
    int d2() const { return d2_; }

private:
    const FieldSpec* field_;
    int d1_, d2_;
    Echelon echelon_;
};

// The class of y1^N * (s * c) in Forms(a1, N) / h * Forms(a1-k, N-k), where
// c is a (0,n)-form with b1 + n = 0 and N is the clearing exponent of s.
struct QuotientClass {
    BiForm representative; // the cleared biform, before reduction
    std::vector<Scalar> reduced;
};

QuotientClass section_times_form(const CurveContext& ctx, const ChartSection& s, const BiForm& c);

} // namespace etaq

#endif
