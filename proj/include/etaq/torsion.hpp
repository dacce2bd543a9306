#ifndef ETAQ_TORSION_HPP
#define ETAQ_TORSION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etaq/cech.hpp"

namespace etaq {

/*
 * Decision procedures for the difference eta of the two ruling pencils on a
 * smooth curve of bidegree (k,k): membership in the grid family by the rank
 * of the coefficient matrix, n-torsion of eta by the kernel of the Cech
 * multiplication map, the least torsion order, the grilled-type test, and
 * the finite-generation verdict for the extended canonical ring of the
 * second symmetric product.
 */

struct GridFactorization {
    // h = f1(x) g2(y) + g1(x) f2(y); coefficient vectors indexed by the
    // exponent of x0 resp. y0.
    std::vector<Scalar> f1, g2, g1, f2;
};

struct GridReport {
    int k = 0;
    int rank = 0;
    bool is_grid = false;
    std::optional<GridFactorization> factorization;
};

// Exact rank of the (k+1) x (k+1) coefficient matrix; for rank <= 2 a
// two-term factorization through the lexicographically first independent
// columns, reassembling to h exactly.
GridReport grid_rank(const BiForm& h);

struct TorsionCheck {
    bool torsion = false;
    int kernel_dim = 0;
};

// Does n * eta = 0?  True iff O_C(n,-n) is trivial, detected as a nonzero
// kernel of multiplication by h from H^1(n-k,-n-k) to H^1(n,-n).  For
// 0 < n < k both flanking groups vanish, so the answer is no.
TorsionCheck is_n_torsion(const CurveContext& ctx, int n);

// Kernel dimension of the multiplication map at twist n with no shortcut;
// zero whenever the source group vanishes (in particular for n < k).
int kernel_dim_at(const CurveContext& ctx, int n);

struct TorsionReport {
    int k = 0;
    int n_max = 0;
    std::vector<std::pair<int, int>> kernel_dims; // (n, dim) for n = k..n_max
    std::optional<int> order;                     // least n with nonzero kernel
    std::string lower_bound_note;
};

TorsionReport torsion_order(const CurveContext& ctx, int n_max);

struct GrilledReport {
    int n = 0;
    int dim_w1 = 0;          // restrictions of (n,0)-forms
    int dim_w2 = 0;          // torsion section times restrictions of (0,n)-forms
    int dim_intersection = 0;
    int ambient = 0;         // h^0(C, O_C(n,0))
    int clearing_exponent = 0; // minimal y1-power clearing the section
    bool is_grilled = false;
    // When grilled: (f, c) with s*c = f on C, f of bidegree (n,0) and c of
    // bidegree (0,n); the common zero divisor is the (n,n) grid cut.
    std::optional<std::pair<BiForm, BiForm>> certificate;
};

GrilledReport is_grilled(const CurveContext& ctx, int n);

struct FiniteGenerationVerdict {
    enum class Kind { FinitelyGenerated, OpenUpTo, NotApplicable };
    Kind kind = Kind::NotApplicable;
    std::optional<int> order;
    int n_max = 0;
    std::string note;
};

FiniteGenerationVerdict finite_generation_verdict(const CurveContext& ctx, int n_max);

} // namespace etaq

#endif
