#include "etaq/cech.hpp"

#include <map>

namespace etaq {

int h1_dim(int a, int b) {
    if (a >= 0 && b <= -2) return (a + 1) * (-b - 1);
    if (b >= 0 && a <= -2) return (b + 1) * (-a - 1);
    return 0;
}

int h0_quadric(int a, int b) { return (a >= 0 && b >= 0) ? (a + 1) * (b + 1) : 0; }

namespace {

struct Expansion {
    std::vector<Scalar> cocycle; // coordinates in the target H^1 basis
    std::vector<LaurentTerm> partA;
    std::vector<LaurentTerm> partB;
};

// Expand h * w for w in the H^1(a,b) basis and split off the coboundary
// parts.  Terms with y0-exponent >= 0 go to partA (regular where y1 != 0),
// the remaining terms with y1-exponent >= 0 to partB.
Expansion expand_mult(const BiForm& h, const CohBasis& src, const std::vector<Scalar>& w) {
    const FieldSpec& f = h.field();
    const int k = h.deg_x();
    const CohBasis dst{src.a + k, src.b + k};
    Expansion out;
    out.cocycle.assign(dst.size(), Scalar::zero(f));
    std::map<std::pair<int, int>, Scalar> A, B;
    for (std::size_t col = 0; col < src.size(); ++col) {
        if (w[col].is_zero()) continue;
        const auto [p, r] = src.monomial(col);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                const Scalar& c = h.coeff(i, j);
                if (c.is_zero()) continue;
                const Scalar t = c * w[col];
                const int I = p + i;
                const int G = j - r;
                const int y1e = src.b + k + r - j;
                if (G >= 0) {
                    auto [it, fresh] = A.try_emplace({I, G}, t);
                    if (!fresh) it->second += t;
                } else if (y1e >= 0) {
                    auto [it, fresh] = B.try_emplace({I, G}, t);
                    if (!fresh) it->second += t;
                } else {
                    out.cocycle[dst.position(I, -G)] += t;
                }
            }
    }
    for (auto& [key, c] : A)
        if (!c.is_zero()) out.partA.push_back({key.first, key.second, c});
    for (auto& [key, c] : B)
        if (!c.is_zero()) out.partB.push_back({key.first, key.second, c});
    return out;
}

ChartSection make_section(const BiForm& h, const CohBasis& src, std::vector<Scalar> w,
                          bool transposed) {
    const int k = h.deg_x();
    Expansion e = expand_mult(h, src, w);
    for (const auto& c : e.cocycle)
        if (!c.is_zero())
            fail(ErrorKind::InternalConsistency, "kernel class with nonzero cocycle image");
    if (e.partA.empty() || e.partB.empty())
        fail(ErrorKind::InternalConsistency, "degenerate chart split of a kernel class");
    ChartSection s;
    s.a1 = src.a + k;
    s.b1 = src.b + k;
    s.transposed = transposed;
    s.partA = std::move(e.partA);
    s.partB = std::move(e.partB);
    s.w = CohVector{src, std::move(w)};
    int N = 0;
    for (const auto& t : s.partA) N = std::max(N, t.g - s.b1);
    s.clearing_exponent = N;
    return s;
}

} // namespace

Matrix mult_by_h_matrix(const BiForm& h, int a, int b) {
    const FieldSpec& f = h.field();
    const int k = h.deg_x();
    if (h.deg_x() != h.deg_y() || k < 1)
        fail(ErrorKind::DegreeError, "multiplication form must have bidegree (k,k), k >= 1");
    if (a < 0 || b > -2 || b + k > -2)
        fail(ErrorKind::DegreeError, "mult_by_h_matrix needs a >= 0, b <= -2 and b + k <= -2");
    const CohBasis src{a, b};
    const CohBasis dst{a + k, b + k};
    Matrix m(f, dst.size(), src.size());
    std::vector<Scalar> unit(src.size(), Scalar::zero(f));
    for (std::size_t col = 0; col < src.size(); ++col) {
        unit[col] = Scalar::one(f);
        const Expansion e = expand_mult(h, src, unit);
        for (std::size_t row = 0; row < dst.size(); ++row) m.at(row, col) = e.cocycle[row];
        unit[col] = Scalar::zero(f);
    }
    return m;
}

BiForm ChartSection::cleared_partA(const FieldSpec& f) const {
    if (partA.empty()) fail(ErrorKind::InternalConsistency, "empty chart representative");
    BiForm out(f, a1, b1 + clearing_exponent);
    for (const auto& t : partA) out.set_coeff(t.i, t.g, out.coeff(t.i, t.g) + t.c);
    return out;
}

BiForm ChartSection::cleared_partB(const FieldSpec& f, int& M) const {
    if (partB.empty()) fail(ErrorKind::InternalConsistency, "empty chart representative");
    M = 0;
    for (const auto& t : partB) M = std::max(M, -t.g);
    BiForm out(f, a1, b1 + M);
    for (const auto& t : partB) out.set_coeff(t.i, t.g + M, out.coeff(t.i, t.g + M) + t.c);
    return out;
}

FormQuotient::FormQuotient(const BiForm& h, int d1, int d2)
    : field_(&h.field()), d1_(d1), d2_(d2),
      echelon_{Matrix(h.field(), 0, 0), {}} {
    const FieldSpec& f = h.field();
    const int k = h.deg_x();
    if (d1 < 0 || d2 < 0) fail(ErrorKind::DegreeError, "form quotient needs a polynomial bidegree");
    const int e1 = d1 - k, e2 = d2 - k;
    const std::size_t cols = ambient_dim();
    if (e1 < 0 || e2 < 0) {
        echelon_ = Echelon{Matrix(f, 0, cols), {}};
        return;
    }
    const std::size_t rows = static_cast<std::size_t>((e1 + 1) * (e2 + 1));
    Matrix m(f, rows, cols);
    for (int i = 0; i <= e1; ++i)
        for (int j = 0; j <= e2; ++j) {
            const std::size_t row = static_cast<std::size_t>(i * (e2 + 1) + j);
            for (int s = 0; s <= k; ++s)
                for (int t = 0; t <= k; ++t) {
                    if (h.coeff(s, t).is_zero()) continue;
                    const std::size_t col =
                        static_cast<std::size_t>((i + s) * (d2 + 1) + (j + t));
                    m.at(row, col) = h.coeff(s, t);
                }
        }
    echelon_ = echelonize(std::move(m));
}

std::vector<Scalar> FormQuotient::reduce(const BiForm& v) const {
    const FieldSpec& f = *field_;
    if (v.deg_x() != d1_ || v.deg_y() != d2_)
        fail(ErrorKind::DegreeError, "form does not live in this quotient");
    std::vector<Scalar> x(ambient_dim(), Scalar::zero(f));
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) x[static_cast<std::size_t>(i * (d2_ + 1) + j)] = v.coeff(i, j);
    for (std::size_t ri = 0; ri < echelon_.pivot_cols.size(); ++ri) {
        const std::size_t pc = echelon_.pivot_cols[ri];
        if (x[pc].is_zero()) continue;
        const Scalar factor = x[pc] / echelon_.reduced.at(ri, pc);
        for (std::size_t j = pc; j < x.size(); ++j) {
            if (!echelon_.reduced.at(ri, j).is_zero()) x[j] -= factor * echelon_.reduced.at(ri, j);
        }
    }
    return x;
}

namespace {

H0Result h0_core(const BiForm& h, int a, int b, bool transposed) {
    const FieldSpec& f = h.field();
    const int k = h.deg_x();
    if ((a < 0 && b >= 0) || (a - k <= -2 && b - k >= 0))
        return h0_core(h.transpose(), b, a, !transposed);

    const int src_dim = h1_dim(a - k, b - k);
    const int dst_dim = h1_dim(a, b);
    H0Result out;
    out.basis.a = a;
    out.basis.b = b;
    out.basis.transposed = transposed;

    std::vector<std::vector<Scalar>> kernel;
    if (src_dim > 0) {
        if (!(a - k >= 0 && b - k <= -2))
            fail(ErrorKind::DegenerateRange, "H^1 source outside the y-pole orientation");
        const CohBasis src{a - k, b - k};
        if (dst_dim > 0) {
            if (!(a >= 0 && b <= -2))
                fail(ErrorKind::DegenerateRange, "H^1 target outside the y-pole orientation");
            kernel = kernel_basis(mult_by_h_matrix(h, a - k, b - k));
        } else {
            // The target group vanishes: the kernel is the full source.
            kernel.assign(src.size(), std::vector<Scalar>(src.size(), Scalar::zero(f)));
            for (std::size_t i = 0; i < src.size(); ++i) kernel[i][i] = Scalar::one(f);
        }
        for (auto& w : kernel)
            out.basis.sections.push_back(make_section(h, src, std::move(w), transposed));
    }

    if (h0_quadric(a, b) > 0) {
        const FormQuotient quo(h, a, b);
        std::vector<std::vector<Scalar>> reduced;
        std::vector<std::pair<int, int>> monos;
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j) {
                monos.emplace_back(i, j);
                reduced.push_back(quo.reduce(BiForm::monomial(f, a, b, i, j, Scalar::one(f))));
            }
        // Row-echelon the reduced monomials to select an independent family.
        Matrix m(f, reduced.size(), quo.ambient_dim());
        for (std::size_t r = 0; r < reduced.size(); ++r) m.set_row(r, reduced[r]);
        // Pivot columns of the transpose give the first independent rows.
        Matrix mt(f, quo.ambient_dim(), reduced.size());
        for (std::size_t r = 0; r < reduced.size(); ++r)
            for (std::size_t c = 0; c < quo.ambient_dim(); ++c) mt.at(c, r) = m.at(r, c);
        const Echelon e = echelonize(std::move(mt));
        for (const std::size_t col : e.pivot_cols) {
            const auto [i, j] = monos[col];
            out.basis.pure_forms.push_back(BiForm::monomial(f, a, b, i, j, Scalar::one(f)));
        }
        if (out.basis.pure_forms.size() !=
            static_cast<std::size_t>(h0_quadric(a, b) - h0_quadric(a - k, b - k)))
            fail(ErrorKind::InternalConsistency, "pure-form count mismatch");
    }

    const int dim = h0_quadric(a, b) - h0_quadric(a - k, b - k) + static_cast<int>(kernel.size());
    if (static_cast<int>(out.basis.cardinality()) != dim)
        fail(ErrorKind::InternalConsistency, "basis cardinality mismatch");
    out.dimension = dim;
    return out;
}

} // namespace

H0Result h0_curve(const CurveContext& ctx, int a, int b) {
    ctx.require_smooth("h0_curve");
    return h0_core(ctx.form(), a, b, false);
}

std::vector<ChartSection> kernel_sections(const CurveContext& ctx, int n) {
    ctx.require_smooth("kernel_sections");
    const int k = ctx.k();
    if (n < k) fail(ErrorKind::RangeError, "kernel_sections needs n >= k");
    const BiForm& h = ctx.form();
    const CohBasis src{n - k, -n - k};
    std::vector<ChartSection> sections;
    for (auto& w : kernel_basis(mult_by_h_matrix(h, n - k, -n - k)))
        sections.push_back(make_section(h, src, std::move(w), false));
    return sections;
}

QuotientClass section_times_form(const CurveContext& ctx, const ChartSection& s, const BiForm& c) {
    const FieldSpec& f = ctx.form().field();
    if (c.deg_x() != 0 || s.b1 + c.deg_y() != 0)
        fail(ErrorKind::DegreeError,
             "section_times_form needs a (0,n)-form with n matching the section");
    const int N = s.clearing_exponent;
    const BiForm rep = s.cleared_partA(f) * c; // bidegree (a1, N)
    const FormQuotient quo(ctx.form(), s.a1, N);
    return QuotientClass{rep, quo.reduce(rep)};
}

} // namespace etaq
