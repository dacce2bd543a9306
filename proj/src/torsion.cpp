#include "etaq/torsion.hpp"

namespace etaq {

namespace {

BiForm y1_power(const FieldSpec& f, int e) {
    return BiForm::monomial(f, 0, e, 0, 0, Scalar::one(f));
}

} // namespace

GridReport grid_rank(const BiForm& h) {
    const FieldSpec& f = h.field();
    if (h.deg_x() != h.deg_y() || h.deg_x() < 1)
        fail(ErrorKind::DegreeError, "grid_rank needs bidegree (k,k), k >= 1");
    const int k = h.deg_x();
    Matrix m(f, static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h.coeff(i, j);

    GridReport rep;
    rep.k = k;
    const Echelon e = echelonize(m);
    rep.rank = static_cast<int>(e.rank());
    rep.is_grid = rep.rank <= 2;
    if (!rep.is_grid) return rep;

    const Scalar zero = Scalar::zero(f);
    GridFactorization fac{std::vector<Scalar>(static_cast<std::size_t>(k) + 1, zero),
                          std::vector<Scalar>(static_cast<std::size_t>(k) + 1, zero),
                          std::vector<Scalar>(static_cast<std::size_t>(k) + 1, zero),
                          std::vector<Scalar>(static_cast<std::size_t>(k) + 1, zero)};
    if (rep.rank >= 1) {
        // Express every column through the pivot columns.
        const std::size_t j1 = e.pivot_cols[0];
        const std::size_t j2 = rep.rank == 2 ? e.pivot_cols[1] : 0;
        Matrix cols(f, static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(rep.rank));
        for (int i = 0; i <= k; ++i) {
            cols.at(static_cast<std::size_t>(i), 0) = m.at(static_cast<std::size_t>(i), j1);
            if (rep.rank == 2)
                cols.at(static_cast<std::size_t>(i), 1) = m.at(static_cast<std::size_t>(i), j2);
        }
        for (int j = 0; j <= k; ++j) {
            std::vector<Scalar> rhs;
            for (int i = 0; i <= k; ++i) rhs.push_back(m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            const auto sol = solve(cols, rhs);
            if (!sol)
                fail(ErrorKind::InternalConsistency, "pivot columns fail to span a low-rank matrix");
            fac.g2[static_cast<std::size_t>(j)] = (*sol)[0];
            if (rep.rank == 2) fac.f2[static_cast<std::size_t>(j)] = (*sol)[1];
        }
        for (int i = 0; i <= k; ++i) {
            fac.f1[static_cast<std::size_t>(i)] = m.at(static_cast<std::size_t>(i), j1);
            if (rep.rank == 2) fac.g1[static_cast<std::size_t>(i)] = m.at(static_cast<std::size_t>(i), j2);
        }
    }
    const BiForm back = BiForm::outer(f, fac.f1, fac.g2) + BiForm::outer(f, fac.g1, fac.f2);
    if (!(back == h)) fail(ErrorKind::InternalConsistency, "grid factorization fails to reassemble");
    rep.factorization = std::move(fac);
    return rep;
}

int kernel_dim_at(const CurveContext& ctx, int n) {
    ctx.require_smooth("torsion kernel");
    const int k = ctx.k();
    if (n < 1) fail(ErrorKind::RangeError, "twist must be positive");
    if (h1_dim(n - k, -n - k) == 0) return 0;
    const Matrix m = mult_by_h_matrix(ctx.form(), n - k, -n - k);
    return static_cast<int>(m.cols() - echelonize(m).rank());
}

TorsionCheck is_n_torsion(const CurveContext& ctx, int n) {
    ctx.require_smooth("is_n_torsion");
    if (n < 1) fail(ErrorKind::RangeError, "twist must be positive");
    if (n < ctx.k()) return {false, 0};
    const int d = kernel_dim_at(ctx, n);
    if (d > 1)
        fail(ErrorKind::InternalConsistency,
             "kernel dimension " + std::to_string(d) + " > 1 for a degree-zero bundle");
    return {d == 1, d};
}

TorsionReport torsion_order(const CurveContext& ctx, int n_max) {
    ctx.require_smooth("torsion_order");
    const int k = ctx.k();
    if (n_max < k) fail(ErrorKind::RangeError, "n_max must be at least k");
    TorsionReport rep;
    rep.k = k;
    rep.n_max = n_max;
    rep.lower_bound_note =
        "h^0(C, O_C(n,-n)) = 0 for 0 < n < k: both flanking cohomology groups vanish";
    for (int n = k; n <= n_max; ++n) {
        const TorsionCheck c = is_n_torsion(ctx, n);
        rep.kernel_dims.emplace_back(n, c.kernel_dim);
        if (c.torsion) {
            rep.order = n;
            break;
        }
    }
    return rep;
}

GrilledReport is_grilled(const CurveContext& ctx, int n) {
    ctx.require_smooth("is_grilled");
    const FieldSpec& f = ctx.form().field();
    const int k = ctx.k();
    if (n < k || !is_n_torsion(ctx, n).torsion)
        fail(ErrorKind::NoTorsionSection,
             "no torsion section at n = " + std::to_string(n) + "; the twist O_C(n,-n) is nontrivial");
    const auto sections = kernel_sections(ctx, n);
    if (sections.size() != 1)
        fail(ErrorKind::InternalConsistency, "expected a one-dimensional torsion section space");
    const ChartSection& s = sections.front();

    const int N = s.clearing_exponent;
    const BiForm& h = ctx.form();
    const FormQuotient quo(h, n, N);
    const BiForm clearedA = s.cleared_partA(f);

    // W1: restrictions of (n,0)-forms, cleared by y1^N.
    // W2: the torsion section times restrictions of (0,n)-forms.
    std::vector<std::vector<Scalar>> w1, w2;
    for (int i = 0; i <= n; ++i)
        w1.push_back(quo.reduce(BiForm::monomial(f, n, 0, i, 0, Scalar::one(f)) * y1_power(f, N)));
    for (int j = 0; j <= n; ++j)
        w2.push_back(quo.reduce(clearedA * BiForm::monomial(f, 0, n, 0, j, Scalar::one(f))));

    auto rank_of = [&](const std::vector<std::vector<Scalar>>& rows) {
        Matrix m(f, rows.size(), quo.ambient_dim());
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
        return static_cast<int>(rank(m));
    };

    GrilledReport rep;
    rep.n = n;
    rep.clearing_exponent = N;
    rep.dim_w1 = rank_of(w1);
    rep.dim_w2 = rank_of(w2);
    if (rep.dim_w1 != n + 1 || rep.dim_w2 != n + 1)
        fail(ErrorKind::InternalConsistency, "ruling subspaces fail to embed");
    std::vector<std::vector<Scalar>> all = w1;
    all.insert(all.end(), w2.begin(), w2.end());
    const int total = rank_of(all);
    rep.dim_intersection = rep.dim_w1 + rep.dim_w2 - total;
    rep.ambient = h0_curve(ctx, n, 0).dimension;
    rep.is_grilled = rep.dim_intersection > 0;

    if (rep.is_grilled) {
        // A kernel vector of the stacked coordinates yields the divisor cut
        // simultaneously by n lines of each ruling.
        Matrix m(f, quo.ambient_dim(), all.size());
        for (std::size_t c = 0; c < all.size(); ++c)
            for (std::size_t r = 0; r < quo.ambient_dim(); ++r) m.at(r, c) = all[c][r];
        const auto kernel = kernel_basis(m);
        if (kernel.empty()) fail(ErrorKind::InternalConsistency, "missing intersection kernel");
        const auto& v = kernel.front();
        BiForm fx = BiForm::zero(f, n, 0);
        BiForm cy = BiForm::zero(f, 0, n);
        for (int i = 0; i <= n; ++i)
            fx.set_coeff(i, 0, -v[static_cast<std::size_t>(i)]);
        for (int j = 0; j <= n; ++j)
            cy.set_coeff(0, j, v[static_cast<std::size_t>(n + 1 + j)]);
        if (fx.is_zero() || cy.is_zero())
            fail(ErrorKind::InternalConsistency, "degenerate grilled certificate");
        // s * c = f on C: the cleared difference is divisible by h.
        const BiForm diff = clearedA * cy - fx * y1_power(f, N);
        if (!biform_divide_exact(diff, h).has_value())
            fail(ErrorKind::InternalConsistency, "grilled certificate fails the divisor identity");
        rep.certificate = std::make_pair(std::move(fx), std::move(cy));
    }
    return rep;
}

FiniteGenerationVerdict finite_generation_verdict(const CurveContext& ctx, int n_max) {
    ctx.require_smooth("finite_generation_verdict");
    const TorsionReport rep = torsion_order(ctx, n_max);
    FiniteGenerationVerdict v;
    v.n_max = n_max;
    if (rep.order) {
        v.kind = FiniteGenerationVerdict::Kind::FinitelyGenerated;
        v.order = rep.order;
        v.note = "eta is torsion of order " + std::to_string(*rep.order) +
                 ": the extended canonical ring of the symmetric square is finitely generated";
    } else {
        v.kind = FiniteGenerationVerdict::Kind::OpenUpTo;
        v.note = "no torsion order found up to n_max";
        if (ctx.form().field().is_prime_field())
            v.note += "; over a finite field eta is necessarily torsion, so the ring is "
                      "finitely generated with order above the search bound";
    }
    return v;
}

} // namespace etaq
