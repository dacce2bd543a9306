#include "etaq/linalg.hpp"

namespace etaq {

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail(ErrorKind::InternalConsistency, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (!(rows[i][j].field() == f)) fail(ErrorKind::FieldMismatch, "matrix entry field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Echelon echelonize(Matrix m) {
    const FieldSpec& f = m.field();
    const bool fraction_free = !f.is_prime_field();
    const std::size_t nr = m.rows(), nc = m.cols();

    if (fraction_free) {
        for (std::size_t i = 0; i < nr; ++i) m.set_row(i, scale_to_integral(m.row(i)));
    }

    std::vector<std::size_t> pivots;
    Scalar prev = Scalar::one(f);
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && m.at(pr, c).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != r) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(r, j), m.at(pr, j));
        }
        const Scalar pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (m.at(i, c).is_zero()) {
                if (fraction_free) {
                    // Keep the Bareiss scaling uniform across rows.
                    for (std::size_t j = c + 1; j < nc; ++j)
                        m.at(i, j) = pivot * m.at(i, j) / prev;
                }
                continue;
            }
            const Scalar factor = m.at(i, c);
            if (fraction_free) {
                for (std::size_t j = c + 1; j < nc; ++j)
                    m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(r, j)) / prev;
            } else {
                const Scalar ratio = factor / pivot;
                for (std::size_t j = c + 1; j < nc; ++j)
                    m.at(i, j) = m.at(i, j) - ratio * m.at(r, j);
            }
            m.at(i, c) = Scalar::zero(f);
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return echelonize(m).rank(); }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const FieldSpec& f = m.field();
    const std::size_t nc = m.cols();
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(nc, Scalar::zero(f));
        v[fc] = Scalar::one(f);
        for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            Scalar acc = Scalar::zero(f);
            for (std::size_t j = pc + 1; j < nc; ++j) {
                if (!v[j].is_zero() && !e.reduced.at(ri, j).is_zero())
                    acc += e.reduced.at(ri, j) * v[j];
            }
            v[pc] = -(acc / e.reduced.at(ri, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
    const FieldSpec& f = m.field();
    if (rhs.size() != m.rows()) fail(ErrorKind::InternalConsistency, "rhs size mismatch");
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Echelon e = echelonize(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;

    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    for (std::size_t ri = e.pivot_cols.size(); ri-- > 0;) {
        const std::size_t pc = e.pivot_cols[ri];
        Scalar acc = e.reduced.at(ri, m.cols());
        for (std::size_t j = pc + 1; j < m.cols(); ++j) {
            if (!x[j].is_zero() && !e.reduced.at(ri, j).is_zero())
                acc -= e.reduced.at(ri, j) * x[j];
        }
        x[pc] = acc / e.reduced.at(ri, pc);
    }
    return x;
}

} // namespace etaq
