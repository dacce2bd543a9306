#ifndef ETAQ_LINALG_HPP
#define ETAQ_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "etaq/field.hpp"

namespace etaq {

// Dense matrix of scalars from one field.
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return *field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(data_.begin() + static_cast<long>(i * cols_),
                                   data_.begin() + static_cast<long>((i + 1) * cols_));
    }
    void set_row(std::size_t i, const std::vector<Scalar>& r) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

private:
    const FieldSpec* field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/*
 * Row echelon form data.  Over Q and Q(z_m) the reduction is fraction-free
 * (Bareiss): rows are scaled to integral vectors first and every interior
 * division is by the previous pivot, so entries stay minors of the scaled
 * input.  Over F_p plain Gaussian elimination is used.  Pivots are chosen
 * as the first nonzero entry in column order, so pivot columns are the
 * lexicographically first independent columns.
 */
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon echelonize(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of the right kernel {v : M v = 0}; one vector per free column, in
// ascending free-column order, with unit entry at the free column.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

// One solution of M x = b, if the system is consistent (free variables 0).
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

} // namespace etaq

#endif
