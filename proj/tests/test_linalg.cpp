#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etaq/linalg.hpp"
#include "test_util.hpp"

using namespace etaq;
using testutil::DetRng;
using testutil::naive_kernel_dim;
using testutil::naive_rank;
using testutil::random_scalar;

namespace {

Matrix random_matrix(DetRng& rng, const FieldSpec& f, std::size_t r, std::size_t c, long height) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(rng, f, height);
    return m;
}

bool kernel_vectors_annihilate(const Matrix& m, const std::vector<std::vector<Scalar>>& basis) {
    for (const auto& v : basis) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Scalar acc = Scalar::zero(m.field());
            for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("rank agrees with the naive elimination oracle") {
    const FieldSpec* fields[] = {&FieldSpec::rationals(), &FieldSpec::cyclotomic(5),
                                 &FieldSpec::prime_field(101)};
    for (const FieldSpec* f : fields) {
        DetRng rng(11);
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = static_cast<std::size_t>(rng.next_int(1, 7));
            const std::size_t c = static_cast<std::size_t>(rng.next_int(1, 7));
            Matrix m = random_matrix(rng, *f, r, c, 5);
            // Mix in rank deficiency: duplicate a row now and then.
            if (r >= 2 && t % 3 == 0) m.set_row(r - 1, m.row(0));
            CHECK(rank(m) == naive_rank(m));
        }
    }
}

TEST_CASE("kernel basis annihilates and has the right dimension") {
    const FieldSpec* fields[] = {&FieldSpec::rationals(), &FieldSpec::cyclotomic(5),
                                 &FieldSpec::prime_field(7)};
    for (const FieldSpec* f : fields) {
        DetRng rng(23);
        for (int t = 0; t < 30; ++t) {
            const std::size_t r = static_cast<std::size_t>(rng.next_int(1, 6));
            const std::size_t c = static_cast<std::size_t>(rng.next_int(1, 8));
            const Matrix m = random_matrix(rng, *f, r, c, 5);
            const auto basis = kernel_basis(m);
            CHECK(basis.size() == naive_kernel_dim(m));
            CHECK(kernel_vectors_annihilate(m, basis));
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    const FieldSpec& Q = FieldSpec::rationals();
    DetRng rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t r = static_cast<std::size_t>(rng.next_int(1, 6));
        const std::size_t c = static_cast<std::size_t>(rng.next_int(1, 6));
        const Matrix m = random_matrix(rng, Q, r, c, 5);
        std::vector<Scalar> x0;
        for (std::size_t j = 0; j < c; ++j) x0.push_back(random_scalar(rng, Q, 5));
        std::vector<Scalar> b(r, Scalar::zero(Q));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b[i] += m.at(i, j) * x0[j];
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < r; ++i) {
            Scalar acc = Scalar::zero(Q);
            for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * (*x)[j];
            CHECK(acc == b[i]);
        }
    }

    // x + y = 0 and x + y = 1 cannot both hold.
    Matrix m(Q, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = Scalar::one(Q);
    std::vector<Scalar> b = {Scalar::zero(Q), Scalar::one(Q)};
    CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("pivot columns are the lexicographically first independent columns") {
    const FieldSpec& Q = FieldSpec::rationals();
    // Columns: c0 = 0, c1 = e1, c2 = 2*e1, c3 = e2.
    Matrix m(Q, 2, 4);
    m.at(0, 1) = Scalar::one(Q);
    m.at(0, 2) = Scalar::of_int(Q, 2);
    m.at(1, 3) = Scalar::one(Q);
    const auto e = echelonize(m);
    REQUIRE(e.pivot_cols.size() == 2);
    CHECK(e.pivot_cols[0] == 1);
    CHECK(e.pivot_cols[1] == 3);
}
