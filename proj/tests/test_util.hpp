#ifndef ETAQ_TESTS_TEST_UTIL_HPP
#define ETAQ_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "etaq/biform.hpp"
#include "etaq/field.hpp"
#include "etaq/linalg.hpp"

namespace etaq::testutil {

// Deterministic RNG for frozen test data; intentionally independent of the
// sampler used by the library.
struct DetRng {
    std::mt19937_64 eng;
    explicit DetRng(std::uint64_t seed) : eng(seed) {}

    long next_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng() % span);
    }
};

inline Scalar random_scalar(DetRng& rng, const FieldSpec& f, long height = 9) {
    switch (f.kind()) {
        case FieldKind::Rationals: {
            const long num = rng.next_int(-height, height);
            const long den = rng.next_int(1, height);
            return Scalar::of_mpq(f, mpq_class(num, den));
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> v(f.degree());
            for (auto& c : v) c = rng.next_int(-height, height);
            return Scalar::of_coeffs(f, std::move(v));
        }
        case FieldKind::PrimeField:
            return Scalar::of_int(f, rng.next_int(0, static_cast<long>(f.characteristic()) - 1));
    }
    return Scalar::zero(f);
}

inline Scalar random_nonzero_scalar(DetRng& rng, const FieldSpec& f, long height = 9) {
    for (;;) {
        Scalar s = random_scalar(rng, f, height);
        if (!s.is_zero()) return s;
    }
}

inline BiForm random_biform(DetRng& rng, const FieldSpec& f, int d1, int d2, long height = 9) {
    BiForm h(f, d1, d2);
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
            h.set_coeff(i, j, Scalar::of_int(f, rng.next_int(-height, height)));
    return h;
}

// Plain Gaussian elimination over the field, no fraction-free bookkeeping;
// the independent oracle for rank and kernel dimension.
inline std::size_t naive_rank(Matrix m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pr = r;
        while (pr < nr && m.at(pr, c).is_zero()) ++pr;
        if (pr == nr) continue;
        if (pr != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(r, j), m.at(pr, j));
        const Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < nc; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar fac = m.at(i, c);
            for (std::size_t j = c; j < nc; ++j) m.at(i, j) = m.at(i, j) - fac * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline std::size_t naive_kernel_dim(const Matrix& m) { return m.cols() - naive_rank(m); }

} // namespace etaq::testutil

#endif
