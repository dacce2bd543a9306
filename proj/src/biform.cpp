#include "etaq/biform.hpp"

#include "etaq/linalg.hpp"

namespace etaq {

BiForm BiForm::monomial(const FieldSpec& f, int d1, int d2, int i, int j, const Scalar& c) {
    BiForm m(f, d1, d2);
    m.set_coeff(i, j, c);
    return m;
}

BiForm BiForm::outer(const FieldSpec& f, const std::vector<Scalar>& xc,
                     const std::vector<Scalar>& yc) {
    if (xc.empty() || yc.empty()) fail(ErrorKind::DegreeError, "empty coefficient vector");
    BiForm r(f, static_cast<int>(xc.size()) - 1, static_cast<int>(yc.size()) - 1);
    for (size_t i = 0; i < xc.size(); ++i)
        for (size_t j = 0; j < yc.size(); ++j)
            r.set_coeff(static_cast<int>(i), static_cast<int>(j), xc[i] * yc[j]);
    return r;
}

bool BiForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

BiForm BiForm::operator-() const {
    BiForm r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

BiForm BiForm::operator+(const BiForm& o) const {
    if (!(*field_ == o.field())) fail(ErrorKind::FieldMismatch, "biform addition");
    if (d1_ != o.d1_ || d2_ != o.d2_) fail(ErrorKind::DegreeError, "biform addition bidegree");
    BiForm r = *this;
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
    return r;
}

BiForm BiForm::operator-(const BiForm& o) const { return *this + (-o); }

BiForm BiForm::operator*(const BiForm& o) const {
    if (!(*field_ == o.field())) fail(ErrorKind::FieldMismatch, "biform product");
    BiForm r(*field_, d1_ + o.d1_, d2_ + o.d2_);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) {
            if (coeff(i, j).is_zero()) continue;
            for (int a = 0; a <= o.d1_; ++a)
                for (int b = 0; b <= o.d2_; ++b) {
                    if (o.coeff(a, b).is_zero()) continue;
                    r.set_coeff(i + a, j + b, r.coeff(i + a, j + b) + coeff(i, j) * o.coeff(a, b));
                }
        }
    return r;
}

BiForm BiForm::operator*(const Scalar& s) const {
    BiForm r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

bool BiForm::operator==(const BiForm& o) const {
    return *field_ == o.field() && d1_ == o.d1_ && d2_ == o.d2_ && c_ == o.c_;
}

BiForm BiForm::transpose() const {
    BiForm r(*field_, d2_, d1_);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) r.set_coeff(j, i, coeff(i, j));
    return r;
}

BiForm BiForm::d_x0() const {
    if (d1_ == 0) return BiForm(*field_, 0, d2_);
    BiForm r(*field_, d1_ - 1, d2_);
    for (int i = 1; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j)
            r.set_coeff(i - 1, j, coeff(i, j) * Scalar::of_int(*field_, i));
    return r;
}

BiForm BiForm::d_x1() const {
    if (d1_ == 0) return BiForm(*field_, 0, d2_);
    BiForm r(*field_, d1_ - 1, d2_);
    for (int i = 0; i < d1_; ++i)
        for (int j = 0; j <= d2_; ++j)
            r.set_coeff(i, j, coeff(i, j) * Scalar::of_int(*field_, d1_ - i));
    return r;
}

BiForm BiForm::d_y0() const {
    if (d2_ == 0) return BiForm(*field_, d1_, 0);
    BiForm r(*field_, d1_, d2_ - 1);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 1; j <= d2_; ++j)
            r.set_coeff(i, j - 1, coeff(i, j) * Scalar::of_int(*field_, j));
    return r;
}

BiForm BiForm::d_y1() const {
    if (d2_ == 0) return BiForm(*field_, d1_, 0);
    BiForm r(*field_, d1_, d2_ - 1);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j < d2_; ++j)
            r.set_coeff(i, j, coeff(i, j) * Scalar::of_int(*field_, d2_ - j));
    return r;
}

Scalar BiForm::eval(const Scalar& x0, const Scalar& x1, const Scalar& y0,
                    const Scalar& y1) const {
    const FieldSpec& f = *field_;
    std::vector<Scalar> xp(static_cast<size_t>(d1_) + 1, Scalar::one(f));
    std::vector<Scalar> xq(static_cast<size_t>(d1_) + 1, Scalar::one(f));
    for (int i = 1; i <= d1_; ++i) {
        xp[static_cast<size_t>(i)] = xp[static_cast<size_t>(i - 1)] * x0;
        xq[static_cast<size_t>(i)] = xq[static_cast<size_t>(i - 1)] * x1;
    }
    std::vector<Scalar> yp(static_cast<size_t>(d2_) + 1, Scalar::one(f));
    std::vector<Scalar> yq(static_cast<size_t>(d2_) + 1, Scalar::one(f));
    for (int j = 1; j <= d2_; ++j) {
        yp[static_cast<size_t>(j)] = yp[static_cast<size_t>(j - 1)] * y0;
        yq[static_cast<size_t>(j)] = yq[static_cast<size_t>(j - 1)] * y1;
    }
    Scalar acc = Scalar::zero(f);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) {
            const Scalar& c = coeff(i, j);
            if (c.is_zero()) continue;
            acc += c * xp[static_cast<size_t>(i)] * xq[static_cast<size_t>(d1_ - i)] *
                   yp[static_cast<size_t>(j)] * yq[static_cast<size_t>(d2_ - j)];
        }
    return acc;
}

namespace {

// Expansions of (a u + b v)^i (c u + d v)^(d - i) as coefficient vectors.
std::vector<std::vector<Scalar>> power_table(const FieldSpec& f, int d,
                                             const std::array<Scalar, 4>& m) {
    // pw0[i] = coefficients of (a u + b v)^i, pw1[i] likewise for (c u + d v)^i.
    auto powers = [&](const Scalar& hi, const Scalar& lo) {
        std::vector<std::vector<Scalar>> pw(static_cast<size_t>(d) + 1);
        pw[0] = {Scalar::one(f)};
        for (int i = 1; i <= d; ++i) {
            const auto& prev = pw[static_cast<size_t>(i - 1)];
            std::vector<Scalar> cur(static_cast<size_t>(i) + 1, Scalar::zero(f));
            for (size_t t = 0; t < prev.size(); ++t) {
                cur[t + 1] += prev[t] * hi;
                cur[t] += prev[t] * lo;
            }
            pw[static_cast<size_t>(i)] = std::move(cur);
        }
        return pw;
    };
    auto p0 = powers(m[0], m[1]);
    auto p1 = powers(m[2], m[3]);
    std::vector<std::vector<Scalar>> table(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        std::vector<Scalar> v(static_cast<size_t>(d) + 1, Scalar::zero(f));
        const auto& a = p0[static_cast<size_t>(i)];
        const auto& b = p1[static_cast<size_t>(d - i)];
        for (size_t s = 0; s < a.size(); ++s)
            for (size_t t = 0; t < b.size(); ++t) v[s + t] += a[s] * b[t];
        table[static_cast<size_t>(i)] = std::move(v);
    }
    return table;
}

} // namespace

BiForm BiForm::substitute(const std::array<Scalar, 4>& mx, const std::array<Scalar, 4>& my) const {
    const FieldSpec& f = *field_;
    const auto tx = power_table(f, d1_, mx);
    const auto ty = power_table(f, d2_, my);
    BiForm r(f, d1_, d2_);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) {
            const Scalar& c = coeff(i, j);
            if (c.is_zero()) continue;
            const auto& vx = tx[static_cast<size_t>(i)];
            const auto& vy = ty[static_cast<size_t>(j)];
            for (int a = 0; a <= d1_; ++a) {
                if (vx[static_cast<size_t>(a)].is_zero()) continue;
                const Scalar cx = c * vx[static_cast<size_t>(a)];
                for (int b = 0; b <= d2_; ++b) {
                    if (vy[static_cast<size_t>(b)].is_zero()) continue;
                    r.set_coeff(a, b, r.coeff(a, b) + cx * vy[static_cast<size_t>(b)]);
                }
            }
        }
    return r;
}

BiForm BiForm::reduce_mod(const FieldSpec& fp) const {
    BiForm r(fp, d1_, d2_);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) r.set_coeff(i, j, reduce_mod_p(coeff(i, j), fp));
    return r;
}

std::optional<BiForm> biform_divide_exact(const BiForm& F, const BiForm& h) {
    if (!(F.field() == h.field())) fail(ErrorKind::FieldMismatch, "divide_exact");
    if (h.is_zero()) fail(ErrorKind::DivisionByZero, "divide_exact by the zero form");
    const int e1 = F.deg_x() - h.deg_x();
    const int e2 = F.deg_y() - h.deg_y();
    if (e1 < 0 || e2 < 0) fail(ErrorKind::DegreeError, "divide_exact bidegree");

    const FieldSpec& f = F.field();
    const size_t ncols = static_cast<size_t>((e1 + 1) * (e2 + 1));
    const size_t nrows = static_cast<size_t>((F.deg_x() + 1) * (F.deg_y() + 1));
    Matrix A(f, nrows, ncols);
    std::vector<Scalar> rhs;
    rhs.reserve(nrows);
    for (int i = 0; i <= F.deg_x(); ++i)
        for (int j = 0; j <= F.deg_y(); ++j) {
            const size_t row = static_cast<size_t>(i) * static_cast<size_t>(F.deg_y() + 1) +
                               static_cast<size_t>(j);
            rhs.push_back(F.coeff(i, j));
            for (int a = std::max(0, i - h.deg_x()); a <= std::min(e1, i); ++a)
                for (int b = std::max(0, j - h.deg_y()); b <= std::min(e2, j); ++b) {
                    const size_t col = static_cast<size_t>(a) * static_cast<size_t>(e2 + 1) +
                                       static_cast<size_t>(b);
                    A.at(row, col) = h.coeff(i - a, j - b);
                }
        }
    auto sol = solve(A, rhs);
    if (!sol) return std::nullopt;
    BiForm G(f, e1, e2);
    for (int a = 0; a <= e1; ++a)
        for (int b = 0; b <= e2; ++b)
            G.set_coeff(a, b, (*sol)[static_cast<size_t>(a) * static_cast<size_t>(e2 + 1) +
                                     static_cast<size_t>(b)]);
    return G;
}

AutoImage apply_auto(const BiForm& h, const TorusAuto& sigma) {
    const FieldSpec& f = h.field();
    const unsigned m = sigma.m;
    if (m == 0) fail(ErrorKind::RangeError, "torus automorphism of order 0");

    Scalar z = Scalar::one(f);
    if (m == 1) {
        // identity twist
    } else if (m == 2) {
        z = -Scalar::one(f);
    } else {
        if (!f.is_cyclotomic() || f.zeta_order() != m)
            fail(ErrorKind::FieldMismatch,
                 "automorphism of order " + std::to_string(m) + " needs field Q(z" +
                     std::to_string(m) + ")");
        z = Scalar::zeta(f);
    }
    std::vector<Scalar> zpow(m);
    zpow[0] = Scalar::one(f);
    for (unsigned e = 1; e < m; ++e) zpow[e] = zpow[e - 1] * z;

    auto weight = [&](int i, int j) {
        long w = static_cast<long>(sigma.a0) * i + static_cast<long>(sigma.a1) * (h.deg_x() - i) +
                 static_cast<long>(sigma.b0) * j + static_cast<long>(sigma.b1) * (h.deg_y() - j);
        long r = w % static_cast<long>(m);
        if (r < 0) r += m;
        return static_cast<unsigned>(r);
    };

    BiForm image(f, h.deg_x(), h.deg_y());
    std::optional<unsigned> character;
    bool eigen = true;
    bool any = false;
    for (int i = 0; i <= h.deg_x(); ++i)
        for (int j = 0; j <= h.deg_y(); ++j) {
            const Scalar& c = h.coeff(i, j);
            if (c.is_zero()) continue;
            const unsigned w = weight(i, j);
            image.set_coeff(i, j, c * zpow[w]);
            if (!any) {
                character = w;
                any = true;
            } else if (character && *character != w) {
                eigen = false;
                character.reset();
            }
        }
    if (!any) character = 0;
    if (!eigen) character.reset();
    return AutoImage{std::move(image), character};
}

} // namespace etaq
