#ifndef ETAQ_BIFORM_HPP
#define ETAQ_BIFORM_HPP

#include <array>
#include <optional>
#include <vector>

#include "etaq/field.hpp"

namespace etaq {

/*
 * A bihomogeneous form in (x0, x1; y0, y1) of bidegree (d1, d2), stored as
 * the dense (d1+1) x (d2+1) coefficient matrix with entry (i, j) the
 * coefficient of x0^i x1^(d1-i) y0^j y1^(d2-j).
 */
class BiForm {
public:
    BiForm(const FieldSpec& f, int d1, int d2)
        : field_(&f), d1_(d1), d2_(d2),
          c_(static_cast<size_t>((d1 + 1) * (d2 + 1)), Scalar::zero(f)) {
        if (d1 < 0 || d2 < 0) fail(ErrorKind::DegreeError, "negative bidegree");
    }

    static BiForm zero(const FieldSpec& f, int d1, int d2) { return BiForm(f, d1, d2); }
    static BiForm monomial(const FieldSpec& f, int d1, int d2, int i, int j, const Scalar& c);
    // f(x0,x1) * g(y0,y1) from coefficient vectors (index = exponent of x0 / y0).
    static BiForm outer(const FieldSpec& f, const std::vector<Scalar>& xc,
                        const std::vector<Scalar>& yc);

    const FieldSpec& field() const noexcept { return *field_; }
    int deg_x() const noexcept { return d1_; }
    int deg_y() const noexcept { return d2_; }

    const Scalar& coeff(int i, int j) const { return c_[idx(i, j)]; }
    void set_coeff(int i, int j, const Scalar& v) { c_[idx(i, j)] = v; }

    bool is_zero() const;

    BiForm operator-() const;
    BiForm operator+(const BiForm& o) const;
    BiForm operator-(const BiForm& o) const;
    BiForm operator*(const BiForm& o) const;
    BiForm operator*(const Scalar& s) const;
    bool operator==(const BiForm& o) const;
    bool operator!=(const BiForm& o) const { return !(*this == o); }

    BiForm transpose() const;

    // Bihomogeneous partial derivatives; differentiating a degree-0 variable
    // pair yields the zero form of the reduced bidegree floor.
    BiForm d_x0() const;
    BiForm d_x1() const;
    BiForm d_y0() const;
    BiForm d_y1() const;

    Scalar eval(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1) const;

    // Substitution by invertible 2x2 matrices acting on (x0,x1) and (y0,y1):
    // x0 -> a x0 + b x1, x1 -> c x0 + d x1 for mx = {a,b,c,d}, same for y.
    BiForm substitute(const std::array<Scalar, 4>& mx, const std::array<Scalar, 4>& my) const;

    // Coefficientwise reduction Q -> F_p.
    BiForm reduce_mod(const FieldSpec& fp) const;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i > d1_ || j < 0 || j > d2_) fail(ErrorKind::RangeError, "coefficient index");
        return static_cast<size_t>(i) * static_cast<size_t>(d2_ + 1) + static_cast<size_t>(j);
    }

    const FieldSpec* field_;
    int d1_, d2_;
    std::vector<Scalar> c_;
};

// Exact quotient G with h*G = F, when it exists; the quotient is found as a
// structured linear solve in the coefficients of G.
std::optional<BiForm> biform_divide_exact(const BiForm& F, const BiForm& h);

/*
 * Diagonal torus automorphism of P1 x P1 twisted by roots of unity:
 * (x0, x1, y0, y1) -> (z^a0 x0, z^a1 x1, z^b0 y0, z^b1 y1) with z = zeta_m.
 */
struct TorusAuto {
    unsigned m;
    int a0, a1, b0, b1;
};

struct AutoImage {
    BiForm image;
    // Present when h is an eigenform: image = zeta_m^character * h.
    std::optional<unsigned> character;
};

AutoImage apply_auto(const BiForm& h, const TorusAuto& sigma);

} // namespace etaq

#endif
