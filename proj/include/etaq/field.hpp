#ifndef ETAQ_FIELD_HPP
#define ETAQ_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "etaq/error.hpp"

namespace etaq {

enum class FieldKind { Rationals, Cyclotomic, PrimeField };

/*
 * Descriptor of one of the supported exact coefficient fields:
 *
 *   Q        arbitrary-precision rationals
 *   Q(z_m)   the m-th cyclotomic field, m >= 3, presented as Q[t]/Phi_m(t)
 *   F_p      the prime field of p elements, p < 2^31
 *
 * Specs are interned: each distinct field is constructed once and callers
 * hold references, so spec comparison is cheap and Scalars stay small.
 */
class FieldSpec {
public:
    static const FieldSpec& rationals();
    static const FieldSpec& cyclotomic(unsigned m);
    static const FieldSpec& prime_field(std::uint64_t p);

    // Accepts "Q", "Q(z5)", "Fp:101".
    static const FieldSpec& parse(const std::string& text);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }
    bool is_cyclotomic() const noexcept { return kind_ == FieldKind::Cyclotomic; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }

    // Cyclotomic order m; 0 for the other kinds.
    unsigned zeta_order() const noexcept { return m_; }
    // Field characteristic: p for F_p, 0 otherwise.
    std::uint64_t characteristic() const noexcept { return p_; }
    // Degree over Q: phi(m) for Q(z_m), 1 for Q; 1 for F_p by convention.
    unsigned degree() const noexcept { return degree_; }
    // Monic minimal polynomial Phi_m of the generator, size degree()+1.
    const std::vector<mpz_class>& modulus() const { return cyclo_; }

    std::string name() const;

    bool operator==(const FieldSpec& o) const noexcept {
        return kind_ == o.kind_ && m_ == o.m_ && p_ == o.p_;
    }
    bool operator!=(const FieldSpec& o) const noexcept { return !(*this == o); }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

private:
    FieldSpec() = default;

    FieldKind kind_ = FieldKind::Rationals;
    unsigned m_ = 0;
    std::uint64_t p_ = 0;
    unsigned degree_ = 1;
    std::vector<mpz_class> cyclo_;
};

bool is_prime_u64(std::uint64_t n);

// m-th cyclotomic polynomial over Z, monic, computed by exact division of
// t^m - 1 by the Phi_d of the proper divisors d of m.
std::vector<mpz_class> cyclotomic_polynomial(unsigned m);

/*
 * An exact element of one of the supported fields.  Values are immutable
 * in the sense that all operations return fresh scalars; representations
 * are canonical, so equality is plain representation comparison:
 *
 *   Q        reduced fraction, positive denominator (GMP canonical form)
 *   Q(z_m)   coefficient vector of length phi(m), fully reduced mod Phi_m
 *   F_p      residue in [0, p)
 */
class Scalar {
public:
    Scalar() : field_(&FieldSpec::rationals()), v_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(const FieldSpec& f, long n);
    static Scalar of_mpq(const FieldSpec& f, const mpq_class& q);
    // Generator z_m of a cyclotomic field.
    static Scalar zeta(const FieldSpec& f);
    // Cyclotomic element from coefficients (low degree first, any length).
    static Scalar of_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs);

    const FieldSpec& field() const noexcept { return *field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Representation accessors (checked).
    const mpq_class& rational() const;
    const std::vector<mpq_class>& coeffs() const;
    std::uint64_t residue() const;

    std::string to_string() const;

private:
    friend class ScalarOps;

    const FieldSpec* field_;
    std::variant<mpq_class, std::vector<mpq_class>, std::uint64_t> v_;
};

// Ring homomorphism Q -> F_p (and coefficientwise Q(z_m) -> nothing: only
// rational scalars are accepted).  The denominator must be prime to p.
Scalar reduce_mod_p(const Scalar& a, const FieldSpec& fp);

/*
 * Centralized denominator clearing: returns the vector scaled by a positive
 * rational so that all coordinates become integral with trivial common
 * content.  Over F_p the vector is returned unchanged.  Scaling a row by a
 * nonzero constant preserves rank, kernels and solution sets, which is how
 * the linear-algebra layer uses this.
 */
std::vector<Scalar> scale_to_integral(const std::vector<Scalar>& row);

} // namespace etaq

#endif
