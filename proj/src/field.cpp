#include "etaq/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace etaq {

namespace {

// ---- deterministic 64-bit primality (Miller-Rabin, fixed base set) ----

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// ---- dense polynomial helpers over Q (used for cyclotomic arithmetic) ----

using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    qtrim(r);
    return r;
}

// Remainder of a modulo the monic polynomial mod (in place on a copy).
QPoly qrem_monic(QPoly a, const QPoly& mod) {
    const int dm = static_cast<int>(mod.size()) - 1;
    qtrim(a);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const mpq_class c = a.back();
        const size_t shift = a.size() - mod.size();
        if (c != 0) {
            for (size_t i = 0; i + 1 < mod.size(); ++i)
                a[shift + i] -= c * mod[i];
        }
        a.pop_back();
        qtrim(a);
    }
    return a;
}

// General division with remainder over Q.
void qdivrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    qtrim(r);
    const int db = qdeg(b);
    q.assign(r.size(), mpq_class(0));
    const mpq_class lb = b[static_cast<size_t>(db)];
    while (qdeg(r) >= db) {
        const int dr = qdeg(r);
        mpq_class c = r[static_cast<size_t>(dr)] / lb;
        q[static_cast<size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
        qtrim(r);
    }
    qtrim(q);
}

// Extended gcd over Q[t]: returns monic g with u*a + v*b = g.
void qxgcd(QPoly a, QPoly b, QPoly& g, QPoly& u, QPoly& v) {
    QPoly u0 = {mpq_class(1)}, v0 = {};
    QPoly u1 = {}, v1 = {mpq_class(1)};
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly q, r;
        qdivrem(a, b, q, r);
        QPoly u2 = u0, v2 = v0;
        // u2 -= q*u1 ; v2 -= q*v1
        QPoly qu = qmul(q, u1), qv = qmul(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), mpq_class(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        v2.resize(std::max(v2.size(), qv.size()), mpq_class(0));
        for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        qtrim(u2);
        qtrim(v2);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    g = std::move(a);
    u = std::move(u0);
    v = std::move(v0);
    const int dg = qdeg(g);
    if (dg >= 0 && g[static_cast<size_t>(dg)] != 1) {
        const mpq_class lc = g[static_cast<size_t>(dg)];
        for (auto& c : g) c /= lc;
        for (auto& c : u) c /= lc;
        for (auto& c : v) c /= lc;
    }
}

// ---- integer polynomial division, exact and monic, for Phi_m ----

std::vector<mpz_class> zdiv_exact_monic(const std::vector<mpz_class>& a,
                                        const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r = a, q;
    q.assign(a.size() - b.size() + 1, mpz_class(0));
    for (int i = static_cast<int>(a.size() - b.size()); i >= 0; --i) {
        const mpz_class c = r[static_cast<size_t>(i) + b.size() - 1];
        q[static_cast<size_t>(i)] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j)
                r[static_cast<size_t>(i) + j] -= c * b[j];
    }
    for (const auto& c : r)
        if (c != 0) fail(ErrorKind::InternalConsistency, "inexact cyclotomic division");
    return q;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned m) {
    if (m == 0) fail(ErrorKind::RangeError, "cyclotomic order must be positive");
    if (m == 1) return {mpz_class(-1), mpz_class(1)};
    // t^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<mpz_class> num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = zdiv_exact_monic(num, cyclotomic_polynomial(d));
    }
    return num;
}

// ---- FieldSpec interning ----

const FieldSpec& FieldSpec::rationals() {
    static const FieldSpec* q = [] {
        auto* f = new FieldSpec();
        f->kind_ = FieldKind::Rationals;
        return f;
    }();
    return *q;
}

const FieldSpec& FieldSpec::cyclotomic(unsigned m) {
    if (m < 3) fail(ErrorKind::RangeError, "cyclotomic order must be >= 3");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        auto f = std::unique_ptr<FieldSpec>(new FieldSpec());
        f->kind_ = FieldKind::Cyclotomic;
        f->m_ = m;
        f->cyclo_ = cyclotomic_polynomial(m);
        f->degree_ = static_cast<unsigned>(f->cyclo_.size() - 1);
        it = cache.emplace(m, std::move(f)).first;
    }
    return *it->second;
}

const FieldSpec& FieldSpec::prime_field(std::uint64_t p) {
    if (p >= (1ull << 31)) fail(ErrorKind::InvalidPrime, "prime field characteristic must be < 2^31");
    if (!is_prime_u64(p)) fail(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) {
        auto f = std::unique_ptr<FieldSpec>(new FieldSpec());
        f->kind_ = FieldKind::PrimeField;
        f->p_ = p;
        it = cache.emplace(p, std::move(f)).first;
    }
    return *it->second;
}

const FieldSpec& FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Q(z", 0) == 0 && text.back() == ')') {
        const std::string body = text.substr(3, text.size() - 4);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::ParseError, "bad field spec '" + text + "'");
        return cyclotomic(static_cast<unsigned>(std::stoul(body)));
    }
    if (text.rfind("Fp:", 0) == 0) {
        const std::string body = text.substr(3);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::ParseError, "bad field spec '" + text + "'");
        return prime_field(std::stoull(body));
    }
    fail(ErrorKind::ParseError, "bad field spec '" + text + "' (expected Q, Q(z<m>) or Fp:<p>)");
}

std::string FieldSpec::name() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Cyclotomic: return "Q(z" + std::to_string(m_) + ")";
        case FieldKind::PrimeField: return "Fp:" + std::to_string(p_);
    }
    return "?";
}

// ---- Scalar ----

namespace {

void check_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (&a != &b && !(a == b))
        fail(ErrorKind::FieldMismatch, "scalars from " + a.name() + " and " + b.name());
}

std::vector<mpq_class> reduce_cyclo(std::vector<mpq_class> v, const FieldSpec& f) {
    QPoly mod(f.modulus().size());
    for (size_t i = 0; i < mod.size(); ++i) mod[i] = mpq_class(f.modulus()[i]);
    v = qrem_monic(std::move(v), mod);
    v.resize(f.degree(), mpq_class(0));
    return v;
}

} // namespace

Scalar Scalar::zero(const FieldSpec& f) { return of_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long n) {
    Scalar s;
    s.field_ = &f;
    switch (f.kind()) {
        case FieldKind::Rationals:
            s.v_ = mpq_class(n);
            break;
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> v(f.degree(), mpq_class(0));
            v[0] = n;
            s.v_ = std::move(v);
            break;
        }
        case FieldKind::PrimeField: {
            const auto p = static_cast<long long>(f.characteristic());
            long long r = static_cast<long long>(n) % p;
            if (r < 0) r += p;
            s.v_ = static_cast<std::uint64_t>(r);
            break;
        }
    }
    return s;
}

Scalar Scalar::of_mpq(const FieldSpec& f, const mpq_class& q) {
    Scalar s;
    s.field_ = &f;
    switch (f.kind()) {
        case FieldKind::Rationals: {
            mpq_class c = q;
            c.canonicalize();
            s.v_ = std::move(c);
            break;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> v(f.degree(), mpq_class(0));
            v[0] = q;
            v[0].canonicalize();
            s.v_ = std::move(v);
            break;
        }
        case FieldKind::PrimeField: {
            mpq_class c = q;
            c.canonicalize();
            const std::uint64_t p = f.characteristic();
            const mpz_class pz(static_cast<unsigned long>(p));
            mpz_class num = c.get_num() % pz, den = c.get_den() % pz;
            if (num < 0) num += pz;
            if (den == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by " + std::to_string(p));
            const std::uint64_t n = num.get_ui();
            const std::uint64_t d = den.get_ui();
            const std::uint64_t dinv = powmod_u64(d, p - 2, p);
            s.v_ = mulmod_u64(n, dinv, p);
            break;
        }
    }
    return s;
}

Scalar Scalar::zeta(const FieldSpec& f) {
    if (!f.is_cyclotomic()) fail(ErrorKind::FieldMismatch, "zeta requires a cyclotomic field");
    std::vector<mpq_class> v(f.degree(), mpq_class(0));
    v[1] = 1;
    return of_coeffs(f, std::move(v));
}

Scalar Scalar::of_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs) {
    if (!f.is_cyclotomic()) fail(ErrorKind::FieldMismatch, "coefficient vectors require a cyclotomic field");
    for (auto& c : coeffs) c.canonicalize();
    Scalar s;
    s.field_ = &f;
    s.v_ = reduce_cyclo(std::move(coeffs), f);
    return s;
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
        case FieldKind::Cyclotomic: {
            for (const auto& c : std::get<std::vector<mpq_class>>(v_))
                if (c != 0) return false;
            return true;
        }
        case FieldKind::PrimeField: return std::get<std::uint64_t>(v_) == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 1;
        case FieldKind::Cyclotomic: {
            const auto& v = std::get<std::vector<mpq_class>>(v_);
            if (v.empty() || v[0] != 1) return false;
            for (size_t i = 1; i < v.size(); ++i)
                if (v[i] != 0) return false;
            return true;
        }
        case FieldKind::PrimeField: return std::get<std::uint64_t>(v_) == 1;
    }
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = mpq_class(-std::get<mpq_class>(v_));
            break;
        case FieldKind::Cyclotomic: {
            auto v = std::get<std::vector<mpq_class>>(v_);
            for (auto& c : v) c = -c;
            r.v_ = std::move(v);
            break;
        }
        case FieldKind::PrimeField: {
            const std::uint64_t p = field_->characteristic();
            const std::uint64_t a = std::get<std::uint64_t>(v_);
            r.v_ = a == 0 ? 0 : p - a;
            break;
        }
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*field_, *o.field_);
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
            break;
        case FieldKind::Cyclotomic: {
            auto v = std::get<std::vector<mpq_class>>(v_);
            const auto& w = std::get<std::vector<mpq_class>>(o.v_);
            for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
            r.v_ = std::move(v);
            break;
        }
        case FieldKind::PrimeField: {
            const std::uint64_t p = field_->characteristic();
            std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
            if (s >= p) s -= p;
            r.v_ = s;
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*field_, *o.field_);
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
            break;
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(v_);
            const auto& b = std::get<std::vector<mpq_class>>(o.v_);
            r.v_ = reduce_cyclo(qmul(a, b), *field_);
            break;
        }
        case FieldKind::PrimeField:
            r.v_ = mulmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_),
                              field_->characteristic());
            break;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + field_->name());
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
            break;
        case FieldKind::Cyclotomic: {
            // Extended gcd of the representative with the minimal polynomial.
            QPoly a = std::get<std::vector<mpq_class>>(v_);
            QPoly mod(field_->modulus().size());
            for (size_t i = 0; i < mod.size(); ++i) mod[i] = mpq_class(field_->modulus()[i]);
            QPoly g, u, v;
            qxgcd(a, mod, g, u, v);
            if (qdeg(g) != 0)
                fail(ErrorKind::InternalConsistency, "cyclotomic modulus not coprime to nonzero element");
            r.v_ = reduce_cyclo(std::move(u), *field_);
            break;
        }
        case FieldKind::PrimeField: {
            const std::uint64_t p = field_->characteristic();
            r.v_ = powmod_u64(std::get<std::uint64_t>(v_), p - 2, p);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(*field_, *o.field_);
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in " + field_->name());
    if (field_->is_rationals()) {
        Scalar r = *this;
        r.v_ = mpq_class(std::get<mpq_class>(v_) / std::get<mpq_class>(o.v_));
        return r;
    }
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(*field_);
    Scalar b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(*field_ == *o.field_)) return false;
    return v_ == o.v_;
}

const mpq_class& Scalar::rational() const {
    if (!field_->is_rationals()) fail(ErrorKind::FieldMismatch, "not a rational scalar");
    return std::get<mpq_class>(v_);
}

const std::vector<mpq_class>& Scalar::coeffs() const {
    if (!field_->is_cyclotomic()) fail(ErrorKind::FieldMismatch, "not a cyclotomic scalar");
    return std::get<std::vector<mpq_class>>(v_);
}

std::uint64_t Scalar::residue() const {
    if (!field_->is_prime_field()) fail(ErrorKind::FieldMismatch, "not a prime-field scalar");
    return std::get<std::uint64_t>(v_);
}

std::string Scalar::to_string() const {
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return std::get<mpq_class>(v_).get_str();
        case FieldKind::PrimeField:
            return std::to_string(std::get<std::uint64_t>(v_));
        case FieldKind::Cyclotomic: {
            const auto& v = std::get<std::vector<mpq_class>>(v_);
            const std::string gen = "z" + std::to_string(field_->zeta_order());
            std::ostringstream out;
            bool first = true;
            for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d) {
                const mpq_class& c = v[static_cast<size_t>(d)];
                if (c == 0) continue;
                mpq_class a = c;
                if (first) {
                    if (a < 0) {
                        out << "-";
                        a = -a;
                    }
                    first = false;
                } else {
                    out << (a < 0 ? "-" : "+");
                    if (a < 0) a = -a;
                }
                const bool unit = (a == 1);
                if (d == 0) {
                    out << a.get_str();
                } else {
                    if (!unit) out << a.get_str() << "*";
                    out << gen;
                    if (d > 1) out << "^" << d;
                }
            }
            if (first) return "0";
            return out.str();
        }
    }
    return "?";
}

Scalar reduce_mod_p(const Scalar& a, const FieldSpec& fp) {
    if (!fp.is_prime_field()) fail(ErrorKind::FieldMismatch, "target must be a prime field");
    if (!a.field().is_rationals()) fail(ErrorKind::FieldMismatch, "only rational scalars reduce mod p");
    return Scalar::of_mpq(fp, a.rational());
}

std::vector<Scalar> scale_to_integral(const std::vector<Scalar>& row) {
    if (row.empty()) return row;
    const FieldSpec& f = row.front().field();
    if (f.is_prime_field()) return row;

    auto each_mpq = [&](auto&& fn) {
        for (const Scalar& s : row) {
            if (f.is_rationals()) {
                fn(s.rational());
            } else {
                for (const auto& c : s.coeffs()) fn(c);
            }
        }
    };

    mpz_class den(1), num(0);
    each_mpq([&](const mpq_class& c) {
        if (c == 0) return;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = den / g * c.get_den();
    });
    each_mpq([&](const mpq_class& c) {
        if (c == 0) return;
        mpz_class t = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.get_mpz_t());
    });
    if (num == 0) return row;
    mpq_class scale(den, num);
    scale.canonicalize();
    if (scale < 0) scale = -scale;
    const Scalar factor = Scalar::of_mpq(f, scale);
    std::vector<Scalar> out;
    out.reserve(row.size());
    for (const Scalar& s : row) out.push_back(s * factor);
    return out;
}

} // namespace etaq
