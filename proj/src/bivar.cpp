#include "etaq/bivar.hpp"

#include <algorithm>

namespace etaq {

// ---- univariate ----

int udeg(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool uis_zero(const UPoly& p) { return udeg(p) < 0; }

UPoly uconst(const FieldSpec& f, const Scalar& c) {
    (void)f;
    if (c.is_zero()) return {};
    return {c};
}

UPoly umonomial(const FieldSpec& f, int deg, const Scalar& c) {
    if (c.is_zero()) return {};
    UPoly p(static_cast<size_t>(deg) + 1, Scalar::zero(f));
    p.back() = c;
    return p;
}

Scalar ulead(const UPoly& p) {
    const int d = udeg(p);
    if (d < 0) fail(ErrorKind::InternalConsistency, "leading coefficient of zero");
    return p[static_cast<size_t>(d)];
}

UPoly uadd(const UPoly& a, const UPoly& b, const FieldSpec& f) {
    UPoly r(std::max(a.size(), b.size()), Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b, const FieldSpec& f) {
    UPoly r(std::max(a.size(), b.size()), Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b, const FieldSpec& f) {
    if (uis_zero(a) || uis_zero(b)) return {};
    UPoly r(a.size() + b.size() - 1, Scalar::zero(f));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly uderiv(const UPoly& a, const FieldSpec& f) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1, Scalar::zero(f));
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Scalar::of_int(f, static_cast<long>(i));
    utrim(r);
    return r;
}

Scalar ueval(const UPoly& a, const Scalar& x, const FieldSpec& f) {
    Scalar acc = Scalar::zero(f);
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

void udivrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r, const FieldSpec& f) {
    const int db = udeg(b);
    if (db < 0) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    r = a;
    utrim(r);
    q.clear();
    if (udeg(r) >= db) q.assign(static_cast<size_t>(udeg(r) - db) + 1, Scalar::zero(f));
    const Scalar lbinv = b[static_cast<size_t>(db)].inverse();
    while (udeg(r) >= db) {
        const int dr = udeg(r);
        const Scalar c = r[static_cast<size_t>(dr)] * lbinv;
        q[static_cast<size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i)
            r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
        utrim(r);
    }
}

UPoly udiv_exact(const UPoly& a, const UPoly& b, const FieldSpec& f) {
    UPoly q, r;
    udivrem(a, b, q, r, f);
    if (!uis_zero(r)) fail(ErrorKind::InternalConsistency, "inexact univariate division");
    return q;
}

UPoly umonic(const UPoly& a) {
    if (uis_zero(a)) return {};
    return uscale(a, ulead(a).inverse());
}

UPoly ugcd(const UPoly& a0, const UPoly& b0, const FieldSpec& f) {
    UPoly a = a0, b = b0;
    utrim(a);
    utrim(b);
    if (uis_zero(a)) return umonic(b);
    if (uis_zero(b)) return umonic(a);
    if (!f.is_prime_field()) {
        a = scale_to_integral(a);
        b = scale_to_integral(b);
    }
    while (!uis_zero(b)) {
        UPoly q, r;
        udivrem(a, b, q, r, f);
        a = std::move(b);
        b = std::move(r);
        if (!f.is_prime_field() && !uis_zero(b)) b = scale_to_integral(b);
    }
    return umonic(a);
}

namespace {

// Coefficientwise p-th-root descent of a polynomial in X^p over F_p;
// Frobenius fixes F_p, so the coefficients themselves are kept.
UPoly frobenius_descent(const UPoly& a, std::uint64_t p) {
    UPoly g;
    for (size_t i = 0; i < a.size(); i += static_cast<size_t>(p)) g.push_back(a[i]);
    utrim(g);
    return g;
}

} // namespace

UPoly useparable_part(const UPoly& a0, const FieldSpec& f) {
    UPoly a = umonic(a0);
    if (udeg(a) <= 1) return a;
    UPoly d = uderiv(a, f);
    if (uis_zero(d)) {
        // Only in characteristic p: a is a polynomial in X^p.
        return useparable_part(frobenius_descent(a, f.characteristic()), f);
    }
    const UPoly g = ugcd(a, d, f);
    if (udeg(g) == 0) return a;
    const UPoly u = udiv_exact(a, g, f);
    const UPoly rest = useparable_part(g, f);
    return umonic(umul(udiv_exact(u, ugcd(u, rest, f), f), rest, f));
}

namespace {

std::vector<mpz_class> small_divisors(const mpz_class& n0, long budget) {
    // All positive divisors provided the cofactor fully factors under the
    // trial-division budget; otherwise a best-effort list.
    std::vector<mpz_class> primes;
    std::vector<int> mult;
    mpz_class n = abs(n0);
    for (mpz_class p = 2; p * p <= n && p <= budget; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            mult.push_back(0);
            while (n % p == 0) {
                n /= p;
                ++mult.back();
            }
        }
    }
    if (n > 1) {
        primes.push_back(n);
        mult.push_back(1);
    }
    std::vector<mpz_class> divs = {mpz_class(1)};
    for (size_t i = 0; i < primes.size(); ++i) {
        const size_t sz = divs.size();
        mpz_class pk = 1;
        for (int e = 1; e <= mult[i]; ++e) {
            pk *= primes[i];
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

} // namespace

std::vector<Scalar> ubase_field_roots(const UPoly& a0, const FieldSpec& f) {
    std::vector<Scalar> roots;
    UPoly a = a0;
    utrim(a);
    if (udeg(a) <= 0) return roots;

    if (f.is_prime_field()) {
        const std::uint64_t p = f.characteristic();
        if (p > 2000003) return roots; // out of enumeration range
        for (std::uint64_t x = 0; x < p; ++x) {
            const Scalar v = Scalar::of_int(f, static_cast<long>(x));
            if (ueval(a, v, f).is_zero()) roots.push_back(v);
        }
        return roots;
    }

    if (f.is_rationals()) {
        while (udeg(a) > 0 && a[0].is_zero()) {
            // X divides: root 0, deflate.
            if (roots.empty() || !(roots.back() == Scalar::zero(f))) roots.push_back(Scalar::zero(f));
            a.erase(a.begin());
        }
        if (udeg(a) <= 0) return roots;
        a = scale_to_integral(a);
        const mpz_class c0 = a[0].rational().get_num();
        const mpz_class cl = ulead(a).rational().get_num();
        for (const mpz_class& pnum : small_divisors(c0, 100000)) {
            for (const mpz_class& pden : small_divisors(cl, 100000)) {
                for (int sign = 1; sign >= -1; sign -= 2) {
                    mpq_class cand(sign * pnum, pden);
                    cand.canonicalize();
                    const Scalar v = Scalar::of_mpq(f, cand);
                    if (ueval(a, v, f).is_zero() &&
                        std::find(roots.begin(), roots.end(), v) == roots.end())
                        roots.push_back(v);
                }
            }
        }
        return roots;
    }

    // Cyclotomic coefficients: report roots of linear polynomials only.
    if (udeg(a) == 1) roots.push_back(-(a[0] / a[1]));
    return roots;
}

// ---- bivariate ----

int bdeg_y(const BPoly& p) {
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
        if (!uis_zero(p[static_cast<size_t>(j)])) return j;
    return -1;
}

int bdeg_x(const BPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, udeg(c));
    return d;
}

void btrim(BPoly& p) {
    while (!p.empty() && uis_zero(p.back())) p.pop_back();
    for (auto& c : p) utrim(c);
}

bool bis_zero(const BPoly& p) { return bdeg_y(p) < 0; }

bool bis_constant(const BPoly& p) { return bdeg_y(p) <= 0 && bdeg_x(p) <= 0; }

BPoly badd(const BPoly& a, const BPoly& b, const FieldSpec& f) {
    BPoly r(std::max(a.size(), b.size()));
    for (size_t j = 0; j < r.size(); ++j) {
        const UPoly& ca = j < a.size() ? a[j] : UPoly{};
        const UPoly& cb = j < b.size() ? b[j] : UPoly{};
        r[j] = uadd(ca, cb, f);
    }
    btrim(r);
    return r;
}

BPoly bsub(const BPoly& a, const BPoly& b, const FieldSpec& f) {
    BPoly nb = b;
    for (auto& c : nb) c = uscale(c, -Scalar::one(f));
    return badd(a, nb, f);
}

BPoly bmul(const BPoly& a, const BPoly& b, const FieldSpec& f) {
    if (bis_zero(a) || bis_zero(b)) return {};
    BPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (uis_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (uis_zero(b[j])) continue;
            r[i + j] = uadd(r[i + j], umul(a[i], b[j], f), f);
        }
    }
    btrim(r);
    return r;
}

BPoly bscale(const BPoly& a, const Scalar& c) {
    BPoly r = a;
    for (auto& x : r) x = uscale(x, c);
    btrim(r);
    return r;
}

BPoly bderiv_x(const BPoly& a, const FieldSpec& f) {
    BPoly r = a;
    for (auto& c : r) c = uderiv(c, f);
    btrim(r);
    return r;
}

BPoly bderiv_y(const BPoly& a, const FieldSpec& f) {
    if (a.size() <= 1) return {};
    BPoly r(a.size() - 1);
    for (size_t j = 1; j < a.size(); ++j)
        r[j - 1] = uscale(a[j], Scalar::of_int(f, static_cast<long>(j)));
    btrim(r);
    return r;
}

UPoly beval_y(const BPoly& a, const Scalar& y, const FieldSpec& f) {
    UPoly acc;
    for (size_t j = a.size(); j-- > 0;) acc = uadd(uscale(acc, y), a[j], f);
    return acc;
}

UPoly beval_x(const BPoly& a, const Scalar& x, const FieldSpec& f) {
    UPoly r(a.size(), Scalar::zero(f));
    for (size_t j = 0; j < a.size(); ++j) r[j] = ueval(a[j], x, f);
    utrim(r);
    return r;
}

Scalar beval(const BPoly& a, const Scalar& x, const Scalar& y, const FieldSpec& f) {
    return ueval(beval_x(a, x, f), y, f);
}

UPoly bcontent(const BPoly& a, const FieldSpec& f) {
    UPoly g;
    for (const auto& c : a) {
        if (uis_zero(c)) continue;
        g = ugcd(g, c, f);
        if (udeg(g) == 0) break;
    }
    return g;
}

BPoly bprimitive(const BPoly& a, const FieldSpec& f) {
    if (bis_zero(a)) return {};
    const UPoly c = bcontent(a, f);
    BPoly r = a;
    for (auto& x : r) x = uis_zero(x) ? UPoly{} : udiv_exact(x, c, f);
    btrim(r);
    return r;
}

namespace {

// Pseudo-remainder of a by b with respect to Y: lc_y(b)^(da-db+1) * a mod b.
BPoly bprem_y(BPoly a, const BPoly& b, const FieldSpec& f) {
    const int db = bdeg_y(b);
    const UPoly lb = b[static_cast<size_t>(db)];
    int da = bdeg_y(a);
    int steps = da - db + 1;
    while (da >= db && !bis_zero(a)) {
        const UPoly la = a[static_cast<size_t>(da)];
        BPoly next(a.size());
        // next = lb * a - la * Y^(da-db) * b
        for (size_t j = 0; j < a.size(); ++j) next[j] = umul(lb, a[j], f);
        for (size_t j = 0; j < b.size(); ++j) {
            const size_t t = j + static_cast<size_t>(da - db);
            next[t] = usub(next[t], umul(la, b[j], f), f);
        }
        btrim(next);
        a = std::move(next);
        --steps;
        da = bdeg_y(a);
    }
    // Keep the classical scaling so divisibility arguments stay valid.
    for (; steps > 0; --steps) {
        for (auto& c : a) c = umul(c, lb, f);
    }
    return a;
}

} // namespace

BPoly bgcd(const BPoly& a0, const BPoly& b0, const FieldSpec& f) {
    BPoly a = a0, b = b0;
    btrim(a);
    btrim(b);
    if (bis_zero(a)) return b;
    if (bis_zero(b)) return a;
    const UPoly cont = ugcd(bcontent(a, f), bcontent(b, f), f);
    a = bprimitive(a, f);
    b = bprimitive(b, f);
    if (bdeg_y(a) < bdeg_y(b)) std::swap(a, b);
    while (!bis_zero(b) && bdeg_y(b) > 0) {
        BPoly r = bprem_y(a, b, f);
        a = std::move(b);
        b = bprimitive(r, f);
    }
    BPoly pp;
    if (bis_zero(b)) {
        pp = a; // primitive by construction
    } else {
        pp = BPoly{uconst(f, Scalar::one(f))}; // a constant remainder: coprime parts
    }
    BPoly result(pp.size());
    for (size_t j = 0; j < pp.size(); ++j) result[j] = umul(pp[j], cont, f);
    btrim(result);
    return result;
}

BPoly bdiv_exact(const BPoly& a0, const BPoly& b0, const FieldSpec& f) {
    BPoly a = a0, b = b0;
    btrim(a);
    btrim(b);
    if (bis_zero(b)) fail(ErrorKind::DivisionByZero, "bivariate division by zero");
    if (bis_zero(a)) return {};
    const int db = bdeg_y(b);
    if (db == 0) {
        BPoly q = a;
        for (auto& c : q) c = uis_zero(c) ? UPoly{} : udiv_exact(c, b[0], f);
        btrim(q);
        return q;
    }
    BPoly q(static_cast<size_t>(bdeg_y(a) - db) + 1);
    while (!bis_zero(a) && bdeg_y(a) >= db) {
        const int da = bdeg_y(a);
        const UPoly c = udiv_exact(a[static_cast<size_t>(da)], b[static_cast<size_t>(db)], f);
        q[static_cast<size_t>(da - db)] = c;
        BPoly sub(static_cast<size_t>(da) + 1);
        for (size_t j = 0; j < b.size(); ++j)
            sub[j + static_cast<size_t>(da - db)] = umul(c, b[j], f);
        a = bsub(a, sub, f);
    }
    if (!bis_zero(a)) fail(ErrorKind::InternalConsistency, "inexact bivariate division");
    btrim(q);
    return q;
}

UPoly bresultant_y(const BPoly& a0, const BPoly& b0, const FieldSpec& f) {
    BPoly a = a0, b = b0;
    btrim(a);
    btrim(b);
    if (bis_zero(a) || bis_zero(b)) return {};
    const int m = bdeg_y(a), n = bdeg_y(b);
    const Scalar one = Scalar::one(f);
    if (m == 0 && n == 0) return uconst(f, one);
    if (m == 0) {
        UPoly r = uconst(f, one);
        for (int i = 0; i < n; ++i) r = umul(r, a[0], f);
        return r;
    }
    if (n == 0) {
        UPoly r = uconst(f, one);
        for (int i = 0; i < m; ++i) r = umul(r, b[0], f);
        return r;
    }

    // Fraction-free determinant of the Sylvester matrix over F[X].
    const int N = m + n;
    std::vector<std::vector<UPoly>> S(static_cast<size_t>(N),
                                      std::vector<UPoly>(static_cast<size_t>(N)));
    for (int r = 0; r < n; ++r)
        for (int t = 0; t <= m; ++t) S[static_cast<size_t>(r)][static_cast<size_t>(r + t)] =
            a[static_cast<size_t>(m - t)];
    for (int r = 0; r < m; ++r)
        for (int t = 0; t <= n; ++t)
            S[static_cast<size_t>(n + r)][static_cast<size_t>(r + t)] = b[static_cast<size_t>(n - t)];

    UPoly prev = uconst(f, one);
    bool negate = false;
    for (int k = 0; k < N; ++k) {
        int pr = k;
        while (pr < N && uis_zero(S[static_cast<size_t>(pr)][static_cast<size_t>(k)])) ++pr;
        if (pr == N) return {}; // singular: resultant vanishes identically
        if (pr != k) {
            std::swap(S[static_cast<size_t>(pr)], S[static_cast<size_t>(k)]);
            negate = !negate;
        }
        const UPoly& pivot = S[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                UPoly t = umul(pivot, S[static_cast<size_t>(i)][static_cast<size_t>(j)], f);
                if (!uis_zero(S[static_cast<size_t>(i)][static_cast<size_t>(k)]))
                    t = usub(t,
                             umul(S[static_cast<size_t>(i)][static_cast<size_t>(k)],
                                  S[static_cast<size_t>(k)][static_cast<size_t>(j)], f),
                             f);
                S[static_cast<size_t>(i)][static_cast<size_t>(j)] = udiv_exact(t, prev, f);
            }
            S[static_cast<size_t>(i)][static_cast<size_t>(k)] = {};
        }
        prev = pivot;
    }
    UPoly det = S[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
    if (negate) det = uscale(det, -one);
    return det;
}

BPoly bshear(const BPoly& p, const Scalar& a, const Scalar& b, const FieldSpec& f) {
    // X -> X + a Y, Y -> b X + Y.
    const BPoly gx = {UPoly{Scalar::zero(f), Scalar::one(f)}, UPoly{a}};
    const BPoly gy = {UPoly{Scalar::zero(f), b}, UPoly{Scalar::one(f)}};
    const int dx = bdeg_x(p), dy = bdeg_y(p);
    std::vector<BPoly> px(static_cast<size_t>(std::max(dx, 0)) + 1);
    std::vector<BPoly> py(static_cast<size_t>(std::max(dy, 0)) + 1);
    px[0] = {uconst(f, Scalar::one(f))};
    for (size_t i = 1; i < px.size(); ++i) px[i] = bmul(px[i - 1], gx, f);
    py[0] = {uconst(f, Scalar::one(f))};
    for (size_t j = 1; j < py.size(); ++j) py[j] = bmul(py[j - 1], gy, f);

    BPoly acc;
    for (size_t j = 0; j < p.size(); ++j) {
        for (size_t i = 0; i < p[j].size(); ++i) {
            const Scalar& c = p[j][i];
            if (c.is_zero()) continue;
            acc = badd(acc, bscale(bmul(px[i], py[j], f), c), f);
        }
    }
    return acc;
}

BPoly dehomogenize(const BiForm& h, int u, int v) {
    const FieldSpec& f = h.field();
    BPoly p;
    for (int i = 0; i <= h.deg_x(); ++i)
        for (int j = 0; j <= h.deg_y(); ++j) {
            const Scalar& c = h.coeff(i, j);
            if (c.is_zero()) continue;
            const int xe = (u == 1) ? i : h.deg_x() - i;
            const int ye = (v == 1) ? j : h.deg_y() - j;
            if (p.size() <= static_cast<size_t>(ye)) p.resize(static_cast<size_t>(ye) + 1);
            UPoly& row = p[static_cast<size_t>(ye)];
            if (row.size() <= static_cast<size_t>(xe))
                row.resize(static_cast<size_t>(xe) + 1, Scalar::zero(f));
            row[static_cast<size_t>(xe)] += c;
        }
    btrim(p);
    return p;
}

// ---- arithmetic modulo q(X) ----

UPoly rmod(const UPoly& a, const UPoly& q, const FieldSpec& f) {
    UPoly quo, rem;
    if (uis_zero(a)) return {};
    udivrem(a, q, quo, rem, f);
    return rem;
}

UPoly rmul(const UPoly& a, const UPoly& b, const UPoly& q, const FieldSpec& f) {
    return rmod(umul(a, b, f), q, f);
}

UPoly rinv(const UPoly& a0, const UPoly& q, const FieldSpec& f) {
    UPoly a = rmod(a0, q, f);
    if (uis_zero(a)) fail(ErrorKind::InternalConsistency, "inverse of zero residue");
    // Extended Euclid over the base field.
    UPoly r0 = q, r1 = a;
    UPoly s0 = {}, s1 = {Scalar::one(f)}; // s tracks the coefficient of a
    while (!uis_zero(r1)) {
        UPoly quo, rem;
        udivrem(r0, r1, quo, rem, f);
        UPoly s2 = usub(s0, umul(quo, s1, f), f);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd(q, a), s0 * a == r0 (mod q)
    if (udeg(r0) == 0) {
        return rmod(uscale(s0, ulead(r0).inverse()), q, f);
    }
    if (udeg(r0) < udeg(q)) throw SplitNeeded{umonic(r0)};
    fail(ErrorKind::InternalConsistency, "residue is zero modulo the full modulus");
}

RPoly rpoly_from(const BPoly& p, const UPoly& q, const FieldSpec& f) {
    RPoly r(p.size());
    for (size_t j = 0; j < p.size(); ++j) r[j] = rmod(p[j], q, f);
    while (!r.empty() && uis_zero(r.back())) r.pop_back();
    return r;
}

int rdeg(const RPoly& p) {
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
        if (!uis_zero(p[static_cast<size_t>(j)])) return j;
    return -1;
}

namespace {

// Monic Euclidean gcd over (F[X]/q)[Y]; throws SplitNeeded on zero divisors.
RPoly rgcd_pair(RPoly a, RPoly b, const UPoly& q, const FieldSpec& f) {
    auto normalize = [&](RPoly& p) {
        while (!p.empty() && uis_zero(p.back())) p.pop_back();
    };
    auto make_monic = [&](RPoly& p) {
        normalize(p);
        if (p.empty()) return;
        const UPoly inv = rinv(p.back(), q, f);
        for (auto& c : p) c = rmul(c, inv, q, f);
    };
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        make_monic(b);
        // a mod b with b monic in Y.
        while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
            normalize(a);
            if (a.size() < b.size()) break;
            const UPoly c = a.back();
            if (uis_zero(c)) {
                a.pop_back();
                continue;
            }
            const size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) {
                UPoly t = rmul(c, b[j], q, f);
                a[shift + j] = rmod(usub(a[shift + j], t, f), q, f);
            }
            normalize(a);
        }
        std::swap(a, b);
        normalize(b);
    }
    make_monic(a);
    return a;
}

} // namespace

std::vector<TriangularGcd> triangular_gcd(const UPoly& q0, const std::vector<BPoly>& polys,
                                          const FieldSpec& f) {
    std::vector<TriangularGcd> out;
    std::vector<UPoly> stack = {umonic(q0)};
    while (!stack.empty()) {
        UPoly q = std::move(stack.back());
        stack.pop_back();
        if (udeg(q) == 0) continue;
        try {
            RPoly g;
            bool have = false;
            for (const BPoly& p : polys) {
                RPoly rp = rpoly_from(p, q, f);
                if (rdeg(rp) < 0) continue;
                if (have) {
                    g = rgcd_pair(std::move(g), std::move(rp), q, f);
                } else {
                    g = rgcd_pair(std::move(rp), RPoly{}, q, f); // monic normalization
                    have = true;
                }
                if (rdeg(g) == 0) break; // unit gcd already
            }
            out.push_back(TriangularGcd{std::move(q), std::move(g)});
        } catch (const SplitNeeded& s) {
            UPoly d = s.divisor;
            UPoly rest = udiv_exact(q, d, f);
            stack.push_back(std::move(d));
            stack.push_back(std::move(rest));
        }
    }
    return out;
}

} // namespace etaq
