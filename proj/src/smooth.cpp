#include "etaq/smooth.hpp"

#include <algorithm>

#include "etaq/parse.hpp"

namespace etaq {

namespace {

std::uint64_t fnv_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct ShearGen {
    std::uint64_t state;
    explicit ShearGen(std::uint64_t seed) : state(seed | 1) {}

    std::uint64_t next_raw() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }

    // Invertible shear parameters: 1 - a*b != 0 and (a, b) != (0, 0).
    std::pair<Scalar, Scalar> next(const FieldSpec& f) {
        for (;;) {
            const long ra = static_cast<long>(next_raw() % 9) - 4;
            const long rb = static_cast<long>(next_raw() % 9) - 4;
            const Scalar a = Scalar::of_int(f, ra);
            const Scalar b = Scalar::of_int(f, rb);
            if (a.is_zero() && b.is_zero()) continue;
            if ((Scalar::one(f) - a * b).is_zero()) continue;
            return {a, b};
        }
    }
};

struct ChartWitness {
    std::optional<std::pair<Scalar, Scalar>> point; // unsheared chart coordinates
    std::optional<TriangularWitness> tri;
    bool via_common_factor = false;
};

struct ChartOutcome {
    std::vector<ChartWitness> witnesses;
    bool empty() const { return witnesses.empty(); }
};

// Fully deflate p by (T - root); p is univariate and stays monic if it was.
void deflate_all(UPoly& p, const Scalar& root, const FieldSpec& f) {
    const UPoly lin = {-root, Scalar::one(f)};
    for (;;) {
        UPoly q, r;
        udivrem(p, lin, q, r, f);
        if (!uis_zero(r)) return;
        p = std::move(q);
        if (udeg(p) == 0) return;
    }
}

void unshear_point(Scalar& x, Scalar& y, const Scalar& a, const Scalar& b) {
    // Solutions of the sheared system map by (x, y) -> (x + a y, b x + y).
    const Scalar nx = x + a * y;
    const Scalar ny = b * x + y;
    x = nx;
    y = ny;
}

// Turn one triangular branch (q, gy) with rdeg(gy) >= 1 into exact points
// where the base field sees them, plus triangular leftovers.
void extract_branch(const UPoly& q, const RPoly& gy, const FieldSpec& f, const Scalar& sa,
                    const Scalar& sb, bool via_cf, std::vector<ChartWitness>& out) {
    UPoly qq = umonic(q);
    for (const Scalar& alpha : ubase_field_roots(q, f)) {
        UPoly ry(gy.size(), Scalar::zero(f));
        for (size_t j = 0; j < gy.size(); ++j) ry[j] = ueval(gy[j], alpha, f);
        utrim(ry);
        deflate_all(qq, alpha, f);
        UPoly rr = ry;
        for (const Scalar& beta : ubase_field_roots(ry, f)) {
            Scalar x = alpha, y = beta;
            unshear_point(x, y, sa, sb);
            out.push_back(ChartWitness{std::make_pair(x, y), std::nullopt, via_cf});
            deflate_all(rr, beta, f);
        }
        if (udeg(rr) >= 1) {
            BPoly r(rr.size());
            for (size_t j = 0; j < rr.size(); ++j) r[j] = uconst(f, rr[j]);
            out.push_back(
                ChartWitness{std::nullopt,
                             TriangularWitness{UPoly{-alpha, Scalar::one(f)}, r, sa, sb, via_cf},
                             via_cf});
        }
    }
    if (udeg(qq) >= 1) {
        BPoly r(gy.size());
        for (size_t j = 0; j < gy.size(); ++j) r[j] = rmod(gy[j], qq, f);
        out.push_back(ChartWitness{std::nullopt, TriangularWitness{qq, r, sa, sb, via_cf}, via_cf});
    }
}

// One witness on the curve V(W): every point of it solves the chart system,
// because W divides each member.
void witness_on_curve(const BPoly& W, const FieldSpec& f, const Scalar& sa, const Scalar& sb,
                      std::vector<ChartWitness>& out) {
    const UPoly cont = bcontent(W, f);
    if (udeg(cont) >= 1) {
        UPoly cc = umonic(cont);
        const auto roots = ubase_field_roots(cont, f);
        for (const Scalar& alpha : roots) {
            Scalar x = alpha, y = Scalar::zero(f);
            unshear_point(x, y, sa, sb);
            out.push_back(ChartWitness{std::make_pair(x, y), std::nullopt, true});
            deflate_all(cc, alpha, f);
        }
        if (udeg(cc) >= 1) {
            // Vertical components over non-rational x-values: any Y works.
            const BPoly r = {UPoly{}, UPoly{Scalar::one(f)}}; // r = Y
            out.push_back(ChartWitness{std::nullopt, TriangularWitness{cc, r, sa, sb, true}, true});
        }
        return;
    }
    const BPoly pp = bprimitive(W, f);
    const int dy = bdeg_y(pp);
    if (dy < 1) fail(ErrorKind::InternalConsistency, "constant common factor");
    const UPoly& L = pp[static_cast<size_t>(dy)];

    const std::uint64_t p = f.characteristic();
    const long sweep = (p > 0 && p < 64) ? static_cast<long>(p) : 64;
    for (long t = 0; t < sweep; ++t) {
        const long val = (p > 0) ? t : ((t % 2 == 0) ? t / 2 : -(t + 1) / 2);
        const Scalar alpha = Scalar::of_int(f, val);
        if (ueval(L, alpha, f).is_zero()) continue;
        UPoly ry = beval_x(pp, alpha, f);
        const auto roots = ubase_field_roots(ry, f);
        if (!roots.empty()) {
            Scalar x = alpha, y = roots.front();
            unshear_point(x, y, sa, sb);
            out.push_back(ChartWitness{std::make_pair(x, y), std::nullopt, true});
            return;
        }
        ry = umonic(ry);
        BPoly r(ry.size());
        for (size_t j = 0; j < ry.size(); ++j) r[j] = uconst(f, ry[j]);
        out.push_back(ChartWitness{
            std::nullopt, TriangularWitness{UPoly{-alpha, Scalar::one(f)}, r, sa, sb, true}, true});
        return;
    }

    // Tiny prime fields where the leading coefficient vanishes everywhere:
    // look for an irreducible quadratic modulus avoiding it.
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            const UPoly q = {Scalar::of_int(f, static_cast<long>(b)),
                             Scalar::of_int(f, static_cast<long>(a)), Scalar::one(f)};
            bool has_root = false;
            for (std::uint64_t x = 0; x < p && !has_root; ++x)
                has_root = ueval(q, Scalar::of_int(f, static_cast<long>(x)), f).is_zero();
            if (has_root) continue;
            if (uis_zero(rmod(L, q, f))) continue;
            RPoly r = rpoly_from(pp, q, f);
            const UPoly inv = rinv(r.back(), q, f);
            for (auto& c : r) c = rmul(c, inv, q, f);
            BPoly rb(r.size());
            for (size_t j = 0; j < r.size(); ++j) rb[j] = r[j];
            out.push_back(ChartWitness{std::nullopt, TriangularWitness{q, rb, sa, sb, true}, true});
            return;
        }
    fail(ErrorKind::InternalConsistency, "no witness found on a common factor");
}

ChartOutcome triangular_outcome(const UPoly& eliminant, const std::vector<BPoly>& sys,
                                const FieldSpec& f, const Scalar& sa, const Scalar& sb) {
    ChartOutcome out;
    for (const auto& br : triangular_gcd(eliminant, sys, f)) {
        const int d = rdeg(br.gcd);
        if (d < 0)
            fail(ErrorKind::InternalConsistency, "chart system vanishes on an eliminant factor");
        if (d == 0) continue; // coprime above this factor
        extract_branch(br.modulus, br.gcd, f, sa, sb, false, out.witnesses);
    }
    return out;
}

ChartOutcome decompose_system(std::vector<BPoly> sys, const FieldSpec& f, int depth);

// Zero-dimensional path once all members are pairwise coprime.
ChartOutcome coprime_system(const std::vector<BPoly>& sys, const FieldSpec& f) {
    std::vector<const BPoly*> ys;
    std::vector<const BPoly*> xs;
    for (const auto& p : sys) (bdeg_y(p) >= 1 ? ys : xs).push_back(&p);
    const Scalar z = Scalar::zero(f);
    if (ys.empty()) return {}; // pairwise coprime univariate members: empty
    UPoly elim;
    if (ys.size() == 1) {
        for (const auto* p : xs) elim = uis_zero(elim) ? (*p)[0] : ugcd(elim, (*p)[0], f);
    } else {
        elim = bresultant_y(*ys[0], *ys[1], f);
        if (uis_zero(elim))
            fail(ErrorKind::InternalConsistency, "vanishing resultant of coprime members");
        for (const auto* p : xs) elim = ugcd(elim, (*p)[0], f);
    }
    if (uis_zero(elim) || udeg(elim) == 0) return {};
    return triangular_outcome(useparable_part(elim, f), sys, f, z, z);
}

ChartOutcome decompose_system(std::vector<BPoly> sys, const FieldSpec& f, int depth) {
    if (depth > 64) fail(ErrorKind::InternalConsistency, "decomposition depth exceeded");
    const Scalar z = Scalar::zero(f);
    std::vector<BPoly> S;
    for (auto& p : sys) {
        btrim(p);
        if (bis_zero(p)) continue;
        if (bis_constant(p)) return {}; // a nonzero constant: no common zero
        S.push_back(std::move(p));
    }
    if (S.empty()) fail(ErrorKind::InternalConsistency, "empty chart system");

    BPoly g = S.front();
    for (size_t i = 1; i < S.size() && !bis_constant(g); ++i) g = bgcd(g, S[i], f);
    if (!bis_constant(g)) {
        ChartOutcome out;
        witness_on_curve(g, f, z, z, out.witnesses);
        return out;
    }
    if (S.size() == 1) return {};

    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j) {
            const BPoly d = bgcd(S[i], S[j], f);
            if (bis_constant(d)) continue;
            // V(S) = V({d} + rest) with both split parts of the pair, or
            // V of the cofactors together with the rest.
            std::vector<BPoly> rest;
            for (size_t t = 0; t < S.size(); ++t)
                if (t != i && t != j) rest.push_back(S[t]);
            std::vector<BPoly> first = rest;
            first.push_back(d);
            ChartOutcome o1 = decompose_system(std::move(first), f, depth + 1);
            if (!o1.empty()) return o1;
            std::vector<BPoly> second = std::move(rest);
            second.push_back(bdiv_exact(S[i], d, f));
            second.push_back(bdiv_exact(S[j], d, f));
            return decompose_system(std::move(second), f, depth + 1);
        }
    return coprime_system(S, f);
}

ChartOutcome analyze_chart(const BPoly& ht, const FieldSpec& f, std::uint64_t seed,
                           bool force_decomposition = false) {
    if (bis_constant(ht)) return {}; // nonzero constant: chart misses the curve
    const BPoly A0 = bderiv_x(ht, f);
    const BPoly B0 = bderiv_y(ht, f);
    const Scalar z = Scalar::zero(f);

    BPoly W = bgcd(bgcd(ht, A0, f), B0, f);
    if (!bis_constant(W)) {
        // Repeated or derivative-degenerate factor: all of V(W) is singular.
        ChartOutcome out;
        witness_on_curve(W, f, z, z, out.witnesses);
        return out;
    }
    if (force_decomposition) return decompose_system({ht, A0, B0}, f, 0);

    ShearGen gen(seed);
    for (int attempt = 0; attempt <= 8; ++attempt) {
        Scalar sa = z, sb = z;
        if (attempt > 0) {
            auto ab = gen.next(f);
            sa = ab.first;
            sb = ab.second;
        }
        const BPoly g = attempt == 0 ? ht : bshear(ht, sa, sb, f);
        const BPoly gA = bderiv_x(g, f);
        const BPoly gB = bderiv_y(g, f);
        if (bdeg_y(g) < 1 && bdeg_y(gA) < 1 && bdeg_y(gB) < 1) return {}; // univariate, coprime
        if (bdeg_y(g) < 1) continue; // shear until the equation sees Y

        std::vector<UPoly> comps;
        bool degenerate = false;
        for (const BPoly* P : {&gA, &gB}) {
            if (bis_zero(*P)) continue;
            if (bdeg_y(*P) >= 1) {
                UPoly R = bresultant_y(g, *P, f);
                if (uis_zero(R)) {
                    degenerate = true;
                    break;
                }
                comps.push_back(std::move(R));
            } else {
                comps.push_back((*P)[0]);
            }
        }
        if (degenerate) continue;
        if (comps.empty()) fail(ErrorKind::InternalConsistency, "no derivative constraints");
        UPoly G = comps.front();
        for (size_t i = 1; i < comps.size() && udeg(G) != 0; ++i) G = ugcd(G, comps[i], f);
        if (udeg(G) == 0) return {};
        return triangular_outcome(useparable_part(G, f), {g, gA, gB}, f, sa, sb);
    }
    return decompose_system({ht, A0, B0}, f, 0);
}

ProjectivePoint chart_point(const Scalar& x, const Scalar& y, int u, int v,
                            const FieldSpec& f) {
    const Scalar one = Scalar::one(f);
    ProjectivePoint p{one, one, one, one};
    if (u == 1) {
        p.x0 = x;
        p.x1 = one;
    } else {
        p.x0 = one;
        p.x1 = x;
    }
    if (v == 1) {
        p.y0 = y;
        p.y1 = one;
    } else {
        p.y0 = one;
        p.y1 = y;
    }
    return p;
}

} // namespace

bool ProjectivePoint::same_point(const ProjectivePoint& o) const {
    return (x0 * o.x1 == x1 * o.x0) && (y0 * o.y1 == y1 * o.y0);
}

bool witness_checks(const BiForm& h, const SingularWitness& w) {
    const FieldSpec& f = h.field();
    if (w.is_point()) {
        const ProjectivePoint& p = w.point();
        for (const BiForm* g : {&h}) {
            if (!g->eval(p.x0, p.x1, p.y0, p.y1).is_zero()) return false;
        }
        const BiForm parts[4] = {h.d_x0(), h.d_x1(), h.d_y0(), h.d_y1()};
        for (const auto& g : parts)
            if (!g.eval(p.x0, p.x1, p.y0, p.y1).is_zero()) return false;
        return true;
    }
    const TriangularWitness& t = w.triangular();
    BPoly ht = dehomogenize(h, w.chart_u, w.chart_v);
    if (!t.shear_a.is_zero() || !t.shear_b.is_zero()) ht = bshear(ht, t.shear_a, t.shear_b, f);
    const BPoly sys[3] = {ht, bderiv_x(ht, f), bderiv_y(ht, f)};
    if (rdeg(rpoly_from(t.r, t.q, f)) < 1) return false;
    for (const auto& P : sys) {
        // Remainder of P modulo (q, r); r is monic in Y modulo q.
        RPoly rp = rpoly_from(P, t.q, f);
        const RPoly rr = rpoly_from(t.r, t.q, f);
        const int dr = rdeg(rr);
        while (rdeg(rp) >= dr) {
            const int da = rdeg(rp);
            const UPoly c = rp[static_cast<size_t>(da)];
            for (int j = 0; j <= dr; ++j) {
                UPoly& slot = rp[static_cast<size_t>(da - dr + j)];
                slot = rmod(usub(slot, umul(c, rr[static_cast<size_t>(j)], f), f), t.q, f);
            }
            while (!rp.empty() && uis_zero(rp.back())) rp.pop_back();
        }
        if (rdeg(rp) >= 0) return false;
    }
    return true;
}

namespace {

SmoothnessReport singular_locus_impl(const BiForm& h, bool force_decomposition) {
    if (h.is_zero()) fail(ErrorKind::DegenerateInput, "the zero form defines no curve");
    if (h.deg_x() != h.deg_y())
        fail(ErrorKind::DegreeError, "expected bidegree (k,k), got (" +
                                         std::to_string(h.deg_x()) + "," +
                                         std::to_string(h.deg_y()) + ")");
    if (h.deg_x() < 1) fail(ErrorKind::DegreeError, "bidegree (k,k) with k >= 1 required");
    const FieldSpec& f = h.field();
    const std::uint64_t seed = fnv_hash(f.name() + ":" + to_expression(h));

    SmoothnessReport report;
    for (int u = 0; u <= 1; ++u)
        for (int v = 0; v <= 1; ++v) {
            const BPoly ht = dehomogenize(h, u, v);
            ChartOutcome out = analyze_chart(ht, f, seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(2 * u + v + 1)), force_decomposition);
            for (auto& cw : out.witnesses) {
                SingularWitness w;
                w.chart_u = u;
                w.chart_v = v;
                w.via_common_factor = cw.via_common_factor;
                if (cw.point) {
                    const ProjectivePoint p = chart_point(cw.point->first, cw.point->second, u, v, f);
                    bool dup = false;
                    for (const auto& prev : report.witnesses)
                        if (prev.is_point() && prev.point().same_point(p)) dup = true;
                    if (dup) continue;
                    w.data = p;
                } else {
                    w.data = std::move(*cw.tri);
                }
                report.witnesses.push_back(std::move(w));
            }
        }

    for (const auto& w : report.witnesses)
        if (!witness_checks(h, w))
            fail(ErrorKind::InternalConsistency, "singular witness failed verification");

    report.verdict = report.witnesses.empty() ? SmoothVerdict::Smooth : SmoothVerdict::Singular;
    return report;
}

} // namespace

SmoothnessReport singular_locus(const BiForm& h) { return singular_locus_impl(h, false); }

SmoothnessReport singular_locus_by_decomposition(const BiForm& h) {
    return singular_locus_impl(h, true);
}

CurveContext CurveContext::analyze(const BiForm& h) {
    if (h.deg_x() != h.deg_y() || h.deg_x() < 3)
        fail(ErrorKind::RangeError, "curve analysis needs bidegree (k,k) with k >= 3");
    return CurveContext(h, h.deg_x(), singular_locus(h));
}

CurveContext CurveContext::unchecked(const BiForm& h) {
    if (h.deg_x() != h.deg_y() || h.deg_x() < 3)
        fail(ErrorKind::RangeError, "curve analysis needs bidegree (k,k) with k >= 3");
    return CurveContext(h, h.deg_x(), SmoothnessReport{});
}

void CurveContext::require_smooth(const std::string& op) const {
    if (report_.verdict != SmoothVerdict::Smooth)
        fail(ErrorKind::NotSmooth, op + " requires a certified smooth curve");
}

} // namespace etaq
