// Ehrhart/Hilbert series and the Gorenstein test.
//
// The common engine takes a signed unimodular decomposition of a pointed
// cone together with a grading w that is positive on its extreme rays and
// computes H(t) = sum_{x in cone} t^{w.x} exactly.  Each unimodular term
// is specialized along the two-parameter substitution
//   x -> t^{w} (1+tau)^{lambda}
// with lambda a generic integer direction; a denominator factor
// 1 - t^{w.g}(1+tau)^{lambda.g} is an invertible power series in tau when
// w.g != 0 and contributes a simple pole in tau otherwise, so each term
// is a Laurent series in tau with coefficients in Q(t).  The tau-poles
// cancel across the signed sum and the constant term is H(t).
#include "latkit/series.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace latkit {

namespace {

// ---------- dense polynomials over Q ----------

using Poly = std::vector<Rat>;  // ascending coefficients, trimmed

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly pmono(std::size_t e, const Rat& c = Rat(1)) {
    Poly p(e + 1, Rat(0));
    p[e] = c;
    return p;
}

Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly pscale(const Rat& c, const Poly& a) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// quotient and remainder of a by b (b nonzero)
std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b) {
    if (b.empty()) throw series_error("polynomial division by zero");
    Poly q;
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t sh = a.size() - b.size();
        Rat c = a.back() / b.back();
        if (q.size() < sh + 1) q.resize(sh + 1, Rat(0));
        q[sh] += c;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        trim(a);  // the leading term cancels exactly, so a shrinks
    }
    trim(q);
    return {q, a};
}

Poly pmonic(Poly a) {
    trim(a);
    if (a.empty()) return a;
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

// integer polynomial helpers for the gcd: rational-coefficient Euclid
// swells its intermediate coefficients catastrophically, so run a
// primitive pseudo-remainder sequence over Z instead
using ZPoly = std::vector<Int>;

ZPoly primitive_z(const Poly& p) {
    Int l(1);
    for (const auto& c : p) l = lcm(l, c.get_den());
    ZPoly z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat c = p[i] * Rat(l);
        z[i] = c.get_num();
    }
    Int g(0);
    for (const auto& c : z) g = gcd(g, c);
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

void zmake_primitive(ZPoly& a) {
    Int g(0);
    for (const auto& c : a) g = gcd(g, c);
    if (g > 1)
        for (auto& c : a) c /= g;
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zprem(ZPoly a, const ZPoly& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= b.size()) {
        Int c = a.back();
        std::size_t sh = a.size() - b.size();
        for (auto& x : a) x *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Poly pgcd(Poly a0, Poly b0) {
    trim(a0);
    trim(b0);
    if (a0.empty()) return pmonic(b0);
    if (b0.empty()) return pmonic(a0);
    ZPoly a = primitive_z(a0), b = primitive_z(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprem(a, b);
        zmake_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    Poly g(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) g[i] = Rat(a[i]);
    return pmonic(g);
}

// ---------- rational functions over Q(t) ----------

struct RatPoly {
    Poly num;  // zero iff empty
    Poly den;  // nonzero, kept monic

    static RatPoly zero() { return {{}, {Rat(1)}}; }
    static RatPoly one() { return {{Rat(1)}, {Rat(1)}}; }
    bool is_zero() const { return num.empty(); }
};

RatPoly reduce(Poly n, Poly d) {
    trim(n);
    trim(d);
    if (d.empty()) throw series_error("rational function with zero denominator");
    if (n.empty()) return RatPoly::zero();
    Poly g = pgcd(n, d);
    if (g.size() > 1) {
        n = pdivmod(n, g).first;
        d = pdivmod(d, g).first;
    }
    Rat lc = d.back();
    for (auto& c : d) c /= lc;
    for (auto& c : n) c /= lc;
    return {std::move(n), std::move(d)};
}

RatPoly radd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return reduce(padd(pmul(a.num, b.den), pmul(b.num, a.den)),
                  pmul(a.den, b.den));
}

RatPoly rmul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly::zero();
    return reduce(pmul(a.num, b.num), pmul(a.den, b.den));
}

RatPoly rinv(const RatPoly& a) {
    if (a.is_zero()) throw series_error("inverting zero rational function");
    return reduce(a.den, a.num);
}

RatPoly rscale(const Rat& c, const RatPoly& a) {
    if (c == 0 || a.is_zero()) return RatPoly::zero();
    return {pscale(c, a.num), a.den};
}

// t^e for e of either sign
RatPoly rtpow(const Int& e) {
    if (e >= 0) return {pmono(e.get_ui()), {Rat(1)}};
    return {{Rat(1)}, pmono(Int(-e).get_ui())};
}

// ---------- truncated power series in tau over Q(t) ----------

using TauSeries = std::vector<RatPoly>;  // coefficients of tau^0..tau^K

TauSeries ts_mul(const TauSeries& a, const TauSeries& b, std::size_t K) {
    TauSeries r(K + 1, RatPoly::zero());
    for (std::size_t i = 0; i <= K && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= K && j < b.size(); ++j)
            r[i + j] = radd(r[i + j], rmul(a[i], b[j]));
    }
    return r;
}

TauSeries ts_inv(const TauSeries& a, std::size_t K) {
    TauSeries r(K + 1, RatPoly::zero());
    RatPoly c0 = rinv(a[0]);
    r[0] = c0;
    for (std::size_t k = 1; k <= K; ++k) {
        RatPoly s = RatPoly::zero();
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            s = radd(s, rmul(a[j], r[k - j]));
        r[k] = rscale(Rat(-1), rmul(c0, s));
    }
    return r;
}

// generalized binomial C(l, j) for integer l (possibly negative)
Rat gbinom(const Int& l, std::size_t j) {
    Rat r(1);
    for (std::size_t i = 0; i < j; ++i) {
        r *= Rat(l - Int(i));
        r /= Rat(Int(i) + 1);
    }
    r.canonicalize();
    return r;
}

// ---------- the limit engine ----------

// H(t) = sum over the signed unimodular terms of x^u/prod(1-x^g)
// specialized along x -> t^w, as an element of Q(t)
// slot vector of one term: entry j is the coefficient of tau^{j-P}
std::vector<RatPoly> term_slots(const BasicTerm& t, const VecZ& w,
                                const VecZ& lambda, std::size_t P) {
    Rat sgn = t.coeff;
    Int M0 = dot(w, t.numer);
    Int L0 = dot(lambda, t.numer);
    std::size_t p = 0;
    std::vector<std::pair<Int, Int>> factors;  // (w.g, lambda.g), m>0
    std::vector<Int> zero_ls;                  // lambda.g for m == 0
    for (const auto& g : t.denom) {
        Int m = dot(w, g), l = dot(lambda, g);
        if (m < 0 || (m == 0 && l < 0)) {
            // 1/(1-x^g) = -x^{-g}/(1-x^{-g})
            sgn = -sgn;
            M0 -= m;
            L0 -= l;
            m = -m;
            l = -l;
        }
        if (m == 0) {
            if (l == 0)
                throw series_error("degenerate direction (internal)");
            zero_ls.push_back(l);
            ++p;
        } else {
            factors.emplace_back(m, l);
        }
    }
    if (p == 0) {
        // no tau-pole: the term is just sgn * t^{M0} / prod(1 - t^m),
        // and a monomial shares no factor with the denominator, so the
        // rational-function machinery (and its gcds) can be skipped
        Poly num, den{Rat(1)};
        if (M0 >= 0) {
            num = pmono(M0.get_ui(), sgn);
        } else {
            num = {sgn};
            den = pmono(Int(-M0).get_ui());
        }
        for (const auto& f : factors)
            den = pmul(den, psub({Rat(1)}, pmono(f.first.get_ui())));
        std::vector<RatPoly> slots(P + 1, RatPoly::zero());
        Rat lc = den.back();
        for (auto& c : den) c /= lc;
        for (auto& c : num) c /= lc;
        slots[P] = {std::move(num), std::move(den)};
        return slots;
    }
    std::size_t K = p;  // need the analytic part up to tau^p
    // numerator t^{M0} (1+tau)^{L0}
    TauSeries acc(K + 1, RatPoly::zero());
    RatPoly tM = rtpow(M0);
    for (std::size_t j = 0; j <= K; ++j)
        acc[j] = rscale(sgn * gbinom(L0, j), tM);
    // invertible factors 1 - t^m (1+tau)^l
    for (const auto& [m, l] : factors) {
        TauSeries D(K + 1, RatPoly::zero());
        RatPoly tm = rtpow(m);
        D[0] = radd(RatPoly::one(), rscale(Rat(-1), tm));
        for (std::size_t j = 1; j <= K; ++j)
            D[j] = rscale(-gbinom(l, j), tm);
        acc = ts_mul(acc, ts_inv(D, K), K);
    }
    // pole factors 1 - (1+tau)^l = tau * unit(tau)
    for (const auto& l : zero_ls) {
        TauSeries U(K + 1, RatPoly::zero());
        for (std::size_t j = 0; j <= K; ++j)
            U[j] = {{-gbinom(l, j + 1)}, {Rat(1)}};
        acc = ts_mul(acc, ts_inv(U, K), K);
    }
    // term = tau^{-p} * acc: acc[j] lands at tau^{j-p}
    std::vector<RatPoly> slots(P + 1, RatPoly::zero());
    for (std::size_t j = 0; j <= K && P - p + j <= P; ++j)
        slots[P - p + j] = acc[j];
    return slots;
}

// sums term slot vectors through a binary counter of partial sums, so
// most additions happen between operands of comparable size instead of
// one ever-growing accumulator
struct SlotAccum {
    std::size_t P;
    std::vector<std::vector<RatPoly>> levels;

    explicit SlotAccum(std::size_t P_) : P(P_) {}

    void add(std::vector<RatPoly> s) {
        for (std::size_t lv = 0;; ++lv) {
            if (lv == levels.size()) {
                levels.push_back(std::move(s));
                return;
            }
            if (levels[lv].empty()) {
                levels[lv] = std::move(s);
                return;
            }
            for (std::size_t j = 0; j <= P; ++j)
                s[j] = radd(s[j], levels[lv][j]);
            levels[lv].clear();
        }
    }

    std::vector<RatPoly> total() {
        std::vector<RatPoly> out(P + 1, RatPoly::zero());
        for (auto& lv : levels) {
            if (lv.empty()) continue;
            for (std::size_t j = 0; j <= P; ++j) out[j] = radd(out[j], lv[j]);
        }
        return out;
    }
};

RatPoly finish_slots(std::vector<RatPoly> slots) {
    for (std::size_t j = 0; j + 1 < slots.size(); ++j)
        if (!slots[j].is_zero())
            throw series_error("tau-poles did not cancel (internal)");
    return slots.back();
}

RatPoly limit_series(const std::vector<BasicTerm>& terms, const VecZ& w) {
    if (terms.empty()) return RatPoly::zero();
    std::vector<VecZ> gens;
    for (const auto& t : terms)
        for (const auto& g : t.denom) gens.push_back(g);
    VecZ lambda = generic_direction(w.size(), gens);
    std::size_t P = 0;
    for (const auto& t : terms) {
        std::size_t p = 0;
        for (const auto& g : t.denom)
            if (dot(w, g) == 0) ++p;
        P = std::max(P, p);
    }
    SlotAccum acc(P);
    for (const auto& t : terms) acc.add(term_slots(t, w, lambda, P));
    return finish_slots(acc.total());
}

// (1 - t^l)^n
Poly denom_poly(const Int& l, std::size_t n) {
    Poly base = psub({Rat(1)}, pmono(l.get_ui()));
    Poly r{Rat(1)};
    for (std::size_t i = 0; i < n; ++i) r = pmul(r, base);
    return r;
}

// present H with target denominator prod (1 - t^{d_k}), then cancel
// factors that divide the numerator exactly
UniSeries present(const RatPoly& H, const Int& l, std::size_t n) {
    std::vector<Int> dens(n, l);
    Poly target = denom_poly(l, n);
    // numerator = H * target, must be a polynomial
    auto [q, r] = pdivmod(pmul(H.num, target), H.den);
    if (!r.empty())
        throw series_error("series denominator does not divide (1-t^l)^n");
    Poly num = q;
    bool changed = true;
    while (changed && !dens.empty()) {
        changed = false;
        for (std::size_t i = 0; i < dens.size(); ++i) {
            Poly f = psub({Rat(1)}, pmono(dens[i].get_ui()));
            auto [q2, r2] = pdivmod(num, f);
            if (r2.empty()) {
                num = q2;
                dens.erase(dens.begin() + i);
                changed = true;
                break;
            }
        }
    }
    UniSeries out;
    for (const auto& c : num) {
        if (c.get_den() != 1)
            throw series_error("non-integral series numerator (internal)");
        out.numerator.push_back(c.get_num());
    }
    std::sort(dens.begin(), dens.end());
    out.denom_exps = std::move(dens);
    return out;
}

// unimodular decomposition terms (apex 0) of {x : C x <= 0}
std::vector<BasicTerm> cone_terms(const MatZ& C) {
    std::vector<BasicTerm> terms;
    VecQ origin(C.cols(), Rat(0));
    for (const auto& uc : dual_decompose_hform(C)) {
        SignedUnimodularCone c = uc;
        c.apex = origin;
        terms.push_back(unimodular_genfun(c));
    }
    return terms;
}

UniSeries graded_cone_series(const MatZ& C, const VecZ& w) {
    std::vector<VecZ> rays = dd_rays(C);
    Int l = 1;
    for (const auto& r : rays) {
        Int deg = dot(w, r);
        if (deg <= 0) throw series_error("grading not positive on the cone");
        l = lcm(l, deg);
    }
    // two streaming passes over the signed decomposition: large cones
    // produce tens of thousands of pieces, which must not be held at once.
    // pass 1 fixes the generic direction and the pole order
    std::set<VecZ> genset;
    std::size_t P = 0;
    dual_decompose_hform_each(C, [&](const SignedUnimodularCone& uc) {
        std::size_t p = 0;
        for (std::size_t i = 0; i < uc.gens.rows(); ++i) {
            genset.insert(uc.gens.row(i));
            if (dot(w, uc.gens.row(i)) == 0) ++p;
        }
        P = std::max(P, p);
    });
    if (genset.empty()) return present(RatPoly::zero(), l, C.cols());
    VecZ lambda = generic_direction(
        w.size(), std::vector<VecZ>(genset.begin(), genset.end()));
    // pass 2 folds the terms in
    SlotAccum acc(P);
    long done = 0;
    const bool trace = std::getenv("LATKIT_TRACE") != nullptr;
    dual_decompose_hform_each(C, [&](const SignedUnimodularCone& uc) {
        acc.add(term_slots(unimodular_genfun(uc), w, lambda, P));
        if (trace && (++done % 100 == 0))
            std::fprintf(stderr, "terms: %ld\n", done);
    });
    return present(finish_slots(acc.total()), l, C.cols());
}

}  // namespace

std::vector<Int> UniSeries::expand(std::size_t k) const {
    std::vector<Int> c(k, Int(0));
    for (std::size_t i = 0; i < numerator.size() && i < k; ++i)
        c[i] = numerator[i];
    for (const auto& dz : denom_exps) {
        std::size_t d = dz.get_ui();
        for (std::size_t i = d; i < k; ++i) c[i] += c[i - d];
    }
    return c;
}

std::string UniSeries::to_string() const {
    std::ostringstream os;
    if (numerator.empty()) {
        os << "0";
    } else {
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            if (i) os << " ";
            os << numerator[i];
        }
    }
    os << " ;";
    for (const auto& d : denom_exps) os << " " << d;
    return os.str();
}

UniSeries ehrhart_series(const Polyhedron& P) {
    auto rays = recession_rays(P);
    if (!rays.empty()) throw unbounded_error(rays.front());
    std::size_t n = P.dim();
    // cone over P in R^{n+1}: A x - s b <= 0, E x - s d = 0, s >= 0;
    // equations eliminated on a lattice basis of their kernel
    MatZ B = MatZ::identity(n + 1);
    if (P.has_equations()) {
        MatZ Eh(P.E.rows(), n + 1);
        for (std::size_t i = 0; i < P.E.rows(); ++i) {
            for (std::size_t j = 0; j < n; ++j) Eh.at(i, j) = P.E.at(i, j);
            Eh.at(i, n) = -P.d[i];
        }
        B = kernel_lattice(Eh);
    }
    std::size_t k = B.rows();
    std::vector<VecZ> crows;
    for (std::size_t i = 0; i < P.A.rows(); ++i) {
        VecZ row(k);
        for (std::size_t j = 0; j < k; ++j) {
            Int v = -P.b[i] * B.at(j, n);
            for (std::size_t c = 0; c < n; ++c) v += P.A.at(i, c) * B.at(j, c);
            row[j] = v;
        }
        if (!latkit::is_zero(row)) crows.push_back(std::move(row));
    }
    {
        VecZ row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = -B.at(j, n);
        crows.push_back(std::move(row));
    }
    MatZ C = MatZ::from_rows(crows);
    // the dilation cone is full-dimensional iff its inequality normals
    // span and generate a pointed cone
    if (rank(C) != k || !is_pointed(C))
        throw series_error(
            "polytope is lower-dimensional; add its affine-hull equations "
            "so it can be projected to intrinsic coordinates");
    VecZ w(k);
    for (std::size_t j = 0; j < k; ++j) w[j] = B.at(j, n);
    return graded_cone_series(C, w);
}

UniSeries hilbert_series(const GradedSemigroup& S) {
    std::size_t n = S.rays.cols();
    if (!is_pointed(S.rays)) throw series_error("cone is not pointed");
    for (std::size_t i = 0; i < S.rays.rows(); ++i)
        if (dot(S.grading, S.rays.row(i)) <= 0)
            throw series_error("grading not positive on the cone");
    MatZ R = S.rays;
    VecZ w = S.grading;
    if (rank(R) < n) {
        // restrict to the saturated lattice of the linear span
        MatZ N = kernel_lattice(R);
        MatZ B = kernel_lattice(N);
        MatZ R2(R.rows(), B.rows());
        for (std::size_t i = 0; i < R.rows(); ++i) {
            auto y = solve_integer(B.transpose(), R.row(i));
            if (!y)
                throw series_error("ray outside its span lattice (internal)");
            for (std::size_t j = 0; j < B.rows(); ++j) R2.at(i, j) = (*y)[j];
        }
        VecZ w2(B.rows());
        for (std::size_t j = 0; j < B.rows(); ++j)
            w2[j] = dot(B.row(j), w);
        R = std::move(R2);
        w = std::move(w2);
    }
    MatZ C = polarize(Cone{R}).rays;
    return graded_cone_series(C, w);
}

GorensteinResult gorenstein_check(const GradedSemigroup& S) {
    std::size_t n = S.rays.cols();
    if (rank(S.rays) != n || !is_pointed(S.rays))
        throw series_error(
            "Gorenstein test needs a full-dimensional pointed cone");
    MatZ Y = polarize(Cone{S.rays}).rays;  // primitive facet normals
    // a witness must sit at lattice distance one inside every facet
    auto a = solve_integer(Y, VecZ(Y.rows(), Int(-1)));
    if (!a) return {false, std::nullopt};

    ShortRatFun F(n);
    for (auto& t : cone_terms(Y)) F.push(std::move(t));
    F.compress();
    // interior-point series: (-1)^n F(1/z)
    ShortRatFun Fint(n);
    Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& t : F.terms()) {
        BasicTerm s;
        s.coeff = sign * t.coeff;
        s.numer = neg(t.numer);
        for (const auto& c : t.denom) s.denom.push_back(neg(c));
        Fint.push(std::move(s));
    }
    // z^a F(z) ?= Fint(z): exact evaluation at scattered points plus a
    // generic line sampled past the degree bound
    auto eval_side = [&](const ShortRatFun& f, const VecQ& z,
                         const VecZ* shift) {
        Rat v = evaluate(f, z);
        if (shift) {
            for (std::size_t i = 0; i < n; ++i) {
                Int e = (*shift)[i];
                Int ea = abs(e);
                if (!ea.fits_ulong_p())
                    throw series_error("witness exponent overflow");
                Rat p;
                mpz_pow_ui(p.get_num_mpz_t(), z[i].get_num_mpz_t(),
                           ea.get_ui());
                mpz_pow_ui(p.get_den_mpz_t(), z[i].get_den_mpz_t(),
                           ea.get_ui());
                p.canonicalize();
                v *= (e < 0) ? Rat(1) / p : p;
            }
        }
        return v;
    };
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::size_t ok = 0, attempts = 0;
    while (ok < n + 3) {
        if (++attempts > 200)
            throw series_error("could not find pole-free sample points");
        VecQ z(n);
        for (std::size_t i = 0; i < n; ++i) {
            long num = long(next() % 19) + 2;
            long den = long(next() % 7) + 1;
            z[i] = Rat(num, den);
            z[i].canonicalize();
        }
        try {
            Rat lhs = eval_side(Fint, z, nullptr);
            Rat rhs = eval_side(F, z, &*a);
            if (lhs != rhs) return {false, std::nullopt};
            ++ok;
        } catch (const genfun_error&) {
            continue;  // hit a pole; try another point
        }
    }
    // line z_i = s^{mu_i}; mu nonzero against every denominator exponent
    std::vector<VecZ> must = denominator_exponents(F);
    for (auto& c : denominator_exponents(Fint)) must.push_back(std::move(c));
    VecZ mu = generic_direction(n, must);
    auto line_bound = [&](const ShortRatFun& f, const Int& extra) {
        Int b = extra;
        for (const auto& t : f.terms()) {
            Int s = abs(dot(mu, t.numer));
            for (const auto& c : t.denom) s += abs(dot(mu, c));
            b += s;
        }
        return b;
    };
    Int bound = line_bound(F, abs(dot(mu, *a))) + line_bound(Fint, Int(0)) + 2;
    if (!bound.fits_ulong_p())
        throw series_error("degree bound overflow in identity test");
    unsigned long NB = bound.get_ui();
    for (unsigned long s = 2; s < 2 + NB; ++s) {
        VecQ z(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rat base{long(s)};
            Int e = mu[i];
            bool inv = e < 0;
            Int ea = inv ? Int(-e) : e;
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), ea.get_ui());
            mpz_set_ui(p.get_den_mpz_t(), 1);
            z[i] = inv ? Rat(1) / p : p;
            z[i].canonicalize();
        }
        Rat lhs = eval_side(Fint, z, nullptr);
        Rat rhs = eval_side(F, z, &*a);
        if (lhs != rhs) return {false, std::nullopt};
    }
    VecZ witness = *a;
    return {true, std::move(witness)};
}

}  // namespace latkit
