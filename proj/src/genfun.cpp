#include "latkit/genfun.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace latkit {

ShortRatFun ShortRatFun::monomial(const VecZ& u, const Rat& coeff) {
    ShortRatFun f(u.size());
    if (coeff != 0) f.push(BasicTerm{coeff, u, {}});
    return f;
}

void ShortRatFun::push(BasicTerm t) {
    if (t.numer.size() != dim_)
        throw genfun_error("term dimension mismatch");
    for (const auto& c : t.denom) {
        if (c.size() != dim_) throw genfun_error("term dimension mismatch");
        if (latkit::is_zero(c)) throw genfun_error("zero denominator exponent");
    }
    if (t.coeff == 0) return;
    terms_.push_back(std::move(t));
}

namespace {

int cmp_vec(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

// canonical key: numerator, then sorted denominator list
struct TermKey {
    VecZ numer;
    std::vector<VecZ> denom;
};

TermKey key_of(const BasicTerm& t) {
    TermKey k{t.numer, t.denom};
    std::sort(k.denom.begin(), k.denom.end(),
              [](const VecZ& a, const VecZ& b) { return cmp_vec(a, b) < 0; });
    return k;
}

int cmp_key(const TermKey& a, const TermKey& b) {
    int c = cmp_vec(a.numer, b.numer);
    if (c) return c;
    if (a.denom.size() != b.denom.size())
        return a.denom.size() < b.denom.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.denom.size(); ++i) {
        c = cmp_vec(a.denom[i], b.denom[i]);
        if (c) return c;
    }
    return 0;
}

}  // namespace

void ShortRatFun::compress() {
    std::vector<std::pair<TermKey, Rat>> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_) acc.emplace_back(key_of(t), t.coeff);
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
        return cmp_key(a.first, b.first) < 0;
    });
    std::vector<BasicTerm> out;
    for (std::size_t i = 0; i < acc.size();) {
        Rat c = acc[i].second;
        std::size_t j = i + 1;
        while (j < acc.size() && cmp_key(acc[i].first, acc[j].first) == 0) {
            c += acc[j].second;
            ++j;
        }
        if (c != 0)
            out.push_back(BasicTerm{c, acc[i].first.numer, acc[i].first.denom});
        i = j;
    }
    terms_ = std::move(out);
}

TermOrder::TermOrder(MatZ w) : W(std::move(w)) {
    if (W.rows() != W.cols() || det(W) == 0)
        throw genfun_error("term order matrix must be nonsingular");
}

bool TermOrder::less(const VecZ& a, const VecZ& b) const {
    VecZ wa = mul(W, a), wb = mul(W, b);
    for (std::size_t i = 0; i < wa.size(); ++i) {
        int c = cmp(wa[i], wb[i]);
        if (c) return c < 0;
    }
    return false;
}

BasicTerm normalize_into(const BasicTerm& t, const VecZ& lambda) {
    BasicTerm r = t;
    for (auto& c : r.denom) {
        Int s = dot(lambda, c);
        if (s == 0)
            throw genfun_error(
                "normalize: direction orthogonal to a denominator exponent; "
                "pick a new generic direction");
        if (s > 0) {
            r.numer = sub(r.numer, c);
            c = neg(c);
            r.coeff = -r.coeff;
        }
    }
    return r;
}

BasicTerm normalize_signs(const BasicTerm& t, const VecZ& lambda) {
    return normalize_into(t, neg(lambda));
}

ShortRatFun normalize_signs(const ShortRatFun& f, const VecZ& lambda) {
    ShortRatFun r(f.dim());
    for (const auto& t : f.terms()) r.push(normalize_signs(t, lambda));
    return r;
}

ShortRatFun add(const ShortRatFun& f, const ShortRatFun& g) {
    if (f.dim() != g.dim()) throw genfun_error("add: dimension mismatch");
    ShortRatFun r(f.dim());
    for (const auto& t : f.terms()) r.push(t);
    for (const auto& t : g.terms()) r.push(t);
    r.compress();
    return r;
}

std::vector<VecZ> denominator_exponents(const ShortRatFun& f) {
    std::vector<VecZ> out;
    for (const auto& t : f.terms())
        for (const auto& c : t.denom) out.push_back(c);
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

VecZ generic_direction(std::size_t dim, const std::vector<VecZ>& must_pair) {
    std::uint64_t seed = 0xcbf29ce484222325ull ^ (dim * 1099511628211ull);
    for (const auto& v : must_pair)
        for (const auto& x : v) {
            seed = (seed ^ std::hash<std::string>{}(x.get_str())) *
                   1099511628211ull;
        }
    for (int attempt = 0; attempt < 4000; ++attempt) {
        std::uint64_t s = seed + attempt;
        long range = 7 + 2 * (attempt / 8);
        VecZ lambda(dim);
        bool nonzero = false;
        for (std::size_t i = 0; i < dim; ++i) {
            long v = static_cast<long>(splitmix64(s) % (2 * range + 1)) - range;
            lambda[i] = v;
            if (v != 0) nonzero = true;
        }
        if (!nonzero) continue;
        bool ok = true;
        for (const auto& v : must_pair) {
            if (is_zero(v)) continue;
            if (dot(lambda, v) == 0) {
                ok = false;
                break;
            }
        }
        if (ok) return lambda;
    }
    throw genfun_error("generic_direction: no generic direction found");
}

ShortRatFun interval_polynomial(const Int& p, const Int& q) {
    if (p > q) throw genfun_error("interval_polynomial: p > q");
    ShortRatFun f(1);
    f.push(BasicTerm{Rat(1), VecZ{p}, {VecZ{Int(1)}}});
    f.push(BasicTerm{Rat(-1), VecZ{Int(q + 1)}, {VecZ{Int(1)}}});
    return f;
}

ShortRatFun monomial_substitution(const ShortRatFun& f,
                                  const std::vector<VecZ>& images) {
    if (images.size() != f.dim())
        throw genfun_error("monomial_substitution: wrong number of images");
    std::size_t k = images.empty() ? 0 : images[0].size();
    for (const auto& im : images)
        if (im.size() != k)
            throw genfun_error("monomial_substitution: ragged images");
    auto apply = [&](const VecZ& e) {
        VecZ r(k, Int(0));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                for (std::size_t j = 0; j < k; ++j)
                    r[j] += e[i] * images[i][j];
        return r;
    };
    ShortRatFun out(k);
    std::size_t idx = 0;
    for (const auto& t : f.terms()) {
        BasicTerm nt;
        nt.coeff = t.coeff;
        nt.numer = apply(t.numer);
        for (const auto& c : t.denom) {
            VecZ nc = apply(c);
            if (is_zero(nc))
                throw genfun_error(
                    "monomial_substitution: denominator of term " +
                    std::to_string(idx) + " collapses to zero");
            nt.denom.push_back(std::move(nc));
        }
        out.push(std::move(nt));
        ++idx;
    }
    return out;
}

namespace {

// truncated power series over Q, length K+1
using Series = std::vector<Rat>;

Series series_one(std::size_t K) {
    Series s(K + 1, Rat(0));
    s[0] = 1;
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    std::size_t K = a.size() - 1;
    Series r(K + 1, Rat(0));
    for (std::size_t i = 0; i <= K; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= K; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_inv(const Series& a) {
    std::size_t K = a.size() - 1;
    if (a[0] == 0) throw genfun_error("series_inv: zero constant term");
    Series r(K + 1, Rat(0));
    r[0] = 1 / a[0];
    for (std::size_t i = 1; i <= K; ++i) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * r[i - j];
        r[i] = -acc / a[0];
    }
    return r;
}

// (1+tau)^e truncated, e any integer (generalized binomial coefficients)
Series binom_series(const Int& e, std::size_t K) {
    Series s(K + 1, Rat(0));
    s[0] = 1;
    Rat c(1);
    for (std::size_t j = 1; j <= K; ++j) {
        c *= Rat(e - Int(j - 1)) / Rat(Int(j));
        c.canonicalize();
        s[j] = c;
    }
    return s;
}

}  // namespace

Rat specialize_all_ones(const ShortRatFun& f) {
    if (f.terms().empty()) return Rat(0);
    VecZ lambda = generic_direction(f.dim(), denominator_exponents(f));
    std::size_t K = 0;
    for (const auto& t : f.terms()) K = std::max(K, t.denom.size());
    Rat constant = 0;
    // Laurent tail coefficients tau^{-K} .. tau^{-1} must cancel.
    Series tail(K + 1, Rat(0));  // tail[j] = coefficient of tau^{-j}
    for (const auto& t : f.terms()) {
        std::size_t k = t.denom.size();
        Series num = binom_series(dot(lambda, t.numer), K);
        Series dens = series_one(K);
        for (const auto& c : t.denom) {
            Int m = dot(lambda, c);
            // (1 - (1+tau)^m) = tau * unit(tau), unit(0) = -m != 0
            Series unit(K + 1, Rat(0));
            Series bb = binom_series(m, K + 1);
            for (std::size_t j = 0; j <= K; ++j) unit[j] = -bb[j + 1];
            dens = series_mul(dens, unit);
        }
        Series total = series_mul(num, series_inv(dens));
        // term = coeff * tau^{-k} * total(tau)
        for (std::size_t j = 0; j <= K; ++j) {
            if (j < k)
                tail[k - j] += t.coeff * total[j];
            else if (j == k)
                constant += t.coeff * total[j];
        }
    }
    for (std::size_t j = 1; j <= K; ++j)
        if (tail[j] != 0)
            throw genfun_error(
                "specialize_all_ones: poles do not cancel (infinite set)");
    constant.canonicalize();
    return constant;
}

std::map<VecZ, Rat> expand_box(const ShortRatFun& f, const VecZ& lo,
                               const VecZ& hi,
                               std::optional<VecZ> direction) {
    std::size_t n = f.dim();
    if (lo.size() != n || hi.size() != n)
        throw genfun_error("expand: box dimension mismatch");
    std::vector<VecZ> dens = denominator_exponents(f);
    VecZ mu;
    if (direction) {
        mu = *direction;
        bool degenerate = false;
        for (const auto& c : dens)
            if (dot(mu, c) == 0) degenerate = true;
        if (degenerate) {
            // perturb: M*mu + g keeps the sign of mu on every denominator
            // it already separates and breaks the remaining ties
            VecZ g = generic_direction(n, dens);
            Int M = 1;
            for (const auto& c : dens) {
                Int cand = abs(dot(g, c)) + 1;
                if (cand > M) M = cand;
            }
            VecZ pert = scale(M, mu);
            mu = add(pert, g);
        }
    } else {
        mu = generic_direction(n, dens);
    }
    // min of mu.x over the box
    Int mu_min = 0;
    for (std::size_t i = 0; i < n; ++i)
        mu_min += mu[i] < 0 ? mu[i] * hi[i] : mu[i] * lo[i];
    std::map<VecZ, Rat> out;
    for (const auto& t0 : f.terms()) {
        BasicTerm t = normalize_into(t0, mu);  // all mu.c < 0
        // DFS over multiplicities of the denominator directions
        std::function<void(std::size_t, VecZ, Int)> walk =
            [&](std::size_t j, VecZ e, Int mue) {
                if (mue < mu_min) return;
                if (j == t.denom.size()) {
                    for (std::size_t i = 0; i < n; ++i)
                        if (e[i] < lo[i] || e[i] > hi[i]) return;
                    out[e] += t.coeff;
                    return;
                }
                Int step = dot(mu, t.denom[j]);  // negative
                VecZ cur = e;
                Int mucur = mue;
                while (mucur >= mu_min) {
                    walk(j + 1, cur, mucur);
                    cur = add(cur, t.denom[j]);
                    mucur += step;
                }
            };
        walk(0, t.numer, dot(mu, t.numer));
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::map<VecZ, Rat> expand(const ShortRatFun& f, const VecZ& box,
                           std::optional<VecZ> direction) {
    return expand_box(f, VecZ(f.dim(), Int(0)), box, std::move(direction));
}

namespace {

Rat pow_q(const Rat& base, const Int& e) {
    if (e == 0) return Rat(1);
    if (!e.fits_slong_p())
        throw genfun_error("evaluate: exponent too large");
    long ee = e.get_si();
    bool invert = ee < 0;
    unsigned long a = invert ? -ee : ee;
    if (invert && base == 0) throw genfun_error("evaluate: 0^negative");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), a);
    r.canonicalize();
    if (invert) {
        if (r == 0) throw genfun_error("evaluate: 0^negative");
        r = 1 / r;
    }
    return r;
}

}  // namespace

Rat evaluate(const ShortRatFun& f, const VecQ& x) {
    if (x.size() != f.dim()) throw genfun_error("evaluate: dim mismatch");
    Rat total = 0;
    for (const auto& t : f.terms()) {
        Rat v = t.coeff;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (t.numer[i] != 0) v *= pow_q(x[i], t.numer[i]);
        for (const auto& c : t.denom) {
            Rat m(1);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (c[i] != 0) m *= pow_q(x[i], c[i]);
            Rat d = Rat(1) - m;
            if (d == 0) throw genfun_error("evaluate: pole at given point");
            v /= d;
        }
        total += v;
    }
    total.canonicalize();
    return total;
}

Int support_degree_bound(const ShortRatFun& f, const VecZ& lambda) {
    bool first = true;
    Int best = 0;
    for (const auto& t : f.terms()) {
        Int e = dot(lambda, t.numer);
        for (const auto& c : t.denom) {
            Int s = dot(lambda, c);
            if (s > 0) e -= s;  // flip this factor for the lambda-expansion
        }
        if (first || e > best) best = e;
        first = false;
    }
    if (first) throw genfun_error("support_degree_bound: empty function");
    return best;
}

std::pair<VecZ, VecZ> support_box(const ShortRatFun& f) {
    std::size_t n = f.dim();
    VecZ lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        VecZ e(n, Int(0));
        e[i] = 1;
        hi[i] = support_degree_bound(f, e);
        e[i] = -1;
        lo[i] = -support_degree_bound(f, e);
    }
    return {lo, hi};
}

}  // namespace latkit
