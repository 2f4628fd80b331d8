// Hadamard (coefficientwise) products of short rational functions.
//
// For one pair of terms, each normalized so that every denominator
// exponent pairs negatively with the direction lambda, the expansions are
//   g1 = gamma1 sum_{a >= 0} x^{u1 + C1 a},
//   g2 = gamma2 sum_{b >= 0} x^{u2 + C2 b},
// so their coefficientwise product is gamma1 gamma2 times the projection
// of the lattice points of
//   Q = { (a, b) >= 0 : C1 a - C2 b = u2 - u1 }
// under (a, b) -> u1 + C1 a.  Q lives in the nonnegative orthant, hence
// is pointed (though possibly unbounded), and its generating function is
// computed exactly.  The projection is applied term by term; it cannot
// collapse a denominator as long as each operand term has linearly
// independent denominator exponents, which holds for every function
// produced by this library.
#include "latkit/polytope.hpp"

namespace latkit {

namespace {

struct PreparedTerm {
    Rat coeff;
    VecZ u;
    std::vector<VecZ> C;  // denominator exponents, lambda-negative
};

std::vector<PreparedTerm> prepare(const ShortRatFun& f, const VecZ& lambda) {
    std::vector<PreparedTerm> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        BasicTerm s = normalize_into(t, lambda);
        out.push_back({s.coeff, s.numer, s.denom});
    }
    return out;
}

// u1 + C1 . (a-part of p), or the linear part alone
VecZ project(const VecZ& p, const PreparedTerm& t1, std::size_t n,
             bool affine) {
    VecZ r = affine ? t1.u : VecZ(n);
    for (std::size_t j = 0; j < t1.C.size(); ++j)
        if (p[j] != 0) r = add(r, scale(p[j], t1.C[j]));
    return r;
}

VecZ pick_direction(const ShortRatFun& f, const ShortRatFun& g,
                    const std::optional<VecZ>& direction) {
    if (direction) return *direction;
    std::vector<VecZ> must = denominator_exponents(f);
    for (auto& c : denominator_exponents(g)) must.push_back(std::move(c));
    return generic_direction(f.dim(), must);
}

}  // namespace

ShortRatFun hadamard(const ShortRatFun& f, const ShortRatFun& g,
                     std::optional<VecZ> direction) {
    if (f.dim() != g.dim())
        throw genfun_error("hadamard: dimension mismatch");
    std::size_t n = f.dim();
    ShortRatFun h(n);
    if (f.is_zero() || g.is_zero()) return h;
    VecZ lambda = pick_direction(f, g, direction);
    auto F = prepare(f, lambda);
    auto G = prepare(g, lambda);
    for (const auto& t1 : F) {
        for (const auto& t2 : G) {
            Rat gamma = t1.coeff * t2.coeff;
            std::size_t k1 = t1.C.size(), k2 = t2.C.size();
            if (k1 + k2 == 0) {
                if (t1.u == t2.u) h.push({gamma, t1.u, {}});
                continue;
            }
            Polyhedron Q;
            Q.A = MatZ(k1 + k2, k1 + k2);
            Q.b = VecZ(k1 + k2);
            for (std::size_t j = 0; j < k1 + k2; ++j) Q.A.at(j, j) = -1;
            Q.E = MatZ(n, k1 + k2);
            Q.d = VecZ(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < k1; ++j)
                    Q.E.at(i, j) = t1.C[j][i];
                for (std::size_t j = 0; j < k2; ++j)
                    Q.E.at(i, k1 + j) = -t2.C[j][i];
                Q.d[i] = t2.u[i] - t1.u[i];
            }
            ShortRatFun q = polyhedron_genfun(Q);
            for (const auto& t : q.terms()) {
                BasicTerm nt;
                nt.coeff = gamma * t.coeff;
                nt.numer = project(t.numer, t1, n, true);
                for (const auto& c : t.denom) {
                    VecZ img = project(c, t1, n, false);
                    if (is_zero(img))
                        throw genfun_error(
                            "hadamard: denominator collapsed under the "
                            "exponent projection");
                    nt.denom.push_back(std::move(img));
                }
                h.push(std::move(nt));
            }
        }
    }
    h.compress();
    return h;
}

Rat hadamard_count(const ShortRatFun& f, const ShortRatFun& g,
                   std::optional<VecZ> direction) {
    ShortRatFun h = hadamard(f, g, std::move(direction));
    if (h.is_zero()) return Rat(0);
    return specialize_all_ones(h);
}

}  // namespace latkit
