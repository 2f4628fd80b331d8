#include "latkit/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latkit {

Cone Cone::from_rows(const std::vector<VecZ>& rows) {
    std::vector<VecZ> prim;
    for (const auto& r : rows) {
        if (is_zero(r)) throw cone_error("zero ray");
        prim.push_back(primitive(r));
    }
    return Cone{MatZ::from_rows(prim)};
}

namespace {

int cmp_vec(const VecZ& a, const VecZ& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

std::vector<VecZ> dedupe_primitive_rows(const MatZ& M) {
    std::vector<VecZ> out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        VecZ r = M.row(i);
        if (is_zero(r)) continue;
        r = primitive(r);
        bool seen = false;
        for (const auto& o : out)
            if (cmp_vec(o, r) == 0) seen = true;
        if (!seen) out.push_back(std::move(r));
    }
    return out;
}

// indices of a maximal set of linearly independent rows, greedy in order
std::vector<std::size_t> independent_rows(const MatZ& M) {
    std::size_t m = M.rows(), n = M.cols();
    std::vector<VecQ> ech;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
        VecQ v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = Rat(M.at(i, j));
        for (const auto& e : ech) {
            std::size_t p = 0;
            while (p < n && e[p] == 0) ++p;
            if (p < n && v[p] != 0) {
                Rat f = v[p] / e[p];
                for (std::size_t j = p; j < n; ++j) v[j] -= f * e[j];
            }
        }
        // normalize to leading entry
        std::size_t p = 0;
        while (p < n && v[p] == 0) ++p;
        if (p == n) continue;
        ech.push_back(v);
        // re-sort echelon by pivot for stable reduction
        std::sort(ech.begin(), ech.end(), [n](const VecQ& a, const VecQ& b) {
            std::size_t pa = 0, pb = 0;
            while (pa < n && a[pa] == 0) ++pa;
            while (pb < n && b[pb] == 0) ++pb;
            return pa < pb;
        });
        idx.push_back(i);
    }
    return idx;
}

VecZ clear_denominators(const VecQ& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    VecZ r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat t = Rat(l) * v[i];
        t.canonicalize();
        r[i] = t.get_num();
    }
    return r;
}

}  // namespace

std::vector<VecZ> dd_rays(const MatZ& C) {
    std::size_t m = C.rows(), n = C.cols();
    if (n == 0) return {};
    std::vector<std::size_t> base = independent_rows(C);
    if (base.size() != n)
        throw cone_error("dd_rays: constraint matrix is rank-deficient "
                         "(cone not pointed)");
    MatZ C0(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C0.at(i, j) = C.at(base[i], j);
    std::vector<VecZ> rays;
    for (std::size_t j = 0; j < n; ++j) {
        VecQ e(n, Rat(0));
        e[j] = -1;
        rays.push_back(primitive(clear_denominators(solve_rational(C0, e))));
    }
    std::vector<std::size_t> processed = base;
    std::set<std::size_t> in_base(base.begin(), base.end());
    for (std::size_t row = 0; row < m; ++row) {
        if (in_base.count(row)) continue;
        VecZ a = C.row(row);
        std::vector<Int> s(rays.size());
        bool any_pos = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i]);
            if (s[i] > 0) any_pos = true;
        }
        if (any_pos) {
            // active sets over processed rows
            std::vector<std::set<std::size_t>> act(rays.size());
            for (std::size_t i = 0; i < rays.size(); ++i)
                for (std::size_t p : processed)
                    if (dot(C.row(p), rays[i]) == 0) act[i].insert(p);
            std::vector<VecZ> next;
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (s[i] <= 0) next.push_back(rays[i]);
            for (std::size_t p = 0; p < rays.size(); ++p) {
                if (s[p] <= 0) continue;
                for (std::size_t q = 0; q < rays.size(); ++q) {
                    if (s[q] >= 0) continue;
                    // combinatorial adjacency test
                    std::set<std::size_t> common;
                    std::set_intersection(
                        act[p].begin(), act[p].end(), act[q].begin(),
                        act[q].end(),
                        std::inserter(common, common.begin()));
                    if (common.size() + 2 < n) continue;
                    bool adjacent = true;
                    for (std::size_t r2 = 0; r2 < rays.size(); ++r2) {
                        if (r2 == p || r2 == q) continue;
                        if (std::includes(act[r2].begin(), act[r2].end(),
                                          common.begin(), common.end())) {
                            adjacent = false;
                            break;
                        }
                    }
                    if (!adjacent) continue;
                    VecZ w = sub(scale(s[p], rays[q]), scale(s[q], rays[p]));
                    next.push_back(primitive(w));
                }
            }
            rays = std::move(next);
        }
        processed.push_back(row);
    }
    std::sort(rays.begin(), rays.end(),
              [](const VecZ& x, const VecZ& y) { return cmp_vec(x, y) < 0; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const VecZ& x, const VecZ& y) {
                               return cmp_vec(x, y) == 0;
                           }),
               rays.end());
    return rays;
}

bool is_pointed(const MatZ& rays) {
    std::size_t m = rays.rows(), n = rays.cols();
    if (m == 0) return true;
    // certificate attempt: lambda = -(sum of rays)
    VecZ lam(n, Int(0));
    for (std::size_t i = 0; i < m; ++i) lam = sub(lam, rays.row(i));
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i)
        if (dot(lam, rays.row(i)) >= 0) ok = false;
    if (ok) return true;
    // feasibility of { l : rays . l <= -1 } by exact phase-1 simplex
    // (Bland's rule); l = u - w with u, w >= 0, slack s, artificial a:
    //   (-rays) u + (rays) w - s + a = 1,  minimize sum(a)
    std::size_t N = 2 * n + 2 * m;
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(N + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rat v(rays.at(i, j));
            T[i][j] = -v;
            T[i][n + j] = v;
        }
        T[i][2 * n + i] = Rat(-1);
        T[i][2 * n + m + i] = Rat(1);
        T[i][N] = Rat(1);
        basis[i] = 2 * n + m + i;
    }
    std::vector<Rat> obj(N + 1, Rat(0));  // reduced costs + negated value
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= N; ++j) obj[j] -= T[i][j];
    for (std::size_t j = 0; j < m; ++j) obj[2 * n + m + j] += 1;
    for (;;) {
        std::size_t enter = N;
        for (std::size_t j = 0; j < N; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == N) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i)
            if (T[i][enter] > 0) {
                Rat ratio = T[i][N] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        if (leave == m)  // phase-1 objective is bounded below by zero
            throw cone_error("is_pointed: internal");
        Rat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i)
            if (i != leave && T[i][enter] != 0) {
                Rat f = T[i][enter];
                for (std::size_t j = 0; j <= N; ++j)
                    T[i][j] -= f * T[leave][j];
            }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= N; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[N] == 0;  // attained minimum is -obj[N]
}

Cone polarize(const Cone& k) {
    std::size_t n = k.dim();
    if (rank(k.rays) != n)
        throw cone_error("polarize: cone is not full-dimensional");
    if (!is_pointed(k.rays)) throw cone_error("polarize: cone is not pointed");
    return Cone{MatZ::from_rows(dd_rays(k.rays))};
}

namespace {

using Simplex = std::vector<std::size_t>;  // sorted ray indices

std::vector<Simplex> placing_triangulation(const std::vector<VecZ>& rays,
                                           std::size_t n) {
    MatZ R = MatZ::from_rows(rays);
    std::vector<std::size_t> first = independent_rows(R);
    if (first.size() != n)
        throw cone_error("triangulate: cone is not full-dimensional");
    std::vector<Simplex> tri;
    Simplex s0(first.begin(), first.begin() + n);
    std::sort(s0.begin(), s0.end());
    tri.push_back(s0);
    std::set<std::size_t> used(s0.begin(), s0.end());
    for (std::size_t r = 0; r < rays.size(); ++r) {
        if (used.count(r)) continue;
        // boundary facets = facets belonging to exactly one simplex
        std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>>
            facets;  // facet -> (simplex idx, opposite position)
        for (std::size_t si = 0; si < tri.size(); ++si)
            for (std::size_t drop = 0; drop < n; ++drop) {
                Simplex f = tri[si];
                f.erase(f.begin() + drop);
                facets[f].push_back({si, drop});
            }
        std::vector<Simplex> added;
        for (const auto& [f, owners] : facets) {
            if (owners.size() != 1) continue;
            // primitive normal of the facet hyperplane
            std::vector<VecZ> frows;
            for (std::size_t i : f) frows.push_back(rays[i]);
            MatZ K = kernel_lattice(MatZ::from_rows(frows));
            if (K.rows() != 1) continue;  // degenerate facet
            VecZ h = K.row(0);
            const Simplex& s = tri[owners[0].first];
            VecZ opp = rays[s[owners[0].second]];
            Int side = dot(h, opp);
            if (side == 0) throw cone_error("triangulate: degenerate simplex");
            if (side > 0) h = neg(h);  // orient outward
            if (dot(h, rays[r]) > 0) {
                Simplex ns = f;
                ns.push_back(r);
                std::sort(ns.begin(), ns.end());
                added.push_back(ns);
            }
        }
        for (auto& s : added) tri.push_back(std::move(s));
        used.insert(r);
    }
    return tri;
}

std::vector<Cone> triangulate_impl(const Cone& k, bool check_pointed) {
    std::size_t n = k.dim();
    std::vector<VecZ> rays = dedupe_primitive_rows(k.rays);
    if (check_pointed && !is_pointed(MatZ::from_rows(rays)))
        throw cone_error("triangulate: cone is not pointed");
    std::vector<Simplex> tri = placing_triangulation(rays, n);
    std::vector<Cone> out;
    for (const auto& s : tri) {
        std::vector<VecZ> rr;
        for (std::size_t i : s) rr.push_back(rays[i]);
        out.push_back(Cone{MatZ::from_rows(rr)});
    }
    return out;
}

}  // namespace

std::vector<Cone> triangulate(const Cone& k) { return triangulate_impl(k, true); }

std::vector<SignedUnimodularCone> barvinok_decompose(const Cone& k) {
    std::size_t n = k.dim();
    if (k.rays.rows() != n || det(k.rays) == 0)
        throw cone_error("barvinok_decompose: cone is not simplicial");
    std::vector<SignedUnimodularCone> out;
    std::vector<std::pair<int, MatZ>> work;
    work.push_back({+1, k.rays});
    VecQ zero_apex(n, Rat(0));
    while (!work.empty()) {
        auto [sgn, G] = work.back();
        work.pop_back();
        Int D = det(G);
        if (D == 0) throw cone_error("barvinok_decompose: degenerate cone");
        if (D == 1 || D == -1) {
            out.push_back({sgn, G, zero_apex});
            continue;
        }
        // lattice of coefficient rows alpha*D: basis D * G^{-1}
        MatZ L(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            VecQ e(n, Rat(0));
            e[j] = Rat(D);
            VecQ col = solve_rational(G.transpose(), e);
            for (std::size_t i = 0; i < n; ++i) {
                if (col[i].get_den() != 1)
                    throw cone_error("barvinok_decompose: internal");
                // row i of G^{-1} scaled: L[i][j]
                L.at(i, j) = col[i].get_num();
            }
        }
        // L = D * (G^{-1})^T computed column-wise above; we want rows of
        // D * G^{-1}, i.e. the transpose of what solve produced.
        MatZ Lat = L.transpose();
        // cheap route first: D*Z^n sits inside this lattice, so the
        // balanced mod-D residue of any basis row is a lattice vector of
        // sup-norm <= |D|/2.  Use the best one when it meets the Minkowski
        // quality bound |w|_inf^n <= |D|^(n-1) (which preserves the
        // doubly-logarithmic depth); otherwise run the exact sup-norm SVP.
        Int Dabs = abs(D);
        VecZ w;
        Int winf(-1);
        for (std::size_t i = 0; i < n; ++i) {
            VecZ v(n);
            Int ninf = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), Lat.at(i, j).get_mpz_t(),
                           Dabs.get_mpz_t());
                if (2 * r > Dabs) r -= Dabs;
                v[j] = r;
                Int a = abs(r);
                if (a > ninf) ninf = a;
            }
            if (ninf == 0) continue;
            if (winf < 0 || ninf < winf) {
                w = std::move(v);
                winf = ninf;
            }
        }
        bool cheap_ok = false;
        if (winf > 0) {
            Int lhs, rhs;
            mpz_pow_ui(lhs.get_mpz_t(), winf.get_mpz_t(), n);
            mpz_pow_ui(rhs.get_mpz_t(), Dabs.get_mpz_t(), n - 1);
            cheap_ok = lhs <= rhs;
        }
        if (!cheap_ok) w = shortest_vector_linf(Lat);
        // alpha = w / D, z = alpha * G (integral)
        VecQ alpha(n);
        bool has_pos = false;
        for (std::size_t i = 0; i < n; ++i) {
            alpha[i] = Rat(w[i]) / Rat(D);
            alpha[i].canonicalize();
            if (alpha[i] > 0) has_pos = true;
        }
        if (!has_pos) {
            for (auto& a : alpha) a = -a;
            w = neg(w);
        }
        VecZ z(n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc = 0;
            for (std::size_t t = 0; t < n; ++t)
                acc += alpha[t] * Rat(G.at(t, i));
            acc.canonicalize();
            if (acc.get_den() != 1)
                throw cone_error("barvinok_decompose: non-integral z");
            z[i] = acc.get_num();
        }
        if (is_zero(z)) throw cone_error("barvinok_decompose: zero z");
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha[i] == 0) continue;
            MatZ Gi = G;
            Gi.set_row(i, z);
            Int Di = det(Gi);
            if (abs(Di) >= abs(D))
                throw cone_error("barvinok_decompose: index did not decrease");
            if (Di == 0) continue;  // lower-dimensional piece, drops out
            int child = sgn * (alpha[i] > 0 ? +1 : -1);
            work.push_back({child, Gi});
        }
    }
    return out;
}

BasicTerm unimodular_genfun(const SignedUnimodularCone& c) {
    std::size_t n = c.gens.rows();
    Int D = det(c.gens);
    if (D != 1 && D != -1)
        throw cone_error("unimodular_genfun: generators not unimodular");
    // apex = sum alpha_i g_i  =>  G^T alpha = apex
    VecQ alpha = solve_rational(c.gens.transpose(), c.apex);
    VecZ u(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        Int ci;
        mpz_cdiv_q(ci.get_mpz_t(), alpha[i].get_num_mpz_t(),
                   alpha[i].get_den_mpz_t());
        if (ci != 0)
            for (std::size_t j = 0; j < n; ++j)
                u[j] += ci * c.gens.at(i, j);
    }
    BasicTerm t;
    t.coeff = Rat(c.sign);
    t.numer = std::move(u);
    for (std::size_t i = 0; i < n; ++i) t.denom.push_back(c.gens.row(i));
    return t;
}

void dual_decompose_hform_each(
    const MatZ& C, const std::function<void(const SignedUnimodularCone&)>& f) {
    std::size_t n = C.cols();
    std::vector<VecZ> gens = dedupe_primitive_rows(C);
    if (gens.empty()) throw cone_error("dual_decompose: empty constraint set");
    if (rank(MatZ::from_rows(gens)) != n)
        throw cone_error("dual_decompose: cone is not pointed");
    VecQ zero_apex(n, Rat(0));
    for (const auto& piece :
         triangulate_impl(Cone{MatZ::from_rows(gens)}, false)) {
        for (const auto& uc : barvinok_decompose(piece)) {
            // polar of cone(B) for unimodular B: rays -(B^{-1})^T
            MatZ inv = inverse_unimodular(uc.gens);
            MatZ back(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    back.at(i, j) = -inv.at(j, i);
            f({uc.sign, std::move(back), zero_apex});
        }
    }
}

std::vector<SignedUnimodularCone> dual_decompose_hform(const MatZ& C) {
    std::vector<SignedUnimodularCone> out;
    dual_decompose_hform_each(
        C, [&](const SignedUnimodularCone& uc) { out.push_back(uc); });
    return out;
}

std::vector<SignedUnimodularCone> dual_decompose(const Cone& k) {
    Cone kstar = polarize(k);  // checks pointed + full-dimensional
    return dual_decompose_hform(kstar.rays);
}

}  // namespace latkit
