#include "latkit/polytope.hpp"

#include <algorithm>
#include <functional>

namespace latkit {

Polyhedron Polyhedron::from_inequalities(const MatZ& A, const VecZ& b) {
    if (A.rows() != b.size()) throw polytope_error("A/b size mismatch");
    return Polyhedron{A, b, MatZ(0, A.cols()), {}};
}

Polyhedron Polyhedron::box(const VecZ& lo, const VecZ& hi) {
    std::size_t n = lo.size();
    MatZ A(2 * n, n);
    VecZ b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        A.at(i, i) = 1;
        b[i] = hi[i];
        A.at(n + i, i) = -1;
        b[n + i] = -lo[i];
    }
    return from_inequalities(A, b);
}

Polyhedron Polyhedron::dilate(const Int& m) const {
    Polyhedron P = *this;
    for (auto& x : P.b) x *= m;
    for (auto& x : P.d) x *= m;
    return P;
}

Polyhedron Polyhedron::translate(const VecZ& w) const {
    Polyhedron P = *this;
    for (std::size_t i = 0; i < A.rows(); ++i) P.b[i] += dot(A.row(i), w);
    for (std::size_t i = 0; i < E.rows(); ++i) P.d[i] += dot(E.row(i), w);
    return P;
}

void Polyhedron::add_inequality(const VecZ& a, const Int& beta) {
    MatZ A2(A.rows() + 1, dim());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) A2.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < dim(); ++j) A2.at(A.rows(), j) = a[j];
    A = std::move(A2);
    b.push_back(beta);
}

void Polyhedron::add_equation(const VecZ& e, const Int& delta) {
    MatZ E2(E.rows() + 1, dim());
    for (std::size_t i = 0; i < E.rows(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) E2.at(i, j) = E.at(i, j);
    for (std::size_t j = 0; j < dim(); ++j) E2.at(E.rows(), j) = e[j];
    E = std::move(E2);
    d.push_back(delta);
}

namespace {

int cmp_q(const Rat& a, const Rat& b) { return cmp(a, b); }

int cmp_vq(const VecQ& a, const VecQ& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp_q(a[i], b[i]);
        if (c) return c;
    }
    return 0;
}

bool feasible(const Polyhedron& P, const VecQ& x) {
    for (std::size_t i = 0; i < P.A.rows(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < P.dim(); ++j)
            lhs += Rat(P.A.at(i, j)) * x[j];
        if (lhs > Rat(P.b[i])) return false;
    }
    for (std::size_t i = 0; i < P.E.rows(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < P.dim(); ++j)
            lhs += Rat(P.E.at(i, j)) * x[j];
        if (lhs != Rat(P.d[i])) return false;
    }
    return true;
}

// binomial(m, n) with saturation, to pick the enumeration strategy
double choose_approx(std::size_t m, std::size_t n) {
    double r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= double(m - i) / double(i + 1);
        if (r > 1e18) return 1e18;
    }
    return r;
}

// vertices of an inequality-only pointed polyhedron, unbounded allowed
std::vector<VecQ> vertices_of(const MatZ& A, const VecZ& b) {
    std::size_t m = A.rows(), n = A.cols();
    std::vector<VecQ> verts;
    Polyhedron P = Polyhedron::from_inequalities(A, b);
    if (n == 0) return verts;
    if (choose_approx(m, n) <= 120000.0) {
        // exhaustive n-subset solving
        std::vector<std::size_t> sel(n);
        std::function<void(std::size_t, std::size_t)> walk =
            [&](std::size_t start, std::size_t got) {
                if (got == n) {
                    MatZ S(n, n);
                    VecQ rhs(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        for (std::size_t j = 0; j < n; ++j)
                            S.at(i, j) = A.at(sel[i], j);
                        rhs[i] = Rat(b[sel[i]]);
                    }
                    if (det(S) == 0) return;
                    VecQ x = solve_rational(S, rhs);
                    if (feasible(P, x)) verts.push_back(std::move(x));
                    return;
                }
                for (std::size_t r = start; r + (n - got) <= m; ++r) {
                    sel[got] = r;
                    walk(r + 1, got + 1);
                }
            };
        walk(0, 0);
    } else {
        // double description on the homogenization
        MatZ C(m + 1, n + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) C.at(i, j) = A.at(i, j);
            C.at(i, n) = -b[i];
        }
        C.at(m, n) = -1;
        for (const auto& ray : dd_rays(C)) {
            if (ray[n] == 0) continue;  // recession direction
            VecQ v(n);
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = Rat(ray[j]) / Rat(ray[n]);
                v[j].canonicalize();
            }
            verts.push_back(std::move(v));
        }
    }
    std::sort(verts.begin(), verts.end(),
              [](const VecQ& x, const VecQ& y) { return cmp_vq(x, y) < 0; });
    verts.erase(std::unique(verts.begin(), verts.end(),
                            [](const VecQ& x, const VecQ& y) {
                                return cmp_vq(x, y) == 0;
                            }),
                verts.end());
    return verts;
}

VecZ clear_denominators(const VecQ& v, Int* scale_out = nullptr) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    VecZ r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat t = Rat(l) * v[i];
        t.canonicalize();
        r[i] = t.get_num();
    }
    if (scale_out) *scale_out = l;
    return r;
}

// apply the affine map x = x0 + y B (rows of B are the basis) to a
// genfun living in y-space
ShortRatFun map_exponents(const ShortRatFun& f, const VecZ& x0,
                          const MatZ& B) {
    ShortRatFun out(x0.size());
    for (const auto& t : f.terms()) {
        BasicTerm nt;
        nt.coeff = t.coeff;
        nt.numer = add(x0, mul_row(t.numer, B));
        for (const auto& c : t.denom) {
            VecZ nc = mul_row(c, B);
            if (is_zero(nc))
                throw polytope_error("map_exponents: collapsed denominator");
            nt.denom.push_back(std::move(nc));
        }
        out.push(std::move(nt));
    }
    return out;
}

}  // namespace

std::vector<VecZ> recession_rays(const Polyhedron& P) {
    std::size_t n = P.dim();
    if (!P.has_equations()) {
        if (rank(P.A) != n)
            throw polytope_error("recession_rays: polyhedron is not pointed");
        return dd_rays(P.A);
    }
    MatZ B = kernel_lattice(P.E);  // rows span ker(E) over Z
    if (B.rows() == 0) return {};
    MatZ AB = mul(P.A, B.transpose());
    if (rank(AB) != B.rows())
        throw polytope_error("recession_rays: polyhedron is not pointed");
    std::vector<VecZ> out;
    for (const auto& r : dd_rays(AB)) out.push_back(primitive(mul_row(r, B)));
    std::sort(out.begin(), out.end(), [](const VecZ& a, const VecZ& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c) return c < 0;
        }
        return false;
    });
    return out;
}

std::vector<VecQ> enumerate_vertices(const Polyhedron& P) {
    auto rays = recession_rays(P);
    if (!rays.empty()) throw unbounded_error(rays.front());
    if (!P.has_equations()) return vertices_of(P.A, P.b);
    // substitute out the equations, enumerate, map back
    auto x0q = [&]() -> std::optional<VecQ> {
        // rational particular solution is enough for vertex enumeration
        // (use least-squares-free exact solve on an independent subsystem)
        std::size_t n = P.dim();
        std::vector<std::size_t> sel;
        std::vector<VecQ> rowsq;
        for (std::size_t i = 0; i < P.E.rows(); ++i) sel.push_back(i);
        // solve E x = d by Gaussian elimination over Q
        std::size_t m = P.E.rows();
        std::vector<VecQ> M(m, VecQ(n + 1));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(P.E.at(i, j));
            M[i][n] = Rat(P.d[i]);
        }
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < m; ++c) {
            std::size_t p = r;
            while (p < m && M[p][c] == 0) ++p;
            if (p == m) continue;
            std::swap(M[r], M[p]);
            for (std::size_t i = 0; i < m; ++i) {
                if (i == r || M[i][c] == 0) continue;
                Rat f = M[i][c] / M[r][c];
                for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[r][j];
            }
            pivot_col.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < m; ++i)
            if (M[i][n] != 0) return std::nullopt;  // inconsistent
        VecQ x(n, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            x[pivot_col[i]] = M[i][n] / M[i][pivot_col[i]];
            x[pivot_col[i]].canonicalize();
        }
        return x;
    }();
    if (!x0q) return {};
    MatZ B = kernel_lattice(P.E);
    std::size_t k = B.rows();
    if (k == 0) {
        // affine solution space is the single point x0
        return feasible(P, *x0q) ? std::vector<VecQ>{*x0q}
                                 : std::vector<VecQ>{};
    }
    // A (x0 + y B) <= b  =>  (A B^T) y <= b' with rational b'
    MatZ AB = mul(P.A, B.transpose());
    VecQ bq(P.A.rows());
    for (std::size_t i = 0; i < P.A.rows(); ++i) {
        bq[i] = Rat(P.b[i]);
        for (std::size_t j = 0; j < P.dim(); ++j)
            bq[i] -= Rat(P.A.at(i, j)) * (*x0q)[j];
    }
    // clear denominators row by row
    MatZ A2(AB.rows(), k);
    VecZ b2(AB.rows());
    for (std::size_t i = 0; i < AB.rows(); ++i) {
        Int l = bq[i].get_den();
        for (std::size_t j = 0; j < k; ++j) l = lcm(l, Int(1));
        for (std::size_t j = 0; j < k; ++j) A2.at(i, j) = l * AB.at(i, j);
        Rat t = Rat(l) * bq[i];
        t.canonicalize();
        b2[i] = t.get_num();
    }
    std::vector<VecQ> out;
    for (const auto& y : vertices_of(A2, b2)) {
        VecQ x(P.dim());
        for (std::size_t j = 0; j < P.dim(); ++j) {
            x[j] = (*x0q)[j];
            for (std::size_t i = 0; i < k; ++i)
                x[j] += y[i] * Rat(B.at(i, j));
            x[j].canonicalize();
        }
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(),
              [](const VecQ& x, const VecQ& y) { return cmp_vq(x, y) < 0; });
    return out;
}

VertexCone tangent_cone(const Polyhedron& P, const VecQ& v) {
    if (!feasible(P, v)) throw polytope_error("tangent_cone: not a vertex");
    std::size_t n = P.dim();
    std::vector<VecZ> act;
    for (std::size_t i = 0; i < P.A.rows(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < n; ++j)
            lhs += Rat(P.A.at(i, j)) * v[j];
        if (lhs == Rat(P.b[i])) act.push_back(P.A.row(i));
    }
    if (!P.has_equations()) {
        MatZ C = MatZ::from_rows(act);
        if (act.empty() || rank(C) != n)
            throw polytope_error("tangent_cone: point is not a vertex");
        return {v, Cone{MatZ::from_rows(dd_rays(C))}};
    }
    MatZ B = kernel_lattice(P.E);
    MatZ CB(act.size(), B.rows());
    for (std::size_t i = 0; i < act.size(); ++i) {
        VecZ r = mul_row(act[i], B.transpose());
        for (std::size_t j = 0; j < B.rows(); ++j) CB.at(i, j) = r[j];
    }
    if (rank(CB) != B.rows())
        throw polytope_error("tangent_cone: point is not a vertex");
    std::vector<VecZ> rays;
    for (const auto& y : dd_rays(CB)) rays.push_back(primitive(mul_row(y, B)));
    return {v, Cone{MatZ::from_rows(rays)}};
}

namespace {

ShortRatFun genfun_rec(const MatZ& A, const VecZ& b, const MatZ& E,
                       const VecZ& d);

// A x <= b only, pointed; may still have implicit equalities
ShortRatFun genfun_ineq(const MatZ& A, const VecZ& b) {
    std::size_t n = A.cols();
    if (n == 0) {
        for (const auto& x : b)
            if (x < 0) return ShortRatFun(0);
        return ShortRatFun::monomial(VecZ{});
    }
    if (rank(A) != n)
        throw polytope_error("polyhedron_genfun: polyhedron is not pointed");
    std::vector<VecQ> verts = vertices_of(A, b);
    if (verts.empty()) return ShortRatFun(n);  // pointed and vertex-free: empty
    std::vector<VecZ> rays = dd_rays(A);
    // affine hull: span of (v - v0) and the recession rays
    std::vector<VecZ> dirs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        VecQ dq(n);
        for (std::size_t j = 0; j < n; ++j) dq[j] = verts[i][j] - verts[0][j];
        dirs.push_back(clear_denominators(dq));
    }
    for (const auto& r : rays) dirs.push_back(r);
    MatZ D = dirs.empty() ? MatZ(0, n) : MatZ::from_rows(dirs);
    if (rank(D) < n) {
        // implicit equalities: functionals vanishing on the hull
        MatZ N = kernel_lattice(D.rows() ? D : MatZ(1, n));
        if (D.rows() == 0) N = MatZ::identity(n);
        std::vector<VecZ> eqs;
        VecZ rhs;
        for (std::size_t i = 0; i < N.rows(); ++i) {
            VecZ e = N.row(i);
            Rat val = 0;
            for (std::size_t j = 0; j < n; ++j)
                val += Rat(e[j]) * verts[0][j];
            val.canonicalize();
            Int den = val.get_den();
            eqs.push_back(scale(den, e));
            rhs.push_back(val.get_num());
        }
        return genfun_rec(A, b, MatZ::from_rows(eqs), rhs);
    }
    // Brion: signed sum over vertex tangent cones
    Polyhedron P = Polyhedron::from_inequalities(A, b);
    ShortRatFun f(n);
    for (const auto& v : verts) {
        std::vector<VecZ> act;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            Rat lhs = 0;
            for (std::size_t j = 0; j < n; ++j)
                lhs += Rat(A.at(i, j)) * v[j];
            if (lhs == Rat(b[i])) act.push_back(A.row(i));
        }
        for (const auto& uc : dual_decompose_hform(MatZ::from_rows(act))) {
            SignedUnimodularCone c = uc;
            c.apex = v;
            f.push(unimodular_genfun(c));
        }
    }
    f.compress();
    return f;
}

ShortRatFun genfun_rec(const MatZ& A, const VecZ& b, const MatZ& E,
                       const VecZ& d) {
    std::size_t n = A.cols();
    if (E.rows() == 0) return genfun_ineq(A, b);
    auto x0 = solve_integer(E, d);
    if (!x0) return ShortRatFun(n);  // no lattice point satisfies E x = d
    MatZ B = kernel_lattice(E);
    std::size_t k = B.rows();
    if (k == 0) {
        // single candidate point x0
        for (std::size_t i = 0; i < A.rows(); ++i)
            if (dot(A.row(i), *x0) > b[i]) return ShortRatFun(n);
        return ShortRatFun::monomial(*x0);
    }
    MatZ AB = mul(A, B.transpose());
    VecZ b2(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        b2[i] = b[i] - dot(A.row(i), *x0);
    ShortRatFun inner = genfun_ineq(AB, b2);
    return map_exponents(inner, *x0, B);
}

}  // namespace

ShortRatFun polyhedron_genfun(const Polyhedron& P) {
    ShortRatFun f = genfun_rec(P.A, P.b, P.E, P.d);
    return f;
}

ShortRatFun brion_genfun(const Polyhedron& P) {
    auto rays = recession_rays(P);
    if (!rays.empty()) throw unbounded_error(rays.front());
    return polyhedron_genfun(P);
}

Int count(const Polyhedron& P) {
    ShortRatFun f = brion_genfun(P);
    Rat c = specialize_all_ones(f);
    if (c.get_den() != 1)
        throw polytope_error("count: non-integral result (internal error)");
    if (c < 0) throw polytope_error("count: negative result (internal error)");
    return c.get_num();
}

}  // namespace latkit
