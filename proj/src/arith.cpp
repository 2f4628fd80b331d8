#include "latkit/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace latkit {

MatZ::MatZ(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw arith_error("ragged initializer");
        for (long x : r) a_.emplace_back(x);
    }
}

MatZ MatZ::identity(std::size_t n) {
    MatZ I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

MatZ MatZ::from_rows(const std::vector<VecZ>& rows) {
    std::size_t m = rows.size();
    std::size_t n = m ? rows[0].size() : 0;
    MatZ A(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n) throw arith_error("ragged rows");
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = rows[i][j];
    }
    return A;
}

VecZ MatZ::row(std::size_t i) const {
    VecZ v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void MatZ::set_row(std::size_t i, const VecZ& v) {
    if (v.size() != cols_) throw arith_error("row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

MatZ MatZ::transpose() const {
    MatZ T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
}

VecZ vz(std::initializer_list<long> v) {
    VecZ r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

VecZ add(const VecZ& a, const VecZ& b) {
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecZ sub(const VecZ& a, const VecZ& b) {
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecZ neg(const VecZ& a) {
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

VecZ scale(const Int& s, const VecZ& a) {
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Int dot(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dotq(const VecQ& a, const VecQ& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const VecZ& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Int norm2(const VecZ& a) { return dot(a, a); }

VecZ primitive(const VecZ& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, x);
    if (g == 0 || g == 1) return a;
    VecZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

VecQ to_q(const VecZ& a) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

std::string to_string(const VecZ& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

MatZ mul(const MatZ& A, const MatZ& B) {
    if (A.cols() != B.rows()) throw arith_error("matmul dim mismatch");
    MatZ C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

VecZ mul(const MatZ& A, const VecZ& x) {
    if (A.cols() != x.size()) throw arith_error("matvec dim mismatch");
    VecZ y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

VecZ mul_row(const VecZ& x, const MatZ& A) {
    if (A.rows() != x.size()) throw arith_error("vecmat dim mismatch");
    VecZ y(A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < A.cols(); ++j) y[j] += x[i] * A.at(i, j);
    }
    return y;
}

// Bareiss fraction-free elimination.
Int det(const MatZ& A) {
    if (A.rows() != A.cols()) throw arith_error("det of non-square matrix");
    std::size_t n = A.rows();
    if (n == 0) return 1;
    MatZ M = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                M.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

std::size_t rank(const MatZ& A) {
    std::size_t m = A.rows(), n = A.cols();
    std::vector<VecQ> M(m, VecQ(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[r], M[p]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (M[i][c] == 0) continue;
            Rat f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

HnfResult hnf_any(const MatZ& M) {
    std::size_t m = M.rows(), n = M.cols();
    MatZ H = M;
    MatZ U = MatZ::identity(m);
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) swap(H.at(a, j), H.at(b, j));
        for (std::size_t j = 0; j < m; ++j) swap(U.at(a, j), U.at(b, j));
    };
    auto addmul = [&](std::size_t dst, const Int& f, std::size_t src) {
        if (f == 0) return;
        for (std::size_t j = 0; j < n; ++j) H.at(dst, j) += f * H.at(src, j);
        for (std::size_t j = 0; j < m; ++j) U.at(dst, j) += f * U.at(src, j);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) H.at(i, j) = -H.at(i, j);
        for (std::size_t j = 0; j < m; ++j) U.at(i, j) = -U.at(i, j);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // gcd out column c below row r
        while (true) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i)
                if (H.at(i, c) != 0 &&
                    (p == m || abs(H.at(i, c)) < abs(H.at(p, c))))
                    p = i;
            if (p == m) break;  // column all zero
            if (p != r) swap_rows(r, p);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(),
                           H.at(r, c).get_mpz_t());
                addmul(i, -q, r);
                if (H.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H.at(r, c) == 0) continue;
        if (H.at(r, c) < 0) negate_row(r);
        // reduce entries above the pivot
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(),
                       H.at(r, c).get_mpz_t());
            addmul(i, -q, r);
        }
        ++r;
    }
    return {std::move(H), std::move(U), r};
}

std::pair<MatZ, MatZ> hnf(const MatZ& M) {
    HnfResult res = hnf_any(M);
    if (res.rank != M.rows())
        throw arith_error("hnf: input is rank-deficient");
    return {std::move(res.H), std::move(res.U)};
}

MatZ kernel_lattice(const MatZ& M) {
    // U * M^T = H; rows of U past rank(H) kill M^T, i.e. M * u = 0.
    HnfResult res = hnf_any(M.transpose());
    std::size_t n = M.cols();
    std::vector<VecZ> ker;
    for (std::size_t i = res.rank; i < n; ++i) ker.push_back(res.U.row(i));
    MatZ K = MatZ::from_rows(ker);
    if (ker.empty()) K = MatZ(0, n);
    return K;
}

std::optional<VecZ> solve_integer(const MatZ& M, const VecZ& d) {
    // With U M^T = H: M x = d  <=>  H^T y = d where x = U^T y.
    std::size_t m = M.rows(), n = M.cols();
    if (d.size() != m) throw arith_error("solve_integer dim mismatch");
    HnfResult res = hnf_any(M.transpose());  // res.H is n x m
    // H^T is m x n, row-echelon transposed: solve H^T y = d by
    // substitution over the pivot structure of H.
    VecZ y(n, Int(0));
    VecZ rem = d;
    for (std::size_t i = 0; i < res.rank; ++i) {
        // pivot column of row i of H
        std::size_t c = 0;
        while (c < m && res.H.at(i, c) == 0) ++c;
        if (c == m) break;
        if (rem[c] % res.H.at(i, c) != 0) return std::nullopt;
        y[i] = rem[c] / res.H.at(i, c);
        if (y[i] != 0)
            for (std::size_t j = 0; j < m; ++j) rem[j] -= y[i] * res.H.at(i, j);
    }
    if (!is_zero(rem)) return std::nullopt;
    return mul_row(y, res.U);
}

VecQ solve_rational(const MatZ& A, const VecQ& b) {
    std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n)
        throw arith_error("solve_rational needs square system");
    std::vector<VecQ> M(n, VecQ(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(A.at(i, j));
        M[i][n] = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw arith_error("solve_rational: singular matrix");
        std::swap(M[c], M[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rat f = M[i][c] / M[c][c];
            for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
        }
    }
    VecQ x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = M[i][n] / M[i][i];
        x[i].canonicalize();
    }
    return x;
}

MatZ inverse_unimodular(const MatZ& A) {
    std::size_t n = A.rows();
    Int dA = det(A);
    if (dA != 1 && dA != -1)
        throw arith_error("inverse_unimodular: |det| != 1");
    MatZ inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        VecQ e(n, Rat(0));
        e[j] = 1;
        VecQ col = solve_rational(A, e);
        for (std::size_t i = 0; i < n; ++i) {
            if (col[i].get_den() != 1)
                throw arith_error("inverse_unimodular: non-integral inverse");
            inv.at(i, j) = col[i].get_num();
        }
    }
    return inv;
}

namespace {

// Gram-Schmidt over Q for the rows of B; returns mu and squared norms.
void gram_schmidt(const MatZ& B, std::vector<VecQ>& mu, VecQ& Bn) {
    std::size_t k = B.rows(), n = B.cols();
    std::vector<VecQ> gs(k, VecQ(n, Rat(0)));
    mu.assign(k, VecQ(k, Rat(0)));
    Bn.assign(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) gs[i][j] = Rat(B.at(i, j));
        for (std::size_t j = 0; j < i; ++j) {
            Rat num = 0;
            for (std::size_t t = 0; t < n; ++t)
                num += Rat(B.at(i, t)) * gs[j][t];
            mu[i][j] = Bn[j] == 0 ? Rat(0) : Rat(num / Bn[j]);
            mu[i][j].canonicalize();
            for (std::size_t t = 0; t < n; ++t) gs[i][t] -= mu[i][j] * gs[j][t];
        }
        Bn[i] = dotq(gs[i], gs[i]);
        Bn[i].canonicalize();
    }
}

}  // namespace

MatZ lll_reduce(const MatZ& B0, const Rat& delta) {
    if (delta <= Rat(1, 4) || delta >= 1)
        throw arith_error("lll_reduce: delta out of (1/4, 1)");
    std::size_t k = B0.rows();
    if (rank(B0) != k) throw arith_error("lll_reduce: dependent rows");
    MatZ B = B0;
    if (k <= 1) return B;
    std::vector<VecQ> mu;
    VecQ Bn;
    gram_schmidt(B, mu, Bn);
    std::size_t i = 1;
    while (i < k) {
        // size-reduce row i against rows below it
        for (std::size_t j = i; j-- > 0;) {
            Rat half(1, 2);
            if (abs(mu[i][j]) > half) {
                Int q;
                Rat m = mu[i][j];
                // nearest integer
                mpz_t num, den;
                mpz_init_set(num, m.get_num_mpz_t());
                mpz_init_set(den, m.get_den_mpz_t());
                mpz_mul_2exp(num, num, 1);
                mpz_add(num, num, den);
                mpz_mul_2exp(den, den, 1);
                mpz_fdiv_q(q.get_mpz_t(), num, den);
                mpz_clears(num, den, NULL);
                if (q != 0) {
                    for (std::size_t t = 0; t < B.cols(); ++t)
                        B.at(i, t) -= q * B.at(j, t);
                    gram_schmidt(B, mu, Bn);
                }
            }
        }
        if (Bn[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * Bn[i - 1]) {
            ++i;
        } else {
            for (std::size_t t = 0; t < B.cols(); ++t)
                swap(B.at(i, t), B.at(i - 1, t));
            gram_schmidt(B, mu, Bn);
            i = i > 1 ? i - 1 : 1;
        }
    }
    return B;
}

namespace {

// Depth-first enumeration of lattice vectors with squared norm <= bound,
// in Gram-Schmidt coordinates of the (reduced) basis.
void enumerate_short(const MatZ& B, const std::vector<VecQ>& mu,
                     const VecQ& Bn, std::size_t level, VecZ& coeff,
                     Rat& bound, Rat partial, VecZ& best, Rat& best_norm,
                     bool by_linf, Int& best_inf) {
    std::size_t k = B.rows();
    if (level == k) {
        bool allz = true;
        for (const auto& z : coeff)
            if (z != 0) allz = false;
        if (allz) return;
        VecZ v(B.cols(), Int(0));
        for (std::size_t i = 0; i < k; ++i)
            if (coeff[i] != 0)
                for (std::size_t j = 0; j < B.cols(); ++j)
                    v[j] += coeff[i] * B.at(i, j);
        Rat n2 = Rat(norm2(v));
        if (n2 == 0) return;
        // canonical sign: first nonzero coordinate positive
        for (const auto& x : v) {
            if (x > 0) break;
            if (x < 0) {
                v = neg(v);
                break;
            }
        }
        Int ninf = 0;
        for (const auto& x : v) {
            Int a = abs(x);
            if (a > ninf) ninf = a;
        }
        bool better, tied;
        if (by_linf) {
            better = best.empty() || ninf < best_inf ||
                     (ninf == best_inf && n2 < best_norm);
            tied = !best.empty() && ninf == best_inf && n2 == best_norm;
        } else {
            better = best.empty() || n2 < best_norm;
            tied = !best.empty() && n2 == best_norm;
        }
        if (!better && tied) {
            // colex tie-break: compare from the last coordinate backward
            for (std::size_t j = v.size(); j-- > 0;) {
                if (v[j] != best[j]) {
                    better = v[j] < best[j];
                    break;
                }
            }
        }
        if (better) {
            best = v;
            best_norm = n2;
            best_inf = ninf;
            // shrink the live search radius: a remaining candidate either
            // strictly improves the sup-norm (so |v|_2^2 <= n*(h-1)^2) or
            // ties it, which demands |v|_2^2 <= best_norm
            if (by_linf) {
                Int h1 = best_inf > 0 ? best_inf - 1 : Int(0);
                Rat nb = std::max(best_norm, Rat(h1 * h1 * Int(v.size())));
                if (nb < bound) bound = nb;
            } else if (best_norm < bound) {
                bound = best_norm;
            }
        }
        return;
    }
    // process levels from the last row downward
    std::size_t i = k - 1 - level;
    // center of the interval for z_i: -sum_{j>i} mu[j][i] z_j
    Rat center = 0;
    for (std::size_t j = i + 1; j < k; ++j) center -= Rat(coeff[j]) * mu[j][i];
    Rat room = bound - partial;
    if (room < 0) return;
    if (Bn[i] == 0) throw arith_error("enumerate_short: degenerate basis");
    // (z + center)^2 * Bn[i] <= room
    Rat radius2 = room / Bn[i];
    // conservative integer window around the center
    Int lo, hi;
    {
        // floor(center - r), ceil(center + r), with r <= 1 + radius2 (r>=0)
        Rat r_over = radius2 + 1;  // radius <= max(1, radius2) <= radius2 + 1
        Rat a = center - r_over, b = center + r_over;
        mpz_fdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    }
    for (Int z = lo; z <= hi; ++z) {
        Rat d = Rat(z) + center;
        Rat contrib = d * d * Bn[i];
        if (contrib > room) continue;
        coeff[i] = z;
        enumerate_short(B, mu, Bn, level + 1, coeff, bound, partial + contrib,
                        best, best_norm, by_linf, best_inf);
    }
    coeff[i] = 0;
}

VecZ shortest_impl(const MatZ& B0, bool by_linf) {
    if (B0.rows() == 0) throw arith_error("shortest_vector: empty lattice");
    MatZ B = lll_reduce(B0);
    std::vector<VecQ> mu;
    VecQ Bn;
    gram_schmidt(B, mu, Bn);
    Rat bound;
    if (by_linf) {
        // the sup-norm minimizer w has |w|_2^2 <= n * |w|_inf^2, and some
        // reduced row already bounds |w|_inf
        Int row_inf = 0;
        for (std::size_t i = 0; i < B.rows(); ++i) {
            Int m = 0;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                Int a = abs(B.at(i, j));
                if (a > m) m = a;
            }
            if (i == 0 || m < row_inf) row_inf = m;
        }
        bound = Rat(row_inf * row_inf * Int(B.cols()));
    } else {
        bound = Rat(norm2(B.row(0)));
        for (std::size_t i = 1; i < B.rows(); ++i)
            bound = std::min(bound, Rat(norm2(B.row(i))));
    }
    VecZ coeff(B.rows(), Int(0));
    VecZ best;
    Rat best_norm = 0;
    Int best_inf = 0;
    enumerate_short(B, mu, Bn, 0, coeff, bound, Rat(0), best, best_norm,
                    by_linf, best_inf);
    if (best.empty()) throw arith_error("shortest_vector: no vector found");
    return best;
}

}  // namespace

VecZ shortest_vector(const MatZ& B0) { return shortest_impl(B0, false); }

VecZ shortest_vector_linf(const MatZ& B0) { return shortest_impl(B0, true); }

Int max_subdeterminant(const MatZ& A, std::size_t d) {
    if (d > A.rows() || d > A.cols())
        throw arith_error("max_subdeterminant: d exceeds dimensions");
    std::vector<std::size_t> ri(d), ci(d);
    Int best = 0;
    // enumerate row subsets then column subsets
    std::vector<std::size_t> rows_sel(d), cols_sel(d);
    std::function<void(std::size_t, std::size_t)> pick_cols =
        [&](std::size_t start, std::size_t got) {
            if (got == d) {
                MatZ S(d, d);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        S.at(i, j) = A.at(rows_sel[i], cols_sel[j]);
                Int v = abs(det(S));
                if (v > best) best = v;
                return;
            }
            for (std::size_t c = start; c + (d - got) <= A.cols(); ++c) {
                cols_sel[got] = c;
                pick_cols(c + 1, got + 1);
            }
        };
    std::function<void(std::size_t, std::size_t)> pick_rows =
        [&](std::size_t start, std::size_t got) {
            if (got == d) {
                pick_cols(0, 0);
                return;
            }
            for (std::size_t r = start; r + (d - got) <= A.rows(); ++r) {
                rows_sel[got] = r;
                pick_rows(r + 1, got + 1);
            }
        };
    pick_rows(0, 0);
    return best;
}

}  // namespace latkit
