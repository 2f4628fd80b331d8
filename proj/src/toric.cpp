#include "latkit/toric.hpp"

#include <algorithm>

namespace latkit {

namespace {

// box polytope 0 <= (u, v) <= bound with the fiber equations A u = A v
Polyhedron fiber_box(const MatZ& A, const Int& bound) {
    std::size_t d = A.rows(), n = A.cols();
    Polyhedron P = Polyhedron::box(VecZ(2 * n), VecZ(2 * n, bound));
    for (std::size_t i = 0; i < d; ++i) {
        VecZ e(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            e[j] = A.at(i, j);
            e[n + j] = -A.at(i, j);
        }
        P.add_equation(e, 0);
    }
    return P;
}

// (w, -w) as a functional on (u, v)
VecZ split_functional(const VecZ& w) {
    std::size_t n = w.size();
    VecZ e(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = w[j];
        e[n + j] = -w[j];
    }
    return e;
}

// Hadamard product of H with the indicator series of the half-space
// e.x <= rhs (or the hyperplane e.x = rhs).  Because the constraint set
// is a single polyhedron, the product distributes over the terms of H
// and each factor restricts inside its own cone coordinates: the term
// gamma x^u / prod(1 - x^{c_j}) is the sum over lambda >= 0 of
// x^{u + lambda C}, so the restricted term is the generating function of
// { lambda >= 0 : (C e).lambda <= rhs - e.u } mapped back through
// x = u + lambda C.  This is exact (the denominator directions of every
// term are linearly independent) and avoids the quadratic pairing cost
// of the general two-operand product.
ShortRatFun halfspace_product(const ShortRatFun& H, const VecZ& e,
                              const Int& rhs, bool equality) {
    std::size_t n = H.dim();
    ShortRatFun out(n);
    // put every term into one expansion domain, where it really is the
    // plain sum over lambda >= 0
    VecZ lambda = generic_direction(n, denominator_exponents(H));
    for (const auto& t0 : H.terms()) {
        BasicTerm t = normalize_into(t0, lambda);
        std::size_t k = t.denom.size();
        Int r = rhs - dot(e, t.numer);
        if (k == 0) {
            bool keep = equality ? (r == 0) : (r >= 0);
            if (keep) out.push({t.coeff, t.numer, {}});
            continue;
        }
        MatZ A(equality ? k : k + 1, k);
        VecZ b(equality ? k : k + 1);
        for (std::size_t i = 0; i < k; ++i) A.at(i, i) = -1;
        VecZ c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = dot(e, t.denom[i]);
        Polyhedron Q = Polyhedron::from_inequalities(A, b);
        if (equality)
            Q.add_equation(c, r);
        else
            Q.add_inequality(c, r);
        ShortRatFun g = polyhedron_genfun(Q);
        MatZ C = MatZ::from_rows(t.denom);
        for (const auto& s : g.terms()) {
            BasicTerm nt;
            nt.coeff = t.coeff * s.coeff;
            nt.coeff.canonicalize();
            nt.numer = add(t.numer, mul_row(s.numer, C));
            for (const auto& d : s.denom) {
                VecZ nd = mul_row(d, C);
                if (latkit::is_zero(nd))
                    throw toric_error("halfspace product: collapsed "
                                      "denominator (internal)");
                nt.denom.push_back(std::move(nd));
            }
            out.push(std::move(nt));
        }
    }
    out.compress();
    return out;
}

}  // namespace

ToricInstance ToricInstance::from_matrix(const MatZ& A) {
    std::size_t d = A.rows(), n = A.cols();
    if (d == 0 || n == 0) throw toric_error("empty matrix");
    Int DA = max_subdeterminant(A, std::min(d, n));
    if (DA == 0) throw toric_error("matrix has no nonzero subdeterminant");
    Int M = Int(d + 1) * Int(n >= d ? n - d : 0) * DA;
    return {A, M};
}

BinomialSet universal_gb_genfun(const ToricInstance& inst) {
    return {brion_genfun(fiber_box(inst.A, inst.M)), inst.M};
}

BinomialSet order_filter(const BinomialSet& G0, const TermOrder& ord) {
    std::size_t two_n = G0.f.dim();
    if (two_n % 2 != 0) throw toric_error("binomial set has odd dimension");
    std::size_t n = two_n / 2;
    if (ord.W.rows() != n || ord.W.cols() != n)
        throw toric_error("order dimension mismatch");
    if (G0.bound < 0) throw toric_error("binomial set lacks a box bound");
    ShortRatFun H = G0.f;  // running equality-sliced set
    ShortRatFun G(two_n);
    for (std::size_t i = 0; i < n; ++i) {
        VecZ e = split_functional(ord.W.row(i));
        // strict slice: w_i.u >= w_i.v + 1, i.e. (-e).x <= -1
        G = add(G, halfspace_product(H, neg(e), Int(-1), false));
        if (i + 1 < n) {
            H = halfspace_product(H, e, Int(0), true);
            if (H.is_zero()) break;
        }
    }
    G.compress();
    return {std::move(G), G0.bound};
}

BoundedBinomialCounts count_binomials_bounded(const MatZ& A, const Int& D,
                                              std::optional<VecZ> grading,
                                              DegreeMode mode) {
    std::size_t n = A.cols();
    if (mode == DegreeMode::per_variable) {
        if (D < 0) throw toric_error("negative bound");
        BoundedBinomialCounts out;
        out.raw = count(fiber_box(A, D));
        Int side = D + 1;
        mpz_pow_ui(out.diagonal.get_mpz_t(), side.get_mpz_t(),
                   static_cast<unsigned long>(n));
        out.nondiagonal = out.raw - out.diagonal;
        if (out.nondiagonal % 2 != 0)
            throw toric_error("non-diagonal pair count is odd (internal)");
        out.modulo_swap = out.nondiagonal / 2;
        return out;
    }
    VecZ g = grading ? *grading : A.row(0);
    if (!grading)
        for (const auto& x : g)
            if (x <= 0)
                throw toric_error(
                    "first row of A is not positive; supply a grading");
    // pairs: u, v >= 0, A u = A v, g.u <= D
    MatZ Aineq(2 * n + 1, 2 * n);
    VecZ b(2 * n + 1);
    for (std::size_t j = 0; j < 2 * n; ++j) Aineq.at(j, j) = -1;
    for (std::size_t j = 0; j < n; ++j) Aineq.at(2 * n, j) = g[j];
    b[2 * n] = D;
    Polyhedron pairs = Polyhedron::from_inequalities(Aineq, b);
    for (std::size_t i = 0; i < A.rows(); ++i)
        pairs.add_equation(split_functional(A.row(i)), 0);
    BoundedBinomialCounts out;
    try {
        out.raw = count(pairs);
    } catch (const unbounded_error&) {
        throw toric_error(
            "degree bound does not make the fiber finite (grading not "
            "positive on the kernel of A)");
    }
    // diagonal: u = v is automatic, so count {u >= 0 : g.u <= D}
    MatZ Ad(n + 1, n);
    VecZ bd(n + 1);
    for (std::size_t j = 0; j < n; ++j) Ad.at(j, j) = -1;
    for (std::size_t j = 0; j < n; ++j) Ad.at(n, j) = g[j];
    bd[n] = D;
    out.diagonal = count(Polyhedron::from_inequalities(Ad, bd));
    out.nondiagonal = out.raw - out.diagonal;
    if (out.nondiagonal % 2 != 0)
        throw toric_error("non-diagonal pair count is odd (internal)");
    out.modulo_swap = out.nondiagonal / 2;
    return out;
}

std::vector<std::pair<VecZ, VecZ>> expand_binomials(const BinomialSet& G) {
    if (G.bound < 0) throw toric_error("binomial set lacks a box bound");
    std::size_t two_n = G.f.dim(), n = two_n / 2;
    std::vector<std::pair<VecZ, VecZ>> out;
    for (const auto& [e, c] : expand(G.f, VecZ(two_n, G.bound))) {
        if (c == 0) continue;
        if (c != 1)
            throw toric_error("binomial set has non-unit multiplicity");
        VecZ u(e.begin(), e.begin() + n);
        VecZ v(e.begin() + n, e.end());
        out.emplace_back(std::move(u), std::move(v));
    }
    return out;
}

VecZ normal_form_desk(const VecZ& a,
                      const std::vector<std::pair<VecZ, VecZ>>& G,
                      const TermOrder& ord) {
    VecZ cur = a;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const auto& [u, v] : G) {
            bool applies = true;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (cur[j] < u[j]) {
                    applies = false;
                    break;
                }
            if (!applies) continue;
            VecZ next = add(sub(cur, u), v);
            if (!ord.less(next, cur))
                throw toric_error(
                    "division step does not decrease the term order; the "
                    "pair list is not correctly ordered");
            cur = std::move(next);
            reduced = true;
            break;
        }
    }
    return cur;
}

}  // namespace latkit
