// Leading monomials of finite sets encoded as short rational functions.
//
// The maximal exponent under a matrix term order W is pinned down one row
// at a time: for each row w the maximum of w . beta over the current set
// is found by binary search on emptiness of the slab {w . beta >= m}
// (tested through a Hadamard product with the slab's own generating
// function), and the set is then restricted to the optimal slice
// {w . beta = r} before the next row is processed.  After all rows the
// slices cut the set down to a single point a with W a = r.
#include "latkit/polytope.hpp"

namespace latkit {

namespace {

// generating function of {beta in [lo, hi] : w . beta >= m}
ShortRatFun slab_genfun(const VecZ& lo, const VecZ& hi, const VecZ& w,
                        const Int& m) {
    Polyhedron P = Polyhedron::box(lo, hi);
    P.add_inequality(neg(w), -m);
    return brion_genfun(P);
}

ShortRatFun slice_genfun(const VecZ& lo, const VecZ& hi, const VecZ& w,
                         const Int& r) {
    Polyhedron P = Polyhedron::box(lo, hi);
    P.add_equation(w, r);
    return brion_genfun(P);
}

}  // namespace

VecZ leading_monomial(const ShortRatFun& f, const TermOrder& ord) {
    std::size_t n = f.dim();
    if (ord.W.rows() != n || ord.W.cols() != n)
        throw genfun_error("leading_monomial: order dimension mismatch");
    if (f.is_zero() || specialize_all_ones(f) == 0)
        throw genfun_error("leading_monomial: empty set");
    auto [lo, hi] = support_box(f);
    ShortRatFun cur = f;
    VecZ r(n);
    for (std::size_t j = 0; j < n; ++j) {
        VecZ w = ord.W.row(j);
        // invariant: the set meets {w.beta >= p} and misses {w.beta >= q+1}
        Int p = -support_degree_bound(cur, neg(w));
        Int q = support_degree_bound(cur, w);
        while (p < q) {
            Int m;  // floor((p+q+1)/2), so p < m <= q
            mpz_fdiv_q_ui(m.get_mpz_t(), Int(p + q + 1).get_mpz_t(), 2);
            Rat c = hadamard_count(cur, slab_genfun(lo, hi, w, m));
            if (c != 0)
                p = m;
            else
                q = m - 1;
        }
        r[j] = p;
        cur = hadamard(cur, slice_genfun(lo, hi, w, p));
        if (cur.is_zero())
            throw genfun_error("leading_monomial: slicing lost the optimum "
                               "(internal error)");
    }
    VecQ a = solve_rational(ord.W, to_q(r));
    VecZ out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].get_den() != 1)
            throw genfun_error(
                "leading_monomial: non-integral optimum (internal error)");
        out[i] = a[i].get_num();
    }
    for (const auto& x : out)
        if (x < 0)
            throw genfun_error("leading_monomial: set has negative exponents");
    return out;
}

VecZ recover_exponent(const ShortRatFun& f) {
    if (f.is_zero() || specialize_all_ones(f) != 1)
        throw genfun_error("recover_exponent: not a single monomial");
    return leading_monomial(f, TermOrder::lex(f.dim()));
}

}  // namespace latkit
