// Toric-ideal computations on binomials encoded as lattice-point sets:
// a binomial x^u - x^v is stored as the monomial x^u y^v in 2n variables,
// so sets of binomials are short rational functions and the degree-bounded
// universal Groebner superset, term-order filtering, and bounded counting
// all reduce to polytope generating functions and Hadamard products.
#pragma once

#include "latkit/polytope.hpp"

#include <utility>

namespace latkit {

struct toric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d x n integer matrix with its derived binomial degree bound
// M = (d+1)(n-d) * (largest absolute subdeterminant of A).
struct ToricInstance {
    MatZ A;
    Int M;

    static ToricInstance from_matrix(const MatZ& A);
};

// Set of binomials as a generating function in (x_1..x_n, y_1..y_n);
// every encoded monomial x^u y^v satisfies A u = A v and sits inside
// the box 0 <= u_i, v_i <= bound.
struct BinomialSet {
    ShortRatFun f;  // dimension 2n
    Int bound;      // the per-coordinate box bound
};

// G(x,y) = sum { x^u y^v : A u = A v, 0 <= u_i, v_i <= M }; its support
// contains the Graver basis and every reduced Groebner basis of I_A.
BinomialSet universal_gb_genfun(const ToricInstance& inst);

// Sub-sum of G0 over correctly ordered pairs (x^v strictly below x^u
// under ord), built as the disjoint union of the n lex slices via
// Hadamard chains against box-restricted half-space and hyperplane sets.
BinomialSet order_filter(const BinomialSet& G0, const TermOrder& ord);

// Lattice-point counts of degree-bounded pair sets {(u,v) >= 0 :
// A u = A v, deg <= D} under the exposed conventions (the diagonal
// u = v counted separately).  "Degree <= D" itself is ambiguous for
// binomials encoded as monomials x^u y^v, so both readings are exposed:
// grading.u <= D (a simplex cut) or every exponent <= D (a box cut).
enum class DegreeMode {
    grading,       // grading . u <= D
    per_variable,  // 0 <= u_i, v_i <= D
};
struct BoundedBinomialCounts {
    Int raw;          // all pairs, diagonal included
    Int diagonal;     // pairs with u = v
    Int nondiagonal;  // raw - diagonal
    Int modulo_swap;  // nondiagonal / 2
};
// Degree is grading.u; by default the first row of A (must be positive
// when the grading mode is used).
BoundedBinomialCounts count_binomials_bounded(
    const MatZ& A, const Int& D, std::optional<VecZ> grading = std::nullopt,
    DegreeMode mode = DegreeMode::grading);

// Explicit (u, v) pair list of a finite binomial set.
std::vector<std::pair<VecZ, VecZ>> expand_binomials(const BinomialSet& G);

// Classical division: repeatedly replace a by a - u + v for any pair with
// u <= a componentwise; terminates since W.a drops lexicographically when
// the pairs are correctly ordered for ord.
VecZ normal_form_desk(const VecZ& a,
                      const std::vector<std::pair<VecZ, VecZ>>& G,
                      const TermOrder& ord);

}  // namespace latkit
