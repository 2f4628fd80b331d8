// Short rational generating functions: signed/weighted sums of terms
//   coeff * x^u / prod_j (1 - x^{c_j})
// encoding sets of lattice points, together with the algebra on them
// (sign normalization, addition, Hadamard products, monomial substitution,
// specialization at the all-ones point, leading monomials, expansion).
#pragma once

#include "latkit/arith.hpp"

#include <map>
#include <optional>
#include <vector>

namespace latkit {

struct genfun_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One summand coeff * x^u / prod (1 - x^{c_j}).  Every denominator
// exponent is nonzero and lives in the same ambient dimension as u.
struct BasicTerm {
    Rat coeff;
    VecZ numer;               // u
    std::vector<VecZ> denom;  // the c_j, each nonzero

    std::size_t dim() const { return numer.size(); }
};

class ShortRatFun {
  public:
    ShortRatFun() : dim_(0) {}
    explicit ShortRatFun(std::size_t dim) : dim_(dim) {}

    static ShortRatFun zero(std::size_t dim) { return ShortRatFun(dim); }
    static ShortRatFun monomial(const VecZ& u, const Rat& coeff = Rat(1));

    std::size_t dim() const { return dim_; }
    const std::vector<BasicTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void push(BasicTerm t);
    // Sort terms canonically and merge duplicates; drops zero coefficients.
    void compress();

  private:
    std::size_t dim_;
    std::vector<BasicTerm> terms_;
};

// Term order given by an integer matrix W: x^a < x^b iff W a is
// lexicographically smaller than W b.  W must be nonsingular.
struct TermOrder {
    MatZ W;
    explicit TermOrder(MatZ w);
    static TermOrder lex(std::size_t n) { return TermOrder(MatZ::identity(n)); }
    // true iff x^a < x^b under this order
    bool less(const VecZ& a, const VecZ& b) const;
};

// Flip identity 1/(1-x^c) = -x^{-c}/(1-x^{-c}) applied so that every
// denominator exponent c' of the output satisfies lambda . c' > 0.
// Requires lambda . c != 0 for every c of t.
BasicTerm normalize_signs(const BasicTerm& t, const VecZ& lambda);
ShortRatFun normalize_signs(const ShortRatFun& f, const VecZ& lambda);

// Internal convention used by expansions: every c' satisfies lambda.c' < 0.
BasicTerm normalize_into(const BasicTerm& t, const VecZ& lambda);

ShortRatFun add(const ShortRatFun& f, const ShortRatFun& g);

// Coefficientwise product of the two series; implements set intersection
// for indicator-type operands.  When a direction is supplied both operands
// are normalized into its expansion cone first; otherwise a deterministic
// generic direction derived from the operands is used (valid whenever both
// encode finite sets).
ShortRatFun hadamard(const ShortRatFun& f, const ShortRatFun& g,
                     std::optional<VecZ> direction = std::nullopt);

// Total coefficient mass of the Hadamard product (for indicator operands:
// |S1 cap S2|) without materializing its terms.
Rat hadamard_count(const ShortRatFun& f, const ShortRatFun& g,
                   std::optional<VecZ> direction = std::nullopt);

// Substitute variable i by the monomial with exponent images[i] (a vector
// in k new variables).  Errors if a denominator exponent maps to zero.
ShortRatFun monomial_substitution(const ShortRatFun& f,
                                  const std::vector<VecZ>& images);

// Limit of f at x -> (1,...,1) computed along a generic line with exact
// truncated Laurent series; equals |S| when f encodes the finite set S.
// Throws when the poles do not cancel (genuinely infinite set).
Rat specialize_all_ones(const ShortRatFun& f);

// i_[p,q](t) = t^p + ... + t^q as the two-term fraction (t^p - t^{q+1})/(1-t).
ShortRatFun interval_polynomial(const Int& p, const Int& q);

// Leading monomial of the finite set encoded by f with respect to ord.
// f must encode a nonempty finite subset of Z^n_{>=0}.
VecZ leading_monomial(const ShortRatFun& f, const TermOrder& ord);

// Exponent of an f that expands to the single monomial x^a, a >= 0.
VecZ recover_exponent(const ShortRatFun& f);

// Exact multiset of monomials of f with exponents in [0, box], keyed by
// exponent vector.  `direction`, when given, selects the expansion cone
// (must be negative on every recession direction of the encoded set);
// by default a deterministic generic direction is derived from f.
std::map<VecZ, Rat> expand(const ShortRatFun& f, const VecZ& box,
                           std::optional<VecZ> direction = std::nullopt);
// Same with an explicit lower corner.
std::map<VecZ, Rat> expand_box(const ShortRatFun& f, const VecZ& lo,
                               const VecZ& hi,
                               std::optional<VecZ> direction = std::nullopt);

// Deterministic generic direction: nonzero pairing with every vector in
// `must_pair`, drawn from a fixed sequence seeded by the vectors' content.
VecZ generic_direction(std::size_t dim, const std::vector<VecZ>& must_pair);

// All denominator exponents appearing in f.
std::vector<VecZ> denominator_exponents(const ShortRatFun& f);

// Exact evaluation at a rational point (throws on a pole).
Rat evaluate(const ShortRatFun& f, const VecQ& x);

// Upper bound for max lambda.beta over the support of a finite-set
// encoding f: flip every denominator exponent with lambda.c > 0, then
// take the max of lambda.u over terms.
Int support_degree_bound(const ShortRatFun& f, const VecZ& lambda);

// Componentwise bounding box [lo, hi] valid for any finite set encoded by f.
std::pair<VecZ, VecZ> support_box(const ShortRatFun& f);

}  // namespace latkit
