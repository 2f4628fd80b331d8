// Univariate series pipeline: Ehrhart series of rational polytopes via
// the cone-over-the-polytope construction, Hilbert series of graded
// semigroups of cone lattice points, and the Gorenstein test.
#pragma once

#include "latkit/polytope.hpp"

#include <optional>
#include <string>

namespace latkit {

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numerator(t) / prod_k (1 - t^{d_k})
struct UniSeries {
    std::vector<Int> numerator;  // coefficients, ascending, trimmed
    std::vector<Int> denom_exps; // the d_k, positive, sorted

    // first k coefficients of the power-series expansion
    std::vector<Int> expand(std::size_t k) const;
    // "numerator-coeffs ; denominator-exponents"
    std::string to_string() const;
};

// Lattice points of cone(rays), graded by `grading` (positive on every
// nonzero cone element).
struct GradedSemigroup {
    MatZ rays;     // rows generate the cone
    VecZ grading;
};

// sum_m #(mP cap Z^n) t^m for a bounded rational polytope P, computed
// from a unimodular decomposition of the cone over P.  P may carry
// equations; implicit lower-dimensionality is an error.
UniSeries ehrhart_series(const Polyhedron& P);

// H(t) = sum_r #{x in S : deg x = r} t^r.
UniSeries hilbert_series(const GradedSemigroup& S);

struct GorensteinResult {
    bool gorenstein;
    std::optional<VecZ> witness;  // interior point a with interior = a + S
};

// Decides whether the semigroup ring of the full set of lattice points of
// a full-dimensional pointed cone is Gorenstein, producing the witness.
GorensteinResult gorenstein_check(const GradedSemigroup& S);

}  // namespace latkit
