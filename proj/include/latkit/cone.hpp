// Polyhedral cone machinery: double description ray enumeration,
// polarization, placing triangulation, Barvinok's signed decomposition
// into unimodular cones, and the generating function of a unimodular
// cone with a rational apex.
#pragma once

#include "latkit/genfun.hpp"

#include <functional>
#include <vector>

namespace latkit {

struct cone_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Pointed rational cone, V-representation: rows of `rays` are primitive
// integer generators.
struct Cone {
    MatZ rays;
    std::size_t dim() const { return rays.cols(); }
    static Cone from_rows(const std::vector<VecZ>& rows);
};

struct VertexCone {
    VecQ apex;
    Cone cone;
};

// Simplicial cone with |det(generators)| = 1, carrying a sign and a
// rational apex.
struct SignedUnimodularCone {
    int sign;    // +1 or -1
    MatZ gens;   // rows are the generators
    VecQ apex;
};

// Extreme rays of { x : C x <= 0 }.  Requires rank(C) = dim (pointed).
// Result is deterministic: primitive rays sorted lexicographically.
std::vector<VecZ> dd_rays(const MatZ& C);

// True iff cone(rays) contains no line.  Fast certificate first, exact
// Fourier-Motzkin feasibility fallback.
bool is_pointed(const MatZ& rays);

// Polar cone {y : y.x <= 0 for all x in K}; K must be full-dimensional
// and pointed, and then so is the polar.
Cone polarize(const Cone& k);

// Deterministic placing triangulation over the input ray order; the
// pieces are simplicial, internally disjoint, and cover the cone.
std::vector<Cone> triangulate(const Cone& k);

// Barvinok's signed decomposition of a full-dimensional simplicial cone
// into unimodular cones: sum of sign * [cone] equals [K] modulo
// indicators of lower-dimensional cones.  Apexes are left at 0.
std::vector<SignedUnimodularCone> barvinok_decompose(const Cone& k);

// Decomposition of K through its polar: polarize, triangulate, decompose
// each piece, polarize each unimodular piece back.  The result is an
// exact identity of generating functions f(K) = sum sign_i f(K_i).
std::vector<SignedUnimodularCone> dual_decompose(const Cone& k);

// Same, for K = { x : C x <= 0 } given in H-form (rank(C) = dim required);
// the rows of C generate the polar, so no double description step is needed.
std::vector<SignedUnimodularCone> dual_decompose_hform(const MatZ& C);

// Streaming form of the above: f is invoked once per signed piece and
// nothing is materialized, which matters when the decomposition has tens
// of thousands of pieces.
void dual_decompose_hform_each(
    const MatZ& C, const std::function<void(const SignedUnimodularCone&)>& f);

// Generating function x^u / prod(1 - x^{g_i}) of apex + cone(gens) with
// the half-open shift: u = sum ceil(alpha_i) g_i where apex = sum alpha_i g_i.
BasicTerm unimodular_genfun(const SignedUnimodularCone& c);

}  // namespace latkit
