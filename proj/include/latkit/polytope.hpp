// H-representation polyhedra with exact integer data, vertex enumeration,
// tangent cones, Brion's signed vertex-cone sum, and lattice point counting.
#pragma once

#include "latkit/cone.hpp"

#include <vector>

namespace latkit {

struct polytope_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised by operations that require a bounded polyhedron.
struct unbounded_error : polytope_error {
    VecZ certificate_ray;
    explicit unbounded_error(VecZ ray)
        : polytope_error("polyhedron is unbounded"),
          certificate_ray(std::move(ray)) {}
};

// { x in R^n : A x <= b, E x = d }
struct Polyhedron {
    MatZ A;
    VecZ b;
    MatZ E;
    VecZ d;

    std::size_t dim() const { return A.cols() ? A.cols() : E.cols(); }
    bool has_equations() const { return E.rows() > 0; }

    static Polyhedron from_inequalities(const MatZ& A, const VecZ& b);
    static Polyhedron box(const VecZ& lo, const VecZ& hi);
    // mP: scales the right-hand sides
    Polyhedron dilate(const Int& m) const;
    // P + w
    Polyhedron translate(const VecZ& w) const;
    void add_inequality(const VecZ& a, const Int& beta);
    void add_equation(const VecZ& e, const Int& delta);
};

// All vertices in deterministic lexicographic order.  Throws
// unbounded_error (with a certificate ray) when P is unbounded and
// returns an empty list when P is empty.
std::vector<VecQ> enumerate_vertices(const Polyhedron& P);

// Extreme rays of the recession cone {A x <= 0, E x = 0}.
std::vector<VecZ> recession_rays(const Polyhedron& P);

// Tangent cone of P at a vertex v: apex v, rays spanned by the edge
// directions (polar of the active constraint normals).
VertexCone tangent_cone(const Polyhedron& P, const VecQ& v);

// Multivariate generating function of P cap Z^n for any pointed
// rational polyhedron P (bounded or not): Brion's theorem over the
// vertex tangent cones, each decomposed into unimodular cones through
// the polar.  Equations and implicit equalities are eliminated onto a
// lattice-preserving parameterization first.
ShortRatFun polyhedron_genfun(const Polyhedron& P);

// Brion's f(P) for bounded P (checked).
ShortRatFun brion_genfun(const Polyhedron& P);

// Exact number of lattice points of a bounded P.
Int count(const Polyhedron& P);

}  // namespace latkit
