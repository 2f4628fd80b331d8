// Text formats: LattE-style polytope files, plain matrix files, and the
// canonical serialization of short rational functions.
#pragma once

#include "latkit/polytope.hpp"

#include <iosfwd>
#include <string>

namespace latkit {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First line `m n+1`; each of m rows `b -a1 ... -an` meaning
// b - a.x >= 0; optional trailing `linearity k i1 ... ik` marking
// equality rows (1-based indices).
Polyhedron parse_polytope_file(std::istream& in);
Polyhedron parse_polytope_file(const std::string& path);

// First line `r c`, then r rows of c integers.
MatZ parse_matrix_file(std::istream& in);
MatZ parse_matrix_file(const std::string& path);

// One term per line: `coeff ; u ; c_1 | c_2 | ...`, vectors as
// comma-separated integers.  Canonical: the function is compressed first.
std::string serialize(const ShortRatFun& f);

// Space-separated integers, e.g. "1 0 2 -1".
VecZ parse_int_vector(const std::string& text);

}  // namespace latkit
