// Exact integer/rational arithmetic and integer linear algebra used by
// every other part of latkit: dense matrices over Z, Hermite normal form,
// LLL reduction, shortest-vector enumeration, determinants, rational and
// integer linear solving.  All values are immutable after construction and
// all functions are pure.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense rows x cols matrix over Z.
class MatZ {
  public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    MatZ(std::initializer_list<std::initializer_list<long>> init);

    static MatZ identity(std::size_t n);
    static MatZ from_rows(const std::vector<VecZ>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    VecZ row(std::size_t i) const;
    void set_row(std::size_t i, const VecZ& v);

    MatZ transpose() const;
    bool operator==(const MatZ& o) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// --- vector helpers ---------------------------------------------------------

VecZ vz(std::initializer_list<long> v);
VecZ add(const VecZ& a, const VecZ& b);
VecZ sub(const VecZ& a, const VecZ& b);
VecZ neg(const VecZ& a);
VecZ scale(const Int& s, const VecZ& a);
Int dot(const VecZ& a, const VecZ& b);
Rat dotq(const VecQ& a, const VecQ& b);
bool is_zero(const VecZ& a);
Int norm2(const VecZ& a);
// Divides by the gcd of the entries; gcd(0-vector) leaves it unchanged.
VecZ primitive(const VecZ& a);
VecQ to_q(const VecZ& a);
std::string to_string(const VecZ& a);

MatZ mul(const MatZ& A, const MatZ& B);
VecZ mul(const MatZ& A, const VecZ& x);
VecZ mul_row(const VecZ& x, const MatZ& A);  // x^T A

// --- core linear algebra ----------------------------------------------------

// Exact determinant of a square matrix (fraction-free Gaussian elimination).
Int det(const MatZ& A);

// Rank over Q.
std::size_t rank(const MatZ& A);

// Row-style Hermite normal form: H = U*M with U unimodular.  H is in row
// echelon form with positive pivots and the entries above each pivot reduced
// modulo the pivot.  Works for any rank; zero rows of H come last.
struct HnfResult {
    MatZ H;
    MatZ U;
    std::size_t rank;
};
HnfResult hnf_any(const MatZ& M);

// Spec-facing HNF: requires full row rank, returns (H, U).
std::pair<MatZ, MatZ> hnf(const MatZ& M);

// Lattice basis of { x in Z^n : M x = 0 } for M with n columns.
// Rows of the result form a basis of the kernel lattice.
MatZ kernel_lattice(const MatZ& M);

// One integer solution of M x = d, or nullopt when none exists.
std::optional<VecZ> solve_integer(const MatZ& M, const VecZ& d);

// Unique rational solution of a nonsingular square system A x = b.
VecQ solve_rational(const MatZ& A, const VecQ& b);

// Inverse of a unimodular matrix (|det| = 1), exact and integral.
MatZ inverse_unimodular(const MatZ& A);

// LLL with Lovasz parameter delta (default 3/4); rows of B must be
// linearly independent.
MatZ lll_reduce(const MatZ& B, const Rat& delta = Rat(3, 4));

// Nonzero lattice vector of minimum Euclidean norm.  Sign is fixed so
// the first nonzero coordinate is positive; remaining ties break to the
// colexicographically smallest vector (last coordinate compared first),
// so e.g. the identity lattice yields (1,0,...,0).  LLL followed by
// exhaustive enumeration in the reduced box.
VecZ shortest_vector(const MatZ& B);

// Same, but minimizing the sup norm (ties by Euclidean norm, then as
// above); this is the variant whose coordinates all stay strictly below
// the lattice determinant, which cone decompositions rely on.
VecZ shortest_vector_linf(const MatZ& B);

// Largest absolute value of any d x d minor.
Int max_subdeterminant(const MatZ& A, std::size_t d);

}  // namespace latkit
