#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <optional>
#include <vector>

#include "conesum/rat.hpp"

namespace Eigen {
template <>
struct NumTraits<conesum::Rat> : GenericNumTraits<conesum::Rat> {
  typedef conesum::Rat Real;
  typedef conesum::Rat NonInteger;
  typedef conesum::Rat Nested;
  static inline Real epsilon() { return conesum::Rat(0); }
  static inline Real dummy_precision() { return conesum::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace conesum {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// ---- small builders (tests, CLI, JSON) ----

MatQ make_mat(std::initializer_list<std::initializer_list<long>> rows);
VecQ make_vec(std::initializer_list<long> entries);
VecQ make_vec_rat(std::initializer_list<Rat> entries);

bool is_integer(const MatQ& a);
bool is_integer(const VecQ& v);
bool is_zero(const VecQ& v);

/// <v, w> = sum v_i w_i; the pairing between V and V* used throughout.
Rat dot(const VecQ& a, const VecQ& b);

// ---- exact dense linear algebra (Eigen FullPivLU over Rat) ----

Rat det(const MatQ& a);
int rank(const MatQ& a);
MatQ inverse(const MatQ& a);

/// Solves A x = b exactly; nullopt if inconsistent.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

/// Columns span the kernel of A (may have 0 columns).
MatQ kernel(const MatQ& a);

// ---- integer normal forms ----

struct HnfResult {
  MatQ h;  // row Hermite normal form, U*A = H
  MatQ u;  // unimodular
};

/// Row Hermite normal form of an integer matrix: pivots positive, entries
/// above each pivot reduced into [0, pivot), zero rows at the bottom.
HnfResult hnf(const MatQ& a);

struct SnfResult {
  MatQ d;      // diagonal, U*A*W = D
  MatQ u;      // unimodular (rows)
  MatQ w;      // unimodular (columns)
  MatQ w_inv;  // integer inverse of w
  int rank = 0;
};

/// Diagonalization U*A*W = D over the integers with unimodular U, W.
/// Diagonal entries are nonzero for i < rank (no divisibility chain
/// normalization; callers here never need it).
SnfResult snf(const MatQ& a);

/// v / gcd(entries), sign preserved; error on the zero vector.
VecQ primitive(const VecQ& v);

/// Positive rescaling of a nonzero rational vector to a primitive integer
/// vector (direction preserved).
VecQ primitive_rational(const VecQ& v);

/// |det| of d independent lattice vectors (rows), w.r.t. the standard
/// lattice.  Errors on dependent input.
Rat cone_index(const MatQ& generators);

/// Sign of <g, q + eps e_1 + eps^2 e_2 + ...> for infinitesimal eps > 0:
/// the first nonzero of (<g,q>, g_1, ..., g_d).  Never 0 for g != 0.
int lex_sign(const VecQ& g, const VecQ& q);

}  // namespace conesum
