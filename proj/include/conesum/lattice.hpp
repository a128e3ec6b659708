#pragma once

#include <string>
#include <vector>

#include "conesum/linalg.hpp"

namespace conesum {

/// Full-rank lattice given by basis rows in ambient coordinates.
struct Lattice {
  int dim = 0;
  MatQ basis;  // dim x dim integer, det != 0

  static Lattice standard(int dim);
};

/// Rational subspace L of V = R^d, carried by a saturated basis of the
/// intersection lattice L cap Z^d (basis rows, integer).
class RationalSubspace {
public:
  RationalSubspace() = default;
  RationalSubspace(int ambient_dim, MatQ saturated_basis);

  static RationalSubspace zero(int ambient_dim);
  static RationalSubspace full(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const MatQ& lattice_basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  bool contains(const VecQ& v) const;
  bool contains(const RationalSubspace& other) const;

  /// Sum of subspaces (saturated again).
  RationalSubspace sum(const RationalSubspace& other) const;

  /// Saturated basis of the annihilator lattice Z^d* cap L-perp (rows).
  MatQ perp_lattice_basis() const;

  /// Row-HNF of the saturated basis; canonical identity key.
  std::string key() const;
  bool operator==(const RationalSubspace& o) const { return key() == o.key(); }

private:
  int ambient_dim_ = 0;
  MatQ basis_;  // saturated, rows independent, integer
};

/// Lattice basis of span(generators) cap Z^d; generators are rows.
/// Empty input (0 rows) gives the zero subspace.
RationalSubspace saturate(const MatQ& generators, int ambient_dim);

/// Quotient data for V -> V/L with the projected lattice mapped onto the
/// standard lattice of the quotient coordinates.
struct Projection {
  MatQ map;       // (d-r) x d integer, kernel = L, map(Z^d) = Z^{d-r}
  MatQ lift;      // d x (d-r) integer, map * lift = identity
  Lattice quotient_lattice;  // standard lattice on the quotient
};

/// Errors if L = V ("quotient is zero-dimensional"); callers handle L = V
/// specially.
Projection projected_lattice(const RationalSubspace& l);

/// Coordinates of v in the rows of basis (exact); errors if v not in span.
VecQ coords_in_basis(const MatQ& basis, const VecQ& v);

}  // namespace conesum
