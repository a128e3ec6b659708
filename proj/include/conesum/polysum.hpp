#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "conesum/genfun.hpp"

namespace conesum {

/// One inequality <a, x> <= b with an integer normal.
struct Halfspace {
  VecQ a;
  Rat b;
};

/// Bounded full-dimensional rational polytope given by inequalities;
/// vertices are enumerated on construction (d-subsets of constraints).
class Polytope {
public:
  Polytope(int dim, std::vector<Halfspace> inequalities);

  int dim() const { return dim_; }
  const std::vector<Halfspace>& inequalities() const { return ineqs_; }
  const std::vector<VecQ>& vertices() const { return vertices_; }

  bool contains(const VecQ& x) const;

  /// Axis-parallel product of segments [lo_i, hi_i].
  static Polytope box(const std::vector<std::pair<Rat, Rat>>& bounds);
  /// conv{shift, shift + scale e_1, ..., shift + scale e_d}.
  static Polytope simplex(int dim, const Rat& scale, const VecQ& shift);

private:
  int dim_ = 0;
  std::vector<Halfspace> ineqs_;
  std::vector<VecQ> vertices_;
};

/// All vertices with their tangent cones (primitive edge directions).
std::vector<std::pair<VecQ, Cone>> vertices_and_cones(const Polytope& p);

/// Polynomial weight as a finitely supported exponent-to-coefficient map.
struct Weight {
  int dim = 0;
  std::map<std::vector<int>, Rat> monomials;

  static Weight one(int dim);
  static Weight monomial(int dim, const std::vector<int>& alpha, const Rat& c);
  int degree() const;
  Rat eval(const VecQ& x) const;
};

/// Exact decomposition x^alpha = sum_p c_p <p, x>^{|alpha|} / |alpha|! over
/// integer covectors 0 <= p <= alpha (finite differences); |alpha| >= 1.
std::vector<std::pair<Rat, VecQ>> monomial_to_linear_powers(const std::vector<int>& alpha);

/// Components m = 0..order of S^L(p) by Brion's theorem: the vertex germs
/// sum to a function holomorphic at 0, so every negative component cancels
/// (checked) and the rest clear to polynomials.
std::map<int, SeriesQ> brion_SL_components(const Polytope& p, const RationalSubspace& l,
                                           int order);

/// Weighted intermediate sum S^L(p, h): slice p along y + L, integrate h on
/// every slice, add up -- computed from homogeneous components of the
/// Brion sum via the powers-of-linear-forms decomposition of h.
Rat weighted_sum(const Polytope& p, const RationalSubspace& l, const Weight& h);

/// The same quantity by brute force: enumerate projected lattice points,
/// slice, triangulate each slice, and integrate monomials over simplices
/// exactly; independent of the germ pipeline.
Rat oracle_intermediate_sum(const Polytope& p, const RationalSubspace& l, const Weight& h);

}  // namespace conesum
