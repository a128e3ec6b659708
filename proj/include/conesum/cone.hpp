#pragma once

#include <vector>

#include "conesum/lattice.hpp"
#include "conesum/linalg.hpp"

namespace conesum {

/// Rational polyhedral cone with vertex 0, stored by its edge generators
/// (rows: primitive integer vectors, lexicographically sorted).  For a
/// non-pointed cone the generator list is kept primitive/deduplicated but
/// carries no extremality meaning.
class Cone {
public:
  Cone() = default;
  Cone(int dim, const MatQ& raw_generators);

  static Cone from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int dim() const { return dim_; }
  int nrays() const { return static_cast<int>(gens_.rows()); }
  const MatQ& generators() const { return gens_; }
  VecQ ray(int i) const { return gens_.row(i).transpose(); }

  bool is_pointed() const { return pointed_; }
  bool is_simplicial() const;
  bool is_full_dim() const;
  bool contains(const VecQ& x) const;

  /// Sum of the generators; interior point when full-dimensional.
  VecQ interior_point() const;

  bool operator==(const Cone& o) const {
    return dim_ == o.dim_ && gens_ == o.gens_;
  }

private:
  int dim_ = 0;
  MatQ gens_{0, 0};
  bool pointed_ = true;
};

/// Formal integer combination of simplicial cones, interpreted modulo
/// indicator functions of cones containing lines.
struct SignedConeSum {
  std::vector<std::pair<int, Cone>> terms;
};

/// x in cone(generator rows)?  Exact, via Caratheodory: some independent
/// subset of generators carries x with nonnegative coordinates.
bool cone_contains(const MatQ& generators, const VecQ& x);

/// Inward primitive facet normals of a full-dimensional pointed cone,
/// lexicographically sorted.
std::vector<VecQ> facet_normals(const Cone& c);

/// Polar cone {xi : <xi, x> <= 0 for all x in c}; requires full-dimensional
/// input so the result is pointed.  Involutive: dual_cone(dual_cone(c)) = c.
Cone dual_cone(const Cone& c);

// ---- exact half-open machinery ----
//
// Decompositions are carried exactly as half-open simplicial cones whose
// strict facets are determined canonically by one generic reference point
// per run (a rational base point plus an infinitesimal lexicographic
// perturbation, so no hyperplane ever contains it).  Closing the strict
// facets at the end flips generators and is valid modulo cones with lines.

struct HalfOpenCone {
  MatQ gens;                 // rows, simplicial full-dimensional
  std::vector<bool> strict;  // per generator: coordinate required > 0
};

struct HalfOpenDecomp {
  int dim = 0;
  VecQ base;  // reference point before perturbation
  std::vector<std::pair<int, HalfOpenCone>> terms;
};

/// Strict flags of the canonical half-open version of cone(gens) w.r.t. the
/// perturbed reference point.
std::vector<bool> canonical_strict_flags(const MatQ& gens, const VecQ& base);

/// Exact membership in a half-open simplicial cone.
bool half_open_contains(const HalfOpenCone& h, const VecQ& x);

/// Signed ray surgery: writes w in the generator basis and replaces each
/// generator with nonzero coordinate, yielding [cone(gens)] = sum of
/// sign(alpha_i) [cone_i] almost everywhere.  The sign of w is normalized
/// so the first nonzero coordinate is positive.
std::vector<std::pair<int, MatQ>> ray_surgery(const MatQ& gens, const VecQ& w);

/// Exact partition of a full-dimensional pointed cone into half-open
/// simplicial cones (lexicographic pulling triangulation, reference point
/// inside the cone).
HalfOpenDecomp half_open_triangulate(const Cone& c);

/// Replaces one generator of every term by a vector parallel to the target
/// subspace until dim(L) generators of each term span L; exact at every
/// step.
HalfOpenDecomp make_parallel_to(const HalfOpenDecomp& d, const RationalSubspace& l);

/// Closes all strict facets by generator flips; valid modulo cones with
/// lines.
SignedConeSum close_mod_lines(const HalfOpenDecomp& d);

// ---- the three public decompositions ----

/// Triangulation without new rays, modulo cones with lines; errors on a
/// cone containing a line.  Lower-dimensional cones are triangulated inside
/// their span via the span lattice.
SignedConeSum triangulate(const Cone& c);

/// Signed decomposition of a simplicial full-dimensional cone into
/// unimodular full-dimensional cones, modulo cones with lines (recursive
/// index reduction on the dual side; no lower-dimensional bookkeeping).
SignedConeSum barvinok_decompose(const Cone& c);

/// Signed decomposition, modulo cones with lines, of a full-dimensional
/// cone into simplicial full-dimensional cones each having dim(L)
/// generators spanning L.
SignedConeSum decompose_parallel_to(const Cone& c, const RationalSubspace& l);

/// For each term, the indices of generators lying in L (must have exactly
/// dim(L) of them, spanning L; checked).
std::vector<int> generators_in_subspace(const Cone& c, const RationalSubspace& l);

/// Spans lin(f) of all faces f of codimension <= k, closed under subspace
/// sum, deduplicated, sorted by canonical key.
std::vector<RationalSubspace> face_subspaces(const Cone& c, int k);

}  // namespace conesum
