#pragma once

#include <map>
#include <vector>

#include "conesum/genfun.hpp"

namespace conesum {

/// Family of rational subspaces closed under sum, ordered by inclusion,
/// with a virtual bottom element adjoined for Moebius computations.
/// Elements are deduplicated by canonical basis key and sorted by
/// (dimension, key).
class SubspacePoset {
public:
  SubspacePoset() = default;
  explicit SubspacePoset(int ambient_dim) : ambient_dim_(ambient_dim) {}

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<RationalSubspace>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  bool contains_subspace(const RationalSubspace& l) const;
  bool is_sum_closed() const;

  friend SubspacePoset close_under_sum(const std::vector<RationalSubspace>& list,
                                       int ambient_dim);

private:
  int ambient_dim_ = 0;
  std::vector<RationalSubspace> elements_;
};

/// Minimal sum-closed family containing the given subspaces.
SubspacePoset close_under_sum(const std::vector<RationalSubspace>& list,
                              int ambient_dim);

/// rho values aligned with poset.elements().
struct PatchingFunction {
  std::vector<Rat> rho;
};

/// rho(L) = -mu(0-hat, L) via the Moebius recursion on the poset with a
/// bottom element adjoined.
PatchingFunction patching_function(const SubspacePoset& poset);

/// Same values from the normalization system
/// sum_{L subset L0} rho(L) = 1 for every L0; solved upward in dimension.
PatchingFunction patching_function_by_normalization(const SubspacePoset& poset);

/// Closed form for the family of faces of codimension <= k of a simplicial
/// d-cone: rho_{d,k}(L_I) = (-1)^{|I|-d+k} binom(|I|-1, d-k-1).
Rat simplicial_patching(int d, int k, int card_i);

/// Components of the patched generating function S^(family) (or M) as
/// rho-weighted sums of the per-subspace components.
std::map<int, HCompQ> patched_S_components(const Cone& c, const SubspacePoset& poset,
                                           const PatchingFunction& rho, const VecQ& s,
                                           int order);
std::map<int, HCompQ> patched_M_components(const Cone& c, const SubspacePoset& poset,
                                           const PatchingFunction& rho, const VecQ& s,
                                           int order);

struct ApproxCheck {
  bool admissible = false;       // family contains all face spans of codim <= k
  bool pass = false;             // difference vanishes in degrees -d .. -d+k
  bool next_degree_nonzero = false;  // S - S^family at degree -d+k+1
};

/// Exact check that S(s+c) and the patched sum share all homogeneous
/// components of degree <= -d+k; also reports whether the next degree
/// actually differs (negative control).
ApproxCheck approximation_check(const Cone& c, int k, const SubspacePoset& family,
                                const VecQ& s, int order);

struct GoodGammaCheck {
  bool admissible = false;   // gamma outside every L-perp of the family
  bool pass = false;         // components of degree <= -d+k vanish in Q[T,1/T]
  int lowest_nonzero = 0;    // first degree with a nonzero component (<= order)
  bool found_nonzero = false;
};

/// I(c)(xi + T gamma) lies in degrees >= -d+k+1 whenever gamma avoids every
/// L-perp of an admissible family.
GoodGammaCheck good_gamma_check(const Cone& c, int k, const SubspacePoset& family,
                                const VecQ& gamma, int order);

/// Exact germ identity <xi,v> I(c)(xi) = sum over facets q of
/// <nu_q, v> I(q)(xi), with primitive outer normals nu_q and facet
/// integrals in the facet's own lattice.
bool facet_formula_check(const Cone& c, const VecQ& v, int order);

}  // namespace conesum
