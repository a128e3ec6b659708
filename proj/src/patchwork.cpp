#include "conesum/patchwork.hpp"

#include <algorithm>
#include <stdexcept>

namespace conesum {

namespace {

void sort_elements(std::vector<RationalSubspace>& v) {
  std::sort(v.begin(), v.end(), [](const RationalSubspace& a, const RationalSubspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
  });
}

}  // namespace

bool SubspacePoset::contains_subspace(const RationalSubspace& l) const {
  for (const auto& e : elements_)
    if (e.key() == l.key()) return true;
  return false;
}

bool SubspacePoset::is_sum_closed() const {
  for (size_t i = 0; i < elements_.size(); ++i)
    for (size_t j = i + 1; j < elements_.size(); ++j)
      if (!contains_subspace(elements_[i].sum(elements_[j]))) return false;
  return true;
}

SubspacePoset close_under_sum(const std::vector<RationalSubspace>& list,
                              int ambient_dim) {
  SubspacePoset p(ambient_dim);
  std::map<std::string, RationalSubspace> byKey;
  for (const auto& l : list) {
    if (l.ambient_dim() != ambient_dim)
      throw std::invalid_argument("close_under_sum: ambient dim mismatch");
    byKey.emplace(l.key(), l);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RationalSubspace> cur;
    for (const auto& [k, l] : byKey) cur.push_back(l);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        RationalSubspace s = cur[i].sum(cur[j]);
        if (!byKey.count(s.key())) {
          byKey.emplace(s.key(), s);
          grew = true;
        }
      }
  }
  for (const auto& [k, l] : byKey) p.elements_.push_back(l);
  sort_elements(p.elements_);
  return p;
}

PatchingFunction patching_function(const SubspacePoset& poset) {
  const auto& els = poset.elements();
  int n = poset.size();
  // mu(0-hat, L) = -sum_{M < L in the poset with bottom} mu(0-hat, M);
  // elements are sorted by dimension, so strict predecessors come first.
  std::vector<Rat> mu(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rat acc(1);  // mu(0-hat, 0-hat)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (els[static_cast<size_t>(i)].contains(els[static_cast<size_t>(j)]) &&
          !(els[static_cast<size_t>(j)].key() == els[static_cast<size_t>(i)].key()))
        acc += mu[static_cast<size_t>(j)];
    }
    mu[static_cast<size_t>(i)] = -acc;
  }
  PatchingFunction f;
  for (int i = 0; i < n; ++i) f.rho.push_back(-mu[static_cast<size_t>(i)]);
  return f;
}

PatchingFunction patching_function_by_normalization(const SubspacePoset& poset) {
  const auto& els = poset.elements();
  int n = poset.size();
  std::vector<Rat> rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (els[static_cast<size_t>(i)].contains(els[static_cast<size_t>(j)]) &&
          !(els[static_cast<size_t>(j)].key() == els[static_cast<size_t>(i)].key()))
        acc += rho[static_cast<size_t>(j)];
    }
    rho[static_cast<size_t>(i)] = Rat(1) - acc;
  }
  return PatchingFunction{rho};
}

Rat simplicial_patching(int d, int k, int card_i) {
  if (card_i < d - k || card_i > d)
    throw std::invalid_argument("simplicial_patching: |I| out of range");
  // binom(|I|-1, -1) is 1 for |I| = 0 and 0 otherwise (k = d only)
  Rat b = (d - k - 1 < 0) ? Rat(card_i == 0 ? 1 : 0)
                          : binomial(card_i - 1, d - k - 1);
  return ((card_i - d + k) % 2) ? -b : b;
}

namespace {

std::map<int, HCompQ> weighted_components(const Cone& c, const SubspacePoset& poset,
                                          const PatchingFunction& rho, const VecQ& s,
                                          int order, bool s_version) {
  if (static_cast<int>(rho.rho.size()) != poset.size())
    throw std::invalid_argument("patched components: rho size mismatch");
  int d = c.dim();
  std::map<int, HCompQ> acc;
  for (int m = -d; m <= order; ++m) acc[m] = HCompQ::zero(d, m);
  for (int i = 0; i < poset.size(); ++i) {
    if (rho.rho[static_cast<size_t>(i)].is_zero()) continue;
    const RationalSubspace& l = poset.elements()[static_cast<size_t>(i)];
    GermQ g = s_version ? intermediate_S_germ(c, l, s, order)
                        : intermediate_M_germ(c, l, s, order);
    for (int m = -d; m <= order; ++m)
      acc[m] = hc_add(acc[m], hc_scale(component(g, m), rho.rho[static_cast<size_t>(i)]));
  }
  return acc;
}

}  // namespace

std::map<int, HCompQ> patched_S_components(const Cone& c, const SubspacePoset& poset,
                                           const PatchingFunction& rho, const VecQ& s,
                                           int order) {
  return weighted_components(c, poset, rho, s, order, true);
}

std::map<int, HCompQ> patched_M_components(const Cone& c, const SubspacePoset& poset,
                                           const PatchingFunction& rho, const VecQ& s,
                                           int order) {
  return weighted_components(c, poset, rho, s, order, false);
}

ApproxCheck approximation_check(const Cone& c, int k, const SubspacePoset& family,
                                const VecQ& s, int order) {
  ApproxCheck res;
  int d = c.dim();
  if (k < 0 || k > d) throw std::invalid_argument("approximation_check: bad k");
  // admissibility: the family is sum-closed and contains lin(f) for every
  // face of codimension <= k
  res.admissible = family.is_sum_closed();
  for (const auto& l : face_subspaces(c, k))
    if (!family.contains_subspace(l)) res.admissible = false;
  if (!res.admissible) return res;

  int hi = std::max(order, -d + k + 1);
  PatchingFunction rho = patching_function(family);
  GermQ discrete = intermediate_S_germ(c, RationalSubspace::zero(d), s, hi);
  auto patched = patched_S_components(c, family, rho, s, hi);
  res.pass = true;
  for (int m = -d; m <= -d + k; ++m) {
    HCompQ diff = hc_add(component(discrete, m), hc_scale(patched.at(m), Rat(-1)));
    if (!diff.is_zero() && !hc_equal(diff, HCompQ::zero(d, m))) res.pass = false;
  }
  {
    int m = -d + k + 1;
    HCompQ diff = hc_add(component(discrete, m), hc_scale(patched.at(m), Rat(-1)));
    res.next_degree_nonzero = !(diff.is_zero() || hc_equal(diff, HCompQ::zero(d, m)));
  }
  return res;
}

GoodGammaCheck good_gamma_check(const Cone& c, int k, const SubspacePoset& family,
                                const VecQ& gamma, int order) {
  GoodGammaCheck res;
  int d = c.dim();
  res.admissible = true;
  for (const auto& l : family.elements()) {
    bool in_perp = true;
    for (long i = 0; i < l.lattice_basis().rows(); ++i)
      if (!dot(gamma, VecQ(l.lattice_basis().row(i).transpose())).is_zero())
        in_perp = false;
    if (in_perp) { res.admissible = false; break; }
  }
  if (!res.admissible) return res;
  GermT g = integral_T_germ(c, gamma, order);
  res.pass = true;
  for (int m = -d; m <= order; ++m) {
    HCompT h = component(g, m);
    bool zero = h.is_zero() || hc_equal(h, HCompT::zero(d, m));
    if (!zero && !res.found_nonzero) {
      res.found_nonzero = true;
      res.lowest_nonzero = m;
    }
    if (m <= -d + k && !zero) res.pass = false;
  }
  return res;
}

namespace {

/// Germ of I(q) for a cone q of any dimension, with respect to the lattice
/// of its linear span.
GermQ facet_integral_germ(const Cone& q, int order, int ambient_dim) {
  if (q.nrays() == 0) return GermQ::one(ambient_dim, order);  // I({0}) = 1
  SignedConeSum tri = triangulate(q);
  GermQ acc = GermQ::zero(ambient_dim);
  for (const auto& [sign, t] : tri.terms) {
    int fdim = t.nrays();
    RationalSubspace span = saturate(t.generators(), ambient_dim);
    MatQ coords(fdim, fdim);
    for (int i = 0; i < fdim; ++i)
      coords.row(i) = coords_in_basis(span.lattice_basis(), t.ray(i)).transpose();
    if (!is_integer(coords))
      throw std::logic_error("facet_integral_germ: generator outside span lattice");
    Rat coeff = Rat(sign) * ((fdim % 2) ? Rat(-1) : Rat(1)) * abs(det(coords));
    GermTerm<Rat> term;
    for (int i = 0; i < fdim; ++i) term.denoms.push_back(t.ray(i));
    term.num = SeriesQ::constant(ambient_dim, order + fdim, coeff);
    acc.terms.push_back(term);
  }
  return acc;
}

}  // namespace

bool facet_formula_check(const Cone& c, const VecQ& v, int order) {
  if (is_zero(v)) throw std::invalid_argument("facet_formula_check: degenerate v");
  if (!c.is_full_dim() || !c.is_pointed())
    throw std::invalid_argument("facet_formula_check: pointed full-dimensional cone required");
  int d = c.dim();
  GermQ lhs = integral_M_germ(c, order);
  // multiply by <xi, v> at numerator level
  GermQ lhs_v{d, {}};
  for (const auto& t : lhs.terms) lhs_v.terms.push_back({t.denoms, t.num.mul_linear(v)});

  GermQ rhs = GermQ::zero(d);
  for (const auto& inward : facet_normals(c)) {
    VecQ outer = -inward;
    std::vector<VecQ> rays;
    for (int i = 0; i < c.nrays(); ++i)
      if (dot(inward, c.ray(i)).is_zero()) rays.push_back(c.ray(i));
    MatQ m(static_cast<long>(rays.size()), d);
    for (size_t i = 0; i < rays.size(); ++i) m.row(static_cast<long>(i)) = rays[i].transpose();
    Cone facet(d, m);
    rhs = rhs + facet_integral_germ(facet, order, d).scale_rat(dot(outer, v));
  }
  for (int m = -d + 1; m <= order; ++m)
    if (!hc_equal(component(lhs_v, m), component(rhs, m))) return false;
  return true;
}

}  // namespace conesum
