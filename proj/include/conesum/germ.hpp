#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "conesum/laurent.hpp"
#include "conesum/series.hpp"

namespace conesum {

/// Canonical representative of a denominator direction: primitive integer
/// vector with positive first nonzero entry, plus the rational factor such
/// that v = scale * canonical.
std::pair<VecQ, Rat> canonical_direction(const VecQ& v);

namespace detail {
bool vec_less(const VecQ& a, const VecQ& b);
}

/// One summand  num(xi) / prod_j <xi, w_j>  of a meromorphic germ.
template <class S>
struct GermTerm {
  std::vector<VecQ> denoms;
  Series<S> num;

  /// Largest homogeneous degree this term represents exactly.
  int order() const { return num.cap() - static_cast<int>(denoms.size()); }
};

/// Finite sum of quotients of truncated series by products of linear forms;
/// a germ of a meromorphic function near xi = 0 with hyperplane
/// singularities.
template <class S>
struct Germ {
  int dim = 0;
  std::vector<GermTerm<S>> terms;

  static Germ zero(int dim) { return Germ{dim, {}}; }

  static Germ one(int dim, int cap) {
    Germ g{dim, {}};
    g.terms.push_back({{}, Series<S>::constant(dim, cap, scalar_from_rat<S>(Rat(1)))});
    return g;
  }

  /// Exact through this homogeneous degree (INT_MAX/2 when zero).
  int order() const {
    int o = 1 << 28;
    for (const auto& t : terms) o = std::min(o, t.order());
    return o;
  }

  Germ operator+(const Germ& o) const {
    if (dim != o.dim) throw std::invalid_argument("Germ: dim mismatch");
    Germ r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
  }

  Germ scale_rat(const Rat& k) const {
    Germ r{dim, {}};
    if (k.is_zero()) return r;
    for (const auto& t : terms) r.terms.push_back({t.denoms, t.num.scale_rat(k)});
    return r;
  }

  Germ operator*(const Germ& o) const {
    if (dim != o.dim) throw std::invalid_argument("Germ: dim mismatch");
    Germ r{dim, {}};
    for (const auto& a : terms)
      for (const auto& b : o.terms) {
        GermTerm<S> t;
        t.denoms = a.denoms;
        t.denoms.insert(t.denoms.end(), b.denoms.begin(), b.denoms.end());
        t.num = a.num * b.num;
        r.terms.push_back(std::move(t));
      }
    return r;
  }

  Germ mul_series(const Series<S>& s) const {
    Germ r{dim, {}};
    for (const auto& t : terms) r.terms.push_back({t.denoms, t.num * s});
    return r;
  }
};

using GermQ = Germ<Rat>;

/// Homogeneous degree-m part of a germ: a single homogeneous polynomial of
/// degree m + N over a canonical product of N primitive linear forms.
template <class S>
struct HomogeneousComponent {
  int dim = 0;
  int degree = 0;
  std::vector<VecQ> denoms;  // canonical primitive directions, sorted
  Series<S> num;             // homogeneous of degree m + N, or zero

  static HomogeneousComponent zero(int dim, int degree) {
    return {dim, degree, {}, Series<S>::zero(dim, std::max(degree, 0))};
  }

  bool is_zero() const { return num.is_zero(); }
};

using HCompQ = HomogeneousComponent<Rat>;
using HCompT = HomogeneousComponent<LaurentPoly>;
using GermT = Germ<LaurentPoly>;

/// Extracts the homogeneous component of degree m, with every term brought
/// over the common canonical denominator.
template <class S>
HomogeneousComponent<S> component(const Germ<S>& g, int m);

template <class S>
HomogeneousComponent<S> hc_add(const HomogeneousComponent<S>& a,
                               const HomogeneousComponent<S>& b);

template <class S>
HomogeneousComponent<S> hc_scale(const HomogeneousComponent<S>& h, const S& k);

/// Equality as rational functions (cross-multiplication; no canonical form
/// of the denominators is assumed shared).
template <class S>
bool hc_equal(const HomogeneousComponent<S>& a, const HomogeneousComponent<S>& b);

/// Exact value num(xi) / prod <xi, v>; errors on a singular hyperplane.
Rat eval_component(const HCompQ& h, const VecQ& xi);

/// Re-expresses h over exactly the target denominator forms, dividing out
/// every extra linear factor exactly.  Errors when a remainder is left: the
/// component does not lie in (1/prod targets) P.
HCompQ clear_to_denominator(const HCompQ& h, const std::vector<VecQ>& targets);

// ---- Bernoulli machinery ----

/// B_n, the Bernoulli number with B_1 = -1/2 (generating function
/// e^{tz} z/(e^z - 1) = sum B_n(t)/n! z^n at t = 0).
Rat bernoulli_number(int n);

/// Coefficients of B_n(t), index k = coefficient of t^k.
std::vector<Rat> bernoulli_poly(int n);

Rat bernoulli_poly_eval(int n, const Rat& t);

/// Germ of 1/(1 - e^{<xi,ell>}): one denominator factor ell, numerator
/// -sum_n B_n/n! <xi,ell>^n truncated at numerator cap.
GermQ inv_one_minus_exp(const VecQ& ell, int numerator_cap);

// ---- implementation of templates ----

template <class S>
HomogeneousComponent<S> component(const Germ<S>& g, int m) {
  if (m > g.order())
    throw std::invalid_argument("component: degree beyond germ order");
  HomogeneousComponent<S> acc = HomogeneousComponent<S>::zero(g.dim, m);
  for (const auto& t : g.terms) {
    int n = static_cast<int>(t.denoms.size());
    if (m + n < 0) continue;
    Series<S> part = t.num.homogeneous_part(m + n);
    if (part.is_zero()) continue;
    HomogeneousComponent<S> h;
    h.dim = g.dim;
    h.degree = m;
    Rat scale(1);
    for (const auto& d : t.denoms) {
      auto [dir, k] = canonical_direction(d);
      h.denoms.push_back(dir);
      scale *= k;
    }
    std::sort(h.denoms.begin(), h.denoms.end(), detail::vec_less);
    h.num = part.scale_rat(Rat(1) / scale);
    acc = hc_add(acc, h);
  }
  return acc;
}

template <class S>
HomogeneousComponent<S> hc_add(const HomogeneousComponent<S>& a,
                               const HomogeneousComponent<S>& b) {
  if (a.dim != b.dim || a.degree != b.degree)
    throw std::invalid_argument("hc_add: mismatched components");
  if (a.is_zero() && a.denoms.empty()) return b;
  if (b.is_zero() && b.denoms.empty()) return a;
  // multiset union with per-direction max multiplicity
  std::vector<VecQ> merged;
  {
    auto counted = [](const std::vector<VecQ>& v) {
      std::vector<std::pair<VecQ, int>> out;
      for (const auto& d : v) {
        bool hit = false;
        for (auto& [dir, n] : out)
          if (dir == d) { ++n; hit = true; break; }
        if (!hit) out.push_back({d, 1});
      }
      return out;
    };
    auto ca = counted(a.denoms), cb = counted(b.denoms);
    for (const auto& [dir, na] : ca) {
      int nb = 0;
      for (const auto& [dirb, n] : cb)
        if (dirb == dir) nb = n;
      for (int i = 0; i < std::max(na, nb); ++i) merged.push_back(dir);
    }
    for (const auto& [dir, nb] : cb) {
      bool present = false;
      for (const auto& [dira, na] : ca)
        if (dira == dir) present = true;
      if (!present)
        for (int i = 0; i < nb; ++i) merged.push_back(dir);
    }
  }
  std::sort(merged.begin(), merged.end(), detail::vec_less);
  auto lift = [&merged](const HomogeneousComponent<S>& h) {
    Series<S> num = h.num;
    std::vector<VecQ> need = merged;
    for (const auto& d : h.denoms) {
      for (auto it = need.begin(); it != need.end(); ++it)
        if (*it == d) { need.erase(it); break; }
    }
    for (const auto& d : need) num = num.mul_linear(d);
    return num;
  };
  HomogeneousComponent<S> r;
  r.dim = a.dim;
  r.degree = a.degree;
  r.denoms = merged;
  r.num = lift(a) + lift(b);
  return r;
}

template <class S>
HomogeneousComponent<S> hc_scale(const HomogeneousComponent<S>& h, const S& k) {
  HomogeneousComponent<S> r = h;
  r.num = r.num.scale(k);
  return r;
}

template <class S>
bool hc_equal(const HomogeneousComponent<S>& a, const HomogeneousComponent<S>& b) {
  if (a.dim != b.dim || a.degree != b.degree) return false;
  Series<S> left = a.num;
  for (const auto& d : b.denoms) left = left.mul_linear(d);
  Series<S> right = b.num;
  for (const auto& d : a.denoms) right = right.mul_linear(d);
  return left == right;
}

}  // namespace conesum
