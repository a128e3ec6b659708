#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conesum/linalg.hpp"

namespace conesum {

template <class S>
S scalar_from_rat(const Rat& r);

template <>
inline Rat scalar_from_rat<Rat>(const Rat& r) { return r; }

inline bool scalar_is_zero(const Rat& r) { return r.is_zero(); }

/// Multivariate power series truncated at a total degree cap, coefficients
/// in an exact ring S (rationals, or Laurent polynomials in a symbol).
/// Exponents beyond the cap are unknown, not zero; `cap` tracks how far the
/// coefficients are exact.
template <class S>
class Series {
public:
  using Expo = std::vector<int>;

  Series() : nvars_(0), cap_(0) {}
  Series(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

  static Series zero(int nvars, int cap) { return Series(nvars, cap); }

  static Series constant(int nvars, int cap, const S& value) {
    Series s(nvars, cap);
    s.set(Expo(nvars, 0), value);
    return s;
  }

  static Series monomial(int nvars, int cap, const Expo& e, const S& value) {
    Series s(nvars, cap);
    s.set(e, value);
    return s;
  }

  int nvars() const { return nvars_; }
  int cap() const { return cap_; }
  const std::map<Expo, S>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  bool operator==(const Series& o) const {
    return nvars_ == o.nvars_ && c_ == o.c_;
  }

  void set(const Expo& e, const S& value) {
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("Series: exponent arity");
    if (total(e) > cap_) return;
    if (scalar_is_zero(value)) c_.erase(e);
    else c_[e] = value;
  }

  void accumulate(const Expo& e, const S& value) {
    if (total(e) > cap_) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (!scalar_is_zero(value)) c_[e] = value;
    } else {
      it->second = it->second + value;
      if (scalar_is_zero(it->second)) c_.erase(it);
    }
  }

  /// Minimal total degree present; cap+1 when zero.
  int valuation() const {
    int v = cap_ + 1;
    for (const auto& [e, s] : c_) v = std::min(v, total(e));
    return v;
  }

  int max_degree() const {
    int v = 0;
    for (const auto& [e, s] : c_) v = std::max(v, total(e));
    return v;
  }

  Series operator+(const Series& o) const {
    check_same(o);
    Series r(nvars_, std::min(cap_, o.cap_));
    for (const auto& [e, s] : c_) r.accumulate(e, s);
    for (const auto& [e, s] : o.c_) r.accumulate(e, s);
    return r;
  }

  Series operator-() const {
    Series r(nvars_, cap_);
    for (const auto& [e, s] : c_) r.c_[e] = S() - s;
    return r;
  }

  Series operator-(const Series& o) const { return *this + (-o); }

  Series scale(const S& k) const {
    Series r(nvars_, cap_);
    if (scalar_is_zero(k)) return r;
    for (const auto& [e, s] : c_) {
      S v = s * k;
      if (!scalar_is_zero(v)) r.c_[e] = v;
    }
    return r;
  }

  Series scale_rat(const Rat& k) const { return scale(scalar_from_rat<S>(k)); }

  /// Product, exact through min(cap + val(o), o.cap + val).
  Series operator*(const Series& o) const {
    check_same(o);
    int rcap = std::min(cap_ + o.valuation(), o.cap_ + valuation());
    Series r(nvars_, rcap);
    for (const auto& [ea, sa] : c_)
      for (const auto& [eb, sb] : o.c_) {
        if (total(ea) + total(eb) > rcap) continue;
        Expo e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        r.accumulate(e, sa * sb);
      }
    return r;
  }

  Series pow(int k) const {
    if (k < 0) throw std::invalid_argument("Series::pow: negative");
    Series r = constant(nvars_, cap_, scalar_from_rat<S>(Rat(1)));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Terms of total degree exactly k (errors beyond the cap).
  Series homogeneous_part(int k) const {
    if (k > cap_)
      throw std::invalid_argument("Series: homogeneous part beyond cap");
    Series r(nvars_, std::max(k, 0));
    for (const auto& [e, s] : c_)
      if (total(e) == k) r.c_[e] = s;
    return r;
  }

  /// Multiply by the linear form <xi, v>; cap grows by one.
  Series mul_linear(const VecQ& v) const {
    if (v.size() != nvars_) throw std::invalid_argument("mul_linear: arity");
    Series r(nvars_, cap_ + 1);
    for (const auto& [e, s] : c_)
      for (int i = 0; i < nvars_; ++i) {
        if (v(i).is_zero()) continue;
        Expo e2 = e;
        e2[i] += 1;
        r.accumulate(e2, s * scalar_from_rat<S>(v(i)));
      }
    return r;
  }

  S eval(const VecQ& xi) const {
    if (xi.size() != nvars_) throw std::invalid_argument("Series::eval: arity");
    S acc{};
    for (const auto& [e, s] : c_) {
      Rat m(1);
      for (int i = 0; i < nvars_; ++i) m *= xi(i).pow(e[i]);
      acc = acc + s * scalar_from_rat<S>(m);
    }
    return acc;
  }

  /// Substitute x_i := c0_i + sum_k A(i,k) z_k; result lives in `newvars`
  /// variables with the same cap.
  Series subst_affine(const MatQ& a, const VecQ& c0, int newvars) const {
    if (a.rows() != nvars_ || a.cols() != newvars || c0.size() != nvars_)
      throw std::invalid_argument("subst_affine: shape mismatch");
    // degree-<=1 images of the variables
    std::vector<Series> var(nvars_, Series(newvars, cap_));
    for (int i = 0; i < nvars_; ++i) {
      Series w(newvars, cap_);
      if (!c0(i).is_zero())
        w.set(Expo(newvars, 0), scalar_from_rat<S>(c0(i)));
      for (int k = 0; k < newvars; ++k)
        if (!a(i, k).is_zero()) {
          Expo e(newvars, 0);
          e[k] = 1;
          w.set(e, scalar_from_rat<S>(a(i, k)));
        }
      var[i] = w;
    }
    Series r(newvars, cap_);
    for (const auto& [e, s] : c_) {
      Series term = Series::constant(newvars, cap_, s);
      for (int i = 0; i < nvars_; ++i)
        for (int p = 0; p < e[i]; ++p) term = term * var[i];
      r = r + term;
    }
    return r;
  }

  Series subst_linear(const MatQ& a, int newvars) const {
    return subst_affine(a, VecQ(VecQ::Zero(nvars_)), newvars);
  }

  Series with_cap(int cap) const {
    Series r(nvars_, cap);
    for (const auto& [e, s] : c_)
      if (total(e) <= cap) r.c_[e] = s;
    return r;
  }

  static int total(const Expo& e) {
    int t = 0;
    for (int x : e) t += x;
    return t;
  }

private:
  void check_same(const Series& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Series: arity mismatch");
  }

  int nvars_;
  int cap_;
  std::map<Expo, S> c_;
};

using SeriesQ = Series<Rat>;

/// exp(<xi, w>) truncated at total degree cap.
SeriesQ exp_linear_series(const VecQ& w, int cap);

/// Exact division of a polynomial by the linear form <xi, v>; nullopt when
/// a remainder is left.
std::optional<SeriesQ> divide_by_linear_form(const SeriesQ& p, const VecQ& v);

}  // namespace conesum
