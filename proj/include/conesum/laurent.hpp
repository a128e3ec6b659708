#pragma once

#include <complex>
#include <map>
#include <ostream>

#include "conesum/rat.hpp"

namespace conesum {

/// Laurent polynomial in one formal symbol T with rational coefficients.
/// Coefficient ring for germs of I(c)(xi + T*gamma): inverting T*c + <xi,v>
/// only ever needs negative powers of T, never division by polynomials.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rat& constant) {
    if (!constant.is_zero()) c_[0] = constant;
  }
  static LaurentPoly monomial(long power, const Rat& coeff) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.c_[power] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<long, Rat>& coeffs() const { return c_; }

  /// Lowest power of T present (0 for the zero polynomial).
  long min_power() const { return c_.empty() ? 0 : c_.begin()->first; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, v] : o.c_) {
      Rat s = (r.c_.count(k) ? r.c_[k] : Rat(0)) + v;
      if (s.is_zero()) r.c_.erase(k);
      else r.c_[k] = s;
    }
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [k, v] : c_) r.c_[k] = -v;
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ka, va] : c_)
      for (const auto& [kb, vb] : o.c_) {
        Rat s = (r.c_.count(ka + kb) ? r.c_[ka + kb] : Rat(0)) + va * vb;
        if (s.is_zero()) r.c_.erase(ka + kb);
        else r.c_[ka + kb] = s;
      }
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  std::complex<double> eval(std::complex<double> t) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, v] : c_) acc += v.to_double() * std::pow(t, static_cast<double>(k));
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.c_.empty()) return os << "0";
    bool first = true;
    for (const auto& [k, v] : p.c_) {
      if (!first) os << " + ";
      os << "(" << v << ")";
      if (k != 0) os << "*T^" << k;
      first = false;
    }
    return os;
  }

private:
  std::map<long, Rat> c_;
};

template <class S>
S scalar_from_rat(const Rat& r);

template <>
inline LaurentPoly scalar_from_rat<LaurentPoly>(const Rat& r) {
  return LaurentPoly(r);
}

inline bool scalar_is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace conesum
