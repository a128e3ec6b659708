#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace conesum {

/// Exact arbitrary-precision rational scalar.
///
/// Thin eager wrapper around GMP's mpq_class: every operator returns a
/// finished Rat, never a GMP expression template, so the type composes
/// with Eigen's own expression machinery.  Values are always canonical
/// (reduced, positive denominator).
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}

  /// Parses "p/q" or "n".
  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    q.canonicalize();
    return Rat(q);
  }

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  /// Largest integer <= *this.
  Rat floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(q);
  }

  /// Fractional part {x} in [0,1): x - floor(x).
  Rat frac() const { return *this - floor(); }

  Rat pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rat: 0^negative");
      return Rat(1) / pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(n, d);
    r.canonicalize();
    return Rat(r);
  }

  double to_double() const { return v_.get_d(); }

  std::string str() const { return v_.get_str(); }

  friend Rat abs(const Rat& r) { return Rat(mpq_class(::abs(r.v_))); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_;
  }

private:
  mpq_class v_;
};

/// gcd of two integer-valued rationals, as a nonnegative integer Rat.
inline Rat gcd_int(const Rat& a, const Rat& b) {
  if (!a.is_integer() || !b.is_integer())
    throw std::invalid_argument("gcd_int: arguments must be integers");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  return Rat(g);
}

/// Floor division a div b of integer-valued rationals (b != 0).
inline Rat fdiv_int(const Rat& a, const Rat& b) {
  if (!a.is_integer() || !b.is_integer() || b.is_zero())
    throw std::invalid_argument("fdiv_int: bad arguments");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  return Rat(q);
}

inline Rat factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

}  // namespace conesum
