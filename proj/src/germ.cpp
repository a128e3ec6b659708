#include "conesum/germ.hpp"

#include <stdexcept>

namespace conesum {

namespace detail {

bool vec_less(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (long i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

}  // namespace detail

std::pair<VecQ, Rat> canonical_direction(const VecQ& v) {
  if (is_zero(v)) throw std::invalid_argument("canonical_direction: zero form");
  // clear denominators, divide by content, normalize sign
  Rat lcm(1);
  for (long i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    Rat den(v(i).den());
    lcm = lcm * den / gcd_int(lcm, den);
  }
  VecQ w = v * lcm;
  Rat g(0);
  for (long i = 0; i < w.size(); ++i) g = gcd_int(g, w(i));
  int sign = 0;
  for (long i = 0; i < w.size() && sign == 0; ++i) sign = w(i).sign();
  Rat unit = Rat(sign) * g;
  VecQ dir = w / unit;
  return {dir, unit / lcm};  // v = (unit/lcm) * dir
}

SeriesQ exp_linear_series(const VecQ& w, int cap) {
  int n = static_cast<int>(w.size());
  SeriesQ form(n, cap);
  for (int i = 0; i < n; ++i) {
    if (w(i).is_zero()) continue;
    std::vector<int> e(n, 0);
    e[i] = 1;
    form.set(e, w(i));
  }
  SeriesQ acc = SeriesQ::constant(n, cap, Rat(1));
  SeriesQ pw = SeriesQ::constant(n, cap, Rat(1));
  for (int k = 1; k <= cap; ++k) {
    pw = pw * form;
    if (pw.is_zero()) break;
    acc = acc + pw.scale_rat(Rat(1) / factorial(k));
  }
  return acc;
}

std::optional<SeriesQ> divide_by_linear_form(const SeriesQ& p, const VecQ& v) {
  int d = p.nvars();
  if (v.size() != d) throw std::invalid_argument("divide_by_linear_form: arity");
  if (is_zero(v)) throw std::invalid_argument("divide_by_linear_form: zero form");
  if (p.is_zero()) return p;
  long pivot = -1;
  for (long i = 0; i < d; ++i)
    if (!v(i).is_zero()) { pivot = i; break; }
  // coordinates y = B xi with first row v, unit rows elsewhere
  MatQ b = MatQ::Zero(d, d);
  b.row(0) = v.transpose();
  long r = 1;
  for (long i = 0; i < d; ++i)
    if (i != pivot) b(r++, i) = Rat(1);
  MatQ binv = inverse(b);
  SeriesQ in_y = p.subst_linear(binv, d);
  SeriesQ shifted(d, in_y.cap());
  for (const auto& [e, s] : in_y.coeffs()) {
    if (e[0] == 0) return std::nullopt;  // remainder on the hyperplane
    auto e2 = e;
    e2[0] -= 1;
    shifted.set(e2, s);
  }
  return shifted.subst_linear(b, d).with_cap(std::max(p.cap() - 1, 0));
}

Rat eval_component(const HCompQ& h, const VecQ& xi) {
  Rat den(1);
  for (const auto& d : h.denoms) {
    Rat pairing = dot(xi, d);
    if (pairing.is_zero())
      throw std::domain_error("eval_component: xi on a singular hyperplane");
    den *= pairing;
  }
  return h.num.eval(xi) / den;
}

HCompQ clear_to_denominator(const HCompQ& h, const std::vector<VecQ>& targets) {
  std::vector<VecQ> tgt;
  for (const auto& t : targets) tgt.push_back(canonical_direction(t).first);
  std::sort(tgt.begin(), tgt.end(), detail::vec_less);
  std::vector<VecQ> remaining = tgt;
  SeriesQ num = h.num;
  for (const auto& d : h.denoms) {
    bool covered = false;
    for (auto it = remaining.begin(); it != remaining.end(); ++it)
      if (*it == d) { remaining.erase(it); covered = true; break; }
    if (covered) continue;
    auto q = divide_by_linear_form(num, d);
    if (!q)
      throw std::domain_error("clear_to_denominator: component has a pole outside the target set");
    num = *q;
  }
  for (const auto& d : remaining) num = num.mul_linear(d);
  HCompQ r;
  r.dim = h.dim;
  r.degree = h.degree;
  r.denoms = tgt;
  r.num = num;
  return r;
}

Rat bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative");
  static std::vector<Rat> cache{Rat(1)};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Rat s(0);
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
    cache.push_back(-s / Rat(m + 1));
  }
  return cache[n];
}

std::vector<Rat> bernoulli_poly(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative");
  std::vector<Rat> c(n + 1, Rat(0));
  for (int k = 0; k <= n; ++k) c[k] = binomial(n, k) * bernoulli_number(n - k);
  return c;
}

Rat bernoulli_poly_eval(int n, const Rat& t) {
  auto c = bernoulli_poly(n);
  Rat acc(0);
  for (int k = n; k >= 0; --k) acc = acc * t + c[k];
  return acc;
}

GermQ inv_one_minus_exp(const VecQ& ell, int numerator_cap) {
  if (is_zero(ell)) throw std::invalid_argument("inv_one_minus_exp: zero form");
  int d = static_cast<int>(ell.size());
  SeriesQ form(d, numerator_cap);
  for (int i = 0; i < d; ++i) {
    if (ell(i).is_zero()) continue;
    std::vector<int> e(d, 0);
    e[i] = 1;
    form.set(e, ell(i));
  }
  // 1/(1-e^y) = -(1/y) * y/(e^y - 1) = -(1/y) sum B_n/n! y^n
  SeriesQ num(d, numerator_cap);
  SeriesQ pw = SeriesQ::constant(d, numerator_cap, Rat(1));
  num = num + pw.scale_rat(-bernoulli_number(0));
  for (int n = 1; n <= numerator_cap; ++n) {
    pw = pw * form;
    if (pw.is_zero()) break;
    num = num + pw.scale_rat(-bernoulli_number(n) / factorial(n));
  }
  GermQ g{d, {}};
  g.terms.push_back({{ell}, num});
  return g;
}

}  // namespace conesum
