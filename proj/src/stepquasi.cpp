#include "conesum/stepquasi.hpp"

#include <algorithm>
#include <stdexcept>

namespace conesum {

Rat frac(const VecQ& eta, const VecQ& s) { return dot(eta, s).frac(); }

StepMonomial StepMonomial::times(const VecQ& eta, int power) const {
  if (power < 0) throw std::invalid_argument("StepMonomial: negative power");
  StepMonomial r = *this;
  if (power == 0) return r;
  for (auto& [dir, p] : r.factors_)
    if (dir == eta) {
      p += power;
      return r;
    }
  r.factors_.push_back({eta, power});
  std::sort(r.factors_.begin(), r.factors_.end(),
            [](const auto& a, const auto& b) { return detail::vec_less(a.first, b.first); });
  return r;
}

int StepMonomial::degree() const {
  int d = 0;
  for (const auto& [dir, p] : factors_) d += p;
  return d;
}

Rat StepMonomial::eval(const VecQ& s) const {
  Rat acc(1);
  for (const auto& [dir, p] : factors_) acc *= frac(dir, s).pow(p);
  return acc;
}

bool StepMonomial::operator==(const StepMonomial& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i)
    if (!(factors_[i].first == o.factors_[i].first) ||
        factors_[i].second != o.factors_[i].second)
      return false;
  return true;
}

bool StepMonomial::operator<(const StepMonomial& o) const {
  if (factors_.size() != o.factors_.size())
    return factors_.size() < o.factors_.size();
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (detail::vec_less(factors_[i].first, o.factors_[i].first)) return true;
    if (detail::vec_less(o.factors_[i].first, factors_[i].first)) return false;
    if (factors_[i].second != o.factors_[i].second)
      return factors_[i].second < o.factors_[i].second;
  }
  return false;
}

QuasiComponent QuasiComponent::zero(int dim, int degree) {
  return QuasiComponent{dim, degree, {}};
}

HCompQ QuasiComponent::eval(const VecQ& s) const {
  HCompQ acc = HCompQ::zero(dim, degree);
  for (const auto& e : entries) {
    Rat scalar = e.step.eval(s);
    for (size_t i = 0; i < e.s_power.size(); ++i)
      scalar *= s(static_cast<long>(i)).pow(e.s_power[i]);
    if (scalar.is_zero()) continue;
    acc = hc_add(acc, hc_scale(e.comp, scalar));
  }
  return acc;
}

void QuasiComponent::normalize() {
  std::vector<QuasiEntry> merged;
  for (const auto& e : entries) {
    if (e.comp.is_zero()) continue;
    bool hit = false;
    for (auto& m : merged)
      if (m.step == e.step && m.s_power == e.s_power) {
        m.comp = hc_add(m.comp, e.comp);
        hit = true;
        break;
      }
    if (!hit) merged.push_back(e);
  }
  std::vector<QuasiEntry> out;
  for (auto& m : merged)
    if (!m.comp.is_zero()) out.push_back(std::move(m));
  entries = std::move(out);
}

int QuasiComponent::polynomial_degree() const {
  int d = 0;
  for (const auto& e : entries) {
    int b = 0;
    for (int p : e.s_power) b += p;
    d = std::max(d, b);
  }
  return d;
}

int QuasiComponent::step_degree() const {
  int d = 0;
  for (const auto& e : entries) d = std::max(d, e.step.degree());
  return d;
}

int QuasiComponent::local_degree() const {
  int d = 0;
  for (const auto& e : entries) {
    int b = 0;
    for (int p : e.s_power) b += p;
    d = std::max(d, b + e.step.degree());
  }
  return d;
}

namespace {

Rat wall_distance(const VecQ& eta, const VecQ& s0, const VecQ& v) {
  Rat a = dot(eta, s0);
  Rat b = dot(eta, v);
  // first t > 0 with a + t b integral
  if (b > Rat(0)) return (Rat(1) - a.frac()) / b;
  Rat fa = a.frac();
  return (fa.is_zero() ? Rat(1) : fa) / (-b);
}

}  // namespace

Rat alcove_probe(const PsiSet& psi, const VecQ& s0, const VecQ& v) {
  Rat t0(0);
  bool have = false;
  for (const auto& eta : psi) {
    if (dot(eta, v).is_zero())
      throw std::invalid_argument("alcove_probe: direction lies in a wall of Psi");
    Rat t = wall_distance(eta, s0, v);
    if (!have || t < t0) { t0 = t; have = true; }
  }
  return have ? t0 : Rat(1);
}

Rat alcove_probe_relaxed(const PsiSet& psi, const VecQ& s0, const VecQ& v) {
  Rat t0(0);
  bool have = false;
  for (const auto& eta : psi) {
    if (dot(eta, v).is_zero()) continue;
    Rat t = wall_distance(eta, s0, v);
    if (!have || t < t0) { t0 = t; have = true; }
  }
  return have ? t0 : Rat(1);
}

}  // namespace conesum
