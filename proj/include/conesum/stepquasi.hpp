#pragma once

#include <map>
#include <vector>

#include "conesum/germ.hpp"

namespace conesum {

/// Exact fractional part {<eta, s>} in [0, 1).
Rat frac(const VecQ& eta, const VecQ& s);

/// Product of fractional-part generators s -> prod {<eta_i, s>}^{p_i}.
class StepMonomial {
public:
  StepMonomial() = default;

  StepMonomial times(const VecQ& eta, int power) const;
  int degree() const;
  Rat eval(const VecQ& s) const;
  const std::vector<std::pair<VecQ, int>>& factors() const { return factors_; }

  bool operator==(const StepMonomial& o) const;
  bool operator<(const StepMonomial& o) const;

private:
  std::vector<std::pair<VecQ, int>> factors_;  // sorted by direction
};

/// One summand of a quasi-polynomial-valued homogeneous component:
/// (step monomial in s) * (monomial s^beta) * (rational function of xi).
struct QuasiEntry {
  StepMonomial step;
  std::vector<int> s_power;  // beta, empty means constant 1
  HCompQ comp;
};

/// Homogeneous xi-degree-m component whose scalar coefficients are
/// quasi-polynomials in the apex s.
struct QuasiComponent {
  int dim = 0;
  int degree = 0;  // xi-degree m
  std::vector<QuasiEntry> entries;

  static QuasiComponent zero(int dim, int degree);

  /// Substitutes exact fractional parts and the polynomial factor at s and
  /// collects everything into one canonical component.
  HCompQ eval(const VecQ& s) const;

  /// Merges entries with equal (step, s_power) keys, dropping zeros.
  void normalize();

  int polynomial_degree() const;  // max |beta|
  int step_degree() const;        // max step-monomial degree
  int local_degree() const;       // max over entries of |beta| + step degree
};

/// The fractional-part generator directions of a set of quasi-components.
using PsiSet = std::vector<VecQ>;

/// First t0 > 0 such that s0 + t v stays inside a single Psi-alcove for
/// 0 < t < t0.  Errors when some <eta, v> = 0 (v along a wall direction).
Rat alcove_probe(const PsiSet& psi, const VecQ& s0, const VecQ& v);

/// Same, silently skipping generators with <eta, v> = 0 (their walls are
/// never crossed along the segment); returns 1 when nothing constrains t.
Rat alcove_probe_relaxed(const PsiSet& psi, const VecQ& s0, const VecQ& v);

}  // namespace conesum
