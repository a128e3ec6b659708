#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "conesum/cone.hpp"
#include "conesum/stepquasi.hpp"

namespace conesum {

/// Apex of an affine cone s + c: a concrete rational point, or symbolic
/// (outputs become quasi-polynomials in s).
struct ApexSpec {
  bool symbolic = false;
  VecQ s;

  static ApexSpec concrete(VecQ point) { return {false, std::move(point)}; }
  static ApexSpec make_symbolic() { return {true, {}}; }
};

enum class GenFunKind { S, M, I };

/// One batch request: which generating function of (c, L, apex), with
/// components emitted for m_min <= m <= m_max.
struct GenFunRequest {
  Cone cone;
  RationalSubspace l;
  ApexSpec apex;
  int m_min = 0;
  int m_max = 0;
  GenFunKind which = GenFunKind::S;
};

/// Concrete-apex evaluation of a request (errors on a symbolic apex).
std::map<int, HCompQ> genfun_components(const GenFunRequest& req);

/// Symbolic-apex evaluation (errors on a concrete apex; I is rejected
/// here since I(c) carries no s-dependence and is served concretely).
std::map<int, QuasiComponent> genfun_symbolic_components(const GenFunRequest& req);

/// Germ of I(s+c)(xi) = e^{<xi,s>} (-1)^d vol / prod <xi,v_i>; the cone is
/// triangulated first when not simplicial.
GermQ integral_germ(const Cone& c, const VecQ& s, int order);

/// Germ of I(c)(xi) (no exponential; equals M^V(s,c)).
GermQ integral_M_germ(const Cone& c, int order);

/// M(s,u) for a unimodular full-dimensional cone, by the closed product
/// formula (no decomposition).
GermQ discrete_M_germ_unimodular(const Cone& u, const VecQ& s, int order);

/// M^L(s,c)(xi) for a concrete rational apex; the central pipeline: a
/// decomposition into simplicial cones with a face parallel to L, the
/// product of a projected discrete factor and a continuous factor per term.
GermQ intermediate_M_germ(const Cone& c, const RationalSubspace& l,
                          const VecQ& s, int order);

/// Same, but from a caller-supplied signed decomposition whose terms are
/// simplicial full-dimensional cones with dim(L) generators spanning L.
GermQ intermediate_M_germ_from_terms(const SignedConeSum& terms,
                                     const RationalSubspace& l, const VecQ& s,
                                     int order, int dim);

/// S^L(s+c) = e^{<xi,s>} M^L(s,c) at germ level.
GermQ intermediate_S_germ(const Cone& c, const RationalSubspace& l,
                          const VecQ& s, int order);

/// Symbolic apex: quasi-polynomial components of M^L(s,c), xi-degrees
/// -d..order, plus the fractional-part generator set used.
struct SymbolicComponents {
  std::map<int, QuasiComponent> components;
  PsiSet psi;
};

SymbolicComponents intermediate_M_symbolic(const Cone& c,
                                           const RationalSubspace& l, int order);

SymbolicComponents intermediate_M_symbolic_from_terms(const SignedConeSum& terms,
                                                      const RationalSubspace& l,
                                                      int order, int dim);

/// S^L(s+c)_[m] = sum_{r=0}^{m+d} <xi,s>^r/r! M^L(s,c)_[m-r]: exact
/// convolution at component level (concrete apex).
HCompQ S_component_from_M(const std::map<int, HCompQ>& m_components,
                          const VecQ& s, int m, int dim);

/// Symbolic version of the same convolution; s^beta monomials are tracked
/// in the quasi-component entries.
std::map<int, QuasiComponent> S_symbolic_from_M(
    const std::map<int, QuasiComponent>& m_components, int order, int dim);

/// Components m = -d..order of a germ, as a map (helper shared by tests,
/// the CLI, and the acceptance suite).
std::map<int, HCompQ> components_of(const GermQ& g, int order);

/// The set Psi of fractional-part generators the pipeline would use for
/// (c, L): integral covectors vanishing on L.
PsiSet psi_set(const Cone& c, const RationalSubspace& l);

// ---- residues ----

struct ResidueResult {
  bool is_edge = false;  // v itself generates an edge
  int edge_sign = 0;     // +1: v is an edge generator, -1: -v is, 0: neither
  Projection proj;       // quotient data for R v
  GermQ restricted;      // (<xi,v> S^L(s+c))|_{v-perp} in quotient coordinates
  GermQ expected;        // -edge_sign * S^{p(L)}(p(s)+p(c)); zero when the
                         // line R v meets no edge
};

/// Restriction of <xi,v> S^L(s+c) to the hyperplane v-perp, with the
/// independently computed right-hand side for comparison.
ResidueResult residue_restriction(const Cone& c, const RationalSubspace& l,
                                  const VecQ& s, const VecQ& v, int order);

// ---- Fourier side ----

/// Exact Laurent data of I(c)(xi + T gamma) near xi = 0, coefficients in
/// Q[T^{-1}]; T stands for 2 i pi.  Denominator factors with <gamma,v> = 0
/// stay poles; the others are expanded.
GermT integral_T_germ(const Cone& c, const VecQ& gamma, int order);

struct PoissonResult {
  std::complex<double> truncated;  // partial Fourier sum at xi
  double exact;                    // exact component value at xi
  double abs_error;
  long gamma_count;
};

/// Truncated Fourier expansion of M^L(s,c)_[m](xi) over gamma in
/// Lambda* cap L-perp with |gamma|_inf <= radius, summed in order of
/// increasing sup-norm then lexicographic; the only floating-point surface.
PoissonResult poisson_truncated(const Cone& c, const RationalSubspace& l,
                                const VecQ& s, int m, long radius,
                                const VecQ& xi);

/// One-sided continuity of s -> M^L(s,c)_[m] along v in L - c: fits the
/// alcove-interior polynomial in t through exact samples of
/// M^L(s0 + t v, c)_[m] and compares its value at t = 0+ with the
/// component at s0.  Exact.
bool one_sided_limit_check(const Cone& c, const RationalSubspace& l, int m,
                           const VecQ& s0, const VecQ& v);

/// Is v in L - c?  (Exact membership of the projection of v in -p(c).)
bool in_l_minus_c(const Cone& c, const RationalSubspace& l, const VecQ& v);

}  // namespace conesum
