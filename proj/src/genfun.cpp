#include "conesum/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace conesum {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// One unimodular piece of one decomposition term: everything needed to
/// write its contribution to M^L as
///   sign * (-1)^l * vol * exp(sum_k {<eta_k,s>} <xi,sigma_k>)
///        * prod_k 1/(1-e^{<xi,sigma_k>}) / prod_{i in I} <xi,v_i>.
struct Piece {
  int sign = 1;
  Rat vol = Rat(1);
  std::vector<VecQ> cont_denoms;  // generators spanning L
  std::vector<VecQ> disc_dirs;    // lifted quotient generators sigma_k
  std::vector<VecQ> etas;         // fractional-part generator per sigma_k
};

std::vector<Piece> build_pieces(const SignedConeSum& terms,
                                const RationalSubspace& l, int dim) {
  int d = dim;
  int ldim = l.dim();
  std::optional<Projection> proj;
  if (ldim < d) proj = projected_lattice(l);
  const MatQ& lbasis = l.lattice_basis();

  std::vector<Piece> out;
  for (const auto& [sign, k] : terms.terms) {
    if (!k.is_simplicial() || !k.is_full_dim())
      throw std::invalid_argument("intermediate germ: terms must be simplicial and full-dimensional");
    auto idx = generators_in_subspace(k, l);
    std::vector<bool> in_l(static_cast<size_t>(k.nrays()), false);
    for (int i : idx) in_l[static_cast<size_t>(i)] = true;

    Piece base;
    base.sign = sign;
    for (int i : idx) base.cont_denoms.push_back(k.ray(i));
    if (ldim > 0) {
      MatQ coords(ldim, ldim);
      for (int r = 0; r < ldim; ++r) {
        VecQ c = coords_in_basis(lbasis, k.ray(idx[static_cast<size_t>(r)]));
        if (!is_integer(c))
          throw std::logic_error("intermediate germ: generator not in the L-lattice");
        coords.row(r) = c.transpose();
      }
      base.vol = abs(det(coords));
    }

    if (ldim == d) {
      out.push_back(base);
      continue;
    }

    int q = d - ldim;
    MatQ b(d, q);  // columns: generators outside L
    {
      int col = 0;
      for (int i = 0; i < k.nrays(); ++i)
        if (!in_l[static_cast<size_t>(i)]) b.col(col++) = k.ray(i);
    }
    MatQ a = proj->map * b;  // q x q, invertible
    MatQ a_inv = inverse(a);

    MatQ proj_gens = (proj->map * b).transpose();  // rows: projected generators
    Cone quotient_cone(q, proj_gens);
    if (!quotient_cone.is_simplicial() || !quotient_cone.is_full_dim())
      throw std::logic_error("intermediate germ: projected cone degenerate");

    for (const auto& [psign, u] : barvinok_decompose(quotient_cone).terms) {
      Piece p = base;
      p.sign = sign * psign;
      MatQ w = u.generators();
      MatQ w_inv = inverse(w);
      for (int kk = 0; kk < q; ++kk) {
        VecQ wk = w.row(kk).transpose();
        VecQ sigma = b * (a_inv * wk);
        VecQ eta_quot = w_inv.col(kk);  // dual basis in quotient coordinates
        VecQ eta = -(proj->map.transpose() * eta_quot);
        p.disc_dirs.push_back(sigma);
        p.etas.push_back(eta);
      }
      out.push_back(p);
    }
  }
  return out;
}

GermQ piece_base_germ(const Piece& p, int dim, int cap) {
  int ldim = static_cast<int>(p.cont_denoms.size());
  Rat coeff = ((ldim % 2) ? Rat(-1) : Rat(1)) * p.vol * Rat(p.sign);
  GermQ g{dim, {}};
  g.terms.push_back({p.cont_denoms, SeriesQ::constant(dim, cap, coeff)});
  for (const auto& dir : p.disc_dirs) g = g * inv_one_minus_exp(dir, cap);
  return g;
}

void iter_multi_indices(int arity, int max_total,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> a(static_cast<size_t>(arity), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == arity) { fn(a); return; }
    for (int v = 0; v <= left; ++v) {
      a[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
    a[static_cast<size_t>(pos)] = 0;
  };
  rec(0, max_total);
}

SignedConeSum single_term(const Cone& c) {
  SignedConeSum s;
  s.terms.push_back({1, c});
  return s;
}

}  // namespace

GermQ integral_M_germ(const Cone& c, int order) {
  if (!c.is_pointed()) return GermQ::zero(c.dim());
  if (!c.is_full_dim())
    throw std::invalid_argument("integral_M_germ: full-dimensional cone required");
  int d = c.dim();
  int cap = order + d;
  SignedConeSum tri =
      c.is_simplicial() ? single_term(c) : triangulate(c);
  GermQ g = GermQ::zero(d);
  for (const auto& [sign, k] : tri.terms) {
    Rat coeff = Rat(sign) * ((d % 2) ? Rat(-1) : Rat(1)) * cone_index(k.generators());
    GermTerm<Rat> t;
    for (int i = 0; i < d; ++i) t.denoms.push_back(k.ray(i));
    t.num = SeriesQ::constant(d, cap, coeff);
    g.terms.push_back(t);
  }
  return g;
}

GermQ integral_germ(const Cone& c, const VecQ& s, int order) {
  GermQ m = integral_M_germ(c, order);
  return m.mul_series(exp_linear_series(s, order + c.dim()));
}

GermQ discrete_M_germ_unimodular(const Cone& u, const VecQ& s, int order) {
  if (!u.is_simplicial() || !u.is_full_dim() || cone_index(u.generators()) != Rat(1))
    throw std::invalid_argument("discrete_M_germ_unimodular: unimodular full-dimensional cone required");
  int d = u.dim();
  int cap = order + d;
  MatQ w_inv = inverse(u.generators());
  GermQ g = GermQ::one(d, cap);
  VecQ shift = VecQ::Zero(d);
  for (int k = 0; k < d; ++k) {
    VecQ gen = u.ray(k);
    VecQ eta = -VecQ(w_inv.col(k));
    g = g * inv_one_minus_exp(gen, cap);
    shift += frac(eta, s) * gen;
  }
  return g.mul_series(exp_linear_series(shift, cap));
}

GermQ intermediate_M_germ_from_terms(const SignedConeSum& terms,
                                     const RationalSubspace& l, const VecQ& s,
                                     int order, int dim) {
  int cap = order + dim;
  GermQ acc = GermQ::zero(dim);
  for (const auto& p : build_pieces(terms, l, dim)) {
    GermQ g = piece_base_germ(p, dim, cap);
    VecQ shift = VecQ::Zero(dim);
    for (size_t k = 0; k < p.disc_dirs.size(); ++k)
      shift += frac(p.etas[k], s) * p.disc_dirs[k];
    acc = acc + g.mul_series(exp_linear_series(shift, cap));
  }
  return acc;
}

GermQ intermediate_M_germ(const Cone& c, const RationalSubspace& l,
                          const VecQ& s, int order) {
  if (!c.is_pointed()) return GermQ::zero(c.dim());
  return intermediate_M_germ_from_terms(decompose_parallel_to(c, l), l, s,
                                        order, c.dim());
}

GermQ intermediate_S_germ(const Cone& c, const RationalSubspace& l,
                          const VecQ& s, int order) {
  GermQ m = intermediate_M_germ(c, l, s, order);
  return m.mul_series(exp_linear_series(s, order + c.dim()));
}

SymbolicComponents intermediate_M_symbolic_from_terms(const SignedConeSum& terms,
                                                      const RationalSubspace& l,
                                                      int order, int dim) {
  int cap = order + dim;
  std::map<StepMonomial, GermQ> parts;
  PsiSet psi;
  auto note_eta = [&psi](const VecQ& eta) {
    for (const auto& e : psi)
      if (e == eta) return;
    psi.push_back(eta);
  };
  for (const auto& p : build_pieces(terms, l, dim)) {
    GermQ base = piece_base_germ(p, dim, cap);
    for (const auto& eta : p.etas) note_eta(eta);
    int arity = static_cast<int>(p.disc_dirs.size());
    iter_multi_indices(arity, cap, [&](const std::vector<int>& a) {
      StepMonomial step;
      Rat inv_fact(1);
      SeriesQ poly = SeriesQ::constant(dim, cap, Rat(1));
      for (int k = 0; k < arity; ++k) {
        if (a[static_cast<size_t>(k)] == 0) continue;
        step = step.times(p.etas[static_cast<size_t>(k)], a[static_cast<size_t>(k)]);
        inv_fact /= factorial(a[static_cast<size_t>(k)]);
        for (int rep = 0; rep < a[static_cast<size_t>(k)]; ++rep)
          poly = poly.mul_linear(p.disc_dirs[static_cast<size_t>(k)]);
      }
      GermQ contrib = base.mul_series(poly.scale_rat(inv_fact));
      auto it = parts.find(step);
      if (it == parts.end()) parts.emplace(step, contrib);
      else it->second = it->second + contrib;
    });
  }
  SymbolicComponents out;
  out.psi = psi;
  std::sort(out.psi.begin(), out.psi.end(), detail::vec_less);
  for (int m = -dim; m <= order; ++m) {
    QuasiComponent qc = QuasiComponent::zero(dim, m);
    for (const auto& [step, germ] : parts) {
      HCompQ h = component(germ, m);
      if (!h.is_zero()) qc.entries.push_back({step, {}, h});
    }
    qc.normalize();
    out.components[m] = qc;
  }
  return out;
}

SymbolicComponents intermediate_M_symbolic(const Cone& c,
                                           const RationalSubspace& l, int order) {
  if (!c.is_pointed()) {
    SymbolicComponents empty;
    for (int m = -c.dim(); m <= order; ++m)
      empty.components[m] = QuasiComponent::zero(c.dim(), m);
    return empty;
  }
  return intermediate_M_symbolic_from_terms(decompose_parallel_to(c, l), l,
                                            order, c.dim());
}

HCompQ S_component_from_M(const std::map<int, HCompQ>& m_components,
                          const VecQ& s, int m, int dim) {
  HCompQ acc = HCompQ::zero(dim, m);
  for (int r = 0; r <= m + dim; ++r) {
    auto it = m_components.find(m - r);
    if (it == m_components.end()) {
      if (m - r >= -dim)
        throw std::invalid_argument("S_component_from_M: missing low component");
      continue;
    }
    const HCompQ& mc = it->second;
    if (mc.is_zero()) continue;
    SeriesQ factor = SeriesQ::constant(dim, mc.num.cap() + r, Rat(1));
    for (int rep = 0; rep < r; ++rep) factor = factor.mul_linear(s);
    HCompQ h;
    h.dim = dim;
    h.degree = m;
    h.denoms = mc.denoms;
    h.num = (mc.num * factor).scale_rat(Rat(1) / factorial(r));
    acc = hc_add(acc, h);
  }
  return acc;
}

std::map<int, QuasiComponent> S_symbolic_from_M(
    const std::map<int, QuasiComponent>& m_components, int order, int dim) {
  std::map<int, QuasiComponent> out;
  for (int m = -dim; m <= order; ++m) {
    QuasiComponent qc = QuasiComponent::zero(dim, m);
    for (int r = 0; r <= m + dim; ++r) {
      auto it = m_components.find(m - r);
      if (it == m_components.end()) continue;
      for (const auto& e : it->second.entries) {
        // <xi,s>^r/r! = sum_{|beta|=r} s^beta xi^beta / beta!
        iter_multi_indices(dim, r, [&](const std::vector<int>& beta) {
          int tot = 0;
          for (int x : beta) tot += x;
          if (tot != r) return;
          Rat inv_fact(1);
          for (int x : beta) inv_fact /= factorial(x);
          HCompQ h;
          h.dim = dim;
          h.degree = m;
          h.denoms = e.comp.denoms;
          SeriesQ mono = SeriesQ::monomial(dim, e.comp.num.cap() + r, beta, inv_fact);
          h.num = e.comp.num * mono;
          std::vector<int> spow = (r == 0) ? std::vector<int>{} : beta;
          if (!e.s_power.empty())
            throw std::logic_error("S_symbolic_from_M: input already has polynomial part");
          qc.entries.push_back({e.step, spow, h});
        });
      }
    }
    qc.normalize();
    out[m] = qc;
  }
  return out;
}

std::map<int, HCompQ> genfun_components(const GenFunRequest& req) {
  if (req.apex.symbolic)
    throw std::invalid_argument("genfun_components: symbolic apex");
  if (req.m_min > req.m_max)
    throw std::invalid_argument("genfun_components: empty order range");
  GermQ g;
  switch (req.which) {
    case GenFunKind::I: g = integral_germ(req.cone, req.apex.s, req.m_max); break;
    case GenFunKind::M:
      g = intermediate_M_germ(req.cone, req.l, req.apex.s, req.m_max);
      break;
    case GenFunKind::S:
      g = intermediate_S_germ(req.cone, req.l, req.apex.s, req.m_max);
      break;
  }
  std::map<int, HCompQ> out;
  for (int m = std::max(req.m_min, -req.cone.dim()); m <= req.m_max; ++m)
    out[m] = component(g, m);
  return out;
}

std::map<int, QuasiComponent> genfun_symbolic_components(const GenFunRequest& req) {
  if (!req.apex.symbolic)
    throw std::invalid_argument("genfun_symbolic_components: concrete apex");
  if (req.which == GenFunKind::I)
    throw std::invalid_argument("genfun_symbolic_components: I(c) has no apex dependence");
  int d = req.cone.dim();
  SymbolicComponents sym = intermediate_M_symbolic(req.cone, req.l, req.m_max);
  std::map<int, QuasiComponent> comps =
      (req.which == GenFunKind::S) ? S_symbolic_from_M(sym.components, req.m_max, d)
                                   : sym.components;
  std::map<int, QuasiComponent> out;
  for (int m = std::max(req.m_min, -d); m <= req.m_max; ++m) out[m] = comps.at(m);
  return out;
}

std::map<int, HCompQ> components_of(const GermQ& g, int order) {
  int mn = 0;
  for (const auto& t : g.terms) mn = std::max(mn, static_cast<int>(t.denoms.size()));
  std::map<int, HCompQ> out;
  for (int m = -mn; m <= order; ++m) out[m] = component(g, m);
  if (g.terms.empty())
    for (int m = -g.dim; m <= order; ++m) out[m] = HCompQ::zero(g.dim, m);
  return out;
}

PsiSet psi_set(const Cone& c, const RationalSubspace& l) {
  // order 0 keeps the pipeline cheap; the generator set does not depend on
  // the order
  return intermediate_M_symbolic(c, l, 0).psi;
}

ResidueResult residue_restriction(const Cone& c, const RationalSubspace& l,
                                  const VecQ& s, const VecQ& v, int order) {
  if (!is_integer(v) || is_zero(v))
    throw std::invalid_argument("residue_restriction: primitive lattice vector required");
  if (primitive(v) != v)
    throw std::invalid_argument("residue_restriction: v must be primitive");
  int d = c.dim();
  ResidueResult res;
  res.edge_sign = 0;
  for (int i = 0; i < c.nrays(); ++i) {
    if (c.ray(i) == v) res.edge_sign = 1;
    if (VecQ(-c.ray(i)) == v && res.edge_sign == 0) res.edge_sign = -1;
  }
  res.is_edge = (res.edge_sign == 1);

  GermQ s_germ = intermediate_S_germ(c, l, s, order);

  // quotient coordinates for V / R v
  RationalSubspace rv = saturate(MatQ(v.transpose()), d);
  MatQ p;  // (d-1) x d, kernel R v
  if (d == 1) {
    p = MatQ(0, 1);
  } else {
    res.proj = projected_lattice(rv);
    p = res.proj.map;
  }
  int q = d - 1;

  GermQ restricted{q, {}};
  auto vdir = canonical_direction(v);
  for (const auto& term : s_germ.terms) {
    // multiply by <xi, v>: cancel one parallel denominator or raise the
    // numerator degree
    std::vector<VecQ> kept;
    SeriesQ num = term.num;
    bool cancelled = false;
    for (const auto& w : term.denoms) {
      auto wdir = canonical_direction(w);
      if (!cancelled && wdir.first == vdir.first) {
        // <xi,v> / <xi,w> = vdir.scale / wdir.scale
        num = num.scale_rat(vdir.second / wdir.second);
        cancelled = true;
      } else {
        if (wdir.first == vdir.first)
          throw std::logic_error("residue_restriction: repeated parallel denominator");
        kept.push_back(w);
      }
    }
    if (!cancelled) num = num.mul_linear(v);
    // restrict to v-perp: xi = p^T zeta
    SeriesQ num_q = num.subst_linear(MatQ(p.transpose()), q);
    if (num_q.is_zero()) continue;
    GermTerm<Rat> t;
    for (const auto& w : kept) {
      VecQ wq = p * w;
      if (is_zero(wq))
        throw std::logic_error("residue_restriction: denominator collapsed on v-perp");
      t.denoms.push_back(wq);
    }
    t.num = num_q;
    restricted.terms.push_back(t);
  }
  res.restricted = restricted;

  if (res.edge_sign == 0) {
    res.expected = GermQ::zero(q);
    return res;
  }
  Rat sign(-res.edge_sign);
  if (d == 1) {
    // S of the origin in the zero-dimensional space is 1
    res.expected = GermQ::one(0, order).scale_rat(sign);
    return res;
  }
  Cone pc(q, (p * c.generators().transpose()).transpose());
  RationalSubspace pl = saturate(MatQ(l.lattice_basis() * p.transpose()), q);
  VecQ ps = p * s;
  res.expected = intermediate_S_germ(pc, pl, ps, order).scale_rat(sign);
  return res;
}

GermT integral_T_germ(const Cone& c, const VecQ& gamma, int order) {
  if (!is_integer(gamma))
    throw std::invalid_argument("integral_T_germ: integer gamma required");
  if (!c.is_pointed()) return GermT::zero(c.dim());
  if (!c.is_full_dim())
    throw std::invalid_argument("integral_T_germ: full-dimensional cone required");
  int d = c.dim();
  int cap = order + d;
  SignedConeSum tri = c.is_simplicial() ? single_term(c) : triangulate(c);
  GermT acc = GermT::zero(d);
  for (const auto& [sign, k] : tri.terms) {
    Rat coeff = Rat(sign) * ((d % 2) ? Rat(-1) : Rat(1)) * cone_index(k.generators());
    GermTerm<LaurentPoly> t;
    Series<LaurentPoly> num =
        Series<LaurentPoly>::constant(d, cap, LaurentPoly(coeff));
    for (int i = 0; i < d; ++i) {
      VecQ gen = k.ray(i);
      Rat pairing = dot(gamma, gen);
      if (pairing.is_zero()) {
        t.denoms.push_back(gen);
        continue;
      }
      // 1/(T c + <xi,gen>) = sum_k (-1)^k <xi,gen>^k / (T c)^{k+1}
      Series<LaurentPoly> factor(d, cap);
      Series<LaurentPoly> pw =
          Series<LaurentPoly>::constant(d, cap, LaurentPoly(Rat(1)));
      for (int kk = 0; kk <= cap; ++kk) {
        Rat mag = ((kk % 2) ? Rat(-1) : Rat(1)) / pairing.pow(kk + 1);
        factor = factor + pw.scale(LaurentPoly::monomial(-(kk + 1), mag));
        VecQ genq = gen;
        Series<LaurentPoly> lin(d, cap);
        for (int j = 0; j < d; ++j) {
          if (genq(j).is_zero()) continue;
          std::vector<int> e(static_cast<size_t>(d), 0);
          e[static_cast<size_t>(j)] = 1;
          lin.set(e, LaurentPoly(genq(j)));
        }
        pw = pw * lin;
        if (pw.is_zero()) break;
      }
      num = num * factor;
    }
    t.num = num;
    acc.terms.push_back({t.denoms, t.num});
  }
  return acc;
}

namespace {

std::vector<VecQ> fourier_lattice_points(const RationalSubspace& l, int dim,
                                         long radius) {
  std::vector<VecQ> gammas;
  if (l.is_full()) {
    gammas.push_back(VecQ::Zero(dim));
    return gammas;
  }
  Projection proj = projected_lattice(l);
  MatQ pt = proj.map.transpose();  // gamma = pt * z
  int q = dim - l.dim();
  // bound |z| via the exact left inverse of pt
  MatQ left = inverse(MatQ(proj.map * pt)) * proj.map;
  Rat rowmax(0);
  for (long i = 0; i < left.rows(); ++i) {
    Rat s(0);
    for (long j = 0; j < left.cols(); ++j) s += abs(left(i, j));
    if (s > rowmax) rowmax = s;
  }
  long zbound = 0;
  while (Rat(zbound) < rowmax * Rat(radius)) ++zbound;
  std::vector<long> z(static_cast<size_t>(q), -zbound);
  while (true) {
    VecQ zv(q);
    for (int i = 0; i < q; ++i) zv(i) = Rat(z[static_cast<size_t>(i)]);
    VecQ gamma = pt * zv;
    Rat norm(0);
    for (long i = 0; i < gamma.size(); ++i)
      if (abs(gamma(i)) > norm) norm = abs(gamma(i));
    if (norm <= Rat(radius)) gammas.push_back(gamma);
    int j = q - 1;
    while (j >= 0 && z[static_cast<size_t>(j)] == zbound) {
      z[static_cast<size_t>(j)] = -zbound;
      --j;
    }
    if (j < 0) break;
    ++z[static_cast<size_t>(j)];
  }
  std::sort(gammas.begin(), gammas.end(), [](const VecQ& a, const VecQ& b) {
    Rat na(0), nb(0);
    for (long i = 0; i < a.size(); ++i)
      if (abs(a(i)) > na) na = abs(a(i));
    for (long i = 0; i < b.size(); ++i)
      if (abs(b(i)) > nb) nb = abs(b(i));
    if (na != nb) return na < nb;
    return detail::vec_less(a, b);
  });
  return gammas;
}

}  // namespace

PoissonResult poisson_truncated(const Cone& c, const RationalSubspace& l,
                                const VecQ& s, int m, long radius,
                                const VecQ& xi) {
  int d = c.dim();
  PoissonResult res;
  res.gamma_count = 0;
  std::complex<double> acc(0.0, 0.0);
  const std::complex<double> two_i_pi(0.0, 2.0 * kPi);
  for (const auto& gamma : fourier_lattice_points(l, d, radius)) {
    GermT tg = integral_T_germ(c, gamma, m);
    HCompT h = component(tg, m);
    Rat den(1);
    for (const auto& dir : h.denoms) {
      Rat pairing = dot(xi, dir);
      if (pairing.is_zero())
        throw std::domain_error("poisson_truncated: xi on a singular hyperplane");
      den *= pairing;
    }
    LaurentPoly numval = h.num.eval(xi);
    std::complex<double> val = numval.eval(two_i_pi) / den.to_double();
    double phase = 2.0 * kPi * dot(gamma, s).to_double();
    val *= std::complex<double>(std::cos(phase), std::sin(phase));
    acc += val;
    ++res.gamma_count;
  }
  res.truncated = acc;
  GermQ mg = intermediate_M_germ(c, l, s, m);
  res.exact = eval_component(component(mg, m), xi).to_double();
  res.abs_error = std::abs(acc - std::complex<double>(res.exact, 0.0));
  return res;
}

bool in_l_minus_c(const Cone& c, const RationalSubspace& l, const VecQ& v) {
  if (l.is_full()) return true;
  Projection proj = projected_lattice(l);
  MatQ neg_proj_gens = -(proj.map * c.generators().transpose()).transpose();
  return cone_contains(neg_proj_gens, VecQ(proj.map * v));
}

bool one_sided_limit_check(const Cone& c, const RationalSubspace& l, int m,
                           const VecQ& s0, const VecQ& v) {
  if (!in_l_minus_c(c, l, v))
    throw std::invalid_argument("one_sided_limit_check: v not in L - c");
  int d = c.dim();
  SignedConeSum terms = decompose_parallel_to(c, l);
  PsiSet psi = intermediate_M_symbolic_from_terms(terms, l, std::max(0, m), d).psi;
  Rat t0 = alcove_probe_relaxed(psi, s0, v);

  int deg = m + d;  // alcove-interior polynomial degree bound in t
  int npts = deg + 2;
  std::vector<Rat> ts;
  Rat t = t0 / Rat(2);
  for (int j = 0; j < npts; ++j) {
    ts.push_back(t);
    t /= Rat(2);
  }
  std::vector<HCompQ> samples;
  for (const auto& tj : ts) {
    VecQ sj = s0 + tj * v;
    samples.push_back(component(
        intermediate_M_germ_from_terms(terms, l, sj, m, d), m));
  }
  HCompQ at_s0 = component(intermediate_M_germ_from_terms(terms, l, s0, m, d), m);

  // align everything over one common denominator
  HCompQ all = at_s0;
  for (const auto& h : samples) all = hc_add(all, hc_scale(h, Rat(0)));
  auto lift = [&all](const HCompQ& h) {
    HCompQ z = all;
    z.num = SeriesQ::zero(z.dim, z.num.cap());
    return hc_add(z, h).num;
  };
  std::vector<SeriesQ> nums;
  for (const auto& h : samples) nums.push_back(lift(h));
  SeriesQ num_s0 = lift(at_s0);

  // Lagrange interpolation through the first deg+1 samples
  auto interpolate_at = [&](const Rat& x) {
    SeriesQ acc = SeriesQ::zero(all.dim, nums[0].cap());
    for (int j = 0; j <= deg; ++j) {
      Rat w(1);
      for (int k = 0; k <= deg; ++k) {
        if (k == j) continue;
        w *= (x - ts[static_cast<size_t>(k)]) /
             (ts[static_cast<size_t>(j)] - ts[static_cast<size_t>(k)]);
      }
      acc = acc + nums[static_cast<size_t>(j)].scale_rat(w);
    }
    return acc;
  };
  // degree bound must reproduce the extra sample exactly
  if (!(interpolate_at(ts.back()) == nums.back())) return false;
  return interpolate_at(Rat(0)) == num_s0;
}

}  // namespace conesum
