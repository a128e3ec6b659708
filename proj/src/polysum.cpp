#include "conesum/polysum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace conesum {

namespace {

void subsets_of(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

bool unbounded_direction(const std::vector<Halfspace>& ineqs, int d) {
  // recession cone {x : <a_j, x> <= 0}. Nontrivial iff the a_j fail to span
  // positively; any extreme recession ray comes from a (d-1)-subset kernel.
  MatQ a(static_cast<long>(ineqs.size()), d);
  for (size_t i = 0; i < ineqs.size(); ++i) a.row(static_cast<long>(i)) = ineqs[i].a.transpose();
  if (rank(a) < d) return true;
  std::vector<std::vector<int>> idx;
  subsets_of(static_cast<int>(ineqs.size()), d - 1, idx);
  for (const auto& s : idx) {
    MatQ sub(static_cast<long>(s.size()), d);
    for (size_t i = 0; i < s.size(); ++i) sub.row(static_cast<long>(i)) = ineqs[s[i]].a.transpose();
    MatQ k = kernel(sub.rows() ? sub : MatQ::Zero(1, d));
    if (k.cols() != 1) continue;
    for (int sign = -1; sign <= 1; sign += 2) {
      VecQ n = Rat(sign) * VecQ(k.col(0));
      bool ok = true;
      for (const auto& h : ineqs)
        if (dot(h.a, n) > Rat(0)) { ok = false; break; }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

Polytope::Polytope(int dim, std::vector<Halfspace> inequalities)
    : dim_(dim), ineqs_(std::move(inequalities)) {
  for (const auto& h : ineqs_) {
    if (h.a.size() != dim_) throw std::invalid_argument("Polytope: normal width mismatch");
    if (!is_integer(h.a)) throw std::invalid_argument("Polytope: integer normals required");
    if (is_zero(h.a)) throw std::invalid_argument("Polytope: zero normal");
  }
  if (static_cast<int>(ineqs_.size()) < dim_ + 1)
    throw std::invalid_argument("Polytope: too few inequalities to be bounded");
  if (unbounded_direction(ineqs_, dim_))
    throw std::invalid_argument("Polytope: unbounded");
  // vertex enumeration over d-subsets
  std::vector<std::vector<int>> idx;
  subsets_of(static_cast<int>(ineqs_.size()), dim_, idx);
  for (const auto& s : idx) {
    MatQ a(dim_, dim_);
    VecQ b(dim_);
    for (int i = 0; i < dim_; ++i) {
      a.row(i) = ineqs_[static_cast<size_t>(s[static_cast<size_t>(i)])].a.transpose();
      b(i) = ineqs_[static_cast<size_t>(s[static_cast<size_t>(i)])].b;
    }
    if (rank(a) != dim_) continue;
    auto x = solve(a, b);
    if (!x || !contains(*x)) continue;
    bool dup = false;
    for (const auto& v : vertices_)
      if (v == *x) { dup = true; break; }
    if (!dup) vertices_.push_back(*x);
  }
  if (vertices_.empty()) throw std::invalid_argument("Polytope: empty");
  std::sort(vertices_.begin(), vertices_.end(), detail::vec_less);
  // full-dimensional?
  MatQ diffs(static_cast<long>(vertices_.size()) - 1, dim_);
  for (size_t i = 1; i < vertices_.size(); ++i)
    diffs.row(static_cast<long>(i - 1)) = (vertices_[i] - vertices_[0]).transpose();
  if (vertices_.size() < static_cast<size_t>(dim_) + 1 || rank(diffs) != dim_)
    throw std::invalid_argument("Polytope: not full-dimensional");
}

bool Polytope::contains(const VecQ& x) const {
  for (const auto& h : ineqs_)
    if (dot(h.a, x) > h.b) return false;
  return true;
}

Polytope Polytope::box(const std::vector<std::pair<Rat, Rat>>& bounds) {
  int d = static_cast<int>(bounds.size());
  std::vector<Halfspace> hs;
  for (int i = 0; i < d; ++i) {
    VecQ e = VecQ::Zero(d);
    e(i) = Rat(1);
    hs.push_back({e, bounds[static_cast<size_t>(i)].second});
    hs.push_back({VecQ(-e), -bounds[static_cast<size_t>(i)].first});
  }
  return Polytope(d, hs);
}

Polytope Polytope::simplex(int dim, const Rat& scale, const VecQ& shift) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < dim; ++i) {
    VecQ e = VecQ::Zero(dim);
    e(i) = Rat(-1);
    hs.push_back({e, dot(e, shift)});
  }
  VecQ ones(dim);
  for (int i = 0; i < dim; ++i) ones(i) = Rat(1);
  hs.push_back({ones, scale + dot(ones, shift)});
  return Polytope(dim, hs);
}

std::vector<std::pair<VecQ, Cone>> vertices_and_cones(const Polytope& p) {
  int d = p.dim();
  std::vector<std::pair<VecQ, Cone>> out;
  for (const auto& v : p.vertices()) {
    std::vector<int> active;
    for (size_t j = 0; j < p.inequalities().size(); ++j)
      if (dot(p.inequalities()[j].a, v) == p.inequalities()[j].b)
        active.push_back(static_cast<int>(j));
    // rays of {x : <a_j, x> <= 0, j active} from (d-1)-subset kernels
    std::vector<VecQ> candidates;
    std::vector<std::vector<int>> idx;
    subsets_of(static_cast<int>(active.size()), d - 1, idx);
    for (const auto& s : idx) {
      MatQ sub(static_cast<long>(s.size()), d);
      for (size_t i = 0; i < s.size(); ++i)
        sub.row(static_cast<long>(i)) =
            p.inequalities()[static_cast<size_t>(active[static_cast<size_t>(s[i])])].a.transpose();
      MatQ k = kernel(sub.rows() ? sub : MatQ::Zero(1, d));
      if (k.cols() != 1) continue;
      for (int sign = -1; sign <= 1; sign += 2) {
        VecQ r = Rat(sign) * VecQ(k.col(0));
        bool ok = true;
        for (int j : active)
          if (dot(p.inequalities()[static_cast<size_t>(j)].a, r) > Rat(0)) { ok = false; break; }
        if (ok) candidates.push_back(primitive_rational(r));
      }
    }
    MatQ rays(static_cast<long>(candidates.size()), d);
    for (size_t i = 0; i < candidates.size(); ++i)
      rays.row(static_cast<long>(i)) = candidates[i].transpose();
    Cone tangent(d, rays);
    if (!tangent.is_pointed() || !tangent.is_full_dim())
      throw std::logic_error("vertices_and_cones: degenerate tangent cone");
    out.push_back({v, tangent});
  }
  return out;
}

Weight Weight::one(int dim) {
  Weight w;
  w.dim = dim;
  w.monomials[std::vector<int>(static_cast<size_t>(dim), 0)] = Rat(1);
  return w;
}

Weight Weight::monomial(int dim, const std::vector<int>& alpha, const Rat& c) {
  Weight w;
  w.dim = dim;
  w.monomials[alpha] = c;
  return w;
}

int Weight::degree() const {
  int d = 0;
  for (const auto& [e, c] : monomials) {
    int t = 0;
    for (int x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

Rat Weight::eval(const VecQ& x) const {
  Rat acc(0);
  for (const auto& [e, c] : monomials) {
    Rat m = c;
    for (size_t i = 0; i < e.size(); ++i) m *= x(static_cast<long>(i)).pow(e[i]);
    acc += m;
  }
  return acc;
}

std::vector<std::pair<Rat, VecQ>> monomial_to_linear_powers(const std::vector<int>& alpha) {
  int d = static_cast<int>(alpha.size());
  int m = 0;
  for (int x : alpha) m += x;
  if (m == 0) throw std::invalid_argument("monomial_to_linear_powers: constant monomial");
  std::vector<std::pair<Rat, VecQ>> out;
  std::vector<int> p(static_cast<size_t>(d), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == d) {
      int tot = 0;
      for (int x : p) tot += x;
      if (tot == 0) return;
      Rat c(1);
      for (int i = 0; i < d; ++i)
        c *= binomial(alpha[static_cast<size_t>(i)], p[static_cast<size_t>(i)]);
      if ((m - tot) % 2) c = -c;
      VecQ pv(d);
      for (int i = 0; i < d; ++i) pv(i) = Rat(p[static_cast<size_t>(i)]);
      out.push_back({c, pv});
      return;
    }
    for (int v = 0; v <= alpha[static_cast<size_t>(pos)]; ++v) {
      p[static_cast<size_t>(pos)] = v;
      rec(pos + 1);
    }
    p[static_cast<size_t>(pos)] = 0;
  };
  rec(0);
  return out;
}

std::map<int, SeriesQ> brion_SL_components(const Polytope& p, const RationalSubspace& l,
                                           int order) {
  int d = p.dim();
  GermQ total = GermQ::zero(d);
  for (const auto& [v, cone] : vertices_and_cones(p))
    total = total + intermediate_S_germ(cone, l, v, order);
  std::map<int, SeriesQ> out;
  for (int m = -d; m <= order; ++m) {
    HCompQ h = component(total, m);
    if (m < 0) {
      if (!(h.is_zero() || hc_equal(h, HCompQ::zero(d, m))))
        throw std::logic_error("brion_SL_components: negative component survived");
      continue;
    }
    HCompQ cleared = clear_to_denominator(h, {});
    out[m] = cleared.num;
  }
  return out;
}

Rat weighted_sum(const Polytope& p, const RationalSubspace& l, const Weight& h) {
  int deg = h.degree();
  auto comps = brion_SL_components(p, l, deg);
  Rat acc(0);
  for (const auto& [alpha, c_alpha] : h.monomials) {
    if (c_alpha.is_zero()) continue;
    int m = 0;
    for (int x : alpha) m += x;
    if (m == 0) {
      acc += c_alpha * comps.at(0).eval(VecQ(VecQ::Zero(p.dim())));
      continue;
    }
    for (const auto& [coeff, pv] : monomial_to_linear_powers(alpha))
      acc += c_alpha * coeff * comps.at(m).eval(pv);
  }
  return acc;
}

namespace {

/// Pulling triangulation of a polytope face given by its vertex list and
/// the global inequality list; dimension of the face is `fdim`.
void triangulate_face(const std::vector<VecQ>& verts,
                      const std::vector<Halfspace>& ineqs, int fdim,
                      std::vector<std::vector<VecQ>>& out,
                      std::vector<VecQ>& partial) {
  if (static_cast<int>(verts.size()) == fdim + 1) {
    std::vector<VecQ> simplex = partial;
    simplex.insert(simplex.end(), verts.begin(), verts.end());
    out.push_back(simplex);
    return;
  }
  const VecQ& v0 = verts[0];
  for (const auto& hsp : ineqs) {
    if (dot(hsp.a, v0) == hsp.b) continue;  // facet through the pulled vertex
    std::vector<VecQ> fverts;
    for (const auto& v : verts)
      if (dot(hsp.a, v) == hsp.b) fverts.push_back(v);
    if (fverts.size() < static_cast<size_t>(fdim)) continue;
    MatQ diffs(static_cast<long>(fverts.size()) - 1, v0.size());
    for (size_t i = 1; i < fverts.size(); ++i)
      diffs.row(static_cast<long>(i - 1)) = (fverts[i] - fverts[0]).transpose();
    if (rank(diffs) != fdim - 1) continue;  // lower face or duplicate
    partial.push_back(v0);
    triangulate_face(fverts, ineqs, fdim - 1, out, partial);
    partial.pop_back();
  }
}

/// Exact integral of a polynomial over a full-dimensional polytope in
/// standard lattice coordinates: pulling triangulation plus the Dirichlet
/// formula for monomials over a simplex.
Rat integrate_polytope(const std::vector<VecQ>& verts,
                       const std::vector<Halfspace>& ineqs, int rdim,
                       const SeriesQ& poly) {
  if (rdim == 0) return poly.eval(VecQ(0));
  std::vector<std::vector<VecQ>> simplices;
  std::vector<VecQ> partial;
  triangulate_face(verts, ineqs, rdim, simplices, partial);
  Rat acc(0);
  for (const auto& s : simplices) {
    MatQ edge(rdim, rdim);  // columns v_i - v_0
    for (int i = 0; i < rdim; ++i)
      edge.col(i) = s[static_cast<size_t>(i + 1)] - s[0];
    Rat vol_factor = abs(det(edge));
    if (vol_factor.is_zero()) continue;
    // x = v0 + edge * lambda
    SeriesQ in_lambda = poly.subst_affine(edge, s[0], rdim);
    Rat integral(0);
    for (const auto& [e, coeff] : in_lambda.coeffs()) {
      Rat num(1);
      int tot = 0;
      for (int x : e) {
        num *= factorial(x);
        tot += x;
      }
      integral += coeff * num / factorial(tot + rdim);
    }
    acc += vol_factor * integral;
  }
  return acc;
}

}  // namespace

Rat oracle_intermediate_sum(const Polytope& p, const RationalSubspace& l, const Weight& h) {
  int d = p.dim();
  int r = l.dim();
  // weight as a series in the ambient coordinates
  SeriesQ hpoly(d, h.degree());
  for (const auto& [e, c] : h.monomials) hpoly.set(e, c);

  if (r == 0) {
    // weighted lattice-point count over a bounding box
    std::vector<long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
      Rat mn = p.vertices()[0](i), mx = mn;
      for (const auto& v : p.vertices()) {
        if (v(i) < mn) mn = v(i);
        if (v(i) > mx) mx = v(i);
      }
      lo[static_cast<size_t>(i)] = static_cast<long>(mn.floor().num().get_si());
      hi[static_cast<size_t>(i)] = static_cast<long>((-((-mx).floor())).num().get_si());
    }
    Rat acc(0);
    std::vector<long> x(lo);
    while (true) {
      VecQ xv(d);
      for (int i = 0; i < d; ++i) xv(i) = Rat(x[static_cast<size_t>(i)]);
      if (p.contains(xv)) acc += h.eval(xv);
      int j = d - 1;
      while (j >= 0 && x[static_cast<size_t>(j)] == hi[static_cast<size_t>(j)]) {
        x[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)];
        --j;
      }
      if (j < 0) break;
      ++x[static_cast<size_t>(j)];
    }
    return acc;
  }

  const MatQ& b = l.lattice_basis();  // rows span L cap Z^d
  MatQ bt = b.transpose();            // d x r

  // enumerate slice indices y in the projected lattice
  std::vector<VecQ> ys;
  MatQ lift(d, 0);
  if (r == d) {
    ys.push_back(VecQ(0));
  } else {
    Projection proj = projected_lattice(l);
    lift = proj.lift;
    int q = d - r;
    std::vector<long> lo(static_cast<size_t>(q)), hi(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
      bool first = true;
      Rat mn(0), mx(0);
      for (const auto& v : p.vertices()) {
        Rat y = dot(VecQ(proj.map.row(i).transpose()), v);
        if (first || y < mn) mn = y;
        if (first || y > mx) mx = y;
        first = false;
      }
      lo[static_cast<size_t>(i)] = static_cast<long>(mn.floor().num().get_si());
      hi[static_cast<size_t>(i)] = static_cast<long>((-((-mx).floor())).num().get_si());
    }
    std::vector<long> y(lo);
    while (true) {
      VecQ yv(q);
      for (int i = 0; i < q; ++i) yv(i) = Rat(y[static_cast<size_t>(i)]);
      ys.push_back(yv);
      int j = q - 1;
      while (j >= 0 && y[static_cast<size_t>(j)] == hi[static_cast<size_t>(j)]) {
        y[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)];
        --j;
      }
      if (j < 0) break;
      ++y[static_cast<size_t>(j)];
    }
  }

  Rat acc(0);
  for (const auto& y : ys) {
    VecQ x0 = (r == d) ? VecQ(VecQ::Zero(d)) : VecQ(lift * y);
    // slice constraints in t-coordinates: <a_j, x0 + B^T t> <= b_j
    std::vector<Halfspace> slice;
    for (const auto& hsp : p.inequalities()) {
      VecQ a_t = b * hsp.a;  // <a, B^T t> = <B a, t>
      Rat b_t = hsp.b - dot(hsp.a, x0);
      if (is_zero(a_t)) {
        if (b_t < Rat(0)) { slice.clear(); break; }  // empty slice
        continue;
      }
      // rescale to an integer normal
      VecQ prim = primitive_rational(a_t);
      Rat scale = Rat(0);
      for (long i = 0; i < a_t.size(); ++i)
        if (!prim(i).is_zero()) { scale = a_t(i) / prim(i); break; }
      slice.push_back({prim, b_t / scale});
    }
    if (slice.empty()) continue;
    // vertex-enumerate the slice in t-space
    std::vector<VecQ> verts;
    std::vector<std::vector<int>> idx;
    subsets_of(static_cast<int>(slice.size()), r, idx);
    for (const auto& sel : idx) {
      MatQ a(r, r);
      VecQ rhs(r);
      for (int i = 0; i < r; ++i) {
        a.row(i) = slice[static_cast<size_t>(sel[static_cast<size_t>(i)])].a.transpose();
        rhs(i) = slice[static_cast<size_t>(sel[static_cast<size_t>(i)])].b;
      }
      if (rank(a) != r) continue;
      auto x = solve(a, rhs);
      if (!x) continue;
      bool ok = true;
      for (const auto& hsp : slice)
        if (dot(hsp.a, *x) > hsp.b) { ok = false; break; }
      if (!ok) continue;
      bool dup = false;
      for (const auto& v : verts)
        if (v == *x) { dup = true; break; }
      if (!dup) verts.push_back(*x);
    }
    if (verts.size() < static_cast<size_t>(r) + 1) continue;  // measure zero
    std::sort(verts.begin(), verts.end(), detail::vec_less);
    MatQ diffs(static_cast<long>(verts.size()) - 1, r);
    for (size_t i = 1; i < verts.size(); ++i)
      diffs.row(static_cast<long>(i - 1)) = (verts[i] - verts[0]).transpose();
    if (rank(diffs) != r) continue;  // lower-dimensional slice
    SeriesQ h_t = hpoly.subst_affine(bt, x0, r);
    acc += integrate_polytope(verts, slice, r, h_t);
  }
  return acc;
}

}  // namespace conesum
