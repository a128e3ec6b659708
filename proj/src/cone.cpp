#include "conesum/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "conesum/germ.hpp"  // detail::vec_less

namespace conesum {

namespace {

std::vector<VecQ> rows_of(const MatQ& m) {
  std::vector<VecQ> out;
  for (long i = 0; i < m.rows(); ++i) out.push_back(m.row(i).transpose());
  return out;
}

MatQ stack(const std::vector<VecQ>& rows, int dim) {
  MatQ m(static_cast<long>(rows.size()), dim);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<long>(i)) = rows[i].transpose();
  return m;
}

/// All independent subsets of `rows` of size `k`, as index lists.
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
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

}  // namespace

Cone::Cone(int dim, const MatQ& raw_generators) : dim_(dim) {
  if (raw_generators.rows() > 0 && raw_generators.cols() != dim)
    throw std::invalid_argument("Cone: generator width mismatch");
  if (!is_integer(raw_generators))
    throw std::invalid_argument("Cone: integer generators required");
  std::vector<VecQ> prim;
  for (long i = 0; i < raw_generators.rows(); ++i) {
    VecQ v = raw_generators.row(i).transpose();
    if (is_zero(v)) continue;
    v = primitive(v);
    bool dup = false;
    for (const auto& u : prim)
      if (u == v) { dup = true; break; }
    if (!dup) prim.push_back(v);
  }
  MatQ all = stack(prim, dim);
  // pointed iff no generator's negation lies back in the cone
  pointed_ = true;
  for (const auto& v : prim)
    if (cone_contains(all, VecQ(-v))) { pointed_ = false; break; }
  if (pointed_) {
    // keep extreme rays only
    std::vector<VecQ> extreme;
    for (size_t i = 0; i < prim.size(); ++i) {
      std::vector<VecQ> others;
      for (size_t j = 0; j < prim.size(); ++j)
        if (j != i) others.push_back(prim[j]);
      if (!cone_contains(stack(others, dim), prim[i])) extreme.push_back(prim[i]);
    }
    prim = extreme;
  }
  std::sort(prim.begin(), prim.end(), detail::vec_less);
  gens_ = stack(prim, dim);
}

Cone Cone::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  MatQ m = make_mat(rows);
  return Cone(static_cast<int>(m.cols()), m);
}

bool Cone::is_simplicial() const {
  return nrays() == rank(gens_);
}

bool Cone::is_full_dim() const { return rank(gens_) == dim_; }

bool Cone::contains(const VecQ& x) const { return cone_contains(gens_, x); }

VecQ Cone::interior_point() const {
  VecQ p = VecQ::Zero(dim_);
  for (long i = 0; i < gens_.rows(); ++i) p += gens_.row(i).transpose();
  return p;
}

bool cone_contains(const MatQ& generators, const VecQ& x) {
  if (is_zero(x)) return true;
  int n = static_cast<int>(generators.rows());
  int d = static_cast<int>(generators.cols());
  if (n == 0) return false;
  int r = std::min(rank(generators), d);
  for (int k = 1; k <= r; ++k) {
    std::vector<std::vector<int>> idx;
    subsets(n, k, idx);
    for (const auto& s : idx) {
      MatQ sub(k, d);
      for (int i = 0; i < k; ++i) sub.row(i) = generators.row(s[i]);
      if (rank(sub) != k) continue;
      auto c = solve(MatQ(sub.transpose()), x);
      if (!c) continue;
      bool ok = true;
      for (int i = 0; i < k; ++i)
        if ((*c)(i) < Rat(0)) { ok = false; break; }
      if (ok) return true;
    }
  }
  return false;
}

std::vector<VecQ> facet_normals(const Cone& c) {
  if (!c.is_full_dim())
    throw std::invalid_argument("facet_normals: cone must be full-dimensional");
  if (!c.is_pointed())
    throw std::invalid_argument("facet_normals: cone contains a line");
  int d = c.dim();
  int n = c.nrays();
  const MatQ& g = c.generators();
  std::vector<VecQ> normals;
  std::vector<std::vector<int>> idx;
  subsets(n, d - 1, idx);
  if (d == 1) idx.push_back({});  // single facet {0} of a ray
  for (const auto& s : idx) {
    MatQ sub(static_cast<long>(s.size()), d);
    for (size_t i = 0; i < s.size(); ++i) sub.row(static_cast<long>(i)) = g.row(s[i]);
    if (d > 1 && rank(sub) != d - 1) continue;
    MatQ k = kernel(sub.rows() ? sub : MatQ::Zero(1, d));
    if (k.cols() != 1) continue;
    VecQ nvec = primitive_rational(k.col(0));
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
      int sgn = dot(nvec, c.ray(i)).sign();
      if (sgn > 0) ++pos;
      if (sgn < 0) ++neg;
    }
    if (pos && neg) continue;
    if (neg) nvec = -nvec;
    bool dup = false;
    for (const auto& m : normals)
      if (m == nvec) { dup = true; break; }
    if (!dup) normals.push_back(nvec);
  }
  std::sort(normals.begin(), normals.end(), detail::vec_less);
  return normals;
}

Cone dual_cone(const Cone& c) {
  if (!c.is_full_dim())
    throw std::invalid_argument("dual_cone: cone must be full-dimensional");
  int d = c.dim();
  if (c.is_simplicial()) {
    MatQ inv = inverse(c.generators());
    MatQ rays(d, d);
    for (int j = 0; j < d; ++j)
      rays.row(j) = primitive_rational(VecQ(-inv.col(j))).transpose();
    return Cone(d, rays);
  }
  auto normals = facet_normals(c);
  MatQ rays(static_cast<long>(normals.size()), d);
  for (size_t i = 0; i < normals.size(); ++i) rays.row(static_cast<long>(i)) = -normals[i].transpose();
  return Cone(d, rays);
}

std::vector<bool> canonical_strict_flags(const MatQ& gens, const VecQ& base) {
  int d = static_cast<int>(gens.rows());
  MatQ inv = inverse(gens);
  std::vector<bool> strict(d);
  for (int i = 0; i < d; ++i) {
    VecQ normal = inv.col(i);  // inward: alpha_i(x) = <col_i(G^-1), x>
    strict[i] = lex_sign(normal, base) < 0;
  }
  return strict;
}

bool half_open_contains(const HalfOpenCone& h, const VecQ& x) {
  auto alpha = solve(MatQ(h.gens.transpose()), x);
  if (!alpha) return false;
  for (long i = 0; i < alpha->size(); ++i) {
    if ((*alpha)(i) < Rat(0)) return false;
    if ((*alpha)(i).is_zero() && h.strict[static_cast<size_t>(i)]) return false;
  }
  return true;
}

std::vector<std::pair<int, MatQ>> ray_surgery(const MatQ& gens, const VecQ& w) {
  auto alpha_opt = solve(MatQ(gens.transpose()), w);
  if (!alpha_opt) throw std::invalid_argument("ray_surgery: w outside the span");
  VecQ alpha = *alpha_opt;
  VecQ wv = w;
  for (long i = 0; i < alpha.size(); ++i) {
    if (alpha(i).is_zero()) continue;
    if (alpha(i).sign() < 0) { alpha = -alpha; wv = -wv; }
    break;
  }
  std::vector<std::pair<int, MatQ>> out;
  for (long i = 0; i < alpha.size(); ++i) {
    if (alpha(i).is_zero()) continue;
    MatQ g = gens;
    g.row(i) = wv.transpose();
    out.push_back({alpha(i).sign(), g});
  }
  if (out.empty()) throw std::invalid_argument("ray_surgery: zero vector");
  return out;
}

namespace {

struct FacetData {
  VecQ normal;                 // inward
  std::vector<int> ray_index;  // rays on the facet
};

std::vector<FacetData> facets_of_rays(const MatQ& rays, int fdim) {
  // rays: extreme rays of a cone of dimension fdim inside its span
  int n = static_cast<int>(rays.rows());
  int d = static_cast<int>(rays.cols());
  std::vector<FacetData> out;
  std::vector<std::vector<int>> idx;
  subsets(n, fdim - 1, idx);
  for (const auto& s : idx) {
    MatQ sub(static_cast<long>(s.size()), d);
    for (size_t i = 0; i < s.size(); ++i) sub.row(static_cast<long>(i)) = rays.row(s[i]);
    if (rank(sub) != fdim - 1) continue;
    // normal within the span: kernel of [sub; complement-of-span]
    MatQ spanmat = rays;
    MatQ k0 = kernel(spanmat);  // forms vanishing on the whole span
    MatQ test(sub.rows() + k0.cols(), d);
    test.topRows(sub.rows()) = sub;
    for (long j = 0; j < k0.cols(); ++j) test.row(sub.rows() + j) = k0.col(j).transpose();
    MatQ k = kernel(test);
    if (k.cols() != 1) continue;
    VecQ nvec = primitive_rational(k.col(0));
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
      int sgn = dot(nvec, VecQ(rays.row(i).transpose())).sign();
      if (sgn > 0) ++pos;
      if (sgn < 0) ++neg;
    }
    if (pos && neg) continue;
    if (neg) nvec = -nvec;
    FacetData f;
    f.normal = nvec;
    for (int i = 0; i < n; ++i)
      if (dot(nvec, VecQ(rays.row(i).transpose())).is_zero()) f.ray_index.push_back(i);
    bool dup = false;
    for (const auto& o : out)
      if (o.ray_index == f.ray_index) { dup = true; break; }
    if (!dup) out.push_back(f);
  }
  return out;
}

/// Lexicographic pulling triangulation of the ray configuration (rays in a
/// fixed order; the first ray of every sub-configuration is pulled).
/// Returns generator matrices of simplicial cones of dimension fdim.
std::vector<MatQ> pull_triangulate(const MatQ& rays, int fdim) {
  int n = static_cast<int>(rays.rows());
  if (n == fdim) return {rays};
  auto facets = facets_of_rays(rays, fdim);
  VecQ pulled = rays.row(0).transpose();
  std::vector<MatQ> out;
  for (const auto& f : facets) {
    if (dot(f.normal, pulled).is_zero()) continue;  // facet contains the pulled ray
    MatQ frays(static_cast<long>(f.ray_index.size()), rays.cols());
    for (size_t i = 0; i < f.ray_index.size(); ++i)
      frays.row(static_cast<long>(i)) = rays.row(f.ray_index[i]);
    for (const auto& s : pull_triangulate(frays, fdim - 1)) {
      MatQ t(fdim, rays.cols());
      t.row(0) = pulled.transpose();
      t.bottomRows(fdim - 1) = s;
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

HalfOpenDecomp half_open_triangulate(const Cone& c) {
  if (!c.is_pointed())
    throw std::invalid_argument("triangulate: cone contains a line");
  if (!c.is_full_dim())
    throw std::invalid_argument("half_open_triangulate: cone must be full-dimensional");
  HalfOpenDecomp d;
  d.dim = c.dim();
  d.base = c.interior_point();
  for (const auto& g : pull_triangulate(c.generators(), c.dim())) {
    HalfOpenCone h{g, canonical_strict_flags(g, d.base)};
    d.terms.push_back({1, h});
  }
  return d;
}

HalfOpenDecomp make_parallel_to(const HalfOpenDecomp& d, const RationalSubspace& l) {
  HalfOpenDecomp cur = d;
  const MatQ& lbasis = l.lattice_basis();
  bool progressed = true;
  while (progressed) {
    progressed = false;
    HalfOpenDecomp next;
    next.dim = cur.dim;
    next.base = cur.base;
    for (const auto& [sign, h] : cur.terms) {
      // generators already in L
      std::vector<int> in_l;
      for (long i = 0; i < h.gens.rows(); ++i)
        if (l.contains(VecQ(h.gens.row(i).transpose()))) in_l.push_back(static_cast<int>(i));
      MatQ cur_rows(static_cast<long>(in_l.size()), cur.dim);
      for (size_t i = 0; i < in_l.size(); ++i) cur_rows.row(static_cast<long>(i)) = h.gens.row(in_l[i]);
      if (static_cast<int>(in_l.size()) == l.dim()) {
        next.terms.push_back({sign, h});
        continue;
      }
      // first basis vector of L cap Lambda outside the current L-face span
      VecQ w(cur.dim);
      bool found = false;
      for (long t = 0; t < lbasis.rows() && !found; ++t) {
        VecQ cand = lbasis.row(t).transpose();
        if (in_l.empty() || !solve(MatQ(cur_rows.transpose()), cand).has_value()) {
          w = cand;
          found = true;
        }
      }
      if (!found) throw std::logic_error("make_parallel_to: no insertion vector");
      // remove components along the kept L-generators so the surgery never
      // touches them
      VecQ alpha = *solve(MatQ(h.gens.transpose()), w);
      for (int i : in_l) w -= alpha(i) * VecQ(h.gens.row(i).transpose());
      w = primitive_rational(w);
      for (const auto& [s2, g2] : ray_surgery(h.gens, w)) {
        HalfOpenCone h2{g2, canonical_strict_flags(g2, cur.base)};
        next.terms.push_back({sign * s2, h2});
      }
      progressed = true;
    }
    cur = next;
  }
  return cur;
}

SignedConeSum close_mod_lines(const HalfOpenDecomp& d) {
  SignedConeSum out;
  for (const auto& [sign, h] : d.terms) {
    MatQ g = h.gens;
    int flips = 0;
    for (long i = 0; i < g.rows(); ++i)
      if (h.strict[static_cast<size_t>(i)]) {
        g.row(i) = -g.row(i);
        ++flips;
      }
    out.terms.push_back({sign * ((flips % 2) ? -1 : 1), Cone(d.dim, g)});
  }
  return out;
}

SignedConeSum triangulate(const Cone& c) {
  if (!c.is_pointed())
    throw std::invalid_argument("triangulate: cone contains a line");
  if (c.nrays() == 0) return SignedConeSum{};
  if (c.is_full_dim()) return close_mod_lines(half_open_triangulate(c));
  // triangulate inside the span: the span lattice maps isomorphically onto
  // a standard lattice
  RationalSubspace span = saturate(c.generators(), c.dim());
  int k = span.dim();
  MatQ coords(c.nrays(), k);
  for (int i = 0; i < c.nrays(); ++i)
    coords.row(i) = coords_in_basis(span.lattice_basis(), c.ray(i)).transpose();
  SignedConeSum inner = triangulate(Cone(k, coords));
  SignedConeSum out;
  for (const auto& [sign, t] : inner.terms) {
    MatQ lifted = t.generators() * span.lattice_basis();
    out.terms.push_back({sign, Cone(c.dim(), lifted)});
  }
  return out;
}

namespace {

/// Shortest-vector search: nonzero integer z = sum alpha_i u_i with
/// |alpha_i|^d * index <= 1 (Minkowski box), deterministic tie-breaking.
VecQ short_vector(const MatQ& gens) {
  int d = static_cast<int>(gens.rows());
  Rat index = cone_index(gens);
  // z-box bounds: |z_j| <= B * sum_i |u_ij| with B = index^{-1/d}
  std::vector<long> bound(d, 0);
  for (int j = 0; j < d; ++j) {
    Rat s(0);
    for (int i = 0; i < d; ++i) s += abs(gens(i, j));
    long m = 0;
    while (Rat(m + 1).pow(d) * index <= s.pow(d)) ++m;
    bound[j] = m;
  }
  MatQ gt_inv = inverse(MatQ(gens.transpose()));
  std::optional<VecQ> best;
  Rat best_norm(0);
  std::vector<long> z(d, -1);
  for (int j = 0; j < d; ++j) z[j] = -bound[j];
  while (true) {
    VecQ zv(d);
    bool zero = true;
    for (int j = 0; j < d; ++j) {
      zv(j) = Rat(z[j]);
      if (z[j] != 0) zero = false;
    }
    if (!zero) {
      VecQ alpha = gt_inv * zv;
      Rat mx(0);
      bool ok = true;
      for (int i = 0; i < d; ++i) {
        Rat a = abs(alpha(i));
        if (a.pow(d) * index > Rat(1)) { ok = false; break; }
        if (a > mx) mx = a;
      }
      if (ok && (!best || mx < best_norm)) {
        best = zv;
        best_norm = mx;
      }
    }
    int j = d - 1;
    while (j >= 0 && z[j] == bound[j]) { z[j] = -bound[j]; --j; }
    if (j < 0) break;
    ++z[j];
  }
  if (!best) throw std::logic_error("short_vector: Minkowski box was empty");
  return *best;
}

void barvinok_dual_rec(const MatQ& gens, int sign,
                       std::vector<std::pair<int, MatQ>>& out) {
  if (cone_index(gens) == Rat(1)) {
    out.push_back({sign, gens});
    return;
  }
  VecQ z = short_vector(gens);
  for (const auto& [s, g] : ray_surgery(gens, z))
    barvinok_dual_rec(g, sign * s, out);
}

}  // namespace

SignedConeSum barvinok_decompose(const Cone& c) {
  if (!c.is_simplicial() || !c.is_full_dim())
    throw std::invalid_argument("barvinok_decompose: simplicial full-dimensional cone required");
  Cone dual = dual_cone(c);
  std::vector<std::pair<int, MatQ>> dual_terms;
  barvinok_dual_rec(dual.generators(), 1, dual_terms);
  SignedConeSum out;
  for (const auto& [sign, g] : dual_terms)
    out.terms.push_back({sign, dual_cone(Cone(c.dim(), g))});
  return out;
}

SignedConeSum decompose_parallel_to(const Cone& c, const RationalSubspace& l) {
  if (!c.is_full_dim())
    throw std::invalid_argument("decompose_parallel_to: full-dimensional cone required");
  if (!c.is_pointed())
    throw std::invalid_argument("decompose_parallel_to: cone contains a line");
  if (l.ambient_dim() != c.dim())
    throw std::invalid_argument("decompose_parallel_to: ambient mismatch");
  HalfOpenDecomp d = half_open_triangulate(c);
  if (l.dim() > 0) d = make_parallel_to(d, l);
  return close_mod_lines(d);
}

std::vector<int> generators_in_subspace(const Cone& c, const RationalSubspace& l) {
  std::vector<int> idx;
  for (int i = 0; i < c.nrays(); ++i)
    if (l.contains(c.ray(i))) idx.push_back(i);
  if (static_cast<int>(idx.size()) != l.dim())
    throw std::logic_error("generators_in_subspace: face does not match L");
  MatQ sub(static_cast<long>(idx.size()), c.dim());
  for (size_t i = 0; i < idx.size(); ++i) sub.row(static_cast<long>(i)) = c.generators().row(idx[i]);
  if (rank(sub) != l.dim())
    throw std::logic_error("generators_in_subspace: generators do not span L");
  return idx;
}

std::vector<RationalSubspace> face_subspaces(const Cone& c, int k) {
  if (!c.is_full_dim() || !c.is_pointed())
    throw std::invalid_argument("face_subspaces: pointed full-dimensional cone required");
  if (k < 0 || k > c.dim())
    throw std::invalid_argument("face_subspaces: bad codimension bound");
  int d = c.dim();
  std::vector<RationalSubspace> fam{RationalSubspace::full(d)};
  if (k > 0) {
    auto normals = facet_normals(c);
    int nf = static_cast<int>(normals.size());
    // faces = intersections of facets; lin(face) = span of incident rays
    std::vector<std::vector<int>> idx;
    for (int take = 1; take <= std::min(nf, k); ++take) subsets(nf, take, idx);
    for (const auto& s : idx) {
      std::vector<VecQ> rays;
      for (int i = 0; i < c.nrays(); ++i) {
        bool on_all = true;
        for (int j : s)
          if (!dot(normals[j], c.ray(i)).is_zero()) { on_all = false; break; }
        if (on_all) rays.push_back(c.ray(i));
      }
      MatQ m = stack(rays, d);
      RationalSubspace span = saturate(m, d);
      if (d - span.dim() > k) continue;
      fam.push_back(span);
    }
  }
  // close under sum, deduplicate by canonical key
  std::map<std::string, RationalSubspace> byKey;
  for (const auto& s : fam) byKey.emplace(s.key(), s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RationalSubspace> cur;
    for (const auto& [key, s] : byKey) cur.push_back(s);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        RationalSubspace sum = cur[i].sum(cur[j]);
        if (!byKey.count(sum.key())) {
          byKey.emplace(sum.key(), sum);
          grew = true;
        }
      }
  }
  std::vector<RationalSubspace> out;
  for (const auto& [key, s] : byKey) out.push_back(s);
  return out;
}

}  // namespace conesum
