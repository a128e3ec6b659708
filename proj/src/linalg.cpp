#include "conesum/linalg.hpp"

#include <stdexcept>

namespace conesum {

MatQ make_mat(std::initializer_list<std::initializer_list<long>> rows) {
  long nr = static_cast<long>(rows.size());
  long nc = nr ? static_cast<long>(rows.begin()->size()) : 0;
  MatQ m(nr, nc);
  long i = 0;
  for (const auto& row : rows) {
    if (static_cast<long>(row.size()) != nc)
      throw std::invalid_argument("make_mat: ragged rows");
    long j = 0;
    for (long x : row) m(i, j++) = Rat(x);
    ++i;
  }
  return m;
}

VecQ make_vec(std::initializer_list<long> entries) {
  VecQ v(static_cast<long>(entries.size()));
  long i = 0;
  for (long x : entries) v(i++) = Rat(x);
  return v;
}

VecQ make_vec_rat(std::initializer_list<Rat> entries) {
  VecQ v(static_cast<long>(entries.size()));
  long i = 0;
  for (const Rat& x : entries) v(i++) = x;
  return v;
}

bool is_integer(const MatQ& a) {
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_integer()) return false;
  return true;
}

bool is_integer(const VecQ& v) {
  for (long i = 0; i < v.size(); ++i)
    if (!v(i).is_integer()) return false;
  return true;
}

bool is_zero(const VecQ& v) {
  for (long i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

Rat dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (long i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rat det(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  if (a.rows() == 0) return Rat(1);
  return Eigen::FullPivLU<MatQ>(a).determinant();
}

int rank(const MatQ& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<int>(Eigen::FullPivLU<MatQ>(a).rank());
}

MatQ inverse(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  Eigen::FullPivLU<MatQ> lu(a);
  if (lu.rank() != a.rows()) throw std::invalid_argument("inverse: singular");
  return lu.inverse();
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.cols() == 0) {
    if (is_zero(b)) return VecQ(0);
    return std::nullopt;
  }
  Eigen::FullPivLU<MatQ> lu(a);
  VecQ x = lu.solve(b);
  VecQ r = a * x - b;
  if (!is_zero(r)) return std::nullopt;
  return x;
}

MatQ kernel(const MatQ& a) {
  if (a.cols() == 0) return MatQ(0, 0);
  Eigen::FullPivLU<MatQ> lu(a);
  if (lu.dimensionOfKernel() == 0) return MatQ(a.cols(), 0);
  return lu.kernel();
}

namespace {

void check_integer(const MatQ& a, const char* who) {
  if (!is_integer(a)) throw std::invalid_argument(std::string(who) + ": matrix must be integer");
}

void swap_rows(MatQ& m, long i, long j) { m.row(i).swap(m.row(j)); }

}  // namespace

HnfResult hnf(const MatQ& a) {
  check_integer(a, "hnf");
  long m = a.rows(), n = a.cols();
  MatQ h = a;
  MatQ u = MatQ::Identity(m, m);
  long r = 0;  // next pivot row
  for (long j = 0; j < n && r < m; ++j) {
    // euclidean elimination in column j, rows >= r
    while (true) {
      long piv = -1;
      for (long i = r; i < m; ++i)
        if (!h(i, j).is_zero() && (piv < 0 || abs(h(i, j)) < abs(h(piv, j))))
          piv = i;
      if (piv < 0) break;
      if (piv != r) { swap_rows(h, r, piv); swap_rows(u, r, piv); }
      bool clean = true;
      for (long i = r + 1; i < m; ++i) {
        if (h(i, j).is_zero()) continue;
        Rat q = fdiv_int(h(i, j), h(r, j));
        h.row(i) -= q * h.row(r);
        u.row(i) -= q * u.row(r);
        if (!h(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (h(r, j).is_zero()) continue;
    if (h(r, j).sign() < 0) { h.row(r) = -h.row(r); u.row(r) = -u.row(r); }
    // reduce entries above the pivot into [0, pivot)
    for (long i = 0; i < r; ++i) {
      Rat q = fdiv_int(h(i, j), h(r, j));
      if (!q.is_zero()) { h.row(i) -= q * h.row(r); u.row(i) -= q * u.row(r); }
    }
    ++r;
  }
  return {h, u};
}

SnfResult snf(const MatQ& a) {
  check_integer(a, "snf");
  long m = a.rows(), n = a.cols();
  MatQ d = a;
  MatQ u = MatQ::Identity(m, m);
  MatQ w = MatQ::Identity(n, n);
  long r = 0;
  while (r < m && r < n) {
    // find a nonzero entry in the remaining block
    long pi = -1, pj = -1;
    for (long i = r; i < m; ++i)
      for (long j = r; j < n; ++j)
        if (!d(i, j).is_zero() &&
            (pi < 0 || abs(d(i, j)) < abs(d(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    if (pi != r) { swap_rows(d, r, pi); swap_rows(u, r, pi); }
    if (pj != r) { d.col(r).swap(d.col(pj)); w.col(r).swap(w.col(pj)); }
    bool dirty = false;
    for (long i = r + 1; i < m; ++i) {
      if (d(i, r).is_zero()) continue;
      Rat q = fdiv_int(d(i, r), d(r, r));
      d.row(i) -= q * d.row(r);
      u.row(i) -= q * u.row(r);
      if (!d(i, r).is_zero()) dirty = true;
    }
    for (long j = r + 1; j < n; ++j) {
      if (d(r, j).is_zero()) continue;
      Rat q = fdiv_int(d(r, j), d(r, r));
      d.col(j) -= q * d.col(r);
      w.col(j) -= q * w.col(r);
      if (!d(r, j).is_zero()) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared, redo this pivot
    if (d(r, r).sign() < 0) { d.row(r) = -d.row(r); u.row(r) = -u.row(r); }
    ++r;
  }
  SnfResult res;
  res.d = d;
  res.u = u;
  res.w = w;
  res.rank = static_cast<int>(r);
  res.w_inv = inverse(w);
  if (!is_integer(res.w_inv)) throw std::logic_error("snf: W not unimodular");
  return res;
}

VecQ primitive(const VecQ& v) {
  if (!is_integer(v)) throw std::invalid_argument("primitive: integer vector required");
  if (is_zero(v)) throw std::invalid_argument("primitive: zero vector");
  Rat g(0);
  for (long i = 0; i < v.size(); ++i) g = gcd_int(g, v(i));
  VecQ out = v;
  for (long i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

VecQ primitive_rational(const VecQ& v) {
  if (is_zero(v)) throw std::invalid_argument("primitive_rational: zero vector");
  Rat lcm(1);
  for (long i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    Rat den(v(i).den());
    lcm = lcm * den / gcd_int(lcm, den);
  }
  VecQ w = v * lcm;
  Rat g(0);
  for (long i = 0; i < w.size(); ++i) g = gcd_int(g, w(i));
  return w / g;
}

Rat cone_index(const MatQ& generators) {
  Rat d = det(generators);
  if (d.is_zero()) throw std::invalid_argument("cone_index: dependent generators");
  return abs(d);
}

int lex_sign(const VecQ& g, const VecQ& q) {
  if (g.size() != q.size()) throw std::invalid_argument("lex_sign: size mismatch");
  Rat head = dot(g, q);
  if (!head.is_zero()) return head.sign();
  for (long i = 0; i < g.size(); ++i)
    if (!g(i).is_zero()) return g(i).sign();
  throw std::invalid_argument("lex_sign: zero covector");
}

}  // namespace conesum
