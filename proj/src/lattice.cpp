#include "conesum/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace conesum {

Lattice Lattice::standard(int dim) {
  Lattice l;
  l.dim = dim;
  l.basis = MatQ::Identity(dim, dim);
  return l;
}

RationalSubspace::RationalSubspace(int ambient_dim, MatQ saturated_basis)
    : ambient_dim_(ambient_dim), basis_(std::move(saturated_basis)) {
  if (basis_.cols() != ambient_dim_ && basis_.rows() > 0)
    throw std::invalid_argument("RationalSubspace: basis width mismatch");
  if (basis_.rows() == 0) basis_ = MatQ(0, ambient_dim_);
  if (!is_integer(basis_))
    throw std::invalid_argument("RationalSubspace: basis must be integer");
  if (rank(basis_) != basis_.rows())
    throw std::invalid_argument("RationalSubspace: basis rows dependent");
}

RationalSubspace RationalSubspace::zero(int ambient_dim) {
  return RationalSubspace(ambient_dim, MatQ(0, ambient_dim));
}

RationalSubspace RationalSubspace::full(int ambient_dim) {
  return RationalSubspace(ambient_dim, MatQ::Identity(ambient_dim, ambient_dim));
}

bool RationalSubspace::contains(const VecQ& v) const {
  if (conesum::is_zero(v)) return true;
  if (dim() == 0) return false;
  MatQ bt = basis_.transpose();
  return solve(bt, v).has_value();
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  for (long i = 0; i < other.basis_.rows(); ++i)
    if (!contains(VecQ(other.basis_.row(i).transpose()))) return false;
  return true;
}

RationalSubspace RationalSubspace::sum(const RationalSubspace& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw std::invalid_argument("subspace sum: ambient dim mismatch");
  MatQ stacked(basis_.rows() + other.basis_.rows(), ambient_dim_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.bottomRows(other.basis_.rows()) = other.basis_;
  return saturate(stacked, ambient_dim_);
}

MatQ RationalSubspace::perp_lattice_basis() const {
  if (dim() == ambient_dim_) return MatQ(0, ambient_dim_);
  if (dim() == 0) return MatQ::Identity(ambient_dim_, ambient_dim_);
  return projected_lattice(*this).map;
}

std::string RationalSubspace::key() const {
  MatQ h = hnf(basis_).h;
  std::ostringstream os;
  os << ambient_dim_ << ';' << dim() << ';';
  for (long i = 0; i < dim(); ++i)
    for (long j = 0; j < ambient_dim_; ++j) os << h(i, j) << ',';
  return os.str();
}

RationalSubspace saturate(const MatQ& generators, int ambient_dim) {
  if (generators.rows() == 0)
    return RationalSubspace::zero(ambient_dim);
  if (generators.cols() != ambient_dim)
    throw std::invalid_argument("saturate: width mismatch");
  if (!is_integer(generators))
    throw std::invalid_argument("saturate: integer generators required");
  SnfResult s = snf(generators);
  // span_Z(A) = span_Z{ d_i * row_i(W^-1) }, so the first rank rows of
  // W^-1 are a saturated basis of span_R(A) cap Z^d.
  MatQ sat = s.w_inv.topRows(s.rank);
  return RationalSubspace(ambient_dim, hnf(sat).h.topRows(s.rank));
}

Projection projected_lattice(const RationalSubspace& l) {
  int d = l.ambient_dim();
  int r = l.dim();
  if (r == d)
    throw std::invalid_argument("projected_lattice: quotient is zero-dimensional");
  Projection p;
  if (r == 0) {
    p.map = MatQ::Identity(d, d);
    p.lift = MatQ::Identity(d, d);
    p.quotient_lattice = Lattice::standard(d);
    return p;
  }
  SnfResult s = snf(l.lattice_basis());
  if (s.rank != r) throw std::logic_error("projected_lattice: rank mismatch");
  // Rows of W^-1 form a Z-basis of Z^d whose first r rows span L cap Z^d.
  // Coordinates w.r.t. that basis are x^T W; dropping the first r gives an
  // integer map with kernel L that maps Z^d onto Z^{d-r}.
  p.map = s.w.rightCols(d - r).transpose();
  p.lift = s.w_inv.bottomRows(d - r).transpose();
  MatQ check = p.map * p.lift;
  if (check != MatQ::Identity(d - r, d - r))
    throw std::logic_error("projected_lattice: lift is not a section");
  p.quotient_lattice = Lattice::standard(d - r);
  return p;
}

VecQ coords_in_basis(const MatQ& basis, const VecQ& v) {
  auto c = solve(basis.transpose(), v);
  if (!c) throw std::invalid_argument("coords_in_basis: vector not in span");
  return *c;
}

}  // namespace conesum
