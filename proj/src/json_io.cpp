#include "conesum/json_io.hpp"

#include <stdexcept>

namespace conesum {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Json::other_error::create(799, "schema: " + what, nullptr);
}

void expect(bool cond, const char* what) {
  if (!cond) schema_error(what);
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  expect(j.is_string(), "rational must be a string 'p/q' or an integer");
  return Rat::parse(j.get<std::string>());
}

Json vec_to_json(const VecQ& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) {
    if (v(i).is_integer() && v(i).num().fits_slong_p())
      a.push_back(static_cast<long>(v(i).num().get_si()));
    else
      a.push_back(v(i).str());
  }
  return a;
}

VecQ vec_from_json(const Json& j) {
  expect(j.is_array(), "vector must be an array");
  VecQ v(static_cast<long>(j.size()));
  long i = 0;
  for (const auto& x : j) v(i++) = rat_from_json(x);
  return v;
}

Json mat_to_json(const MatQ& m) {
  Json a = Json::array();
  for (long i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i).transpose()));
  return a;
}

MatQ mat_from_json(const Json& j, int expect_cols) {
  expect(j.is_array(), "matrix must be an array of rows");
  long rows = static_cast<long>(j.size());
  if (rows == 0) return MatQ(0, std::max(expect_cols, 0));
  VecQ first = vec_from_json(j.at(0));
  long cols = first.size();
  if (expect_cols >= 0) expect(cols == expect_cols, "matrix row width mismatch");
  MatQ m(rows, cols);
  m.row(0) = first.transpose();
  for (long i = 1; i < rows; ++i) {
    VecQ v = vec_from_json(j.at(static_cast<size_t>(i)));
    expect(v.size() == cols, "ragged matrix rows");
    m.row(i) = v.transpose();
  }
  return m;
}

Json cone_to_json(const Cone& c) {
  Json j;
  j["dim"] = c.dim();
  j["generators"] = mat_to_json(c.generators());
  return j;
}

Cone cone_from_json(const Json& j) {
  expect(j.is_object() && j.contains("dim") && j.contains("generators"),
         "cone needs 'dim' and 'generators'");
  int dim = j.at("dim").get<int>();
  return Cone(dim, mat_from_json(j.at("generators"), dim));
}

Json signed_cone_sum_to_json(const SignedConeSum& s) {
  Json terms = Json::array();
  for (const auto& [sign, c] : s.terms) {
    Json t;
    t["sign"] = sign;
    t["generators"] = mat_to_json(c.generators());
    terms.push_back(t);
  }
  Json j;
  j["terms"] = terms;
  return j;
}

SignedConeSum signed_cone_sum_from_json(const Json& j, int dim) {
  expect(j.is_object() && j.contains("terms"), "signed cone sum needs 'terms'");
  SignedConeSum out;
  for (const auto& t : j.at("terms")) {
    expect(t.contains("sign") && t.contains("generators"),
           "term needs 'sign' and 'generators'");
    int sign = t.at("sign").get<int>();
    expect(sign == 1 || sign == -1, "sign must be +-1");
    out.terms.push_back({sign, Cone(dim, mat_from_json(t.at("generators"), dim))});
  }
  return out;
}

Json subspace_to_json(const RationalSubspace& l) {
  Json j;
  j["generators"] = mat_to_json(l.lattice_basis());
  return j;
}

RationalSubspace subspace_from_json(const Json& j, int ambient_dim) {
  expect(j.is_object() && j.contains("generators"), "subspace needs 'generators'");
  return saturate(mat_from_json(j.at("generators"), ambient_dim), ambient_dim);
}

Json component_to_json(const HCompQ& h) {
  Json j;
  j["degree"] = h.degree;
  Json den = Json::array();
  for (const auto& d : h.denoms) den.push_back(vec_to_json(d));
  j["denominator"] = den;
  Json num = Json::array();
  for (const auto& [e, c] : h.num.coeffs()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = rat_to_json(c);
    num.push_back(t);
  }
  j["numerator"] = num;
  return j;
}

Json quasi_component_to_json(const QuasiComponent& qc) {
  Json j;
  j["degree"] = qc.degree;
  Json entries = Json::array();
  for (const auto& e : qc.entries) {
    Json je = component_to_json(e.comp);
    Json steps = Json::array();
    for (const auto& [eta, power] : e.step.factors()) {
      Json f;
      f["eta"] = vec_to_json(eta);
      f["power"] = power;
      steps.push_back(f);
    }
    je["step_factors"] = steps;
    je["s_poly"] = e.s_power.empty() ? Json(std::vector<int>(static_cast<size_t>(qc.dim), 0))
                                     : Json(e.s_power);
    entries.push_back(je);
  }
  j["entries"] = entries;
  return j;
}

Json polytope_to_json(const Polytope& p) {
  Json ineqs = Json::array();
  for (const auto& h : p.inequalities()) {
    Json j;
    j["a"] = vec_to_json(h.a);
    j["b"] = rat_to_json(h.b);
    ineqs.push_back(j);
  }
  Json j;
  j["inequalities"] = ineqs;
  return j;
}

Polytope polytope_from_json(const Json& j) {
  expect(j.is_object() && j.contains("inequalities"), "polytope needs 'inequalities'");
  const auto& arr = j.at("inequalities");
  expect(arr.is_array() && !arr.empty(), "inequalities must be a nonempty array");
  std::vector<Halfspace> hs;
  int dim = -1;
  for (const auto& t : arr) {
    expect(t.contains("a") && t.contains("b"), "inequality needs 'a' and 'b'");
    VecQ a = vec_from_json(t.at("a"));
    if (dim < 0) dim = static_cast<int>(a.size());
    expect(static_cast<int>(a.size()) == dim, "inequality width mismatch");
    hs.push_back({a, rat_from_json(t.at("b"))});
  }
  return Polytope(dim, hs);
}

Json weight_to_json(const Weight& w) {
  Json monos = Json::array();
  for (const auto& [e, c] : w.monomials) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = rat_to_json(c);
    monos.push_back(t);
  }
  Json j;
  j["monomials"] = monos;
  return j;
}

Weight weight_from_json(const Json& j, int dim) {
  expect(j.is_object() && j.contains("monomials"), "weight needs 'monomials'");
  Weight w;
  w.dim = dim;
  for (const auto& t : j.at("monomials")) {
    expect(t.contains("exponents") && t.contains("coeff"),
           "monomial needs 'exponents' and 'coeff'");
    std::vector<int> e = t.at("exponents").get<std::vector<int>>();
    expect(static_cast<int>(e.size()) == dim, "monomial arity mismatch");
    Rat c = rat_from_json(t.at("coeff"));
    auto it = w.monomials.find(e);
    if (it == w.monomials.end()) w.monomials[e] = c;
    else it->second += c;
  }
  return w;
}

}  // namespace conesum
