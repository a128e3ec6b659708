#include "conesum/cli.hpp"

#include <stdexcept>

#include "conesum/json_io.hpp"
#include "conesum/rng.hpp"

namespace conesum::cli {

namespace {

struct VerifyFailure : std::runtime_error {
  Json witness;
  VerifyFailure(const std::string& what, Json w)
      : std::runtime_error(what), witness(std::move(w)) {}
};

RationalSubspace line_subspace(std::initializer_list<long> v, int dim) {
  return saturate(MatQ(make_vec(v).transpose()), dim);
}

Cone random_simplicial_cone(Rng& rng, int dim, long max_index) {
  while (true) {
    MatQ g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = Rat(rng.integer(-3, 3));
    if (det(g).is_zero() || abs(det(g)) > Rat(max_index)) continue;
    Cone c(dim, g);
    if (c.is_simplicial() && c.is_full_dim()) return c;
  }
}

std::pair<int, int> resolve_orders(const Json& in, const JobSpec& job, int dim) {
  int lo = -dim, hi = 2;
  if (in.contains("orders")) {
    lo = in.at("orders").at(0).get<int>();
    hi = in.at("orders").at(1).get<int>();
  }
  if (job.m_min != JobSpec::kUnset) lo = job.m_min;
  if (job.m_max != JobSpec::kUnset) hi = job.m_max;
  if (lo > hi) throw std::invalid_argument("orders: m_min > m_max");
  if (lo < -dim) lo = -dim;
  return {lo, hi};
}

Json do_decompose(const Json& in) {
  Cone c = cone_from_json(in.at("cone"));
  std::string mode = in.value("mode", std::string("triangulate"));
  SignedConeSum out;
  if (mode == "triangulate") out = triangulate(c);
  else if (mode == "barvinok") out = barvinok_decompose(c);
  else if (mode == "parallel")
    out = decompose_parallel_to(c, subspace_from_json(in.at("L"), c.dim()));
  else throw std::invalid_argument("decompose: unknown mode '" + mode + "'");
  Json j = signed_cone_sum_to_json(out);
  j["mode"] = mode;
  return j;
}

Json do_genfun(const Json& in, const JobSpec& job) {
  GenFunRequest req;
  req.cone = cone_from_json(in.at("cone"));
  int d = req.cone.dim();
  req.l = in.contains("L") ? subspace_from_json(in.at("L"), d)
                           : RationalSubspace::zero(d);
  auto [lo, hi] = resolve_orders(in, job, d);
  req.m_min = lo;
  req.m_max = hi;
  std::string fn = in.value("function", std::string("S"));
  if (fn == "S") req.which = GenFunKind::S;
  else if (fn == "M") req.which = GenFunKind::M;
  else if (fn == "I") req.which = GenFunKind::I;
  else throw std::invalid_argument("genfun: unknown function '" + fn + "'");

  const Json& apex = in.at("apex");
  Json out;
  out["function"] = fn;
  out["orders"] = {lo, hi};
  if (apex.is_string() && apex.get<std::string>() == "symbolic") {
    if (req.which == GenFunKind::I) {
      // I(c) carries no apex dependence; emit plain components
      GermQ g = integral_M_germ(req.cone, hi);
      Json arr = Json::array();
      for (int m = lo; m <= hi; ++m) arr.push_back(component_to_json(component(g, m)));
      out["components"] = arr;
      return out;
    }
    req.apex = ApexSpec::make_symbolic();
    Json arr = Json::array();
    for (const auto& [m, qc] : genfun_symbolic_components(req))
      arr.push_back(quasi_component_to_json(qc));
    out["quasi_components"] = arr;
    Json psi = Json::array();
    for (const auto& eta : psi_set(req.cone, req.l)) psi.push_back(vec_to_json(eta));
    out["psi"] = psi;
    return out;
  }
  if (!(apex.is_object() && apex.contains("concrete")))
    throw std::invalid_argument("apex must be 'symbolic' or {\"concrete\": [..]}");
  VecQ s = vec_from_json(apex.at("concrete"));
  if (s.size() != d) throw std::invalid_argument("apex dimension mismatch");
  req.apex = ApexSpec::concrete(s);
  Json arr = Json::array();
  for (const auto& [m, h] : genfun_components(req))
    arr.push_back(component_to_json(h));
  out["components"] = arr;
  return out;
}

Json do_patched(const Json& in, const JobSpec& job) {
  Cone c = cone_from_json(in.at("cone"));
  int d = c.dim();
  auto [lo, hi] = resolve_orders(in, job, d);
  SubspacePoset family;
  if (in.contains("k")) {
    family = close_under_sum(face_subspaces(c, in.at("k").get<int>()), d);
  } else {
    const Json& fam = in.at("family");
    std::vector<RationalSubspace> subs;
    for (const auto& sj : fam.at("subspaces"))
      subs.push_back(subspace_from_json(sj, d));
    family = close_under_sum(subs, d);
    if (!fam.value("close_under_sum", true) && family.size() != static_cast<int>(subs.size()))
      throw std::invalid_argument("family is not closed under sum");
  }
  PatchingFunction rho = patching_function(family);
  {
    PatchingFunction check = patching_function_by_normalization(family);
    if (check.rho != rho.rho)
      throw std::logic_error("patched: Moebius and normalization disagree");
  }
  VecQ s = vec_from_json(in.at("apex").at("concrete"));
  std::string fn = in.value("function", std::string("S"));
  auto comps = (fn == "M") ? patched_M_components(c, family, rho, s, hi)
                           : patched_S_components(c, family, rho, s, hi);
  Json out;
  Json rho_json = Json::array();
  for (int i = 0; i < family.size(); ++i) {
    Json r;
    r["subspace"] = subspace_to_json(family.elements()[static_cast<size_t>(i)]);
    r["rho"] = rat_to_json(rho.rho[static_cast<size_t>(i)]);
    rho_json.push_back(r);
  }
  out["rho"] = rho_json;
  Json arr = Json::array();
  for (int m = lo; m <= hi; ++m) arr.push_back(component_to_json(comps.at(m)));
  out["components"] = arr;
  return out;
}

Json do_sum(const Json& in, bool oracle) {
  Polytope p = polytope_from_json(in.at("polytope"));
  RationalSubspace l = in.contains("L") ? subspace_from_json(in.at("L"), p.dim())
                                        : RationalSubspace::zero(p.dim());
  Weight h = in.contains("weight") ? weight_from_json(in.at("weight"), p.dim())
                                   : Weight::one(p.dim());
  Rat value = oracle ? oracle_intermediate_sum(p, l, h) : weighted_sum(p, l, h);
  Json out;
  out["value"] = rat_to_json(value);
  return out;
}

// ---- verify suites ----

Json case_entry(const std::string& name, bool pass, Json witness = Json()) {
  Json j;
  j["case"] = name;
  j["pass"] = pass;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

void require_case(Json& cases, const std::string& name, bool pass, Json witness) {
  cases.push_back(case_entry(name, pass, witness));
  if (!pass) throw VerifyFailure("verify case failed: " + name, cases.back());
}

bool germ_components_equal(const GermQ& a, const GermQ& b, int lo, int hi) {
  for (int m = lo; m <= hi; ++m)
    if (!hc_equal(component(a, m), component(b, m))) return false;
  return true;
}

Json verify_valuation(Rng& rng, Json& cases) {
  for (int trial = 0; trial < 4; ++trial) {
    int dim = 2 + (trial % 2);
    Cone c = random_simplicial_cone(rng, dim, 5);
    VecQ s = rng.rational_vector(dim, 4, 3);
    RationalSubspace l0 = RationalSubspace::zero(dim);
    GermQ whole = intermediate_M_germ(c, l0, s, 1);
    GermQ sum = GermQ::zero(dim);
    for (const auto& [sign, t] : barvinok_decompose(c).terms)
      sum = sum + intermediate_M_germ(t, l0, s, 1).scale_rat(Rat(sign));
    Json witness;
    witness["cone"] = cone_to_json(c);
    witness["s"] = vec_to_json(s);
    require_case(cases, "barvinok-valuation-" + std::to_string(trial),
                 germ_components_equal(whole, sum, -dim, 1), witness);
  }
  {
    // non-simplicial: cone over a square, triangulation valuation
    Cone square = Cone::from_rows({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
    VecQ s = rng.rational_vector(3, 3, 3);
    RationalSubspace l = line_subspace({0, 0, 1}, 3);
    GermQ whole = intermediate_M_germ(square, l, s, 0);
    GermQ sum = GermQ::zero(3);
    for (const auto& [sign, t] : triangulate(square).terms)
      sum = sum + intermediate_M_germ(t, l, s, 0).scale_rat(Rat(sign));
    Json witness;
    witness["cone"] = cone_to_json(square);
    witness["s"] = vec_to_json(s);
    require_case(cases, "triangulate-valuation-square",
                 germ_components_equal(whole, sum, -3, 0), witness);
  }
  return Json();
}

Json verify_approximation(Rng& rng, Json& cases) {
  for (int trial = 0; trial < 4; ++trial) {
    int dim = 2 + (trial % 2);
    Cone c = random_simplicial_cone(rng, dim, 4);
    VecQ s = rng.rational_vector(dim, 3, 3);
    for (int k = 0; k <= dim; ++k) {
      auto family = close_under_sum(face_subspaces(c, k), dim);
      auto res = approximation_check(c, k, family, s, -dim + k + 1);
      Json witness;
      witness["cone"] = cone_to_json(c);
      witness["k"] = k;
      witness["s"] = vec_to_json(s);
      require_case(cases,
                   "approximation-" + std::to_string(trial) + "-k" + std::to_string(k),
                   res.admissible && res.pass, witness);
    }
  }
  return Json();
}

Json verify_residue(Rng& rng, Json& cases) {
  auto check = [&](const std::string& name, const Cone& c, const RationalSubspace& l,
                   const VecQ& s, const VecQ& v, int order) {
    auto r = residue_restriction(c, l, s, v, order);
    bool ok = true;
    for (int m = -(c.dim() - 1); m <= order - 1; ++m) {
      HCompQ lhs = component(r.restricted, m);
      HCompQ rhs = component(r.expected, m);
      if (!hc_equal(lhs, rhs)) ok = false;
    }
    Json witness;
    witness["cone"] = cone_to_json(c);
    witness["v"] = vec_to_json(v);
    witness["s"] = vec_to_json(s);
    witness["is_edge"] = r.is_edge;
    require_case(cases, name, ok, witness);
  };
  Cone quadrant = Cone::from_rows({{1, 0}, {0, 1}});
  VecQ s = rng.rational_vector(2, 4, 3);
  check("residue-quadrant-e1", quadrant, RationalSubspace::zero(2), s,
        make_vec({1, 0}), 2);
  check("residue-quadrant-e2", quadrant, line_subspace({1, -1}, 2), s,
        make_vec({0, 1}), 2);
  check("residue-quadrant-nonedge", quadrant, line_subspace({1, 1}, 2), s,
        make_vec({1, 1}), 2);
  Cone oct = Cone::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  check("residue-octant-e3", oct, line_subspace({0, 0, 1}, 3),
        rng.rational_vector(3, 3, 3), make_vec({0, 0, 1}), 1);
  for (int trial = 0; trial < 3; ++trial) {
    Cone c = random_simplicial_cone(rng, 2, 4);
    check("residue-random-" + std::to_string(trial), c, RationalSubspace::zero(2),
          rng.rational_vector(2, 3, 3), c.ray(0), 2);
  }
  return Json();
}

Json verify_continuity(Rng& rng, Json& cases) {
  struct Instance {
    Cone c;
    RationalSubspace l;
    int m;
    VecQ s0;
    VecQ v;
  };
  Cone ray = Cone::from_rows({{1}});
  Cone quadrant = Cone::from_rows({{1, 0}, {0, 1}});
  std::vector<Instance> instances = {
      {ray, RationalSubspace::zero(1), 1, make_vec({0}), make_vec({-1})},
      {ray, RationalSubspace::zero(1), 2, make_vec({2}), make_vec({-1})},
      {quadrant, line_subspace({1, 1}, 2), 0, make_vec({0, 0}), make_vec({-1, -2})},
      {quadrant, line_subspace({1, 1}, 2), 1, make_vec({0, 0}), make_vec({-2, -1})},
      {quadrant, RationalSubspace::zero(2), 0, make_vec({0, 0}), make_vec({-1, -3})},
      {quadrant, RationalSubspace::full(2), 0, make_vec({0, 0}),
       rng.rational_vector(2, 3, 2)},
  };
  int i = 0;
  for (const auto& inst : instances) {
    Json witness;
    witness["cone"] = cone_to_json(inst.c);
    witness["m"] = inst.m;
    witness["s0"] = vec_to_json(inst.s0);
    witness["v"] = vec_to_json(inst.v);
    require_case(cases, "continuity-" + std::to_string(i++),
                 one_sided_limit_check(inst.c, inst.l, inst.m, inst.s0, inst.v),
                 witness);
  }
  return Json();
}

Json verify_poisson(const JobSpec& job, Json& cases) {
  {
    Cone ray = Cone::from_rows({{1}});
    PoissonResult r = poisson_truncated(ray, RationalSubspace::zero(1),
                                        make_vec_rat({Rat(1, 3)}), 2,
                                        job.poisson_radius, make_vec({1}));
    Json witness;
    witness["abs_error"] = r.abs_error;
    witness["gamma_count"] = r.gamma_count;
    witness["tolerance"] = job.float_tol;
    require_case(cases, "poisson-dim1-bernoulli", r.abs_error <= job.float_tol, witness);
  }
  {
    Cone quadrant = Cone::from_rows({{1, 0}, {0, 1}});
    PoissonResult r = poisson_truncated(quadrant, line_subspace({1, 1}, 2),
                                        make_vec_rat({Rat(1, 5), Rat(1, 7)}), 0, 50,
                                        make_vec({2, 3}));
    Json witness;
    witness["abs_error"] = r.abs_error;
    witness["gamma_count"] = r.gamma_count;
    witness["tolerance"] = 1e-2;
    require_case(cases, "poisson-dim2-diagonal", r.abs_error <= 1e-2, witness);
  }
  return Json();
}

Json do_verify(const Json& in, const JobSpec& job) {
  std::string suite = in.at("suite").get<std::string>();
  Rng rng(job.seed);
  Json out;
  out["suite"] = suite;
  Json cases = Json::array();
  if (suite == "valuation") verify_valuation(rng, cases);
  else if (suite == "approximation") verify_approximation(rng, cases);
  else if (suite == "residue") verify_residue(rng, cases);
  else if (suite == "continuity") verify_continuity(rng, cases);
  else if (suite == "poisson") verify_poisson(job, cases);
  else throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  out["cases"] = cases;
  out["pass"] = true;
  return out;
}

}  // namespace

RunResult run(const JobSpec& job) {
  Json report;
  report["command"] = job.command;
  report["seed"] = job.seed;
  try {
    Json in = Json::parse(job.input_text);
    Json body;
    if (job.command == "decompose") body = do_decompose(in);
    else if (job.command == "genfun") body = do_genfun(in, job);
    else if (job.command == "patched") body = do_patched(in, job);
    else if (job.command == "sum") body = do_sum(in, false);
    else if (job.command == "oracle") body = do_sum(in, true);
    else if (job.command == "verify") body = do_verify(in, job);
    else throw std::invalid_argument("unknown command '" + job.command + "'");
    report["result"] = body;
    return {0, report.dump(2) + "\n"};
  } catch (const VerifyFailure& e) {
    report["error"] = e.what();
    report["counterexample"] = e.witness;
    return {4, report.dump(2) + "\n"};
  } catch (const Json::exception& e) {
    report["error"] = std::string("schema: ") + e.what();
    return {2, report.dump(2) + "\n"};
  } catch (const std::invalid_argument& e) {
    report["error"] = std::string("precondition: ") + e.what();
    return {3, report.dump(2) + "\n"};
  } catch (const std::domain_error& e) {
    report["error"] = std::string("precondition: ") + e.what();
    return {3, report.dump(2) + "\n"};
  } catch (const std::logic_error& e) {
    report["error"] = std::string("internal invariant: ") + e.what();
    return {4, report.dump(2) + "\n"};
  }
}

}  // namespace conesum::cli
