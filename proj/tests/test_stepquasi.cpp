#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conesum/stepquasi.hpp"

using namespace conesum;

TEST_CASE("fractional part pairing") {
  CHECK(frac(make_vec({2, 3}), make_vec({1, 1})) == Rat(0));
  CHECK(frac(make_vec_rat({Rat(1, 2)}), make_vec({-1})) == Rat(1, 2));
  CHECK(frac(make_vec_rat({Rat(7, 3)}), make_vec({1})) == Rat(1, 3));
  CHECK(frac(make_vec({1, -1}), make_vec_rat({Rat(1, 4), Rat(1, 3)})) == Rat(11, 12));
}

TEST_CASE("step monomials") {
  VecQ eta1 = make_vec({1, -1});
  VecQ eta2 = make_vec({0, 1});
  StepMonomial m = StepMonomial().times(eta1, 2).times(eta2, 1).times(eta1, 1);
  CHECK(m.degree() == 4);
  VecQ s = make_vec_rat({Rat(1, 3), Rat(3, 4)});
  // {s1 - s2} = {1/3 - 3/4} = {-5/12} = 7/12 ; {s2} = 3/4
  CHECK(m.eval(s) == Rat(7, 12).pow(3) * Rat(3, 4));
  CHECK(StepMonomial().eval(s) == Rat(1));
  CHECK(StepMonomial().degree() == 0);
  CHECK(m == StepMonomial().times(eta2, 1).times(eta1, 3));
}

TEST_CASE("alcove probe") {
  {
    PsiSet psi{make_vec({1})};
    CHECK(alcove_probe(psi, make_vec({0}), make_vec({-1})) == Rat(1));
    CHECK(alcove_probe(psi, make_vec_rat({Rat(1, 2)}), make_vec({-1})) == Rat(1, 2));
    CHECK(alcove_probe(psi, make_vec_rat({Rat(1, 2)}), make_vec({1})) == Rat(1, 2));
    CHECK(alcove_probe(psi, make_vec_rat({Rat(1, 3)}), make_vec({1})) == Rat(2, 3));
  }
  {
    PsiSet psi{make_vec({1, -1})};
    CHECK(alcove_probe(psi, make_vec({0, 0}), make_vec({-1, -2})) == Rat(1));
    CHECK_THROWS(alcove_probe(psi, make_vec({0, 0}), make_vec({1, 1})));
    CHECK(alcove_probe_relaxed(psi, make_vec({0, 0}), make_vec({1, 1})) == Rat(1));
  }
}

TEST_CASE("quasi component evaluation and degrees") {
  // entry: {s2-s1}^2 * s1 * (1/(x1 x2)) at xi-degree 0... use degree -2 comp
  QuasiComponent qc = QuasiComponent::zero(2, -2);
  HCompQ base;
  base.dim = 2;
  base.degree = -2;
  base.denoms = {make_vec({0, 1}), make_vec({1, 0})};
  base.num = SeriesQ::constant(2, 0, Rat(1));
  QuasiEntry e;
  e.step = StepMonomial().times(make_vec({-1, 1}), 2);
  e.s_power = {1, 0};
  e.comp = base;
  qc.entries.push_back(e);

  CHECK(qc.polynomial_degree() == 1);
  CHECK(qc.step_degree() == 2);
  CHECK(qc.local_degree() == 3);

  VecQ s = make_vec_rat({Rat(3), Rat(1, 2)});
  // {s2-s1} = {1/2 - 3} = 1/2 ; scalar = (1/2)^2 * 3
  HCompQ v = qc.eval(s);
  CHECK(eval_component(v, make_vec({1, 2})) == Rat(1, 4) * Rat(3) / Rat(2));

  // merging drops duplicates
  qc.entries.push_back(e);
  qc.normalize();
  CHECK(qc.entries.size() == 1);
  HCompQ v2 = qc.eval(s);
  CHECK(eval_component(v2, make_vec({1, 2})) == Rat(3, 4));
}
