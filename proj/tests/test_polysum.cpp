#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conesum/polysum.hpp"
#include "conesum/rng.hpp"

using namespace conesum;

namespace {

RationalSubspace line(std::initializer_list<long> v, int dim) {
  return saturate(MatQ(make_vec(v).transpose()), dim);
}

Polytope unit_square() {
  return Polytope::box({{Rat(0), Rat(1)}, {Rat(0), Rat(1)}});
}

}  // namespace

TEST_CASE("vertex enumeration") {
  {
    Polytope p = unit_square();
    REQUIRE(p.vertices().size() == 4);
    auto vc = vertices_and_cones(p);
    for (const auto& [v, c] : vc) {
      CHECK(c.is_simplicial());
      CHECK(c.nrays() == 2);
      // quadrant-type: both rays along axes
      for (int i = 0; i < c.nrays(); ++i) {
        VecQ r = c.ray(i);
        CHECK((r(0).is_zero() || r(1).is_zero()));
      }
    }
  }
  {
    Polytope p = Polytope::simplex(2, Rat(1), make_vec({0, 0}));
    REQUIRE(p.vertices().size() == 3);
    auto vc = vertices_and_cones(p);
    // at the origin the tangent cone is the positive quadrant
    for (const auto& [v, c] : vc)
      if (is_zero(v)) CHECK(c.generators() == make_mat({{0, 1}, {1, 0}}));
  }
  {
    // rational vertices allowed
    Polytope p = Polytope::simplex(2, Rat(5, 2), make_vec({0, 0}));
    REQUIRE(p.vertices().size() == 3);
    bool found = false;
    for (const auto& v : p.vertices())
      if (v == make_vec_rat({Rat(5, 2), Rat(0)})) found = true;
    CHECK(found);
  }
  CHECK_THROWS(Polytope(2, {{make_vec({1, 0}), Rat(1)},
                            {make_vec({0, 1}), Rat(1)},
                            {make_vec({1, 1}), Rat(3)}}));  // unbounded
}

TEST_CASE("brion components of small polytopes") {
  {
    // segment [0,1], L = {0}: S(xi) = 1 + e^xi, component [0] = 2
    Polytope seg = Polytope::box({{Rat(0), Rat(1)}});
    auto comps = brion_SL_components(seg, RationalSubspace::zero(1), 2);
    CHECK(comps.at(0).eval(VecQ(VecQ::Zero(1))) == Rat(2));
    // component [1] at xi=1: 0*1 + 1*1 = 1
    CHECK(comps.at(1).eval(make_vec({1})) == Rat(1));
    // L = V: integral; component [1] at xi=1 is int_0^1 x dx = 1/2
    auto icomps = brion_SL_components(seg, RationalSubspace::full(1), 2);
    CHECK(icomps.at(0).eval(VecQ(VecQ::Zero(1))) == Rat(1));  // length
    CHECK(icomps.at(1).eval(make_vec({1})) == Rat(1, 2));
  }
  {
    // unit square, L = R(1,1): one slice of lattice length 1
    auto comps = brion_SL_components(unit_square(), line({1, 1}, 2), 1);
    CHECK(comps.at(0).eval(VecQ(VecQ::Zero(2))) == Rat(1));
  }
}

TEST_CASE("monomial polarization") {
  // x1 x2 = ((x1+x2)^2 - x1^2 - x2^2)/2, written over <p,x>^2/2!
  auto terms = monomial_to_linear_powers({1, 1});
  SeriesQ expanded(2, 2);
  for (const auto& [c, p] : terms) {
    SeriesQ form(2, 2);
    for (int i = 0; i < 2; ++i) {
      if (p(i).is_zero()) continue;
      std::vector<int> e(2, 0);
      e[static_cast<size_t>(i)] = 1;
      form.set(e, p(i));
    }
    expanded = expanded + (form * form).scale_rat(c / factorial(2));
  }
  CHECK(expanded == SeriesQ::monomial(2, 2, {1, 1}, Rat(1)));

  // random higher-degree re-expansions in 2 and 3 variables
  Rng rng(51);
  for (int trial = 0; trial < 6; ++trial) {
    int d = static_cast<int>(rng.integer(2, 3));
    std::vector<int> alpha(static_cast<size_t>(d), 0);
    int m = 0;
    for (int i = 0; i < d; ++i) {
      alpha[static_cast<size_t>(i)] = static_cast<int>(rng.integer(0, 2));
      m += alpha[static_cast<size_t>(i)];
    }
    if (m == 0) continue;
    SeriesQ acc(d, m);
    for (const auto& [c, p] : monomial_to_linear_powers(alpha)) {
      SeriesQ form(d, m);
      for (int i = 0; i < d; ++i) {
        if (p(i).is_zero()) continue;
        std::vector<int> e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = 1;
        form.set(e, p(i));
      }
      acc = acc + form.pow(m).scale_rat(c / factorial(m));
    }
    CHECK(acc == SeriesQ::monomial(d, m, alpha, Rat(1)));
  }
}

TEST_CASE("weighted sums against direct enumeration") {
  {
    // p = [0,2], L = {0}, h = x^2: 0 + 1 + 4 = 5
    Polytope p = Polytope::box({{Rat(0), Rat(2)}});
    Weight h = Weight::monomial(1, {2}, Rat(1));
    CHECK(weighted_sum(p, RationalSubspace::zero(1), h) == Rat(5));
    CHECK(oracle_intermediate_sum(p, RationalSubspace::zero(1), h) == Rat(5));
  }
  {
    // unit square, L = {0}, h = x1 x2: only (1,1) contributes
    Weight h = Weight::monomial(2, {1, 1}, Rat(1));
    CHECK(weighted_sum(unit_square(), RationalSubspace::zero(2), h) == Rat(1));
    CHECK(oracle_intermediate_sum(unit_square(), RationalSubspace::zero(2), h) == Rat(1));
  }
  {
    // standard simplex, L = V, h = 1: area 1/2
    Polytope p = Polytope::simplex(2, Rat(1), make_vec({0, 0}));
    Weight h = Weight::one(2);
    CHECK(weighted_sum(p, RationalSubspace::full(2), h) == Rat(1, 2));
    CHECK(oracle_intermediate_sum(p, RationalSubspace::full(2), h) == Rat(1, 2));
  }
  {
    // unit square, L = R(1,1), h = 1: the diagonal slice has lattice length 1
    Weight h = Weight::one(2);
    CHECK(weighted_sum(unit_square(), line({1, 1}, 2), h) == Rat(1));
    CHECK(oracle_intermediate_sum(unit_square(), line({1, 1}, 2), h) == Rat(1));
  }
}

TEST_CASE("classical counting and volume closed forms") {
  // dilated standard simplex: #(tP cap Z^2) = (t+1)(t+2)/2, vol = t^2/2
  for (long t = 1; t <= 4; ++t) {
    Polytope p = Polytope::simplex(2, Rat(t), make_vec({0, 0}));
    CHECK(weighted_sum(p, RationalSubspace::zero(2), Weight::one(2)) ==
          Rat((t + 1) * (t + 2) / 2));
    CHECK(weighted_sum(p, RationalSubspace::full(2), Weight::one(2)) ==
          Rat(t * t, 2));
  }
  // segment [0, t]: t+1 points; 3d simplex volume t^3/6
  for (long t = 1; t <= 5; ++t) {
    Polytope seg = Polytope::box({{Rat(0), Rat(t)}});
    CHECK(weighted_sum(seg, RationalSubspace::zero(1), Weight::one(1)) == Rat(t + 1));
  }
  Polytope s3 = Polytope::simplex(3, Rat(2), make_vec({0, 0, 0}));
  CHECK(weighted_sum(s3, RationalSubspace::full(3), Weight::one(3)) == Rat(8, 6));
  CHECK(weighted_sum(s3, RationalSubspace::zero(3), Weight::one(3)) == Rat(10));
  // sum of first squares over [0,n]: n(n+1)(2n+1)/6
  Polytope seg = Polytope::box({{Rat(0), Rat(5)}});
  CHECK(weighted_sum(seg, RationalSubspace::zero(1), Weight::monomial(1, {2}, Rat(1))) ==
        Rat(5 * 6 * 11 / 6));
}

TEST_CASE("translation by a lattice vector preserves counts") {
  Weight h = Weight::one(2);
  Polytope a = Polytope::box({{Rat(0), Rat(2)}, {Rat(0), Rat(1)}});
  Polytope b = Polytope::box({{Rat(3), Rat(5)}, {Rat(-2), Rat(-1)}});
  CHECK(weighted_sum(a, RationalSubspace::zero(2), h) ==
        weighted_sum(b, RationalSubspace::zero(2), h));
}

TEST_CASE("pyramid with a non-simple apex") {
  // square base at height 0, apex (1/2, 1/2, 1) with four active facets
  std::vector<Halfspace> hs = {
      {make_vec({0, 0, -1}), Rat(0)},  {make_vec({2, 0, 1}), Rat(2)},
      {make_vec({-2, 0, 1}), Rat(0)},  {make_vec({0, 2, 1}), Rat(2)},
      {make_vec({0, -2, 1}), Rat(0)},
  };
  Polytope pyr(3, hs);
  REQUIRE(pyr.vertices().size() == 5);
  auto vc = vertices_and_cones(pyr);
  bool saw_apex = false;
  for (const auto& [v, c] : vc)
    if (v == make_vec_rat({Rat(1, 2), Rat(1, 2), Rat(1)})) {
      saw_apex = true;
      CHECK(c.nrays() == 4);  // non-simplicial tangent cone
      CHECK(!c.is_simplicial());
    }
  CHECK(saw_apex);
  // volume of a pyramid: base * height / 3
  CHECK(weighted_sum(pyr, RationalSubspace::full(3), Weight::one(3)) == Rat(1, 3));
  // lattice points: the 4 base corners and nothing else
  CHECK(weighted_sum(pyr, RationalSubspace::zero(3), Weight::one(3)) == Rat(4));
  for (const auto& l : {RationalSubspace::zero(3), line({0, 0, 1}, 3),
                        line({1, 1, 0}, 3), RationalSubspace::full(3)}) {
    CHECK(weighted_sum(pyr, l, Weight::one(3)) ==
          oracle_intermediate_sum(pyr, l, Weight::one(3)));
    Weight h = Weight::monomial(3, {0, 0, 1}, Rat(1));
    CHECK(weighted_sum(pyr, l, h) == oracle_intermediate_sum(pyr, l, h));
  }
}

TEST_CASE("oracle equivalence for a skew plane in dimension 3") {
  MatQ gens(2, 3);
  gens.row(0) = make_vec({1, 1, 0}).transpose();
  gens.row(1) = make_vec({0, 1, 1}).transpose();
  RationalSubspace skew = saturate(gens, 3);
  Polytope box = Polytope::box({{Rat(0), Rat(2)}, {Rat(-1, 2), Rat(1)}, {Rat(0), Rat(1)}});
  Polytope simp = Polytope::simplex(3, Rat(2), make_vec_rat({Rat(1, 3), Rat(0), Rat(0)}));
  for (const auto& p : {box, simp}) {
    CHECK(weighted_sum(p, skew, Weight::one(3)) ==
          oracle_intermediate_sum(p, skew, Weight::one(3)));
    Weight h = Weight::monomial(3, {1, 0, 0}, Rat(1));
    CHECK(weighted_sum(p, skew, h) == oracle_intermediate_sum(p, skew, h));
  }
}

TEST_CASE("oracle equivalence on a small mixed matrix") {
  Rng rng(1212);
  std::vector<RationalSubspace> ls2 = {RationalSubspace::zero(2), line({1, 0}, 2),
                                       line({1, 1}, 2), line({1, -1}, 2),
                                       RationalSubspace::full(2)};
  for (int trial = 0; trial < 6; ++trial) {
    // random small boxes and simplices with rational shifts
    VecQ shift = rng.rational_vector(2, 2, 3);
    Polytope p = (trial % 2)
                     ? Polytope::box({{shift(0), shift(0) + Rat(2)},
                                      {shift(1), shift(1) + Rat(1)}})
                     : Polytope::simplex(2, Rat(2), shift);
    std::vector<int> alpha = {static_cast<int>(rng.integer(0, 2)),
                              static_cast<int>(rng.integer(0, 1))};
    Weight h = Weight::monomial(2, alpha, rng.rational(3, 2));
    for (const auto& l : ls2)
      CHECK(weighted_sum(p, l, h) == oracle_intermediate_sum(p, l, h));
  }
}
