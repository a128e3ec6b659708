#pragma once

#include <json.hpp>

#include "conesum/patchwork.hpp"
#include "conesum/polysum.hpp"

namespace conesum {

using Json = nlohmann::ordered_json;

// rationals travel as strings "p/q" or "n"
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vec_to_json(const VecQ& v);
VecQ vec_from_json(const Json& j);

Json mat_to_json(const MatQ& m);
MatQ mat_from_json(const Json& j, int expect_cols = -1);

Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j);

Json signed_cone_sum_to_json(const SignedConeSum& s);
SignedConeSum signed_cone_sum_from_json(const Json& j, int dim);

Json subspace_to_json(const RationalSubspace& l);
RationalSubspace subspace_from_json(const Json& j, int ambient_dim);

Json component_to_json(const HCompQ& h);

Json quasi_component_to_json(const QuasiComponent& qc);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, int dim);

}  // namespace conesum
