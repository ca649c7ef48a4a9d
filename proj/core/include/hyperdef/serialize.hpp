#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hyperdef/arrangement.hpp"
#include "hyperdef/infinity.hpp"
#include "hyperdef/tangent.hpp"
#include "hyperdef/vinberg.hpp"

namespace hyperdef {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const FieldElem& x);   // ["a", "b", "c", "d"] over 1, sqrt2, sqrt5, sqrt10
Json to_json(const ParamScalar& x); // {even, odd, r}
Json to_json(const LaurentParam& p);
template <class S>
Json to_json(const Vec<S>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

FieldElem field_from_json(const Json& j);
LaurentParam laurent_from_json(const Json& j);

// {dimension, parameter, walls: [{label, coords}]}
Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);
Arrangement load_arrangement(const std::string& path);

Json parameter_to_json(const Parameter& p);
Json to_json(const RelationMatrix& rm);
Json to_json(const CoxeterDiagram& d);
Json to_json(const VolumeVerdict& v);
Json to_json(const ArithmeticityVerdict& v);
Json to_json(const TangentReport& r);
Json to_json(const std::vector<SphereRow>& rows);
Json to_json(const TransitionScan& s);
Json to_json(const CuboctahedronReport& r);
Json to_json(const std::vector<IdealVertexRecord>& v);

}  // namespace hyperdef
