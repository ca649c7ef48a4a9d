#include "hyperdef/serialize.hpp"

#include <fstream>

namespace hyperdef {

Json to_json(const Rational& q) { return rational_str(q); }

Json to_json(const FieldElem& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(rational_str(c));
  return a;
}

Json to_json(const ParamScalar& x) {
  Json j;
  j["even"] = to_json(x.even());
  j["odd"] = to_json(x.odd());
  j["r"] = x.tsq() ? to_json(x.tsq()->r) : Json(nullptr);
  return j;
}

// A t-free coordinate is a plain field element; otherwise a list of terms.
Json to_json(const LaurentParam& p) {
  if (p.is_zero() || (p.min_exp() == 0 && p.max_exp() == 0)) return to_json(p.coeff(0));
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"exp", k}, {"coeff", to_json(c)}});
  return Json{{"laurent", terms}};
}

FieldElem field_from_json(const Json& j) {
  if (j.is_number_integer()) return FieldElem(j.get<long>());
  if (j.is_string()) return parse_exact(j.get<std::string>());
  if (j.is_array() && j.size() == 4) {
    std::array<Rational, 4> c;
    for (int i = 0; i < 4; ++i) {
      if (j[i].is_number_integer()) c[i] = Rational(j[i].get<long>());
      else if (j[i].is_string()) c[i] = parse_rational(j[i].get<std::string>());
      else throw PreconditionError("field element coefficients must be strings \"p/q\"");
    }
    return {c[0], c[1], c[2], c[3]};
  }
  throw PreconditionError("cannot read a field element from " + j.dump());
}

LaurentParam laurent_from_json(const Json& j) {
  if (j.is_object() && j.contains("laurent")) {
    LaurentParam p;
    for (const auto& term : j.at("laurent")) p += LaurentParam::monomial(term.at("exp").get<int>(), field_from_json(term.at("coeff")));
    return p;
  }
  return LaurentParam(field_from_json(j));
}

Json parameter_to_json(const Parameter& p) {
  Json j;
  switch (p.kind) {
    case Parameter::Kind::None: j["kind"] = "none"; break;
    case Parameter::Kind::Formal: j["kind"] = "formal"; break;
    case Parameter::Kind::Exact:
      j["kind"] = "exact";
      j["t_squared"] = to_json(p.tsq->r);
      break;
    case Parameter::Kind::Float:
      j["kind"] = "float";
      j["t"] = p.t;
      break;
  }
  j["text"] = p.text;
  return j;
}

namespace {

Parameter parameter_from_json(const Json& j) {
  if (j.is_null()) return Parameter::formal();
  std::string kind = j.value("kind", "formal");
  std::string text = j.value("text", "");
  if (kind == "none") return Parameter::none();
  if (kind == "formal") return Parameter::formal();
  if (kind == "exact") return Parameter::exact(field_from_json(j.at("t_squared")), text);
  if (kind == "float") return Parameter::from_float(j.at("t").get<double>(), text);
  throw PreconditionError("unknown parameter kind '" + kind + "'");
}

}  // namespace

Json arrangement_to_json(const Arrangement& arr) {
  Json j;
  j["name"] = arr.name;
  j["dimension"] = arr.dimension;
  j["parameter"] = parameter_to_json(arr.param);
  Json walls = Json::array();
  for (const auto& w : arr.walls) {
    Json coords = Json::array();
    for (const auto& c : w.coords) coords.push_back(to_json(c));
    walls.push_back({{"label", w.label}, {"coords", coords}});
  }
  j["walls"] = walls;
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  try {
    Arrangement a;
    a.name = j.value("name", "");
    a.dimension = j.at("dimension").get<int>();
    if (a.dimension < 2) throw PreconditionError("dimension must be at least 2");
    a.param = parameter_from_json(j.contains("parameter") ? j.at("parameter") : Json(nullptr));
    for (const auto& w : j.at("walls")) {
      Wall wall;
      wall.label = w.at("label").get<std::string>();
      for (const auto& c : w.at("coords")) wall.coords.push_back(laurent_from_json(c));
      if (wall.coords.size() != static_cast<size_t>(a.dimension + 1))
        throw PreconditionError("wall " + wall.label + " has the wrong number of coordinates");
      for (const auto& other : a.walls)
        if (other.label == wall.label) throw PreconditionError("duplicate wall label " + wall.label);
      a.walls.push_back(std::move(wall));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

Json to_json(const RelationMatrix& rm) {
  Json pairs = Json::array();
  for (size_t i = 0; i < rm.labels.size(); ++i)
    for (size_t j = i + 1; j < rm.labels.size(); ++j) {
      const PairInfo& p = rm.cells[i][j];
      Json e{{"walls", {rm.labels[i], rm.labels[j]}}, {"kind", to_string(p.kind)}, {"value", p.value}};
      if (p.kind == RelationKind::Intersecting) e["angle"] = angle_str(p.angle);
      if (p.c_sq) e["c_squared"] = to_json(*p.c_sq);
      pairs.push_back(e);
    }
  Json counts;
  for (auto k : {RelationKind::Orthogonal, RelationKind::Intersecting, RelationKind::Tangent, RelationKind::Ultraparallel,
                 RelationKind::Diverging})
    counts[to_string(k)] = rm.count(k);
  return Json{{"labels", rm.labels}, {"counts", counts}, {"pairs", pairs}};
}

Json to_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const auto& e : d.edges) {
    Json x{{"walls", {d.nodes[e.i], d.nodes[e.j]}}, {"kind", to_string(e.kind)}, {"value", e.value}};
    if (e.kind == RelationKind::Intersecting) x["angle"] = angle_str(e.angle);
    edges.push_back(x);
  }
  return Json{{"nodes", d.nodes}, {"edges", edges}};
}

Json to_json(const VolumeVerdict& v) {
  Json cusps = Json::array();
  for (const auto& c : v.cusps) cusps.push_back({{"walls", c.walls}, {"rank", c.rank}});
  return Json{{"status", v.finite_volume ? "FiniteVolume" : "InfiniteVolume"},
              {"edges", v.edges},
              {"finite_edge_ends", v.finite_edge_ends},
              {"cusp_edge_ends", v.cusp_edge_ends},
              {"finite_vertices", v.finite_vertices},
              {"cusps", cusps},
              {"bad_edges", v.bad_edges}};
}

Json to_json(const ArithmeticityVerdict& v) {
  Json j{{"status", v.arithmetic ? "Arithmetic" : "NonArithmetic"}, {"cycles_checked", v.cycles_checked}};
  Json failing = Json::array();
  if (v.failing) failing.push_back({{"cycle", v.failing->cycle}, {"product", v.failing->product.str()}});
  j["failing_cycles"] = failing;
  return j;
}

Json to_json(const TangentReport& r) {
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(to_json(b));
  return Json{{"mode", r.mode == TangentMode::Gamma22Slice ? "gamma22-slice" : "lambda-rigidity"},
              {"equations", r.equations},
              {"unknowns", r.unknowns},
              {"dimension", r.dimension},
              {"basis", basis},
              {"matched_closed_form", r.matched_closed_form}};
}

Json to_json(const std::vector<SphereRow>& rows) {
  Json s = Json::array();
  for (const auto& r : rows) {
    Json e{{"label", r.label}, {"kind", r.image.plane ? "plane" : "sphere"}};
    std::vector<double> c(r.image.center.begin(), r.image.center.end());
    if (r.image.plane) {
      e["normal"] = c;
      e["offset"] = r.image.radius;
    } else {
      e["center"] = c;
      e["radius"] = r.image.radius;
    }
    s.push_back(e);
  }
  return Json{{"spheres", s}};
}

Json to_json(const TransitionScan& s) {
  Json grid = Json::array();
  for (size_t g = 0; g < s.grid.size(); ++g) {
    Json classes = Json::array();
    for (const auto& c : s.classes[g]) classes.push_back(to_string(c));
    grid.push_back({{"t_squared", s.grid[g].str()}, {"classes", classes}});
  }
  Json tr = Json::array();
  for (const auto& t : s.transitions)
    tr.push_back({{"subset", t.subset},
                  {"from", s.grid[t.from].str()},
                  {"to", s.grid[t.to].str()},
                  {"before", to_string(t.before)},
                  {"after", to_string(t.after)}});
  Json locs = Json::array();
  for (const auto& l : s.locations()) {
    Json a = Json::array();
    for (const auto& x : l) a.push_back(x.str());
    locs.push_back(a);
  }
  return Json{{"watched", s.watched}, {"grid", grid}, {"transitions", tr}, {"locations", locs}};
}

Json to_json(const std::vector<IdealVertexRecord>& v) {
  Json a = Json::array();
  for (const auto& r : v) {
    Json coords = Json::array();
    for (const auto& c : r.vertex) coords.push_back(c.str());
    a.push_back({{"vertex", coords}, {"incident", r.incident}, {"cusp_rank", r.cusp_rank}});
  }
  return a;
}

Json to_json(const CuboctahedronReport& r) {
  return Json{{"walls", r.walls},
              {"orthogonal_pairs", r.orthogonal_pairs},
              {"non_right_angles", r.non_right_angles},
              {"ideal_vertices", r.vertices.size()},
              {"vertices", to_json(r.vertices)}};
}

}  // namespace hyperdef
