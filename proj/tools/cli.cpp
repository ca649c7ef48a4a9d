#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hyperdef/infinity.hpp"
#include "hyperdef/serialize.hpp"
#include "hyperdef/tangent.hpp"
#include "hyperdef/vinberg.hpp"

namespace hyperdef::cli {

namespace {

struct Options {
  std::string arrangement = "family22";
  std::string t_squared;
  int n = 0;
  std::string t;
  std::string format;
  std::string out;
  bool allow_generic = false;
  std::string base;
  std::vector<std::string> grid;
  std::vector<std::string> watch;
  std::vector<std::string> walls;
};

bool t_free(const Arrangement& a) {
  for (const auto& w : a.walls)
    for (const auto& c : w.coords)
      if (!c.is_zero() && (c.min_exp() != 0 || c.max_exp() != 0)) return false;
  return true;
}

struct Resolved {
  Arrangement arr;
  Json param;  // what the user asked for, verbatim
};

Resolved resolve(const Options& o) {
  int given = !o.t_squared.empty() + (o.n != 0) + !o.t.empty();
  if (given > 1) throw PreconditionError("give at most one of --t-squared, --n, --t");
  std::optional<Parameter> p;
  Json echo{{"arrangement", o.arrangement}};
  if (!o.t_squared.empty()) {
    p = Parameter::exact(parse_exact(o.t_squared), o.t_squared);
    echo["t_squared"] = o.t_squared;
  } else if (o.n != 0) {
    p = Parameter::exact(t_for_n(o.n), t_for_n(o.n).str());
    echo["n"] = o.n;
    echo["t_squared"] = p->text;
  } else if (!o.t.empty()) {
    double t = 0;
    try {
      size_t used = 0;
      t = std::stod(o.t, &used);
      if (used != o.t.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw PreconditionError("invalid number for --t: '" + o.t + "'");
    }
    p = Parameter::from_float(t, o.t);
    echo["t"] = p->text;
  }
  Arrangement a;
  if (o.arrangement.rfind("file:", 0) == 0) {
    a = load_arrangement(o.arrangement.substr(5));
    if (p) a = a.with_parameter(*p);
  } else {
    auto which = builtin_from_name(o.arrangement);
    if (!which) throw PreconditionError("unknown arrangement '" + o.arrangement + "'");
    if (*which == Builtin::Cuboctahedron) {
      if (p) throw PreconditionError("cuboctahedron takes no parameter");
      a = builtin(*which, Parameter::none());
    } else if (*which == Builtin::L6 && !p) {
      a = builtin(*which, Parameter::exact(FieldElem(Rational(3, 5)), "3/5"));
    } else {
      a = builtin(*which, p ? *p : Parameter::formal());
    }
  }
  // t-free arrangements are exact without a parameter
  if (a.param.kind == Parameter::Kind::Formal && t_free(a)) a = a.with_parameter(Parameter::none());
  return {std::move(a), echo};
}

std::string param_text(const Arrangement& a) { return a.param.text.empty() ? "none" : a.param.text; }

std::string fmt_or(const Options& o, const char* def) { return o.format.empty() ? def : o.format; }

void need_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw PreconditionError("format '" + f + "' is not available for this command");
}

std::string dump(Json j, const Json& param) {
  Json out{{"parameter", param}};
  for (auto& [k, v] : j.items()) out[k] = v;
  return out.dump(2) + "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

using Command = std::function<std::string(const Options&)>;

std::string cmd_relations(const Options& o) {
  auto [arr, echo] = resolve(o);
  RelationMatrix rm = relation_matrix(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json", "csv"});
  if (f == "csv") return rm.to_csv();
  if (f == "json") return dump(to_json(rm), echo);
  std::ostringstream os;
  os << "parameter " << param_text(arr) << "\n";
  for (auto k : {RelationKind::Orthogonal, RelationKind::Intersecting, RelationKind::Tangent,
                 RelationKind::Ultraparallel, RelationKind::Diverging})
    os << to_string(k) << ' ' << rm.count(k) << '\n';
  return os.str();
}

std::string cmd_diagram(const Options& o) {
  auto [arr, echo] = resolve(o);
  CoxeterDiagram d = coxeter_diagram(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(to_json(d), echo);
  std::ostringstream os;
  os.precision(12);
  os << "parameter " << param_text(arr) << "\n";
  for (const auto& e : d.edges) {
    os << d.nodes[e.i] << " -- " << d.nodes[e.j] << ' ' << to_string(e.kind);
    if (e.kind == RelationKind::Intersecting) os << ' ' << angle_str(e.angle);
    else os << ' ' << e.value;
    os << '\n';
  }
  return os.str();
}

std::string cmd_volume(const Options& o) {
  auto [arr, echo] = resolve(o);
  VolumeVerdict v = finite_volume_check(arr, {o.allow_generic});
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(to_json(v), echo);
  std::ostringstream os;
  os << "parameter " << param_text(arr) << "\n"
     << (v.finite_volume ? "FiniteVolume" : "InfiniteVolume") << "\n"
     << "edges " << v.edges << "\nfinite vertices " << v.finite_vertices.size() << "\nfinite edge ends "
     << v.finite_edge_ends << "\ncusps " << v.cusps.size() << "\n";
  for (const auto& b : v.bad_edges) os << "bad edge {" << join(b, ",") << "}\n";
  return os.str();
}

std::string cmd_arithmetic(const Options& o) {
  auto [arr, echo] = resolve(o);
  ArithmeticityVerdict v = arithmeticity_check(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(to_json(v), echo);
  std::ostringstream os;
  os << "parameter " << param_text(arr) << "\n" << (v.arithmetic ? "Arithmetic" : "NonArithmetic") << "\n";
  if (v.failing) os << "failing cycle " << join(v.failing->cycle) << " product " << v.failing->product.str() << "\n";
  return os.str();
}

std::string tangent_common(const Options& o, TangentMode mode) {
  auto [arr, echo] = resolve(o);
  if (arr.name != "family22" && arr.name != "gamma22")
    throw PreconditionError("tangent spaces are computed for the 22-wall family only");
  if (arr.param.kind != Parameter::Kind::Exact) throw PreconditionError("give an exact --t-squared or --n");
  TangentReport r = tangent_report(arr.param.tsq->r, mode);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(to_json(r), echo);
  std::ostringstream os;
  os << "parameter " << param_text(arr) << "\n"
     << "equations " << r.equations << "\nunknowns " << r.unknowns << "\ndimension " << r.dimension << "\n";
  if (mode == TangentMode::Gamma22Slice) os << "matched closed form " << (r.matched_closed_form ? "yes" : "no") << "\n";
  return os.str();
}

std::string cmd_tangent(const Options& o) { return tangent_common(o, TangentMode::Gamma22Slice); }
std::string cmd_rigidity(const Options& o) { return tangent_common(o, TangentMode::LambdaRigidity); }

std::string cmd_spheres(const Options& o) {
  auto [arr, echo] = resolve(o);
  auto rows = sphere_table(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json", "csv"});
  if (f == "json") return dump(to_json(rows), echo);
  if (f == "csv") return sphere_table_csv(rows);
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "parameter " << param_text(arr) << "\n";
  for (const auto& r : rows) {
    const auto& c = r.image.center;
    if (r.image.plane)
      os << r.label << " plane n=(" << c[0] << ", " << c[1] << ", " << c[2] << ") d=" << r.image.radius << '\n';
    else
      os << r.label << " sphere c=(" << c[0] << ", " << c[1] << ", " << c[2] << ") r=" << r.image.radius << '\n';
  }
  return os.str();
}

std::string cmd_slice(const Options& o) {
  auto [arr, echo] = resolve(o);
  if (o.base.empty()) throw PreconditionError("slice needs --base LABEL");
  SliceFigure fig = slice_figure(arr, o.base);
  std::string f = fmt_or(o, "svg");
  need_format(f, {"svg", "json", "text"});
  if (f == "svg") return slice_svg(fig);
  Json curves = Json::array();
  for (const auto& c : fig.curves) {
    Json e{{"label", c.label}, {"kind", to_string(c.kind)}, {"color", c.color}};
    if (c.line) {
      e["point"] = c.center;
      e["direction"] = c.direction;
    } else {
      e["center"] = c.center;
      e["radius"] = c.radius;
    }
    curves.push_back(e);
  }
  Json tang = Json::array();
  for (const auto& [l, p] : fig.tangencies) tang.push_back({{"label", l}, {"point", p}});
  Json j{{"base", fig.base}, {"curves", curves}, {"tangencies", tang}};
  if (f == "json") return dump(j, echo);
  std::ostringstream os;
  os << "parameter " << param_text(arr) << "\nbase " << fig.base << "\ncurves " << fig.curves.size() << "\n";
  for (const auto& c : fig.curves) os << c.label << ' ' << (c.line ? "line" : "circle") << ' ' << c.color << '\n';
  return os.str();
}

std::string cmd_scan(const Options& o) {
  auto [arr, echo] = resolve(o);
  std::vector<std::vector<std::string>> watched;
  for (const auto& w : o.watch) watched.push_back(split(w, ','));
  if (watched.empty()) {
    if (arr.name == "extended") watched = {{"+3", "M", "L", "-0"}, {"+3", "M", "L", "N"}};
    else watched = {{"-0", "+1", "+3", "+5"}, {"+1", "+3", "+5", "+7"}};
  }
  std::vector<std::string> grid_text = o.grid;
  if (grid_text.empty()) grid_text = {"2/5", "9/20", "1/2", "11/20", "3/5", "13/20", "7/10"};
  std::vector<FieldElem> grid;
  for (const auto& g : grid_text) grid.push_back(parse_exact(g));
  TransitionScan s = transition_scan(arr, watched, grid);
  std::string f = fmt_or(o, "csv");
  need_format(f, {"csv", "json", "text"});
  if (f == "csv") return s.to_csv();
  if (f == "json") return dump(to_json(s), echo);
  std::ostringstream os;
  os << "transitions " << s.transitions.size() << "\n";
  for (const auto& t : s.transitions)
    os << '{' << join(t.subset, ",") << "} " << to_string(t.before) << " -> " << to_string(t.after) << " between "
       << s.grid[t.from].str() << " and " << s.grid[t.to].str() << "\n";
  return os.str();
}

std::string cmd_limit(const Options& o) {
  CuboctahedronReport r = cuboctahedron_limit();
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(to_json(r), Json{{"arrangement", "cuboctahedron"}});
  std::ostringstream os;
  os << "walls " << r.walls << "\northogonal pairs " << r.orthogonal_pairs << "\nnon-right angles "
     << r.non_right_angles << "\nideal vertices " << r.vertices.size() << "\n";
  return os.str();
}

std::string cmd_symmetry(const Options& o) {
  auto [arr, echo] = resolve(o);
  size_t order = symmetry_group_order(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(Json{{"order", order}}, echo);
  return "order " + std::to_string(order) + "\n";
}

std::string cmd_vertices(const Options& o) {
  auto [arr, echo] = resolve(o);
  auto v = arr.name == "cuboctahedron" ? ideal_vertices(arr, discover_ideal_vertices(arr)) : ideal_vertices(arr);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") return dump(Json{{"vertices", to_json(v)}}, echo);
  std::ostringstream os;
  for (const auto& r : v) {
    std::vector<std::string> c;
    for (const auto& x : r.vertex) c.push_back(x.str());
    os << '(' << join(c, ", ") << ") rank " << r.cusp_rank << " walls " << join(r.incident, ",") << '\n';
  }
  return os.str();
}

std::string cmd_fuchsian(const Options& o) {
  auto [arr, echo] = resolve(o);
  if (o.walls.empty()) throw PreconditionError("fuchsian needs --walls L1,L2,...");
  std::vector<std::string> labels;
  for (const auto& w : o.walls)
    for (const auto& l : split(w, ',')) labels.push_back(l);
  FuchsianResult r = fuchsian_end_test(arr, labels);
  std::string f = fmt_or(o, "text");
  need_format(f, {"text", "json"});
  if (f == "json") {
    Json j{{"result", to_string(r.kind)}, {"kernel_dimension", r.kernel_dimension}};
    if (!r.hyperplane.empty()) j["hyperplane"] = to_json(r.hyperplane);
    return dump(j, echo);
  }
  return to_string(r.kind) + "\n";
}

std::string cmd_export(const Options& o) {
  auto [arr, echo] = resolve(o);
  need_format(fmt_or(o, "json"), {"json"});
  return arrangement_to_json(arr).dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on hyperbolic reflection arrangements", "hyperdef"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, std::pair<const char*, Command>> commands = {
      {"relations", {"pairwise wall relations", cmd_relations}},
      {"diagram", {"Coxeter diagram", cmd_diagram}},
      {"volume", {"Vinberg finite-volume check", cmd_volume}},
      {"arithmetic", {"Vinberg arithmeticity check", cmd_arithmetic}},
      {"tangent", {"Zariski tangent space of the 22-wall family", cmd_tangent}},
      {"rigidity", {"tangent space with the positive angles fixed", cmd_rigidity}},
      {"spheres", {"boundary sphere table", cmd_spheres}},
      {"slice", {"circle pattern on one wall", cmd_slice}},
      {"scan", {"subdiagram transitions along a t^2 grid", cmd_scan}},
      {"limit", {"right-angled cuboctahedron limit", cmd_limit}},
      {"symmetry", {"order of the symmetry group", cmd_symmetry}},
      {"vertices", {"ideal vertices and cusp ranks", cmd_vertices}},
      {"fuchsian", {"Fuchsian end test", cmd_fuchsian}},
      {"export", {"arrangement as JSON", cmd_export}},
  };
  std::string chosen;
  for (const auto& [name, spec] : commands) {
    CLI::App* sub = app.add_subcommand(name, spec.first);
    sub->add_option("--arrangement", o.arrangement, "p24|gamma22|family22|extended|l6|cuboctahedron|file:PATH");
    sub->add_option("--t-squared", o.t_squared, "exact value of t^2, e.g. 1/3 or (11+4*sqrt5)/41");
    sub->add_option("--n", o.n, "use t^2 = t_n^2");
    sub->add_option("--t", o.t, "floating-point t");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text", "svg"}));
    sub->add_option("--out", o.out, "write the report to this file");
    if (name == "volume") sub->add_flag("--allow-generic", o.allow_generic, "skip the pi/m angle precondition");
    if (name == "slice") sub->add_option("--base", o.base, "label of the wall to slice");
    if (name == "scan") {
      sub->add_option("--grid", o.grid, "t^2 values")->delimiter(',');
      sub->add_option("--watch", o.watch, "comma-separated wall subset; repeatable");
    }
    if (name == "fuchsian") sub->add_option("--walls", o.walls, "comma-separated wall labels");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string report = commands.at(chosen).second(o);
    if (o.out.empty()) {
      out << report;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw PreconditionError("cannot write " + o.out);
      f << report;
    }
    return 0;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hyperdef::cli
