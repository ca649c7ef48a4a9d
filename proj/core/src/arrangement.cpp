#include "hyperdef/arrangement.hpp"

#include <cmath>
#include <sstream>

#include "hyperdef/gram.hpp"

namespace hyperdef {

Parameter Parameter::formal() {
  Parameter p;
  p.kind = Kind::Formal;
  p.text = "t";
  return p;
}

Parameter Parameter::exact(const FieldElem& t_sq, std::string text) {
  Parameter p;
  p.kind = Kind::Exact;
  p.tsq = make_t_squared(t_sq);
  p.t = std::sqrt(t_sq.to_double());
  p.text = text.empty() ? t_sq.str() : std::move(text);
  return p;
}

Parameter Parameter::from_float(double t, std::string text) {
  if (!(t > 0) || !std::isfinite(t)) throw PreconditionError("t must be a positive number");
  Parameter p;
  p.kind = Kind::Float;
  p.t = t;
  if (text.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    text = os.str();
  }
  p.text = std::move(text);
  return p;
}

size_t Arrangement::index_of(std::string_view label) const {
  for (size_t i = 0; i < walls.size(); ++i)
    if (walls[i].label == label) return i;
  throw PreconditionError("unknown wall label '" + std::string(label) + "' in " + name);
}

std::vector<size_t> Arrangement::indices_of(const std::vector<std::string>& ls) const {
  std::vector<size_t> out;
  for (const auto& l : ls) out.push_back(index_of(l));
  return out;
}

std::vector<std::string> Arrangement::labels() const {
  std::vector<std::string> out;
  for (const auto& w : walls) out.push_back(w.label);
  return out;
}

namespace {

bool constant(const LaurentParam& p) { return p.is_zero() || (p.min_exp() == 0 && p.max_exp() == 0); }

void require_constant(const Arrangement& arr) {
  for (const auto& w : arr.walls)
    for (const auto& c : w.coords)
      if (!constant(c))
        throw PreconditionError(arr.name + " depends on t; supply --t-squared, --n or --t");
}

}  // namespace

std::vector<Vec<ParamScalar>> Arrangement::exact_vectors() const {
  std::vector<Vec<ParamScalar>> out;
  if (param.kind == Parameter::Kind::None) {
    require_constant(*this);
    for (const auto& w : walls) {
      Vec<ParamScalar> v;
      for (const auto& c : w.coords) v.emplace_back(c.coeff(0));
      out.push_back(std::move(v));
    }
    return out;
  }
  if (param.kind != Parameter::Kind::Exact)
    throw PreconditionError("this operation needs an exact parameter (--t-squared or --n)");
  for (const auto& w : walls) {
    Vec<ParamScalar> v;
    for (const auto& c : w.coords) v.push_back(laurent_eval(c, param.tsq));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec<double>> Arrangement::float_vectors() const {
  if (param.kind == Parameter::Kind::Formal) {
    bool t_free = true;
    for (const auto& w : walls)
      for (const auto& c : w.coords) t_free = t_free && constant(c);
    if (!t_free) throw PreconditionError("this operation needs a numeric parameter");
  }
  if (param.kind == Parameter::Kind::None) require_constant(*this);
  std::vector<Vec<double>> out;
  for (const auto& w : walls) {
    Vec<double> v;
    for (const auto& c : w.coords) v.push_back(laurent_eval(c, param.t));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec<LaurentParam>> Arrangement::formal_vectors() const {
  std::vector<Vec<LaurentParam>> out;
  for (const auto& w : walls) out.push_back(w.coords);
  return out;
}

Arrangement Arrangement::with_parameter(Parameter p) const {
  Arrangement a = *this;
  a.param = std::move(p);
  return a;
}

Arrangement Arrangement::subset(const std::vector<std::string>& ls) const {
  Arrangement a = *this;
  a.walls.clear();
  for (size_t i : indices_of(ls)) a.walls.push_back(walls[i]);
  return a;
}

// ------------------------------------------------------------------ builtins

namespace {

struct Numbered {
  const char* label;
  int s[4];
};

// Sign patterns of the numbered walls; the last entry carries 1/t for the
// positive octet and t for the negative octet in the deformed family.
const Numbered kPositive[8] = {
    {"+0", {1, 1, 1, 1}},   {"+1", {1, -1, 1, -1}},  {"+2", {1, -1, -1, 1}},  {"+3", {1, 1, -1, -1}},
    {"+4", {-1, 1, -1, 1}}, {"+5", {-1, 1, 1, -1}},  {"+6", {-1, -1, 1, 1}},  {"+7", {-1, -1, -1, -1}}};
const Numbered kNegative[8] = {
    {"-0", {1, 1, 1, -1}},  {"-1", {1, -1, 1, 1}},   {"-2", {1, -1, -1, -1}}, {"-3", {1, 1, -1, 1}},
    {"-4", {-1, 1, -1, -1}}, {"-5", {-1, 1, 1, 1}},  {"-6", {-1, -1, 1, -1}}, {"-7", {-1, -1, -1, 1}}};

Wall numbered(const Numbered& n, bool positive, bool deformed) {
  Wall w;
  w.label = n.label;
  w.coords = {LaurentParam(FieldElem::sqrt2()), LaurentParam(n.s[0]), LaurentParam(n.s[1]), LaurentParam(n.s[2])};
  int e = deformed ? (positive ? -1 : 1) : 0;
  w.coords.push_back(LaurentParam::monomial(e, FieldElem(n.s[3])));
  return w;
}

Wall letter(const char* label, int axis, int sign) {
  Wall w;
  w.label = label;
  w.coords = {LaurentParam(1), LaurentParam(), LaurentParam(), LaurentParam(), LaurentParam()};
  w.coords[axis] = LaurentParam(FieldElem::sqrt2() * FieldElem(sign));
  return w;
}

Wall plain(const char* label, std::initializer_list<long> c) {
  Wall w;
  w.label = label;
  for (long v : c) w.coords.emplace_back(v);
  return w;
}

void add_letters(std::vector<Wall>& walls, bool with_gh) {
  walls.push_back(letter("A", 1, 1));
  walls.push_back(letter("B", 2, 1));
  walls.push_back(letter("C", 3, 1));
  walls.push_back(letter("D", 3, -1));
  walls.push_back(letter("E", 2, -1));
  walls.push_back(letter("F", 1, -1));
  if (with_gh) {
    walls.push_back(letter("G", 4, -1));
    walls.push_back(letter("H", 4, 1));
  }
}

std::vector<Wall> numbered_walls(bool deformed) {
  std::vector<Wall> out;
  for (const auto& n : kPositive) out.push_back(numbered(n, true, deformed));
  for (const auto& n : kNegative) out.push_back(numbered(n, false, deformed));
  return out;
}

const Numbered& find_numbered(const char* label) {
  for (const auto& n : kPositive)
    if (std::string(n.label) == label) return n;
  for (const auto& n : kNegative)
    if (std::string(n.label) == label) return n;
  throw std::logic_error("no numbered wall");
}

std::vector<Wall> extended_walls() {
  std::vector<Wall> w;
  w.push_back(numbered(find_numbered("+0"), true, true));
  w.push_back(numbered(find_numbered("-0"), false, true));
  w.push_back(numbered(find_numbered("+3"), true, true));
  w.push_back(numbered(find_numbered("-3"), false, true));
  w.push_back(letter("A", 1, 1));
  w.push_back(plain("L", {0, -1, 1, 0, 0}));
  w.push_back(plain("M", {0, 0, -1, 1, 0}));
  w.push_back(plain("N", {0, 0, -1, -1, 0}));
  return w;
}

}  // namespace

std::optional<Builtin> builtin_from_name(std::string_view name) {
  if (name == "p24") return Builtin::P24;
  if (name == "gamma22") return Builtin::Gamma22;
  if (name == "family22") return Builtin::Family22;
  if (name == "extended") return Builtin::ExtendedGenerators;
  if (name == "l6") return Builtin::L6;
  if (name == "cuboctahedron") return Builtin::Cuboctahedron;
  return std::nullopt;
}

Arrangement builtin(Builtin which, Parameter p) {
  Arrangement a;
  switch (which) {
    case Builtin::P24:
      a.name = "p24";
      a.walls = numbered_walls(false);
      add_letters(a.walls, true);
      a.param = Parameter::none();
      break;
    case Builtin::Gamma22:
      a.name = "gamma22";
      a.walls = numbered_walls(false);
      add_letters(a.walls, false);
      a.param = Parameter::none();
      break;
    case Builtin::Family22:
      a.name = "family22";
      a.walls = numbered_walls(true);
      add_letters(a.walls, false);
      a.param = p.kind == Parameter::Kind::None ? Parameter::formal() : p;
      break;
    case Builtin::ExtendedGenerators:
      a.name = "extended";
      a.walls = extended_walls();
      a.param = p.kind == Parameter::Kind::None ? Parameter::formal() : p;
      break;
    case Builtin::L6: {
      bool ok = (p.kind == Parameter::Kind::Exact && p.tsq->r == FieldElem(Rational(3, 5))) ||
                (p.kind == Parameter::Kind::Float && std::abs(p.t * p.t - 0.6) < 1e-12);
      if (!ok) throw PreconditionError("l6 is only defined at t^2 = 3/5");
      a.name = "l6";
      a.walls = extended_walls();
      // sqrt(6/5) = sqrt2 * t at t^2 = 3/5
      Wall g{"G", {LaurentParam(1), {}, {}, {}, LaurentParam::monomial(1, FieldElem::sqrt2())}};
      Wall h{"H", {LaurentParam(1), {}, {}, {}, LaurentParam::monomial(1, -FieldElem::sqrt2())}};
      a.walls.push_back(g);
      a.walls.push_back(h);
      a.param = p;
      break;
    }
    case Builtin::Cuboctahedron: {
      // t -> 0 limit restricted to e4-perp: the letters and the negative octet
      a.name = "cuboctahedron";
      a.dimension = 3;
      std::vector<Wall> letters;
      add_letters(letters, false);
      for (auto& w : letters) {
        w.coords.pop_back();
        a.walls.push_back(w);
      }
      for (const auto& n : kNegative) {
        Wall w = numbered(n, false, false);
        w.coords.pop_back();
        a.walls.push_back(w);
      }
      a.param = Parameter::none();
      break;
    }
  }
  return a;
}

FieldElem t_for_n(int n) {
  auto c = cos_sq_pi_over(n);
  if (n < 3 || !c)
    throw PreconditionError("t_n is exact in Q(sqrt2,sqrt5) only for n in {3,4,5,6,8,10}; use --t");
  return *c / (FieldElem(2) - *c);
}

double t_for_n_float(int n) {
  if (n < 3) throw PreconditionError("n must be at least 3");
  double c = std::cos(M_PI / n);
  c *= c;
  return std::sqrt(c / (2 - c));
}

// ----------------------------------------------------------------- relations

size_t RelationMatrix::count(RelationKind k) const {
  size_t n = 0;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j) n += cells[i][j].kind == k;
  return n;
}

size_t RelationMatrix::count_for(size_t i, RelationKind k) const {
  size_t n = 0;
  for (size_t j = 0; j < cells.size(); ++j) n += j != i && cells[i][j].kind == k;
  return n;
}

std::string RelationMatrix::to_csv() const {
  std::ostringstream os;
  os << "wall";
  for (const auto& l : labels) os << ',' << l;
  os << '\n';
  for (size_t i = 0; i < cells.size(); ++i) {
    os << labels[i];
    for (size_t j = 0; j < cells.size(); ++j) os << ',' << (i == j ? '-' : kind_code(cells[i][j].kind));
    os << '\n';
  }
  return os.str();
}

RelationMatrix relation_matrix(const Arrangement& arr) {
  RelationMatrix m;
  m.labels = arr.labels();
  size_t n = arr.size();
  m.cells.assign(n, std::vector<PairInfo>(n));
  if (arr.is_exact()) {
    auto v = arr.exact_vectors();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        auto r = pair_relation(v[i], v[j]);
        PairInfo p{r.kind, r.angle, r.c_sign, r.value(), r.c_sq};
        m.cells[i][j] = m.cells[j][i] = p;
      }
  } else {
    auto v = arr.float_vectors();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        auto r = pair_relation(v[i], v[j]);
        PairInfo p{r.kind, r.angle, r.c_sign, r.value(), std::nullopt};
        m.cells[i][j] = m.cells[j][i] = p;
      }
  }
  return m;
}

CoxeterDiagram coxeter_diagram(const Arrangement& arr) {
  RelationMatrix m = relation_matrix(arr);
  CoxeterDiagram d;
  d.nodes = m.labels;
  for (size_t i = 0; i < m.cells.size(); ++i)
    for (size_t j = i + 1; j < m.cells.size(); ++j) {
      const PairInfo& p = m.cells[i][j];
      if (p.kind == RelationKind::Orthogonal) continue;
      d.edges.push_back({i, j, p.kind, p.angle, p.value});
    }
  return d;
}

// ------------------------------------------------------------ ideal vertices

std::vector<Vec<FieldElem>> cell24_vertices() {
  std::vector<Vec<FieldElem>> out;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec<FieldElem> v(5, FieldElem());
          v[0] = FieldElem::sqrt2();
          v[i] = FieldElem(si);
          v[j] = FieldElem(sj);
          out.push_back(v);
        }
  return out;
}

std::vector<IdealVertexRecord> ideal_vertices(const Arrangement& arr, const std::vector<Vec<FieldElem>>& candidates) {
  auto walls = arr.exact_vectors();
  std::vector<IdealVertexRecord> out;
  for (const auto& c : candidates) {
    if (c.size() != static_cast<size_t>(arr.dimension + 1))
      throw PreconditionError("ideal vertex candidate has the wrong dimension");
    Vec<ParamScalar> v(c.begin(), c.end());
    if (!is_zero(mink_dot(v, v))) throw PreconditionError("ideal vertex candidate is not light-like");
    IdealVertexRecord rec;
    rec.vertex = c;
    std::vector<size_t> inc;
    for (size_t i = 0; i < walls.size(); ++i)
      if (is_zero(mink_dot(v, walls[i]))) {
        inc.push_back(i);
        rec.incident.push_back(arr.walls[i].label);
      }
    Mat<ParamScalar> g(inc.size(), Vec<ParamScalar>(inc.size()));
    for (size_t a = 0; a < inc.size(); ++a)
      for (size_t b = 0; b < inc.size(); ++b) g[a][b] = mink_dot(walls[inc[a]], walls[inc[b]]);
    auto cls = classify_gram(g);
    rec.cusp_rank = cls.kind == SubdiagramClass::Kind::Parabolic ? cls.rank : 0;
    out.push_back(std::move(rec));
  }
  return out;
}

// ----------------------------------------------------------------- convexity

bool convexity_witness(const Arrangement& arr, const Vec<FieldElem>& v) {
  if (v.size() != static_cast<size_t>(arr.dimension + 1)) throw PreconditionError("witness has the wrong dimension");
  if (!(sign_of(mink_dot(v, v)) < 0 && sign_of(v[0]) > 0))
    throw PreconditionError("convexity witness must be a future-pointing time-like vector");
  switch (arr.param.kind) {
    case Parameter::Kind::Formal: {
      Vec<LaurentParam> lv(v.begin(), v.end());
      for (const auto& q : arr.formal_vectors()) {
        auto s = sign_for_all_positive_t(mink_dot(lv, q));
        if (!s || *s >= 0) return false;
      }
      return true;
    }
    case Parameter::Kind::Float: {
      Vec<double> dv;
      for (const auto& x : v) dv.push_back(x.to_double());
      for (const auto& q : arr.float_vectors())
        if (!(mink_dot(dv, q) < -kFloatTol)) return false;
      return true;
    }
    default: {
      Vec<ParamScalar> pv(v.begin(), v.end());
      for (const auto& q : arr.exact_vectors())
        if (sign_of(mink_dot(pv, q)) >= 0) return false;
      return true;
    }
  }
}

}  // namespace hyperdef
