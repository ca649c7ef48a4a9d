#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdef/minkowski.hpp"
#include "hyperdef/scalar.hpp"

namespace hyperdef {

// How the deformation parameter t is fixed for an arrangement.
struct Parameter {
  enum class Kind { None, Formal, Exact, Float };
  Kind kind = Kind::None;
  std::string text;   // echoed verbatim in reports
  TSquaredPtr tsq;    // Exact
  double t = 1.0;     // Float; also the numeric value for Exact

  static Parameter none() { return {}; }
  static Parameter formal();
  static Parameter exact(const FieldElem& t_sq, std::string text = "");
  static Parameter from_float(double t, std::string text = "");
  bool has_value() const { return kind == Kind::Exact || kind == Kind::Float || kind == Kind::None; }
};

// Wall normals are stored as Laurent polynomials in t; t-free walls are
// constants, so one representation serves the formal, exact and float modes.
struct Wall {
  std::string label;
  std::vector<LaurentParam> coords;
};

struct Arrangement {
  std::string name;
  int dimension = 4;
  Parameter param;
  std::vector<Wall> walls;

  size_t size() const { return walls.size(); }
  size_t index_of(std::string_view label) const;
  std::vector<size_t> indices_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels() const;

  bool is_exact() const { return param.kind == Parameter::Kind::None || param.kind == Parameter::Kind::Exact; }
  std::vector<Vec<ParamScalar>> exact_vectors() const;
  std::vector<Vec<double>> float_vectors() const;
  std::vector<Vec<LaurentParam>> formal_vectors() const;

  Arrangement with_parameter(Parameter p) const;
  Arrangement subset(const std::vector<std::string>& labels) const;
};

enum class Builtin { P24, Gamma22, Family22, ExtendedGenerators, L6, Cuboctahedron };
std::optional<Builtin> builtin_from_name(std::string_view name);
Arrangement builtin(Builtin which, Parameter p = Parameter::formal());

// Exact t^2 = c/(2-c), c = cos^2(pi/n), for the n where this lies in F.
FieldElem t_for_n(int n);
double t_for_n_float(int n);

// Pairwise relations of an arrangement.
struct PairInfo {
  RelationKind kind = RelationKind::Orthogonal;
  AngleClass angle;
  int c_sign = 0;
  double value = 0;                 // cos or cosh, numerically
  std::optional<ParamScalar> c_sq;  // exact cos^2 or cosh^2
};

struct RelationMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<PairInfo>> cells;  // diagonal cells unused
  size_t count(RelationKind k) const;
  size_t count_for(size_t i, RelationKind k) const;
  std::string to_csv() const;
};
RelationMatrix relation_matrix(const Arrangement& arr);

struct DiagramEdge {
  size_t i = 0, j = 0;
  RelationKind kind = RelationKind::Intersecting;
  AngleClass angle;
  double value = 0;
};
struct CoxeterDiagram {
  std::vector<std::string> nodes;
  std::vector<DiagramEdge> edges;  // every non-orthogonal pair
};
CoxeterDiagram coxeter_diagram(const Arrangement& arr);

// The 24 light-like vectors sqrt2 e0 +- ei +- ej.
std::vector<Vec<FieldElem>> cell24_vertices();

struct IdealVertexRecord {
  Vec<FieldElem> vertex;
  std::vector<std::string> incident;
  int cusp_rank = 0;
};
std::vector<IdealVertexRecord> ideal_vertices(const Arrangement& arr,
                                              const std::vector<Vec<FieldElem>>& candidates = cell24_vertices());

// Symmetries. g acts on all n+1 coordinates; with invert_t the images are
// matched against the walls at parameter 1/t. Returns the induced
// permutation (wall i goes to wall perm[i]) or nullopt.
std::optional<std::vector<size_t>> verify_symmetry(const Arrangement& arr, const Mat<FieldElem>& g,
                                                   bool invert_t = false);
Mat<FieldElem> reflection_in(const Arrangement& arr, std::string_view label);

struct SymmetryElement {
  Mat<Rational> spatial;  // acts on coordinates 1..4
  std::vector<size_t> perm;
};
// Orthogonal maps of the spatial coordinates permuting the 24 ideal vertices
// of the 24-cell that are also symmetries of arr.
std::vector<SymmetryElement> symmetry_group(const Arrangement& arr);
size_t symmetry_group_order(const Arrangement& arr);

// True when (v, q) < 0 for every wall and, in formal mode, every t > 0.
bool convexity_witness(const Arrangement& arr, const Vec<FieldElem>& v);

}  // namespace hyperdef
