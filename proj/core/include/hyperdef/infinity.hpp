#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperdef/arrangement.hpp"

namespace hyperdef {

using Point3 = std::array<double, 3>;

// Conformal chart of the sphere at infinity of H^4. The base chart is the
// stereographic projection from the cusp sqrt2 e0 + e1 + e2; a chart may add
// a similarity p -> scale * R (p - origin).
struct Chart {
  std::array<Point3, 3> rot{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Point3 origin{0, 0, 0};
  double scale = 1;
};

Chart base_chart();
// Similarity putting S(+0) on x = 0, S(-3) on y = 0, S(A) on z = 0 and S(-0)
// on y = 2, oriented so that S(+3) and S(B) lie on the positive side. At t = 1
// this is the base chart.
Chart normalized_chart(const Arrangement& arr);

// nullopt stands for the point at infinity.
std::optional<Point3> project_point(const Vec<double>& x, const Chart& chart = base_chart());
std::optional<std::array<FieldElem, 3>> project_point_exact(const Vec<FieldElem>& x);

struct WallImage {
  bool plane = false;
  Point3 center{};   // sphere centre, or unit normal for a plane
  double radius = 0; // sphere radius, or offset d in n . p = d
};

// Samples light-like points of the wall, projects them and fits a sphere or plane.
WallImage wall_sphere(const Vec<double>& q, const Chart& chart = base_chart());

struct SphereRow {
  std::string label;
  WallImage image;
};
// Sphere table of a 24-cell family arrangement in its normalised chart.
std::vector<SphereRow> sphere_table(const Arrangement& arr);
std::string sphere_table_csv(const std::vector<SphereRow>& rows);

struct SliceCurve {
  std::string label;
  bool line = false;
  std::array<double, 2> center{};  // circle centre, or a point on the line
  double radius = 0;
  std::array<double, 2> direction{};  // line direction
  RelationKind kind = RelationKind::Orthogonal;
  AngleClass angle;
  std::string color;
};

struct SliceFigure {
  std::string base;
  std::string parameter;
  std::vector<SliceCurve> curves;  // walls meeting the base wall at a finite angle
  std::vector<std::pair<std::string, std::array<double, 2>>> tangencies;
};

SliceFigure slice_figure(const Arrangement& arr, const std::string& base_label);
std::string slice_svg(const SliceFigure& fig);

// Light-like rays x (x0 > 0) with (x, q) <= 0 for every wall and lying on at
// least `dimension` walls, found by brute force over wall subsets.
std::vector<Vec<FieldElem>> discover_ideal_vertices(const Arrangement& arr);

struct CuboctahedronReport {
  Arrangement arrangement;
  size_t walls = 0;
  size_t orthogonal_pairs = 0;
  size_t non_right_angles = 0;
  std::vector<IdealVertexRecord> vertices;
};
CuboctahedronReport cuboctahedron_limit();

}  // namespace hyperdef
