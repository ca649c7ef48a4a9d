#include <doctest.h>

#include "hyperdef/infinity.hpp"
#include "oracles.hpp"

using namespace hyperdef;

TEST_CASE("projection of ideal vertices") {
  FieldElem r2 = FieldElem::sqrt2();
  auto p = project_point_exact({r2, -1, -1, 0, 0});
  REQUIRE(p);
  CHECK((*p)[0] == FieldElem(1));
  CHECK((*p)[1] == FieldElem(1));
  CHECK((*p)[2] == FieldElem(1));
  CHECK(!project_point_exact({r2, 1, 1, 0, 0}).has_value());
  CHECK(!project_point({std::sqrt(2.0), 1, 1, 0, 0}).has_value());
  CHECK_THROWS_AS(project_point({1, 0, 0, 0, 0}), PreconditionError);
  // exact and float projections agree on every 24-cell vertex
  for (const auto& v : cell24_vertices()) {
    auto e = project_point_exact(v);
    Vec<double> f;
    for (const auto& x : v) f.push_back(x.to_double());
    auto d = project_point(f);
    REQUIRE(e.has_value() == d.has_value());
    if (e)
      for (int i = 0; i < 3; ++i) CHECK(std::abs((*e)[i].to_double() - (*d)[i]) < 1e-12);
  }
}

TEST_CASE("normalised chart is the base chart at t = 1") {
  Chart c = normalized_chart(builtin(Builtin::P24, Parameter::from_float(1)));
  CHECK(std::abs(c.scale - 1) < 1e-9);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(c.origin[i]) < 1e-9);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(c.rot[i][j] - (i == j)) < 1e-9);
  }
}

namespace {

// |cos| of the Euclidean angle between two fitted images
double image_cos(const WallImage& a, const WallImage& b) {
  auto d3 = [](const Point3& x, const Point3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; };
  if (a.plane && b.plane) return std::abs(d3(a.center, b.center));
  if (a.plane || b.plane) {
    const WallImage& p = a.plane ? a : b;
    const WallImage& s = a.plane ? b : a;
    return std::abs(d3(p.center, s.center) - p.radius) / s.radius;
  }
  Point3 d{a.center[0] - b.center[0], a.center[1] - b.center[1], a.center[2] - b.center[2]};
  return std::abs(a.radius * a.radius + b.radius * b.radius - d3(d, d)) / (2 * a.radius * b.radius);
}

}  // namespace

TEST_CASE("conformal angles between fitted spheres match the Minkowski pairing") {
  for (double t : {0.8, 0.9, 0.7}) {
    Arrangement a = builtin(Builtin::Family22, Parameter::from_float(t));
    auto rows = sphere_table(a);
    auto v = a.float_vectors();
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j) {
        std::vector<long double> x(v[i].begin(), v[i].end()), y(v[j].begin(), v[j].end());
        long double c = std::fabs(oracle::dot(x, y)) / std::sqrt(oracle::dot(x, x) * oracle::dot(y, y));
        if (c > 1 + 1e-9) continue;  // disjoint spheres carry no angle
        CHECK(std::abs(image_cos(rows[i].image, rows[j].image) - (double)c) < 1e-7);
      }
  }
}

TEST_CASE("slice figures") {
  auto at = [](double t) { return builtin(Builtin::Family22, Parameter::from_float(t)); };
  CHECK(slice_figure(at(0.8), "A").curves.size() == 8);
  CHECK(slice_figure(at(0.8), "+3").curves.size() == 10);
  CHECK(slice_figure(at(1), "-0").curves.size() == 7);
  auto round = slice_figure(at(0.8), "C");  // a round sphere, handled by inversion
  CHECK(!round.curves.empty());
  auto fig = slice_figure(at(0.8), "+3");
  size_t brown = 0;
  for (const auto& c : fig.curves) brown += c.color == "brown";
  CHECK(brown == 3);  // +1, +5 and +7 meet +3 at theta
  std::string svg = slice_svg(fig);
  size_t shapes = 0;
  for (size_t pos = 0; (pos = svg.find("stroke-width", pos)) != std::string::npos; ++pos) ++shapes;
  CHECK(shapes == fig.curves.size());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK_THROWS(slice_figure(at(0.8), "Z"));
}

TEST_CASE("cuboctahedron vertices by brute force") {
  auto v = discover_ideal_vertices(builtin(Builtin::Cuboctahedron, Parameter::none()));
  CHECK(v.size() == 12);
  for (const auto& x : v) CHECK(mink_dot(x, x).is_zero());
}
