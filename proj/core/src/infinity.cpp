#include "hyperdef/infinity.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <sstream>

namespace hyperdef {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot3(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point3 scale3(const Point3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Point3 apply_chart(const Chart& c, const Point3& p) {
  Point3 d = sub(p, c.origin);
  Point3 out{};
  for (int i = 0; i < 3; ++i) out[i] = c.scale * dot3(c.rot[i], d);
  return out;
}

using PointMap = std::function<std::optional<Point3>(const Point3&)>;

// Deterministic light-like points on the wall: the wall meets the unit
// sphere {x0 = 1} in a 2-sphere with centre c and radius rho inside the
// hyperplane q_s . y = q0; sample it along a fixed spiral of directions.
std::vector<Point3> wall_samples(const Vec<double>& q, const Chart& chart, const PointMap& extra) {
  if (q.size() != 5) throw PreconditionError("wall_sphere: expected a vector in R^{1,4}");
  Eigen::Vector4d qs(q[1], q[2], q[3], q[4]);
  double qq = qs.squaredNorm();
  if (qq <= q[0] * q[0]) throw PreconditionError("wall_sphere: wall normal must be space-like");
  Eigen::Vector4d c = q[0] * qs / qq;
  double rho = std::sqrt(1 - q[0] * q[0] / qq);
  Eigen::Vector4d n = qs.normalized();
  std::vector<Eigen::Vector4d> basis;
  for (int k = 0; k < 4 && basis.size() < 3; ++k) {
    Eigen::Vector4d e = Eigen::Vector4d::Unit(k);
    e -= e.dot(n) * n;
    for (const auto& b : basis) e -= e.dot(b) * b;
    if (e.norm() > 1e-6) basis.push_back(e.normalized());
  }
  std::vector<Point3> pts;
  const int kSamples = 96;
  const double golden = M_PI * (3 - std::sqrt(5.0));
  for (int i = 0; i < kSamples; ++i) {
    double z = 1 - 2 * (i + 0.5) / kSamples;
    double r = std::sqrt(1 - z * z);
    double phi = golden * i;
    Eigen::Vector4d y = c + rho * (r * std::cos(phi) * basis[0] + r * std::sin(phi) * basis[1] + z * basis[2]);
    auto p = project_point({1, y[0], y[1], y[2], y[3]}, chart);
    if (!p) continue;
    if (extra) {
      p = extra(*p);
      if (!p) continue;
    }
    if (std::abs((*p)[0]) > 50 || std::abs((*p)[1]) > 50 || std::abs((*p)[2]) > 50) continue;
    pts.push_back(*p);
  }
  if (pts.size() < 8) throw std::runtime_error("wall_sphere: too few finite sample points");
  return pts;
}

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

WallImage tidy(WallImage w) {
  for (auto& c : w.center) c = clean(c);
  w.radius = clean(w.radius);
  return w;
}

WallImage fit(const std::vector<Point3>& pts) {
  // a |p|^2 + b . p + c = 0 in the least-squares sense
  Eigen::MatrixXd A(pts.size(), 5);
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& p = pts[i];
    A.row(static_cast<long>(i)) << dot3(p, p), p[0], p[1], p[2], 1;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  Eigen::VectorXd s = svd.matrixV().col(4);
  double a = s[0];
  Eigen::Vector3d b(s[1], s[2], s[3]);
  double c = s[4];
  WallImage w;
  if (std::abs(a) < 1e-9 * b.norm()) {
    double bn = b.norm();
    Eigen::Vector3d nrm = b / bn;
    double d = -c / bn;
    int big = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(nrm[k]) > std::abs(nrm[big])) big = k;
    if (nrm[big] < 0) {
      nrm = -nrm;
      d = -d;
    }
    w.plane = true;
    w.center = {nrm[0], nrm[1], nrm[2]};
    w.radius = d;
    return tidy(w);
  }
  Eigen::Vector3d ctr = -b / (2 * a);
  w.center = {ctr[0], ctr[1], ctr[2]};
  w.radius = std::sqrt(std::max(0.0, ctr.squaredNorm() - c / a));
  return tidy(w);
}

}  // namespace

Chart base_chart() { return Chart{}; }

std::optional<Point3> project_point(const Vec<double>& x, const Chart& chart) {
  if (x.size() != 5) throw PreconditionError("project_point: expected a vector in R^{1,4}");
  double n2 = 0;
  for (double v : x) n2 += v * v;
  if (std::abs(mink_dot(x, x)) > 1e-9 * n2) throw PreconditionError("project_point: vector is not light-like");
  if (x[0] == 0) throw PreconditionError("project_point: zero vector");
  double y[5];
  for (int i = 0; i < 5; ++i) y[i] = x[i] / x[0];
  double den = kSqrt2 - y[1] - y[2];
  if (std::abs(den) < 1e-12) return std::nullopt;
  Point3 p{(kSqrt2 - y[1] - y[2] - y[3] - y[4]) / den, (kSqrt2 - y[1] - y[2] + y[3] - y[4]) / den,
           (kSqrt2 - 2 * y[1]) / den};
  return apply_chart(chart, p);
}

std::optional<std::array<FieldElem, 3>> project_point_exact(const Vec<FieldElem>& x) {
  if (x.size() != 5) throw PreconditionError("project_point: expected a vector in R^{1,4}");
  if (!mink_dot(x, x).is_zero()) throw PreconditionError("project_point: vector is not light-like");
  if (x[0].is_zero()) throw PreconditionError("project_point: zero vector");
  Vec<FieldElem> y;
  FieldElem inv = x[0].inverse();
  for (const auto& v : x) y.push_back(v * inv);
  FieldElem s2 = FieldElem::sqrt2();
  FieldElem den = s2 - y[1] - y[2];
  if (den.is_zero()) return std::nullopt;
  FieldElem di = den.inverse();
  return std::array<FieldElem, 3>{(s2 - y[1] - y[2] - y[3] - y[4]) * di, (s2 - y[1] - y[2] + y[3] - y[4]) * di,
                                  (s2 - FieldElem(2) * y[1]) * di};
}

WallImage wall_sphere(const Vec<double>& q, const Chart& chart) { return fit(wall_samples(q, chart, nullptr)); }

Chart normalized_chart(const Arrangement& arr) {
  auto v = arr.float_vectors();
  auto plane = [&](const char* l) {
    WallImage w = wall_sphere(v[arr.index_of(l)]);
    if (!w.plane) throw PreconditionError(std::string("normalized_chart: wall ") + l + " does not pass through the pole");
    return w;
  };
  WallImage px = plane("+0"), py = plane("-3"), pz = plane("A"), far_y = plane("-0"), side_x = plane("+3"),
            side_z = plane("B");
  Eigen::Matrix3d N;
  N << px.center[0], px.center[1], px.center[2], py.center[0], py.center[1], py.center[2], pz.center[0],
      pz.center[1], pz.center[2];
  Eigen::Vector3d o = N.colPivHouseholderQr().solve(Eigen::Vector3d(px.radius, py.radius, pz.radius));
  Point3 origin{o[0], o[1], o[2]};
  // orient each axis towards the opposite face
  auto oriented = [&](const WallImage& axis, const WallImage& other) {
    double side = other.radius - dot3(other.center, origin);
    double s = (side * dot3(other.center, axis.center)) >= 0 ? 1 : -1;
    return scale3(axis.center, s);
  };
  Chart c;
  c.rot = {oriented(px, side_x), oriented(py, far_y), oriented(pz, side_z)};
  c.origin = origin;
  c.scale = 2 / std::abs(far_y.radius - dot3(far_y.center, origin));
  return c;
}

std::vector<SphereRow> sphere_table(const Arrangement& arr) {
  Chart chart = normalized_chart(arr);
  auto v = arr.float_vectors();
  std::vector<SphereRow> rows;
  for (size_t i = 0; i < v.size(); ++i) rows.push_back({arr.walls[i].label, wall_sphere(v[i], chart)});
  return rows;
}

std::string sphere_table_csv(const std::vector<SphereRow>& rows) {
  std::ostringstream os;
  os.precision(15);
  os << "wall,type,cx_or_nx,cy_or_ny,cz_or_nz,radius_or_offset\n";
  for (const auto& r : rows)
    os << r.label << ',' << (r.image.plane ? "plane" : "sphere") << ',' << r.image.center[0] << ','
       << r.image.center[1] << ',' << r.image.center[2] << ',' << r.image.radius << '\n';
  return os.str();
}

// -------------------------------------------------------------------- slices

namespace {

struct Frame {
  Point3 n, u, v;
  double d;
};

Frame plane_frame(const WallImage& base) {
  Frame f;
  f.n = base.center;
  f.d = base.radius;
  int big = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(f.n[k]) > std::abs(f.n[big])) big = k;
  // in-plane axes: the remaining coordinate axes, orthogonalised
  int a = big == 0 ? 1 : 0, b = big == 2 ? 1 : 2;
  auto axis = [](int k) {
    Point3 e{0, 0, 0};
    e[k] = 1;
    return e;
  };
  Point3 u = axis(a);
  u = sub(u, scale3(f.n, dot3(u, f.n)));
  u = scale3(u, 1 / std::sqrt(dot3(u, u)));
  Point3 v = axis(b);
  v = sub(v, scale3(f.n, dot3(v, f.n)));
  v = sub(v, scale3(u, dot3(v, u)));
  v = scale3(v, 1 / std::sqrt(dot3(v, v)));
  f.u = u;
  f.v = v;
  return f;
}

std::array<double, 2> to2d(const Frame& f, const Point3& p) { return {dot3(p, f.u), dot3(p, f.v)}; }

}  // namespace

SliceFigure slice_figure(const Arrangement& arr, const std::string& base_label) {
  size_t bi = arr.index_of(base_label);
  Chart chart;
  bool family = true;
  for (const char* l : {"+0", "-3", "A", "-0", "+3", "B"}) {
    bool found = false;
    for (const auto& w : arr.walls) found = found || w.label == l;
    family = family && found;
  }
  if (family) chart = normalized_chart(arr);
  auto v = arr.float_vectors();
  WallImage base = wall_sphere(v[bi], chart);
  PointMap inversion;
  if (!base.plane) {
    // invert in a sphere centred on the base sphere so that it becomes a plane
    Point3 pole{base.center[0], base.center[1], base.center[2] + base.radius};
    double k = 4 * base.radius * base.radius;
    inversion = [pole, k](const Point3& p) -> std::optional<Point3> {
      Point3 d = sub(p, pole);
      double dd = dot3(d, d);
      if (dd < 1e-18) return std::nullopt;
      Point3 r = scale3(d, k / dd);
      return Point3{pole[0] + r[0], pole[1] + r[1], pole[2] + r[2]};
    };
    base = fit(wall_samples(v[bi], chart, inversion));
  }
  Frame f = plane_frame(base);
  RelationMatrix rm = relation_matrix(arr);
  SliceFigure fig;
  fig.base = base_label;
  fig.parameter = arr.param.text;
  for (size_t j = 0; j < arr.size(); ++j) {
    if (j == bi) continue;
    const PairInfo& p = rm.cells[bi][j];
    WallImage img = fit(wall_samples(v[j], chart, inversion));
    if (p.kind == RelationKind::Tangent) {
      if (!img.plane) {
        double delta = dot3(img.center, f.n) - f.d;
        fig.tangencies.push_back({arr.walls[j].label, to2d(f, sub(img.center, scale3(f.n, delta)))});
      }
      continue;
    }
    if (p.kind != RelationKind::Orthogonal && p.kind != RelationKind::Intersecting) continue;
    SliceCurve c;
    c.label = arr.walls[j].label;
    c.kind = p.kind;
    c.angle = p.angle;
    bool right = p.kind == RelationKind::Orthogonal;
    c.color = right ? "black" : "brown";
    if (img.plane) {
      // line of intersection of two planes
      Point3 n2 = img.center;
      Point3 dir{f.n[1] * n2[2] - f.n[2] * n2[1], f.n[2] * n2[0] - f.n[0] * n2[2], f.n[0] * n2[1] - f.n[1] * n2[0]};
      Eigen::Matrix3d M;
      M << f.n[0], f.n[1], f.n[2], n2[0], n2[1], n2[2], dir[0], dir[1], dir[2];
      Eigen::Vector3d pt = M.colPivHouseholderQr().solve(Eigen::Vector3d(f.d, img.radius, 0));
      c.line = true;
      c.center = to2d(f, {pt[0], pt[1], pt[2]});
      c.direction = to2d(f, dir);
      double dn = std::hypot(c.direction[0], c.direction[1]);
      c.direction = {c.direction[0] / dn, c.direction[1] / dn};
    } else {
      double delta = dot3(img.center, f.n) - f.d;
      c.center = to2d(f, sub(img.center, scale3(f.n, delta)));
      c.radius = std::sqrt(std::max(0.0, img.radius * img.radius - delta * delta));
    }
    fig.curves.push_back(c);
  }
  return fig;
}

std::string slice_svg(const SliceFigure& fig) {
  // viewport [-1, 3] x [-1, 3], y up
  const double px = 480, lo = -1, hi = 3, s = px / (hi - lo);
  auto X = [&](double x) { return (x - lo) * s; };
  auto Y = [&](double y) { return (hi - y) * s; };
  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px << "\" viewBox=\"0 0 "
     << px << ' ' << px << "\">\n";
  os << "<title>slice of wall " << fig.base << " at t=" << fig.parameter << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& c : fig.curves) {
    if (c.line) {
      double L = 100;
      os << "<line x1=\"" << X(c.center[0] - L * c.direction[0]) << "\" y1=\"" << Y(c.center[1] - L * c.direction[1])
         << "\" x2=\"" << X(c.center[0] + L * c.direction[0]) << "\" y2=\"" << Y(c.center[1] + L * c.direction[1])
         << "\" stroke=\"" << c.color << "\" stroke-width=\"1.5\"/>\n";
    } else {
      os << "<circle cx=\"" << X(c.center[0]) << "\" cy=\"" << Y(c.center[1]) << "\" r=\"" << c.radius * s
         << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\"/>\n";
    }
    os << "<text x=\"" << X(c.center[0]) << "\" y=\"" << Y(c.center[1]) << "\" font-size=\"11\" fill=\"" << c.color
       << "\">" << c.label << "</text>\n";
  }
  for (const auto& [label, p] : fig.tangencies)
    os << "<circle cx=\"" << X(p[0]) << "\" cy=\"" << Y(p[1]) << "\" r=\"3\" fill=\"gray\"><title>" << label
       << "</title></circle>\n";
  os << "</svg>\n";
  return os.str();
}

// ------------------------------------------------------------ cuboctahedron

std::vector<Vec<FieldElem>> discover_ideal_vertices(const Arrangement& arr) {
  auto walls = arr.exact_vectors();
  const size_t n = walls.size(), d = static_cast<size_t>(arr.dimension);
  std::vector<Vec<ParamScalar>> found;
  std::vector<size_t> pick(d);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == d) {
      std::vector<Vec<ParamScalar>> sub;
      for (size_t i : pick) sub.push_back(walls[i]);
      auto ker = common_orthogonal(sub);
      if (ker.size() != 1) return;
      Vec<ParamScalar> x = ker[0];
      if (!is_zero(mink_dot(x, x)) || is_zero(x[0])) return;
      ParamScalar inv = ParamScalar(1) / x[0];
      for (auto& c : x) c = c * inv;
      for (const auto& q : walls)
        if (sign_of(mink_dot(x, q)) > 0) return;
      for (const auto& y : found)
        if (y == x) return;
      found.push_back(x);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  std::vector<Vec<FieldElem>> out;
  for (const auto& x : found) {
    Vec<FieldElem> v;
    for (const auto& c : x) {
      if (!c.odd().is_zero()) throw PreconditionError("discover_ideal_vertices: vertex depends on t");
      v.push_back(c.even());
    }
    out.push_back(v);
  }
  return out;
}

CuboctahedronReport cuboctahedron_limit() {
  CuboctahedronReport rep;
  rep.arrangement = builtin(Builtin::Cuboctahedron);
  rep.walls = rep.arrangement.size();
  RelationMatrix rm = relation_matrix(rep.arrangement);
  rep.orthogonal_pairs = rm.count(RelationKind::Orthogonal);
  rep.non_right_angles = rm.count(RelationKind::Intersecting);
  rep.vertices = ideal_vertices(rep.arrangement, discover_ideal_vertices(rep.arrangement));
  return rep;
}

}  // namespace hyperdef
