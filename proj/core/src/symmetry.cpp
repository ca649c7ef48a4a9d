#include <cmath>
#include <set>

#include "hyperdef/arrangement.hpp"

namespace hyperdef {

namespace {

bool preserves_form(const Mat<FieldElem>& g) {
  size_t n = g.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      FieldElem s = -(g[0][a] * g[0][b]);
      for (size_t k = 1; k < n; ++k) s += g[k][a] * g[k][b];
      FieldElem want = a == b ? FieldElem(a == 0 ? -1 : 1) : FieldElem();
      if (!(s == want)) return false;
    }
  return true;
}

Vec<double> unit(Vec<double> v) {
  double n = 0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

bool float_close(const Vec<double>& a, const Vec<double>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-7) return false;
  return true;
}

// Candidates for the image of each wall, found with a numeric pre-filter and
// confirmed exactly by `same_ray`.
template <class S, class SameRay>
std::optional<std::vector<size_t>> match(const std::vector<Vec<S>>& images, const std::vector<Vec<S>>& targets,
                                         const std::vector<Vec<double>>& fimages,
                                         const std::vector<Vec<double>>& ftargets, SameRay same_ray) {
  std::vector<size_t> perm(images.size());
  std::vector<bool> used(targets.size(), false);
  for (size_t i = 0; i < images.size(); ++i) {
    Vec<double> ui = unit(fimages[i]);
    bool found = false;
    for (size_t j = 0; j < targets.size() && !found; ++j) {
      if (used[j] || !float_close(ui, unit(ftargets[j]))) continue;
      if (same_ray(images[i], targets[j])) {
        perm[i] = j;
        used[j] = true;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

// a point where no built-in coordinate degenerates, used only to pre-filter
constexpr double kProbeT = 0.7317;

}  // namespace

std::optional<std::vector<size_t>> verify_symmetry(const Arrangement& arr, const Mat<FieldElem>& g, bool invert_t) {
  size_t n = static_cast<size_t>(arr.dimension + 1);
  if (g.size() != n) throw PreconditionError("symmetry matrix has the wrong size");
  for (const auto& row : g)
    if (row.size() != n) throw PreconditionError("symmetry matrix has the wrong size");
  if (!preserves_form(g)) throw PreconditionError("matrix does not preserve the Minkowski form");

  if (arr.param.kind == Parameter::Kind::Float) throw PreconditionError("verify_symmetry needs an exact or formal parameter");

  if (arr.param.kind == Parameter::Kind::Formal) {
    auto walls = arr.formal_vectors();
    std::vector<Vec<LaurentParam>> images, targets;
    std::vector<Vec<double>> fi, ft;
    for (const auto& q : walls) {
      images.push_back(apply(g, q));
      Vec<LaurentParam> tq = q;
      if (invert_t)
        for (auto& c : tq) c = c.inverted();
      targets.push_back(tq);
    }
    auto eval = [](const Vec<LaurentParam>& v) {
      Vec<double> r;
      for (const auto& c : v) r.push_back(laurent_eval(c, kProbeT));
      return r;
    };
    for (const auto& v : images) fi.push_back(eval(v));
    for (const auto& v : targets) ft.push_back(eval(v));
    return match(images, targets, fi, ft, [](const Vec<LaurentParam>& u, const Vec<LaurentParam>& w) {
      if (!proportional(u, w)) return false;
      for (size_t a = 0; a < w.size(); ++a)
        if (!w[a].is_zero()) {
          auto s = sign_for_all_positive_t(u[a] * w[a]);
          return s && *s > 0;
        }
      return false;
    });
  }

  Arrangement target = arr;
  if (invert_t && arr.param.kind == Parameter::Kind::Exact)
    target = arr.with_parameter(Parameter::exact(arr.param.tsq->r.inverse()));
  auto walls = arr.exact_vectors();
  auto targets = target.exact_vectors();
  std::vector<Vec<ParamScalar>> images;
  for (const auto& q : walls) images.push_back(apply(g, q));
  auto fl = [](const std::vector<Vec<ParamScalar>>& vs) {
    std::vector<Vec<double>> out;
    for (const auto& v : vs) {
      Vec<double> r;
      for (const auto& c : v) r.push_back(c.to_double());
      out.push_back(r);
    }
    return out;
  };
  return match(images, targets, fl(images), fl(targets), [](const Vec<ParamScalar>& u, const Vec<ParamScalar>& w) {
    if (!proportional(u, w)) return false;
    for (size_t a = 0; a < w.size(); ++a)
      if (!w[a].is_zero()) return sign_of(u[a]) * sign_of(w[a]) > 0;
    return false;
  });
}

Mat<FieldElem> reflection_in(const Arrangement& arr, std::string_view label) {
  const Wall& w = arr.walls[arr.index_of(label)];
  Vec<FieldElem> q;
  for (const auto& c : w.coords) {
    if (!(c.is_zero() || (c.min_exp() == 0 && c.max_exp() == 0)))
      throw PreconditionError("reflection_in: wall depends on t");
    q.push_back(c.coeff(0));
  }
  return reflection_matrix(q);
}

std::vector<SymmetryElement> symmetry_group(const Arrangement& arr) {
  if (arr.dimension != 4) throw PreconditionError("symmetry_group: only defined in dimension 4");
  // spatial parts of the 24 ideal vertices
  std::vector<std::array<int, 4>> verts;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::array<int, 4> v{};
          v[i] = si;
          v[j] = sj;
          verts.push_back(v);
        }
  std::set<std::array<int, 4>> vset(verts.begin(), verts.end());
  auto dot = [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  };
  // g is fixed by the images of the orthogonal basis e1+e2, e1-e2, e3+e4, e3-e4
  const std::array<std::array<int, 4>, 4> basis{{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}}};
  std::vector<SymmetryElement> out;
  std::array<size_t, 4> pick{};
  auto try_tuple = [&]() {
    // g = W B^T / 2; entries lie in Z[1/2]
    Mat<Rational> g(4, Vec<Rational>(4, Rational(0)));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        Rational s = 0;
        for (int k = 0; k < 4; ++k) s += verts[pick[k]][r] * basis[k][c];
        g[r][c] = s / 2;
      }
    for (const auto& v : verts) {
      std::array<Rational, 4> img{};
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) img[r] += g[r][c] * v[c];
      std::array<int, 4> iv{};
      for (int r = 0; r < 4; ++r) {
        if (img[r].get_den() != 1) return;
        iv[r] = static_cast<int>(img[r].get_num().get_si());
      }
      if (!vset.count(iv)) return;
    }
    Mat<FieldElem> lift(5, Vec<FieldElem>(5, FieldElem()));
    lift[0][0] = FieldElem(1);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) lift[r + 1][c + 1] = FieldElem(g[r][c]);
    auto perm = verify_symmetry(arr, lift);
    if (perm) out.push_back({g, *perm});
  };
  for (pick[0] = 0; pick[0] < verts.size(); ++pick[0])
    for (pick[1] = 0; pick[1] < verts.size(); ++pick[1]) {
      if (dot(verts[pick[0]], verts[pick[1]]) != 0) continue;
      for (pick[2] = 0; pick[2] < verts.size(); ++pick[2]) {
        if (dot(verts[pick[0]], verts[pick[2]]) != 0 || dot(verts[pick[1]], verts[pick[2]]) != 0) continue;
        for (pick[3] = 0; pick[3] < verts.size(); ++pick[3]) {
          if (dot(verts[pick[0]], verts[pick[3]]) != 0 || dot(verts[pick[1]], verts[pick[3]]) != 0 ||
              dot(verts[pick[2]], verts[pick[3]]) != 0)
            continue;
          try_tuple();
        }
      }
    }
  return out;
}

size_t symmetry_group_order(const Arrangement& arr) { return symmetry_group(arr).size(); }

}  // namespace hyperdef
