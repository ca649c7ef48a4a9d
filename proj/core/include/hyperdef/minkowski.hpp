#pragma once

#include <cmath>
#include <string>

#include "hyperdef/linalg.hpp"
#include "hyperdef/scalar.hpp"

namespace hyperdef {

// (v, w) = -v0 w0 + v1 w1 + ... + vn wn
template <class S>
S mink_dot(const Vec<S>& v, const Vec<S>& w) {
  if (v.size() != w.size()) throw PreconditionError("dimension mismatch in Minkowski product");
  S s = -(v[0] * w[0]);
  for (size_t i = 1; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

enum class VectorClass { SpaceLike, LightLike, TimeLike };
std::string to_string(VectorClass c);

template <class S>
VectorClass classify_vector(const Vec<S>& v) {
  int s = sign_of(mink_dot(v, v));
  return s > 0 ? VectorClass::SpaceLike : s < 0 ? VectorClass::TimeLike : VectorClass::LightLike;
}

enum class RelationKind { Orthogonal, Intersecting, Tangent, Ultraparallel, Diverging };
std::string to_string(RelationKind k);
char kind_code(RelationKind k);

// With c = -(q1,q2)/sqrt(N1 N2): |c| < 1 intersecting at angle acos(c),
// c = 1 tangent at infinity, c > 1 ultraparallel with cosh(d) = c, and
// c <= -1 the walls diverge with their half-spaces nested (no Coxeter angle).
template <class S>
struct PairRelation {
  RelationKind kind = RelationKind::Orthogonal;
  S c_sq{};           // cos^2 or cosh^2
  int c_sign = 0;     // sign of c
  AngleClass angle;   // meaningful for Orthogonal / Intersecting
  double value() const { return c_sign * std::sqrt(std::abs(to_double(c_sq))); }
};

template <class S>
bool proportional(const Vec<S>& a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!is_zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

template <class S>
PairRelation<S> pair_relation(const Vec<S>& q1, const Vec<S>& q2) {
  if (proportional(q1, q2)) throw PreconditionError("pair_relation: proportional vectors");
  S n1 = mink_dot(q1, q1), n2 = mink_dot(q2, q2);
  if (sign_of(n1) <= 0 || sign_of(n2) <= 0) throw PreconditionError("pair_relation: walls must be space-like");
  S g = mink_dot(q1, q2);
  PairRelation<S> r;
  r.c_sign = -sign_of(g);
  r.c_sq = g * g / (n1 * n2);
  if (r.c_sign == 0) {
    r.kind = RelationKind::Orthogonal;
    r.c_sq = S(0);
    r.angle = {AngleClass::Kind::PiOver, 2};
    return r;
  }
  int cmp = sign_of(r.c_sq - S(1));
  if (cmp < 0) {
    r.kind = RelationKind::Intersecting;
    r.angle = recognize_angle(r.c_sq, r.c_sign);
  } else if (r.c_sign < 0) {
    r.kind = RelationKind::Diverging;
  } else {
    r.kind = cmp == 0 ? RelationKind::Tangent : RelationKind::Ultraparallel;
  }
  return r;
}

// Basis of {x : (x, q) = 0 for all q in walls}.
template <class S>
std::vector<Vec<S>> common_orthogonal(const std::vector<Vec<S>>& walls) {
  if (walls.empty()) throw PreconditionError("common_orthogonal: no walls");
  size_t n = walls[0].size();
  Mat<S> rows;
  for (const auto& q : walls) {
    Vec<S> r = q;
    r[0] = -r[0];
    rows.push_back(std::move(r));
  }
  return kernel_basis(rows, n);
}

// Reflection in the wall of q: x - 2 (x,q)/(q,q) q.
template <class S>
Vec<S> reflect(const Vec<S>& x, const Vec<S>& q) {
  S nq = mink_dot(q, q);
  if (is_zero(nq)) throw PreconditionError("reflect: light-like normal");
  S f = S(2) * mink_dot(x, q) / nq;
  Vec<S> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - f * q[i];
  return r;
}

// Matrix of the reflection in q.
template <class S>
Mat<S> reflection_matrix(const Vec<S>& q) {
  size_t n = q.size();
  Mat<S> m(n, Vec<S>(n, S(0)));
  for (size_t j = 0; j < n; ++j) {
    Vec<S> e(n, S(0));
    e[j] = S(1);
    Vec<S> img = reflect(e, q);
    for (size_t i = 0; i < n; ++i) m[i][j] = img[i];
  }
  return m;
}

template <class S, class T>
Vec<T> apply(const Mat<S>& m, const Vec<T>& v) {
  Vec<T> r(m.size(), T(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(m[i][j])) r[i] += T(m[i][j]) * v[j];
  return r;
}

}  // namespace hyperdef
