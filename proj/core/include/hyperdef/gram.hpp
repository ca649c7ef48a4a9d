#pragma once

#include <string>
#include <vector>

#include "hyperdef/linalg.hpp"
#include "hyperdef/scalar.hpp"

namespace hyperdef {

// Elliptic: positive definite. Parabolic: positive semidefinite and
// singular; rank sums (size - nullity) over the singular components, and
// pure means every component is singular (an honest cusp diagram). A
// semidefinite diagram with an extra elliptic component is still reported
// as Parabolic, with only the singular part counted in the rank.
struct SubdiagramClass {
  enum class Kind { Elliptic, Parabolic, Indefinite };
  Kind kind = Kind::Elliptic;
  int rank = 0;
  bool pure = false;
  friend bool operator==(const SubdiagramClass&, const SubdiagramClass&) = default;
};
std::string to_string(const SubdiagramClass& c);

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
};

// Inertia of a symmetric matrix by congruence (symmetric pivoting).
template <class S>
Inertia inertia(Mat<S> m) {
  Inertia in;
  std::vector<size_t> live(m.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = i;
  while (!live.empty()) {
    size_t pick = live.size();
    for (size_t a = 0; a < live.size(); ++a)
      if (!is_zero(m[live[a]][live[a]])) {
        pick = a;
        break;
      }
    if (pick == live.size()) {
      for (size_t a : live)
        for (size_t b : live)
          if (!is_zero(m[a][b])) {
            // a hyperbolic 2x2 block: one positive and one negative direction
            in.neg += 1;
            in.pos += 1;
            in.zero += static_cast<int>(live.size()) - 2;
            return in;
          }
      in.zero += static_cast<int>(live.size());
      return in;
    }
    size_t p = live[pick];
    S piv = m[p][p];
    if (sign_of(piv) > 0) ++in.pos;
    else ++in.neg;
    live.erase(live.begin() + static_cast<long>(pick));
    S inv = S(1) / piv;
    for (size_t a : live) {
      if (is_zero(m[a][p])) continue;
      S f = m[a][p] * inv;
      for (size_t b : live) m[a][b] = m[a][b] - f * m[p][b];
    }
  }
  return in;
}

template <class S>
SubdiagramClass classify_gram(const Mat<S>& g) {
  size_t n = g.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      size_t a = stack.back();
      stack.pop_back();
      for (size_t b = 0; b < n; ++b)
        if (comp[b] < 0 && !is_zero(g[a][b])) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  SubdiagramClass out;
  bool any_singular = false, all_singular = true;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == c) idx.push_back(i);
    Mat<S> sub(idx.size(), Vec<S>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) sub[a][b] = g[idx[a]][idx[b]];
    Inertia in = inertia(sub);
    if (in.neg > 0) return {SubdiagramClass::Kind::Indefinite, 0, false};
    if (in.zero > 0) {
      any_singular = true;
      out.rank += in.pos;
    } else {
      all_singular = false;
    }
  }
  if (!any_singular) return {SubdiagramClass::Kind::Elliptic, 0, false};
  out.kind = SubdiagramClass::Kind::Parabolic;
  out.pure = all_singular;
  return out;
}

}  // namespace hyperdef
