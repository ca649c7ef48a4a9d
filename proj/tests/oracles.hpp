#pragma once

// Reference computations that share no code with the library: high-precision
// floats via GMP's mpf and plain long double geometry.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "hyperdef/scalar.hpp"

namespace oracle {

inline mpf_class mpf_sqrt(long n, unsigned bits = 512) {
  mpf_class x(n, bits);
  return sqrt(x);
}

// a + b sqrt2 + c sqrt5 + d sqrt10 in 512-bit floating point.
inline mpf_class eval(const hyperdef::FieldElem& x, unsigned bits = 512) {
  mpf_class out(0, bits);
  const long roots[4] = {1, 2, 5, 10};
  for (int i = 0; i < 4; ++i) {
    mpf_class q(x[i], bits);
    out += q * (roots[i] == 1 ? mpf_class(1, bits) : mpf_sqrt(roots[i], bits));
  }
  return out;
}

inline int sign(const hyperdef::FieldElem& x) {
  mpf_class v = eval(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline long double dot(const std::vector<long double>& a, const std::vector<long double>& b) {
  long double s = -a[0] * b[0];
  for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// The 24 wall vectors of the regular ideal 24-cell written out by hand.
struct RawWall {
  std::string label;
  std::vector<long double> v;
};
inline std::vector<RawWall> p24_walls(long double t = 1) {
  const long double r2 = std::sqrt(2.0L);
  // sign patterns of coordinates 1..4
  const int pos[8][4] = {{1, 1, 1, 1},  {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1},
                         {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}};
  const int neg[8][4] = {{1, 1, 1, -1},  {1, -1, 1, 1},  {1, -1, -1, -1}, {1, 1, -1, 1},
                         {-1, 1, -1, -1}, {-1, 1, 1, 1},  {-1, -1, 1, -1}, {-1, -1, -1, 1}};
  std::vector<RawWall> out;
  for (int i = 0; i < 8; ++i)
    out.push_back({"+" + std::to_string(i), {r2, (long double)pos[i][0], (long double)pos[i][1],
                                             (long double)pos[i][2], pos[i][3] / t}});
  for (int i = 0; i < 8; ++i)
    out.push_back({"-" + std::to_string(i), {r2, (long double)neg[i][0], (long double)neg[i][1],
                                             (long double)neg[i][2], neg[i][3] * t}});
  out.push_back({"A", {1, r2, 0, 0, 0}});
  out.push_back({"B", {1, 0, r2, 0, 0}});
  out.push_back({"C", {1, 0, 0, r2, 0}});
  out.push_back({"D", {1, 0, 0, -r2, 0}});
  out.push_back({"E", {1, 0, -r2, 0, 0}});
  out.push_back({"F", {1, -r2, 0, 0, 0}});
  out.push_back({"G", {1, 0, 0, 0, -r2}});
  out.push_back({"H", {1, 0, 0, 0, r2}});
  return out;
}

}  // namespace oracle
