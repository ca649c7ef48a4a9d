#pragma once

#include <string>
#include <vector>

#include "hyperdef/arrangement.hpp"

namespace hyperdef {

enum class TangentMode {
  Gamma22Slice,    // deformations of the 22-wall family modulo the letter slice
  LambdaRigidity,  // additionally keep the 12 positive-octet angles fixed
};

// Linearised constraints on the velocities qdot_i of the 22 walls of the
// family at t0; unknown 5*i + c is coordinate c of qdot_i.
struct LinearSystem {
  TangentMode mode = TangentMode::Gamma22Slice;
  TSquaredPtr tsq;
  std::vector<std::string> walls;
  size_t unknowns = 0;
  Mat<ParamScalar> rows;
  std::vector<std::string> tags;  // one per row, e.g. "norm +0", "orth +0 -3"
};

LinearSystem build_system(const FieldElem& t0_sq, TangentMode mode);
std::vector<Vec<ParamScalar>> solve_kernel(const LinearSystem& sys);

// The t-derivative of the family rescaled to constant norms, at t0, with
// a = -t0/(1+t0^2): qdot(+i) = (-a/t0^2) (sqrt2, s1, s2, s3, -t0 s4),
// qdot(-i) = a (sqrt2, s1, s2, s3, -s4/t0), letters fixed.
Vec<ParamScalar> closed_form_tangent(const FieldElem& t0_sq);

struct TangentReport {
  TangentMode mode = TangentMode::Gamma22Slice;
  size_t equations = 0;
  size_t unknowns = 0;
  size_t dimension = 0;
  std::vector<Vec<ParamScalar>> basis;
  bool matched_closed_form = false;
};
TangentReport tangent_report(const FieldElem& t0_sq, TangentMode mode);

// ((r+1)/sqrt2, r, r, r, -t) is orthogonal to +1, +3, +5 identically in r and t.
struct BoundaryFamilyResult {
  bool orthogonal_identically = false;
  bool r1_is_minus0 = false;      // r = 1 gives the -0 wall
  FieldElem norm_at_r1_t1;        // Minkowski norm at r = t = 1
};
BoundaryFamilyResult boundary_family_check();

struct FuchsianResult {
  enum class Kind { Fuchsian, NotFuchsian, DegenerateLightLike };
  Kind kind = Kind::NotFuchsian;
  size_t kernel_dimension = 0;
  Vec<ParamScalar> hyperplane;  // set when the kernel is one-dimensional
};
std::string to_string(FuchsianResult::Kind k);

// A set of walls bounds a Fuchsian end when its common orthogonal is a
// single space-like direction, i.e. all walls are orthogonal to one hyperplane.
FuchsianResult fuchsian_end_test(const Arrangement& arr, const std::vector<std::string>& labels);

}  // namespace hyperdef
