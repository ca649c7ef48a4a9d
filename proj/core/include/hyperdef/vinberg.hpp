#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperdef/arrangement.hpp"
#include "hyperdef/gram.hpp"

namespace hyperdef {

// Raw Gram matrix (q_i, q_j); definiteness and rank agree with the
// normalised Gram matrix since the normalisation is a positive congruence.
Mat<ParamScalar> gram_matrix(const Arrangement& arr, const std::vector<size_t>& idx);

SubdiagramClass classify_subdiagram(const Arrangement& arr, const std::vector<std::string>& labels);
int cusp_rank(const Arrangement& arr, const std::vector<std::string>& labels);

struct CuspInfo {
  std::vector<std::string> walls;
  int rank = 0;
};

struct VolumeOptions {
  // Off: every intersecting pair must meet at some pi/m (a Coxeter polytope).
  // On: run the combinatorial check at any parameter value.
  bool allow_generic = false;
};

struct VolumeVerdict {
  bool finite_volume = false;
  size_t edges = 0;
  size_t finite_edge_ends = 0;
  size_t cusp_edge_ends = 0;
  std::vector<std::vector<std::string>> finite_vertices;
  std::vector<CuspInfo> cusps;
  std::vector<std::vector<std::string>> bad_edges;
};

// Vinberg's criterion: every edge (elliptic (n-1)-subset) must have exactly
// two ends, each a finite vertex (elliptic n-subset containing it) or a cusp
// (pure parabolic subdiagram of rank n-1 containing it).
VolumeVerdict finite_volume_check(const Arrangement& arr, const VolumeOptions& opts = {});

struct CycleReport {
  std::vector<std::string> cycle;  // closed walk, first vertex not repeated
  ParamScalar product;
};

struct ArithmeticityVerdict {
  bool arithmetic = false;
  size_t cycles_checked = 0;
  std::optional<CycleReport> failing;
};

// Vinberg's arithmeticity criterion for noncompact finite-volume Coxeter
// polytopes: every cyclic product of edge labels (-2 times the normalised
// pairing), including back-and-forth along one edge, must be a rational integer.
ArithmeticityVerdict arithmeticity_check(const Arrangement& arr);

struct Transition {
  std::vector<std::string> subset;
  size_t from = 0, to = 0;  // grid indices
  SubdiagramClass before, after;
};

struct TransitionScan {
  std::vector<std::vector<std::string>> watched;
  std::vector<FieldElem> grid;  // values of t^2
  std::vector<std::vector<SubdiagramClass>> classes;  // [grid][watched]
  std::vector<Transition> transitions;
  // Where the class changes: a grid point when the subset is parabolic
  // there, otherwise the pair of neighbouring grid values.
  std::vector<std::vector<FieldElem>> locations() const;
  std::string to_csv() const;
};

TransitionScan transition_scan(const Arrangement& arr, const std::vector<std::vector<std::string>>& watched,
                               const std::vector<FieldElem>& grid);

}  // namespace hyperdef
