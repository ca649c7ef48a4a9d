#include "hyperdef/tangent.hpp"

#include <utility>

namespace hyperdef {

namespace {

constexpr int kCoords = 5;

ParamScalar J(int c) { return ParamScalar(c == 0 ? -1 : 1); }

// Row for (qdot_i, q_j) + (q_i, qdot_j) = 0, or (q_i, qdot_i) = 0 when i == j.
Vec<ParamScalar> bilinear_row(size_t unknowns, size_t i, size_t j, const std::vector<Vec<ParamScalar>>& q) {
  Vec<ParamScalar> row(unknowns, ParamScalar(0));
  for (int c = 0; c < kCoords; ++c) {
    row[kCoords * i + c] += J(c) * q[j][c];
    if (i != j) row[kCoords * j + c] += J(c) * q[i][c];
  }
  return row;
}

bool same_parity_pair(const std::string& a, const std::string& b, char octet) {
  if (a[0] != octet || b[0] != octet || a == b) return false;
  return (a[1] - '0') % 2 == (b[1] - '0') % 2;
}

}  // namespace

LinearSystem build_system(const FieldElem& t0_sq, TangentMode mode) {
  Arrangement fam = builtin(Builtin::Family22, Parameter::exact(t0_sq));
  LinearSystem sys;
  sys.mode = mode;
  sys.tsq = fam.param.tsq;
  sys.walls = fam.labels();
  sys.unknowns = kCoords * fam.size();
  auto q = fam.exact_vectors();
  auto formal = fam.formal_vectors();
  const size_t n = fam.size();

  for (size_t i = 0; i < n; ++i) {
    sys.rows.push_back(bilinear_row(sys.unknowns, i, i, q));
    sys.tags.push_back("norm " + sys.walls[i]);
  }
  // pairs orthogonal for every t
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (mink_dot(formal[i], formal[j]).is_zero()) {
        sys.rows.push_back(bilinear_row(sys.unknowns, i, j, q));
        sys.tags.push_back("orth " + sys.walls[i] + " " + sys.walls[j]);
      }
  // letter tangencies: all letter pairs except the opposite ones
  const std::string letters = "ABCDEF";
  const std::pair<char, char> opposite[] = {{'A', 'F'}, {'B', 'E'}, {'C', 'D'}};
  for (size_t a = 0; a < letters.size(); ++a)
    for (size_t b = a + 1; b < letters.size(); ++b) {
      bool opp = false;
      for (auto [x, y] : opposite) opp = opp || (letters[a] == x && letters[b] == y);
      if (opp) continue;
      size_t i = fam.index_of(std::string(1, letters[a])), j = fam.index_of(std::string(1, letters[b]));
      sys.rows.push_back(bilinear_row(sys.unknowns, i, j, q));
      sys.tags.push_back(std::string("tangent ") + letters[a] + " " + letters[b]);
    }
  // slice: A, B, C fixed and D stays orthogonal to e4
  for (const char* l : {"A", "B", "C"}) {
    size_t i = fam.index_of(l);
    for (int c = 0; c < kCoords; ++c) {
      Vec<ParamScalar> row(sys.unknowns, ParamScalar(0));
      row[kCoords * i + c] = ParamScalar(1);
      sys.rows.push_back(std::move(row));
      sys.tags.push_back(std::string("slice ") + l + "[" + std::to_string(c) + "]");
    }
  }
  {
    Vec<ParamScalar> row(sys.unknowns, ParamScalar(0));
    row[kCoords * fam.index_of("D") + 4] = ParamScalar(1);
    sys.rows.push_back(std::move(row));
    sys.tags.push_back("slice D[4]");
  }
  if (mode == TangentMode::LambdaRigidity) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (same_parity_pair(sys.walls[i], sys.walls[j], '+')) {
          sys.rows.push_back(bilinear_row(sys.unknowns, i, j, q));
          sys.tags.push_back("angle " + sys.walls[i] + " " + sys.walls[j]);
        }
  }
  return sys;
}

std::vector<Vec<ParamScalar>> solve_kernel(const LinearSystem& sys) { return kernel_basis(sys.rows, sys.unknowns); }

Vec<ParamScalar> closed_form_tangent(const FieldElem& t0_sq) {
  Arrangement fam = builtin(Builtin::Family22, Parameter::exact(t0_sq));
  TSquaredPtr tsq = fam.param.tsq;
  ParamScalar t = ParamScalar::t(tsq);
  ParamScalar r(tsq->r);
  ParamScalar a = -t / (ParamScalar(1) + r);
  Vec<ParamScalar> out(kCoords * fam.size(), ParamScalar(0));
  const auto& walls = fam.formal_vectors();
  for (size_t i = 0; i < fam.size(); ++i) {
    const std::string& l = fam.walls[i].label;
    if (l[0] != '+' && l[0] != '-') continue;
    bool pos = l[0] == '+';
    ParamScalar f = pos ? -a / r : a;
    // sign pattern s1..s4 from the constant coordinates and the t-term
    Vec<ParamScalar> v(kCoords);
    v[0] = ParamScalar(FieldElem::sqrt2());
    for (int c = 1; c <= 3; ++c) v[c] = ParamScalar(walls[i][c].coeff(0));
    FieldElem s4 = pos ? walls[i][4].coeff(-1) : walls[i][4].coeff(1);
    v[4] = pos ? -t * ParamScalar(s4) : -ParamScalar(s4) / t;
    for (int c = 0; c < kCoords; ++c) out[kCoords * i + c] = f * v[c];
  }
  return out;
}

TangentReport tangent_report(const FieldElem& t0_sq, TangentMode mode) {
  LinearSystem sys = build_system(t0_sq, mode);
  TangentReport rep;
  rep.mode = mode;
  rep.equations = sys.rows.size();
  rep.unknowns = sys.unknowns;
  rep.basis = solve_kernel(sys);
  rep.dimension = rep.basis.size();
  if (rep.dimension == 1) rep.matched_closed_form = proportional(rep.basis[0], closed_form_tangent(t0_sq));
  return rep;
}

BoundaryFamilyResult boundary_family_check() {
  // outer variable r, coefficients Laurent in t
  const Laurent2 r = Laurent2::t();
  const Laurent2 one(LaurentParam(1));
  const FieldElem inv_sqrt2 = FieldElem::sqrt2().inverse();
  Vec<Laurent2> x = {(r + one) * Laurent2(LaurentParam(inv_sqrt2)), r, r, r,
                     Laurent2(LaurentParam::monomial(1, FieldElem(-1)))};
  Arrangement fam = builtin(Builtin::Family22, Parameter::formal());
  BoundaryFamilyResult out;
  out.orthogonal_identically = true;
  for (const char* l : {"+1", "+3", "+5"}) {
    Vec<Laurent2> q;
    for (const auto& c : fam.walls[fam.index_of(l)].coords) q.emplace_back(c);
    out.orthogonal_identically = out.orthogonal_identically && mink_dot(x, q).is_zero();
  }
  // substitute r = 1
  Vec<LaurentParam> at1;
  for (const auto& c : x) {
    LaurentParam s;
    for (const auto& [k, coeff] : c.terms()) s += coeff;
    at1.push_back(s);
  }
  out.r1_is_minus0 = at1 == fam.walls[fam.index_of("-0")].coords;
  Vec<FieldElem> num;
  for (const auto& c : at1) {
    FieldElem v;
    for (const auto& [k, coeff] : c.terms()) v += coeff;
    num.push_back(v);
  }
  out.norm_at_r1_t1 = mink_dot(num, num);
  return out;
}

std::string to_string(FuchsianResult::Kind k) {
  switch (k) {
    case FuchsianResult::Kind::Fuchsian: return "fuchsian";
    case FuchsianResult::Kind::DegenerateLightLike: return "degenerate-light-like";
    default: return "not-fuchsian";
  }
}

FuchsianResult fuchsian_end_test(const Arrangement& arr, const std::vector<std::string>& labels) {
  auto all = arr.exact_vectors();
  std::vector<Vec<ParamScalar>> walls;
  for (size_t i : arr.indices_of(labels)) walls.push_back(all[i]);
  auto ker = common_orthogonal(walls);
  FuchsianResult out;
  out.kernel_dimension = ker.size();
  if (ker.size() != 1) return out;
  out.hyperplane = ker[0];
  switch (classify_vector(ker[0])) {
    case VectorClass::SpaceLike: out.kind = FuchsianResult::Kind::Fuchsian; break;
    case VectorClass::LightLike: out.kind = FuchsianResult::Kind::DegenerateLightLike; break;
    default: out.kind = FuchsianResult::Kind::NotFuchsian;
  }
  return out;
}

}  // namespace hyperdef
