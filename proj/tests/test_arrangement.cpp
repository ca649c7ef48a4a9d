#include <doctest.h>

#include "hyperdef/arrangement.hpp"
#include "hyperdef/serialize.hpp"
#include "oracles.hpp"

using namespace hyperdef;

namespace {
FieldElem Q(long p, long q = 1) { return FieldElem(Rational(p, q)); }
}  // namespace

TEST_CASE("builtin arrangements have the expected walls") {
  CHECK(builtin(Builtin::P24, Parameter::none()).size() == 24);
  CHECK(builtin(Builtin::Gamma22, Parameter::none()).size() == 22);
  CHECK(builtin(Builtin::Family22).size() == 22);
  CHECK(builtin(Builtin::ExtendedGenerators).labels() ==
        std::vector<std::string>{"+0", "-0", "+3", "-3", "A", "L", "M", "N"});
  CHECK(builtin(Builtin::L6, Parameter::exact(Q(3, 5))).size() == 10);
  CHECK_THROWS_AS(builtin(Builtin::L6, Parameter::exact(Q(1, 3))), PreconditionError);
  CHECK(builtin(Builtin::Cuboctahedron, Parameter::none()).dimension == 3);
  CHECK(!builtin_from_name("p25").has_value());
}

TEST_CASE("family walls match the hand-written table at several t") {
  for (long double t : {1.0L, 0.8L, 0.5L, 2.0L}) {
    Arrangement f = builtin(Builtin::Family22, Parameter::from_float((double)t));
    auto v = f.float_vectors();
    auto raw = oracle::p24_walls(t);
    for (size_t i = 0; i < 22; ++i) {
      REQUIRE(f.walls[i].label == raw[i].label);
      for (int c = 0; c < 5; ++c) CHECK(std::fabs(v[i][c] - (double)raw[i].v[c]) < 1e-12);
    }
  }
}

TEST_CASE("t_n values agree with the defining formula") {
  for (int n : {3, 4, 5, 6, 8, 10}) {
    double c = std::cos(M_PI / n) * std::cos(M_PI / n);
    CHECK(std::abs(t_for_n(n).to_double() - c / (2 - c)) < 1e-13);
    CHECK(std::abs(t_for_n_float(n) - std::sqrt(c / (2 - c))) < 1e-13);
  }
  CHECK(std::abs(t_for_n_float(7) - std::sqrt(std::pow(std::cos(M_PI / 7), 2) / (2 - std::pow(std::cos(M_PI / 7), 2)))) < 1e-13);
  CHECK_THROWS_AS(t_for_n(7), PreconditionError);
}

TEST_CASE("relation matrix in exact and float modes agree") {
  auto fam = builtin(Builtin::Family22);
  RelationMatrix ex = relation_matrix(fam.with_parameter(Parameter::exact(Q(16, 25))));
  RelationMatrix fl = relation_matrix(fam.with_parameter(Parameter::from_float(0.8)));
  for (size_t i = 0; i < 22; ++i)
    for (size_t j = i + 1; j < 22; ++j) {
      CHECK(ex.cells[i][j].kind == fl.cells[i][j].kind);
      CHECK(std::abs(ex.cells[i][j].value - fl.cells[i][j].value) < 1e-9);
    }
  std::string csv = ex.to_csv();
  CHECK(csv.rfind("wall,+0,+1,", 0) == 0);
}

TEST_CASE("Coxeter diagram lists every non-orthogonal pair") {
  auto ext = builtin(Builtin::ExtendedGenerators, Parameter::exact(t_for_n(4)));
  CoxeterDiagram d = coxeter_diagram(ext);
  RelationMatrix rm = relation_matrix(ext);
  CHECK(d.edges.size() == 28 - rm.count(RelationKind::Orthogonal));
}

TEST_CASE("symmetries L, M, N, sigma with t -> 1/t, and rejects") {
  auto f = builtin(Builtin::Family22);
  auto id = [] {
    Mat<FieldElem> m(5, Vec<FieldElem>(5, FieldElem(0)));
    for (int i = 0; i < 5; ++i) m[i][i] = 1;
    return m;
  };
  auto p = verify_symmetry(f, id());
  REQUIRE(p);
  for (size_t i = 0; i < p->size(); ++i) CHECK((*p)[i] == i);

  Mat<FieldElem> L = id();
  L[1][1] = L[2][2] = 0;
  L[1][2] = L[2][1] = 1;
  auto pl = verify_symmetry(f, L);
  REQUIRE(pl);
  // L swaps A and B, E and F, fixes C and D
  CHECK(f.walls[(*pl)[f.index_of("A")]].label == "B");
  CHECK(f.walls[(*pl)[f.index_of("E")]].label == "F");
  CHECK(f.walls[(*pl)[f.index_of("C")]].label == "C");

  // sigma negates the third spatial coordinate; it matches the family only at 1/t
  Mat<FieldElem> sigma = id();
  sigma[3][3] = -1;
  CHECK(!verify_symmetry(f, sigma).has_value());
  auto ps = verify_symmetry(f, sigma, true);
  REQUIRE(ps);
  for (size_t i = 0; i < 16; ++i) CHECK(f.walls[(*ps)[i]].label[0] != f.walls[i].label[0]);

  // the roll negating the last two coordinates keeps the octets at the same t
  Mat<FieldElem> roll = id();
  roll[3][3] = roll[4][4] = -1;
  auto pr = verify_symmetry(f, roll);
  REQUIRE(pr);
  CHECK(f.walls[(*pr)[f.index_of("+0")]].label == "+3");

  Mat<FieldElem> bad = id();
  bad[1][1] = 2;
  CHECK_THROWS_AS(verify_symmetry(f, bad), PreconditionError);
}

TEST_CASE("reflection in a wall") {
  auto p = builtin(Builtin::P24, Parameter::none());
  auto q = p.exact_vectors()[p.index_of("A")];
  Vec<FieldElem> qf;
  for (const auto& x : q) qf.push_back(x.even());
  CHECK(reflection_in(p, "A") == reflection_matrix(qf));
  // the reflection sends the polytope to its neighbour, so the wall set is not kept
  CHECK(!verify_symmetry(p, reflection_in(p, "A")).has_value());
}

TEST_CASE("convexity witness") {
  auto ext = builtin(Builtin::ExtendedGenerators);
  CHECK(convexity_witness(ext, {Q(1), Q(1, 10), Q(1, 100), Q(0), Q(0)}));
  CHECK(!convexity_witness(ext, {Q(1), Q(0), Q(0), Q(0), Q(0)}));
  CHECK_THROWS_AS(convexity_witness(ext, {Q(-1), Q(0), Q(0), Q(0), Q(0)}), PreconditionError);
  CHECK(convexity_witness(ext.with_parameter(Parameter::exact(Q(1, 3))), {Q(1), Q(1, 10), Q(1, 100), Q(0), Q(0)}));
}

TEST_CASE("JSON round trip keeps the relation matrix") {
  for (auto which : {Builtin::Family22, Builtin::ExtendedGenerators, Builtin::P24}) {
    Arrangement a = builtin(which, Parameter::exact(Q(16, 25)));
    Json j = arrangement_to_json(a);
    Arrangement b = arrangement_from_json(Json::parse(j.dump()));
    CHECK(b.labels() == a.labels());
    CHECK(relation_matrix(a).to_csv() == relation_matrix(b).to_csv());
    CHECK(arrangement_to_json(b).dump() == j.dump());
  }
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dimension":4,"walls":[{"label":"x","coords":[1,2]}]})")),
                  PreconditionError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"walls":[]})")), PreconditionError);
}
