#include <doctest.h>

#include <random>

#include "hyperdef/scalar.hpp"
#include "oracles.hpp"

using namespace hyperdef;

namespace {

FieldElem random_elem(std::mt19937& rng, long range = 40) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 17);
  auto r = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  return {r(), r(), r(), r()};
}

bool close(const mpf_class& a, const mpf_class& b) {
  mpf_class d = abs(a - b);
  return d < mpf_class("1e-100", 512) * (1 + abs(a));
}

}  // namespace

TEST_CASE("field arithmetic agrees with high-precision floats") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    FieldElem a = random_elem(rng), b = random_elem(rng);
    CHECK(close(oracle::eval(a + b), oracle::eval(a) + oracle::eval(b)));
    CHECK(close(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)));
    if (!b.is_zero()) {
      CHECK(close(oracle::eval(a / b), oracle::eval(a) / oracle::eval(b)));
      CHECK(b * b.inverse() == FieldElem(1));
    }
  }
}

TEST_CASE("norm is a rational and vanishes only at zero") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    FieldElem a = random_elem(rng);
    mpf_class prod = oracle::eval(a) * oracle::eval(a.conj2()) * oracle::eval(a.conj5()) * oracle::eval(a.conj2().conj5());
    CHECK(close(prod, mpf_class(a.norm(), 512)));
  }
  CHECK(FieldElem(0).norm() == 0);
}

TEST_CASE("sign_of matches the float oracle, including near cancellations") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    FieldElem a = random_elem(rng);
    CHECK(sign_of(a) == oracle::sign(a));
  }
  // Pell convergents: 3363 - 2378 sqrt2 ~ 1.5e-4 and friends
  FieldElem p(Rational(3363), Rational(-2378), 0, 0);
  CHECK(sign_of(p) == 1);
  CHECK(sign_of(-p) == -1);
  FieldElem tight(Rational(665857), Rational(-470832), 0, 0);  // ~7.5e-7
  CHECK(sign_of(tight) == 1);
  // (sqrt2 + sqrt5)^2 = 7 + 2 sqrt10 exactly
  FieldElem s = FieldElem::sqrt2() + FieldElem::sqrt5();
  CHECK(s * s - FieldElem(Rational(7), 0, 0, Rational(2)) == FieldElem(0));
  CHECK(sign_of(s * s - FieldElem(Rational(7), 0, 0, Rational(2))) == 0);
  SignStats st;
  // 1e-40 away from zero needs more than the first precision round
  FieldElem tiny = FieldElem(Rational(1, 1)) / pow(FieldElem(10), 40);
  CHECK(sign_of(tiny + FieldElem::sqrt2() - FieldElem::sqrt2(), &st) == 1);
}

TEST_CASE("interval enclosures contain the value") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    FieldElem a = random_elem(rng);
    Interval iv = enclose(a, 128);
    mpf_class v = oracle::eval(a);
    CHECK(mpf_class(iv.lo, 512) <= v);
    CHECK(v <= mpf_class(iv.hi, 512));
  }
}

TEST_CASE("field square roots") {
  std::mt19937 rng(9);
  for (int i = 0; i < 60; ++i) {
    FieldElem a = random_elem(rng, 9);
    auto r = field_sqrt(a * a);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == a * a);
    CHECK(sign_of(*r) >= 0);
  }
  CHECK(!field_sqrt(FieldElem(3)).has_value());
  CHECK(!field_sqrt(FieldElem(-1)).has_value());
  CHECK(!field_sqrt(FieldElem(2) + FieldElem::sqrt2()).has_value());
  CHECK(field_sqrt(FieldElem(Rational(1, 2))).value() == FieldElem::sqrt2() / FieldElem(2));
}

TEST_CASE("exact literal parser") {
  CHECK(parse_exact("3/5") == FieldElem(Rational(3, 5)));
  CHECK(parse_exact("0.64") == FieldElem(Rational(16, 25)));
  CHECK(parse_exact("(11+4*sqrt5)/41") == FieldElem(Rational(11, 41), 0, Rational(4, 41), 0));
  CHECK(parse_exact("2*sqrt(10)") == FieldElem(0, 0, 0, Rational(2)));
  CHECK(parse_exact("sqrt2*sqrt5") == FieldElem::sqrt10());
  CHECK(parse_exact("-(1-sqrt2)") == FieldElem(Rational(-1), Rational(1), 0, 0));
  CHECK_THROWS_AS(parse_exact("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_exact("sqrt3"), PreconditionError);
  CHECK_THROWS_AS(parse_exact("1+"), PreconditionError);
  CHECK_THROWS_AS(parse_exact("x"), PreconditionError);
}

TEST_CASE("parameter scalars with t in and out of the field") {
  auto half = make_t_squared(FieldElem(Rational(1, 2)));
  ParamScalar t = ParamScalar::t(half);
  CHECK(t.odd().is_zero());  // 1/sqrt2 is folded into the field
  CHECK(t * t == ParamScalar(FieldElem(Rational(1, 2))));
  auto third = make_t_squared(FieldElem(Rational(1, 3)));
  ParamScalar u = ParamScalar::t(third);
  CHECK(!u.odd().is_zero());
  CHECK(u * u == ParamScalar(FieldElem(Rational(1, 3))));
  CHECK(u * u.inverse() == ParamScalar(1));
  CHECK(sign_of(u - ParamScalar(FieldElem(Rational(577, 1000)))) == 1);  // 1/sqrt3 = 0.57735
  CHECK(sign_of(u - ParamScalar(FieldElem(Rational(578, 1000)))) == -1);
  CHECK(std::abs(u.to_double() - std::sqrt(1.0 / 3)) < 1e-15);
}

TEST_CASE("Laurent polynomials and sign analysis on t > 0") {
  LaurentParam t = LaurentParam::t();
  LaurentParam inv = t.inverted();
  CHECK((t * inv) == LaurentParam(1));
  LaurentParam p = t + inv - LaurentParam(2);  // (t-1)^2/t, root at 1
  CHECK(!sign_for_all_positive_t(p).has_value());
  CHECK(sign_for_all_positive_t(t + inv).value() == 1);
  CHECK(sign_for_all_positive_t(-(t * t) - LaurentParam(FieldElem::sqrt2())).value() == -1);
  CHECK(sign_for_all_positive_t(LaurentParam()).value() == 0);
  CHECK(!sign_for_all_positive_t(t - LaurentParam(FieldElem::sqrt5())).has_value());
  // float evaluation against direct arithmetic
  CHECK(std::abs(laurent_eval(p, 0.5) - (0.5 + 2 - 2)) < 1e-15);
  auto tsq = make_t_squared(FieldElem(Rational(1, 3)));
  ParamScalar v = laurent_eval(p, tsq);
  CHECK(std::abs(v.to_double() - (std::sqrt(1.0 / 3) + std::sqrt(3.0) - 2)) < 1e-14);
}

TEST_CASE("angle recognition") {
  for (int k : {2, 3, 4, 5, 6, 8, 10}) {
    auto c = cos_sq_pi_over(k);
    REQUIRE(c.has_value());
    double f = std::cos(M_PI / k);
    CHECK(std::abs(c->to_double() - f * f) < 1e-14);
    AngleClass a = recognize_angle(*c, k == 2 ? 0 : 1);
    CHECK(a.kind == AngleClass::Kind::PiOver);
    CHECK(a.k == k);
  }
  CHECK(!cos_sq_pi_over(7).has_value());
  CHECK(recognize_angle(FieldElem(Rational(1, 4)), -1).kind == AngleClass::Kind::Generic);  // 2pi/3
  CHECK(recognize_angle(FieldElem(Rational(1, 3)), 1).kind == AngleClass::Kind::Generic);
  CHECK(recognize_angle(FieldElem(Rational(5, 4)), 1).kind == AngleClass::Kind::NotAnAngle);
  CHECK(recognize_angle(0.75, 1).k == 6);
}
