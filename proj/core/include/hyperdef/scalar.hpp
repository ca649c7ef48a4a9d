#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdef {

// Raised when an input violates a documented precondition. The CLI maps
// this to exit code 1; anything else escaping is an internal error.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

Rational parse_rational(std::string_view s);
std::string rational_str(const Rational& q);

// An element a + b*sqrt2 + c*sqrt5 + d*sqrt10 of Q(sqrt2, sqrt5).
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long v) : c_{Rational(v), 0, 0, 0} {}
  FieldElem(const Rational& q) : c_{q, 0, 0, 0} {}
  FieldElem(Rational a, Rational b, Rational c, Rational d);

  static FieldElem sqrt2() { return {0, 1, 0, 0}; }
  static FieldElem sqrt5() { return {0, 0, 1, 0}; }
  static FieldElem sqrt10() { return {0, 0, 0, 1}; }

  const Rational& operator[](int i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_integer() const;

  // Galois conjugates flipping the sign of sqrt2, resp. sqrt5.
  FieldElem conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
  FieldElem conj5() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }
  Rational norm() const;  // product of all four conjugates
  FieldElem inverse() const;

  FieldElem operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }

  double to_double() const;
  std::string str() const;

 private:
  std::array<Rational, 4> c_{};
};

FieldElem pow(FieldElem x, long k);

// Exact square root inside the field, if one exists. Returns the positive root.
std::optional<FieldElem> field_sqrt(const FieldElem& x);

// A value of t^2 = r > 0, remembering sqrt(r) when it happens to lie in F.
struct TSquared {
  FieldElem r;
  std::optional<FieldElem> root;
};
using TSquaredPtr = std::shared_ptr<const TSquared>;
TSquaredPtr make_t_squared(const FieldElem& r);

// even + odd * t with t = +sqrt(r). When sqrt(r) lies in F the odd part is
// folded into the even part, so the zero test stays a coefficient check.
class ParamScalar {
 public:
  ParamScalar() = default;
  ParamScalar(long v) : even_(v) {}
  ParamScalar(FieldElem e) : even_(std::move(e)) {}
  ParamScalar(FieldElem even, FieldElem odd, TSquaredPtr t);

  static ParamScalar t(TSquaredPtr tsq);

  const FieldElem& even() const { return even_; }
  const FieldElem& odd() const { return odd_; }
  const TSquaredPtr& tsq() const { return t_; }

  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  ParamScalar inverse() const;

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o) { return *this *= o.inverse(); }
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

  double to_double() const;
  std::string str() const;

 private:
  void adopt(const ParamScalar& o);
  FieldElem even_, odd_;
  TSquaredPtr t_;
};

// Sparse Laurent polynomial in a formal variable t.
template <class C>
class Laurent {
 public:
  Laurent() = default;
  Laurent(C c) { if (!is_zero_coeff(c)) terms_.emplace(0, std::move(c)); }
  Laurent(long v) : Laurent(C(v)) {}
  static Laurent monomial(int k, C c) {
    Laurent p;
    if (!is_zero_coeff(c)) p.terms_.emplace(k, std::move(c));
    return p;
  }
  static Laurent t() { return monomial(1, C(1)); }

  const std::map<int, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C() : it->second;
  }
  int min_exp() const { return terms_.begin()->first; }
  int max_exp() const { return terms_.rbegin()->first; }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent& operator*=(const Laurent& o) {
    Laurent r;
    for (const auto& [i, a] : terms_)
      for (const auto& [j, b] : o.terms_) r.add_term(i + j, a * b);
    return *this = std::move(r);
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  // t -> 1/t
  Laurent inverted() const {
    Laurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
    return r;
  }

 private:
  static bool is_zero_coeff(const C& c) { return c.is_zero(); }
  void add_term(int k, const C& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!is_zero_coeff(c)) terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (is_zero_coeff(it->second)) terms_.erase(it);
  }
  std::map<int, C> terms_;
};

using LaurentParam = Laurent<FieldElem>;
// Polynomials in a second variable with Laurent-in-t coefficients.
using Laurent2 = Laurent<LaurentParam>;

ParamScalar laurent_eval(const LaurentParam& p, const TSquaredPtr& tsq);
double laurent_eval(const LaurentParam& p, double t);
std::string laurent_str(const LaurentParam& p);

// Sign of p(t) valid for every t > 0: +1 or -1 when p never vanishes there,
// 0 when p is identically zero, nullopt when p has a positive root.
std::optional<int> sign_for_all_positive_t(const LaurentParam& p);

// Sign determination. Exact zero test first, then certified interval
// evaluation at 64, 256, 1024 bits and doubling after that.
struct SignStats {
  unsigned last_bits = 0;
  unsigned rounds = 0;
};
int sign_of(const Rational& q);
int sign_of(const FieldElem& x, SignStats* stats = nullptr);
int sign_of(const ParamScalar& x, SignStats* stats = nullptr);

// Rational enclosure [lo, hi] of a value; exposed for tests and benchmarks.
struct Interval {
  Rational lo, hi;
};
Interval enclose(const FieldElem& x, unsigned bits);
Interval enclose(const ParamScalar& x, unsigned bits);

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline bool is_zero(const ParamScalar& x) { return x.is_zero(); }
inline bool is_zero(const LaurentParam& x) { return x.is_zero(); }

// Tolerance used by the floating-point backend for zero and sign tests.
inline constexpr double kFloatTol = 1e-9;
inline bool is_zero(double x) { return x < kFloatTol && x > -kFloatTol; }
inline int sign_of(double x) { return is_zero(x) ? 0 : (x > 0 ? 1 : -1); }
inline double to_double(double x) { return x; }
inline double to_double(const FieldElem& x) { return x.to_double(); }
inline double to_double(const ParamScalar& x) { return x.to_double(); }

// Angle recognition from cos^2 of the dihedral angle and the sign of cos.
struct AngleClass {
  enum class Kind { PiOver, Generic, NotAnAngle };
  Kind kind = Kind::NotAnAngle;
  int k = 0;  // set for PiOver
  friend bool operator==(const AngleClass&, const AngleClass&) = default;
};
AngleClass recognize_angle(const FieldElem& cos_sq, int cos_sign);
AngleClass recognize_angle(const ParamScalar& cos_sq, int cos_sign);
AngleClass recognize_angle(double cos_sq, int cos_sign);
std::string angle_str(const AngleClass& a);

// cos^2(pi/k) for the k whose value lies in F, otherwise nullopt.
std::optional<FieldElem> cos_sq_pi_over(int k);

// Parse expressions like "(11+4*sqrt5)/41", "3/5", "0.64", "2*sqrt(10)".
FieldElem parse_exact(std::string_view text);

}  // namespace hyperdef
