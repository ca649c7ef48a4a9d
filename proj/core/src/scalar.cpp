#include "hyperdef/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace hyperdef {

Rational parse_rational(std::string_view s) {
  std::string str(s);
  str.erase(std::remove_if(str.begin(), str.end(), ::isspace), str.end());
  if (str.empty()) throw PreconditionError("empty rational");
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    // decimal literal, read exactly
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    if (digits == "-" || digits == "+" || digits.empty()) throw PreconditionError("bad decimal: " + str);
    Rational q;
    if (q.get_num().set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw PreconditionError("bad decimal: " + str);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, str.size() - dot - 1);
    q.get_den() = den;
    q.canonicalize();
    return q;
  }
  if (str[0] == '+') str.erase(0, 1);
  Rational q;
  if (q.set_str(str, 10) != 0 || q.get_den() == 0) throw PreconditionError("bad rational: " + str);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

int sign_of(const Rational& q) { return sgn(q); }

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

bool FieldElem::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool FieldElem::is_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  const auto& a = c_;
  const auto& b = o.c_;
  // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5, sqrt5*sqrt10 = 5 sqrt2
  Rational r0 = a[0] * b[0] + 2 * a[1] * b[1] + 5 * a[2] * b[2] + 10 * a[3] * b[3];
  Rational r1 = a[0] * b[1] + a[1] * b[0] + 5 * (a[2] * b[3] + a[3] * b[2]);
  Rational r2 = a[0] * b[2] + a[2] * b[0] + 2 * (a[1] * b[3] + a[3] * b[1]);
  Rational r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

Rational FieldElem::norm() const {
  FieldElem p = *this * conj2() * conj5() * conj2().conj5();
  return p[0];
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(sqrt2,sqrt5)");
  if (is_rational()) return FieldElem(Rational(1) / c_[0]);
  FieldElem y = conj2() * conj5() * conj2().conj5();
  Rational n = (*this * y)[0];
  for (int i = 0; i < 4; ++i) y.c_[i] /= n;
  return y;
}

double FieldElem::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(5.0) +
         c_[3].get_d() * std::sqrt(10.0);
}

std::string FieldElem::str() const {
  static const char* names[] = {"", "sqrt2", "sqrt5", "sqrt10"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    bool neg = v < 0;
    if (neg) v = -v;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (i == 0) out += v.get_str();
    else if (v == 1) out += names[i];
    else out += v.get_str() + "*" + names[i];
  }
  return out.empty() ? "0" : out;
}

FieldElem pow(FieldElem x, long k) {
  if (k < 0) {
    x = x.inverse();
    k = -k;
  }
  FieldElem r(1);
  while (k) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

// ------------------------------------------------------------- square roots

namespace {

std::optional<Rational> rat_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

// a + b sqrt2
struct Q2 {
  Rational a, b;
  bool zero() const { return a == 0 && b == 0; }
};
Q2 mul(const Q2& x, const Q2& y) { return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a}; }
Q2 add(const Q2& x, const Q2& y) { return {x.a + y.a, x.b + y.b}; }
Q2 scale(const Q2& x, const Rational& s) { return {x.a * s, x.b * s}; }
Q2 inv(const Q2& x) {
  Rational n = x.a * x.a - 2 * x.b * x.b;
  return {x.a / n, -x.b / n};
}
bool eq(const Q2& x, const Q2& y) { return x.a == y.a && x.b == y.b; }

std::optional<Q2> sqrt_q2(const Q2& x) {
  if (x.b == 0) {
    if (auto r = rat_sqrt(x.a)) return Q2{*r, 0};
    if (auto r = rat_sqrt(x.a / 2)) return Q2{0, *r};
    return std::nullopt;
  }
  auto n = rat_sqrt(x.a * x.a - 2 * x.b * x.b);
  if (!n) return std::nullopt;
  for (const Rational& s : {*n, Rational(-*n)}) {
    auto p = rat_sqrt((x.a + s) / 2);
    if (!p || *p == 0) continue;
    Rational q = x.b / (2 * *p);
    if (*p * *p + 2 * q * q == x.a && 2 * *p * q == x.b) return Q2{*p, q};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElem> field_sqrt(const FieldElem& x) {
  if (x.is_zero()) return FieldElem();
  // x = A + B sqrt5 with A, B in Q(sqrt2)
  Q2 A{x[0], x[1]}, B{x[2], x[3]};
  std::optional<FieldElem> root;
  if (B.zero()) {
    if (auto r = sqrt_q2(A)) root = FieldElem(r->a, r->b, 0, 0);
    else if (auto r = sqrt_q2(scale(A, Rational(1, 5)))) root = FieldElem(0, 0, r->a, r->b);
  } else {
    Q2 N = add(mul(A, A), scale(mul(B, B), -5));
    if (auto n = sqrt_q2(N)) {
      for (const Q2& s : {*n, scale(*n, -1)}) {
        auto P = sqrt_q2(scale(add(A, s), Rational(1, 2)));
        if (!P || P->zero()) continue;
        Q2 Q = mul(B, inv(scale(*P, 2)));
        if (eq(add(mul(*P, *P), scale(mul(Q, Q), 5)), A) && eq(scale(mul(*P, Q), 2), B)) {
          root = FieldElem(P->a, P->b, Q.a, Q.b);
          break;
        }
      }
    }
  }
  if (root && sign_of(*root) < 0) root = -*root;
  return root;
}

TSquaredPtr make_t_squared(const FieldElem& r) {
  if (sign_of(r) <= 0) throw PreconditionError("t^2 must be positive, got " + r.str());
  auto p = std::make_shared<TSquared>();
  p->r = r;
  p->root = field_sqrt(r);
  return p;
}

// -------------------------------------------------------------- ParamScalar

ParamScalar::ParamScalar(FieldElem even, FieldElem odd, TSquaredPtr t)
    : even_(std::move(even)), odd_(std::move(odd)), t_(std::move(t)) {
  if (!odd_.is_zero()) {
    if (!t_) throw PreconditionError("odd part without a value of t^2");
    if (t_->root) {
      even_ += odd_ * *t_->root;
      odd_ = FieldElem();
    }
  }
}

ParamScalar ParamScalar::t(TSquaredPtr tsq) { return ParamScalar(0, 1, std::move(tsq)); }

void ParamScalar::adopt(const ParamScalar& o) {
  if (!o.t_ || t_ == o.t_) return;
  if (!t_) {
    t_ = o.t_;
    return;
  }
  if (!(t_->r == o.t_->r)) throw PreconditionError("mixing scalars with different t^2");
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.even_ = -r.even_;
  r.odd_ = -r.odd_;
  return r;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  adopt(o);
  even_ += o.even_;
  odd_ += o.odd_;
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  adopt(o);
  even_ -= o.even_;
  odd_ -= o.odd_;
  return *this;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  adopt(o);
  if (odd_.is_zero() && o.odd_.is_zero()) {
    even_ *= o.even_;
    return *this;
  }
  FieldElem e = even_ * o.even_;
  if (!odd_.is_zero() && !o.odd_.is_zero()) e += odd_ * o.odd_ * t_->r;
  FieldElem d = even_ * o.odd_ + odd_ * o.even_;
  even_ = std::move(e);
  odd_ = std::move(d);
  return *this;
}

ParamScalar ParamScalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in F(t)");
  if (odd_.is_zero()) return ParamScalar(even_.inverse(), FieldElem(), t_);
  // 1/(a + b t) = (a - b t) / (a^2 - b^2 r); the denominator is nonzero since t is not in F
  FieldElem den = (even_ * even_ - odd_ * odd_ * t_->r).inverse();
  return ParamScalar(even_ * den, -odd_ * den, t_);
}

double ParamScalar::to_double() const {
  double v = even_.to_double();
  if (!odd_.is_zero()) v += odd_.to_double() * std::sqrt(t_->r.to_double());
  return v;
}

std::string ParamScalar::str() const {
  if (odd_.is_zero()) return even_.str();
  return "(" + even_.str() + ")+(" + odd_.str() + ")*t";
}

// ------------------------------------------------------------------ Laurent

ParamScalar laurent_eval(const LaurentParam& p, const TSquaredPtr& tsq) {
  FieldElem even, odd;
  for (const auto& [k, c] : p.terms()) {
    if (k % 2 == 0) {
      even += c * pow(tsq->r, k / 2);
    } else {
      odd += c * pow(tsq->r, (k - 1) / 2);
    }
  }
  return ParamScalar(std::move(even), std::move(odd), tsq);
}

double laurent_eval(const LaurentParam& p, double t) {
  double v = 0;
  for (const auto& [k, c] : p.terms()) v += c.to_double() * std::pow(t, k);
  return v;
}

std::string laurent_str(const LaurentParam& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (k != 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

namespace {

using Poly = std::vector<FieldElem>;  // low to high

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  FieldElem lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    FieldElem f = a.back() * lead_inv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

std::optional<int> sign_for_all_positive_t(const LaurentParam& p) {
  if (p.is_zero()) return 0;
  int lo = p.min_exp();
  Poly P;
  for (const auto& [k, c] : p.terms()) {
    size_t i = static_cast<size_t>(k - lo);
    if (P.size() <= i) P.resize(i + 1);
    P[i] = c;
  }
  int s0 = sign_of(P[0]);
  if (P.size() == 1) return s0;
  // Sturm chain; P(0) != 0 so the count on (0, inf) is V(0) - V(inf)
  std::vector<Poly> chain{P};
  Poly d;
  for (size_t i = 1; i < P.size(); ++i) d.push_back(P[i] * FieldElem(static_cast<long>(i)));
  trim(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at0, atinf;
  for (const auto& q : chain) {
    at0.push_back(q.empty() ? 0 : sign_of(q[0]));
    atinf.push_back(q.empty() ? 0 : sign_of(q.back()));
  }
  if (variations(at0) - variations(atinf) != 0) return std::nullopt;
  return s0;
}

// ------------------------------------------------------------ sign oracle

namespace {

mpz_class isqrt_floor(const Rational& x, unsigned bits) {
  // floor(sqrt(x) * 2^bits) for x >= 0
  mpz_class scaled = x.get_num() << (2 * bits);
  scaled /= x.get_den();
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  return s;
}

Interval sqrt_interval(const Interval& x, unsigned bits) {
  Rational unit(mpz_class(1), mpz_class(1) << bits);
  Rational lo = x.lo > 0 ? Rational(isqrt_floor(x.lo, bits)) * unit : Rational(0);
  Rational hi = Rational(isqrt_floor(x.hi, bits) + 1) * unit;
  return {lo, hi};
}

const Interval& surd_interval(int k, unsigned bits) {
  static thread_local std::map<std::pair<int, unsigned>, Interval> cache;
  auto key = std::make_pair(k, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, sqrt_interval({Rational(k), Rational(k)}, bits)).first->second;
}

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

int decide(const Interval& iv) {
  if (iv.lo > 0) return 1;
  if (iv.hi < 0) return -1;
  return 0;
}

unsigned next_bits(unsigned bits) {
  if (bits < 64) return 64;
  if (bits < 256) return 256;
  if (bits < 1024) return 1024;
  return bits * 2;
}

}  // namespace

Interval enclose(const FieldElem& x, unsigned bits) {
  static const int surds[4] = {1, 2, 5, 10};
  Interval acc{x[0], x[0]};
  for (int i = 1; i < 4; ++i) {
    const Rational& c = x[i];
    if (c == 0) continue;
    const Interval& s = surd_interval(surds[i], bits);
    if (c > 0) {
      acc.lo += c * s.lo;
      acc.hi += c * s.hi;
    } else {
      acc.lo += c * s.hi;
      acc.hi += c * s.lo;
    }
  }
  return acc;
}

Interval enclose(const ParamScalar& x, unsigned bits) {
  Interval e = enclose(x.even(), bits);
  if (x.odd().is_zero()) return e;
  Interval r = enclose(x.tsq()->r, bits);
  if (r.lo < 0) r.lo = 0;
  Interval o = mul(enclose(x.odd(), bits), sqrt_interval(r, bits));
  return {e.lo + o.lo, e.hi + o.hi};
}

int sign_of(const FieldElem& x, SignStats* stats) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x[0]);
  for (unsigned bits = 64, round = 1;; bits = next_bits(bits), ++round) {
    int s = decide(enclose(x, bits));
    if (s != 0) {
      if (stats) *stats = {bits, round};
      return s;
    }
  }
}

int sign_of(const ParamScalar& x, SignStats* stats) {
  if (x.odd().is_zero()) return sign_of(x.even(), stats);
  if (x.is_zero()) return 0;
  for (unsigned bits = 64, round = 1;; bits = next_bits(bits), ++round) {
    int s = decide(enclose(x, bits));
    if (s != 0) {
      if (stats) *stats = {bits, round};
      return s;
    }
  }
}

// ------------------------------------------------------------------- angles

std::optional<FieldElem> cos_sq_pi_over(int k) {
  switch (k) {
    case 2: return FieldElem(0);
    case 3: return FieldElem(Rational(1, 4));
    case 4: return FieldElem(Rational(1, 2));
    case 5: return FieldElem(Rational(3, 8), 0, Rational(1, 8), 0);
    case 6: return FieldElem(Rational(3, 4));
    case 8: return FieldElem(Rational(1, 2), Rational(1, 4), 0, 0);
    case 10: return FieldElem(Rational(5, 8), 0, Rational(1, 8), 0);
    default: return std::nullopt;
  }
}

AngleClass recognize_angle(const FieldElem& cos_sq, int cos_sign) {
  using K = AngleClass::Kind;
  if (cos_sq.is_zero()) return {K::PiOver, 2};
  if (sign_of(cos_sq) < 0 || sign_of(cos_sq - FieldElem(1)) >= 0) return {K::NotAnAngle, 0};
  if (cos_sign < 0) return {K::Generic, 0};
  for (int k : {3, 4, 5, 6, 8, 10})
    if (cos_sq == *cos_sq_pi_over(k)) return {K::PiOver, k};
  return {K::Generic, 0};
}

AngleClass recognize_angle(const ParamScalar& cos_sq, int cos_sign) {
  if (cos_sq.odd().is_zero()) return recognize_angle(cos_sq.even(), cos_sign);
  using K = AngleClass::Kind;
  // an odd part means cos^2 is not in F, hence not one of the recognised values
  if (sign_of(cos_sq) < 0 || sign_of(cos_sq - ParamScalar(1)) >= 0) return {K::NotAnAngle, 0};
  return {K::Generic, 0};
}

AngleClass recognize_angle(double cos_sq, int cos_sign) {
  using K = AngleClass::Kind;
  if (is_zero(cos_sq)) return {K::PiOver, 2};
  if (cos_sq < 0 || cos_sq >= 1 - kFloatTol) return {K::NotAnAngle, 0};
  if (cos_sign < 0) return {K::Generic, 0};
  for (int k = 3; k <= 120; ++k) {
    double c = std::cos(M_PI / k);
    if (std::abs(c * c - cos_sq) < kFloatTol) return {K::PiOver, k};
  }
  return {K::Generic, 0};
}

std::string angle_str(const AngleClass& a) {
  switch (a.kind) {
    case AngleClass::Kind::PiOver: return "pi/" + std::to_string(a.k);
    case AngleClass::Kind::Generic: return "generic";
    default: return "not-an-angle";
  }
}

}  // namespace hyperdef
