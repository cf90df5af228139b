#pragma once

// Exact scalars in ℚ(√d) for a single square-free d ≥ 2 (or plain ℚ).

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "quadalg/errors.hpp"

namespace quadalg {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

namespace detail {

inline std::string rational_to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n) return std::nullopt;
  return root;
}

inline std::optional<Integer> exact_icbrt(const Integer& n) {
  if (n < 0) {
    auto r = exact_icbrt(-n);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer lo = 0;
  Integer hi = 1;
  while (hi * hi * hi < n) hi *= 2;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (mid * mid * mid < n) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo * lo * lo != n) return std::nullopt;
  return lo;
}

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto num = exact_isqrt(boost::multiprecision::numerator(r));
  auto den = exact_isqrt(boost::multiprecision::denominator(r));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace detail

/// An element rat + rad·√d of ℚ(√d).
///
/// Values are kept in a normal form: fractions are reduced with a positive
/// denominator (guaranteed by cpp_rational), and a zero radical coefficient
/// forces d = 0, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : rat_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational rat, Rational rad, std::int64_t d)
      : rat_(std::move(rat)), rad_(std::move(rad)), d_(d) {
    if (d_ != 0 && !is_square_free(d_)) {
      throw Error("field parameter d=" + std::to_string(d_) +
                  " is not a square-free integer >= 2");
    }
    if (d_ == 0 && rad_ != 0) {
      throw Error("nonzero radical part requires d != 0");
    }
    normalize();
  }

  static Scalar fraction(long long p, long long q) {
    if (q == 0) throw Error("zero denominator");
    return Scalar(Rational(p, q));
  }

  /// The element √d itself.
  static Scalar root(std::int64_t d) { return Scalar(0, 1, d); }

  const Rational& rational_part() const noexcept { return rat_; }
  const Rational& radical_part() const noexcept { return rad_; }
  std::int64_t field_d() const noexcept { return d_; }

  bool is_zero() const { return rat_ == 0 && rad_ == 0; }
  bool is_rational() const { return rad_ == 0; }

  Scalar conjugate() const {
    Scalar out = *this;
    out.rad_ = -out.rad_;
    return out;
  }

  /// Field norm rat² − d·rad².
  Rational norm() const { return rat_ * rat_ - Rational(d_) * rad_ * rad_; }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    Rational n = norm();
    Scalar c = conjugate();
    c.rat_ /= n;
    c.rad_ /= n;
    c.normalize();
    return c;
  }

  Scalar operator-() const {
    Scalar out = *this;
    out.rat_ = -out.rat_;
    out.rad_ = -out.rad_;
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.d_ == 0) {
      rat_ += o.rat_;
      return *this;
    }
    d_ = common_d(o);
    rat_ += o.rat_;
    rad_ += o.rad_;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    if (o.d_ == 0) {
      rat_ -= o.rat_;
      return *this;
    }
    d_ = common_d(o);
    rat_ -= o.rat_;
    rad_ -= o.rad_;
    normalize();
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (d_ == 0 && o.d_ == 0) {
      rat_ *= o.rat_;
      return *this;
    }
    std::int64_t d = common_d(o);
    Rational r = rat_ * o.rat_ + Rational(d) * rad_ * o.rad_;
    Rational s = rat_ * o.rad_ + rad_ * o.rat_;
    rat_ = std::move(r);
    rad_ = std::move(s);
    d_ = d;
    normalize();
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.d_ == b.d_ && a.rat_ == b.rat_ && a.rad_ == b.rad_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "p", "p/q", "√d", "-3/4√d", "1/2+√d", "1/2-3√d".
  std::string to_string() const {
    if (rad_ == 0) return detail::rational_to_string(rat_);
    std::string out;
    if (rat_ != 0) out = detail::rational_to_string(rat_);
    Rational coeff = rad_;
    if (coeff < 0) {
      out += "-";
      coeff = -coeff;
    } else if (!out.empty()) {
      out += "+";
    }
    if (coeff != 1) out += detail::rational_to_string(coeff);
    out += "√" + std::to_string(d_);
    return out;
  }

  static Scalar parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  std::int64_t common_d(const Scalar& o) const {
    if (o.d_ == 0) return d_;
    if (d_ == 0 || d_ == o.d_) return o.d_;
    throw FieldMismatch("cannot combine elements of Q(sqrt " + std::to_string(d_) +
                        ") and Q(sqrt " + std::to_string(o.d_) + ")");
  }

  void normalize() {
    if (rad_ == 0) d_ = 0;
  }

  Rational rat_{0};
  Rational rad_{0};
  std::int64_t d_ = 0;
};

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  Scalar run() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    Rational rat = 0;
    Rational rad = 0;
    std::int64_t d = 0;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = 1;
      bool has_coeff = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_fraction();
        has_coeff = true;
      }
      skip_ws();
      if (consume_root()) {
        skip_ws();
        std::int64_t dd = parse_small_int();
        if (d != 0 && dd != d) fail("mixed radicals");
        d = dd;
        rad += sign * coeff;
      } else {
        if (!has_coeff) fail("expected a number");
        rat += sign * coeff;
      }
      skip_ws();
    }
    if (d != 0 && !is_square_free(d)) fail("radicand is not square-free >= 2");
    return Scalar(rat, rad, d);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid scalar '" + std::string(s_) + "': " + why);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  Integer parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  std::int64_t parse_small_int() {
    Integer v = parse_integer();
    if (v > 1000000000) fail("radicand too large");
    return static_cast<std::int64_t>(v);
  }
  Rational parse_fraction() {
    Integer num = parse_integer();
    if (!at_end() && peek() == '/') {
      ++pos_;
      Integer den = parse_integer();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }
  bool consume_root() {
    static constexpr std::string_view kRoot = "√";
    if (s_.substr(pos_, kRoot.size()) == kRoot) {
      pos_ += kRoot.size();
      return true;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      return true;
    }
    return false;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) { return detail::ScalarParser(text).run(); }

/// Square root of x inside ℚ(√d) (d = 0 means ℚ), if it exists there.
inline std::optional<Scalar> sqrt_in_field(const Scalar& x, std::int64_t d) {
  if (x.is_zero()) return Scalar(0);
  if (x.field_d() != 0 && d != x.field_d()) return std::nullopt;
  if (x.is_rational()) {
    if (auto r = detail::rational_sqrt(x.rational_part())) return Scalar(*r);
    if (d != 0) {
      if (auto r = detail::rational_sqrt(x.rational_part() / Rational(d))) {
        return Scalar(0, *r, d);
      }
    }
    return std::nullopt;
  }
  // (u + v√d)² = a + b√d  ⇔  u² + d v² = a, 2uv = b.
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  auto n = detail::rational_sqrt(x.norm());
  if (!n) return std::nullopt;
  for (const Rational& u2 : {Rational((a + *n) / 2), Rational((a - *n) / 2)}) {
    auto u = detail::rational_sqrt(u2);
    if (!u || *u == 0) continue;
    Rational v = b / (2 * *u);
    return Scalar(*u, v, d);
  }
  return std::nullopt;
}

/// Real cube root of a rational scalar, if rational.
inline std::optional<Scalar> rational_cbrt(const Scalar& x) {
  if (!x.is_rational()) return std::nullopt;
  auto num = detail::exact_icbrt(boost::multiprecision::numerator(x.rational_part()));
  auto den = detail::exact_icbrt(boost::multiprecision::denominator(x.rational_part()));
  if (!num || !den) return std::nullopt;
  return Scalar(Rational(*num, *den));
}

}  // namespace quadalg
