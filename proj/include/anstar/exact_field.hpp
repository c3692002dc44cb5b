#ifndef ANSTAR_EXACT_FIELD_HPP
#define ANSTAR_EXACT_FIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <functional>

namespace anstar {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}                   // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p", "p/q" or a finite decimal such as "-0.125" or "1e-3".
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  mpz_class floor() const;
  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  std::size_t hash() const;

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// An element a + b*sqrt(5) of the quadratic field Q(sqrt 5).
class GoldenNumber {
public:
  GoldenNumber() = default;
  GoldenNumber(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
  GoldenNumber(long a) : a_(a) {}                // NOLINT(google-explicit-constructor)
  GoldenNumber(int a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  /// (1 + sqrt5) / 2
  static GoldenNumber tau();
  /// (1 - sqrt5) / 2
  static GoldenNumber sigma();
  static GoldenNumber sqrt5() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Galois conjugate a - b*sqrt5.
  GoldenNumber conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

  int sign() const;
  double to_double() const;
  std::string str() const;

  GoldenNumber operator-() const { return {-a_, -b_}; }
  GoldenNumber& operator+=(const GoldenNumber& o);
  GoldenNumber& operator-=(const GoldenNumber& o);
  GoldenNumber& operator*=(const GoldenNumber& o);
  /// Throws std::domain_error on division by zero.
  GoldenNumber& operator/=(const GoldenNumber& o);

  friend GoldenNumber operator+(GoldenNumber a, const GoldenNumber& b) { return a += b; }
  friend GoldenNumber operator-(GoldenNumber a, const GoldenNumber& b) { return a -= b; }
  friend GoldenNumber operator*(GoldenNumber a, const GoldenNumber& b) { return a *= b; }
  friend GoldenNumber operator/(GoldenNumber a, const GoldenNumber& b) { return a /= b; }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) { return !(x == y); }
  friend bool operator<(const GoldenNumber& x, const GoldenNumber& y) { return (x - y).sign() < 0; }
  friend bool operator>(const GoldenNumber& x, const GoldenNumber& y) { return (x - y).sign() > 0; }

private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g);

// Free-function spellings of the field operations.
GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_sub(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y);
GoldenNumber golden_div(const GoldenNumber& x, const GoldenNumber& y);
int golden_sign(const GoldenNumber& x);
double golden_to_float(const GoldenNumber& x);

} // namespace anstar

template <> struct std::hash<anstar::Rational> {
  std::size_t operator()(const anstar::Rational& r) const noexcept { return r.hash(); }
};

#endif // ANSTAR_EXACT_FIELD_HPP
