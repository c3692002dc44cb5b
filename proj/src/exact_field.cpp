#include "anstar/exact_field.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace anstar {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a rational or decimal number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

} // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse(s.substr(0, slash));
    Rational den = parse(s.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer()) bad_number(text);
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
    return num / den;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
      bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_number(text);
    digits = std::string(s);
  }

  mpq_class value{mpz_class(digits, 10)};
  if (exponent > 0) {
    value *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= pow10(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  // Small values hash on the machine words; huge ones fall back to the string.
  if (value_.get_num().fits_slong_p() && value_.get_den().fits_slong_p()) {
    std::size_t h = std::hash<long>{}(value_.get_num().get_si());
    return h ^ (std::hash<long>{}(value_.get_den().get_si()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GoldenNumber GoldenNumber::tau() { return {Rational(1, 2), Rational(1, 2)}; }
GoldenNumber GoldenNumber::sigma() { return {Rational(1, 2), Rational(-1, 2)}; }

int GoldenNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 5 b^2 (never equal for nonzero rationals).
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(5) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

double GoldenNumber::to_double() const {
  static const double root5 = std::sqrt(5.0);
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa * sb >= 0) return a_.to_double() + b_.to_double() * root5;
  // Cancellation: evaluate as norm / conjugate, whose terms share a sign.
  const double conj = a_.to_double() - b_.to_double() * root5;
  return norm().to_double() / conj;
}

std::string GoldenNumber::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str();
  if (b_.sign() > 0 && !out.empty()) out += "+";
  if (b_ == Rational(1)) {
    out += "sqrt5";
  } else if (b_ == Rational(-1)) {
    out += "-sqrt5";
  } else {
    out += b_.str() + "*sqrt5";
  }
  return out;
}

GoldenNumber& GoldenNumber::operator+=(const GoldenNumber& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator-=(const GoldenNumber& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNumber& GoldenNumber::operator*=(const GoldenNumber& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNumber& GoldenNumber::operator/=(const GoldenNumber& o) {
  if (o.is_zero()) throw std::domain_error("GoldenNumber: division by zero");
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GoldenNumber& g) { return os << g.str(); }

GoldenNumber golden_add(const GoldenNumber& x, const GoldenNumber& y) { return x + y; }
GoldenNumber golden_sub(const GoldenNumber& x, const GoldenNumber& y) { return x - y; }
GoldenNumber golden_mul(const GoldenNumber& x, const GoldenNumber& y) { return x * y; }
GoldenNumber golden_div(const GoldenNumber& x, const GoldenNumber& y) { return x / y; }
int golden_sign(const GoldenNumber& x) { return x.sign(); }
double golden_to_float(const GoldenNumber& x) { return x.to_double(); }

} // namespace anstar
