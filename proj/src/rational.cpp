#include "metcomp/rational.hpp"

#include <cctype>
#include <ostream>

#include "metcomp/errors.hpp"

namespace metcomp {

namespace {

bool digits_only(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Accepts "[+-]digits" only.
bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return digits_only(s);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(std::move(num)) / mpq_class(std::move(den));
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!valid_integer_token(den)) return std::nullopt;
  }
  if (!valid_integer_token(num)) return std::nullopt;

  // GMP does not take a leading '+'
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  std::string normalized = strip_plus(num);
  if (!den.empty()) normalized += "/" + strip_plus(den);

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), normalized.c_str(), 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  Rational q;
  q.v_ = std::move(v);
  return q;
}

Rational Rational::parse(std::string_view text) {
  auto q = try_parse(text);
  if (!q) throw InputError("malformed rational '" + std::string(text) + "'");
  return *q;
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p, 1) : Rational(1, p);
}

Rational Rational::int_pow(const Rational& b, long e) {
  if (e == 0) return Rational(1);
  if (b.is_zero() && e < 0) throw InputError("zero raised to a negative power");
  mpz_class num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), b.v_.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), b.v_.get_den().get_mpz_t(), ae);
  return e >= 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace metcomp
