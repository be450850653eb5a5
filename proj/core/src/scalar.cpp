#include "jetfol/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace jetfol {

std::string_view to_string(Field f) { return f == Field::rational ? "rational" : "float"; }

Field parse_field(std::string_view s) {
  if (s == "rational") return Field::rational;
  if (s == "float") return Field::real;
  throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected rational|float)");
}

Scalar::Scalar(Field f) : value_(f == Field::rational ? Storage(mpq_class(0)) : Storage(0.0)) {}

Scalar::Scalar(Field f, long n)
    : value_(f == Field::rational ? Storage(mpq_class(n)) : Storage(static_cast<double>(n))) {}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(Storage(std::move(c)));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("jetfol: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Storage(std::move(q)));
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

mpq_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  std::string t(s[0] == '+' ? s.substr(1) : s);
  return mpq_class(mpz_class(t, 10));
}

// Exact value of a finite decimal like -12.0625 or 3e-2.
mpq_class parse_decimal_exact(std::string_view s) {
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    auto ex = s.substr(e + 1);
    if (!ex.empty() && ex[0] == '+') ex.remove_prefix(1);
    auto [p, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), exp10);
    if (ec != std::errc() || p != ex.data() + ex.size())
      throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    i = 1;
  }
  bool seen_dot = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --exp10;
    } else {
      throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, p10) : mpq_class(num * p10);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(Field f, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_integer(text.substr(0, slash));
    mpq_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q = num / den;
    if (f == Field::rational) return rational(q);
    return real(q.get_d());
  }
  if (f == Field::rational) return rational(parse_decimal_exact(text));
  double x = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || p != text.data() + text.size() || !std::isfinite(x))
    throw std::invalid_argument("malformed float '" + std::string(text) + "'");
  return real(x);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<double>(value_) == 0.0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<double>(value_) == 1.0;
}

int Scalar::sign() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  double x = std::get<double>(value_);
  return (x > 0) - (x < 0);
}

const mpq_class& Scalar::q() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch();
}

double Scalar::d() const {
  if (auto* x = std::get_if<double>(&value_)) return *x;
  throw FieldMismatch();
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, p);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index()) throw FieldMismatch();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("jetfol: division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) return rational(1 / *q);
  return real(1.0 / std::get<double>(value_));
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, acc = one(field());
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(Storage(mpq_class(-*q)));
  return real(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q += std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) += std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q -= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) -= std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q *= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) *= std::get<double>(o.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) throw std::domain_error("jetfol: division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q /= std::get<mpq_class>(o.value_);
  else
    std::get<double>(value_) /= std::get<double>(o.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (auto* q = std::get_if<mpq_class>(&a.value_)) return *q < std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) < std::get<double>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace jetfol
