#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace jetfol {

/// Coefficient field shared by every container in one computation.
enum class Field { rational, real };

std::string_view to_string(Field f);
Field parse_field(std::string_view s);

/// Raised when values from different fields meet in one operation.
class FieldMismatch : public std::logic_error {
 public:
  FieldMismatch() : std::logic_error("jetfol: mixed rational and float scalars") {}
};

/// An element of Q (GMP rational, always canonical) or of binary64.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(Field f);
  Scalar(Field f, long n);

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den = 1);
  static Scalar real(double x) { return Scalar(Storage(x)); }
  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  /// Accepts "p", "p/q" and (rational only) finite decimals such as "0.25";
  /// float mode accepts any decimal understood by from_chars, and "p/q".
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return value_.index() == 0 ? Field::rational : Field::real; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;

  const mpq_class& q() const;
  double d() const;
  double to_double() const;

  /// Canonical text: "p/q" (or "p") for rationals, shortest round-trip decimal for floats.
  std::string str() const;

  Scalar inverse() const;
  Scalar pow(int e) const;
  Scalar abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact equality; scalars of different fields are never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order within one field (throws FieldMismatch across fields).
  friend bool operator<(const Scalar& a, const Scalar& b);

 private:
  using Storage = std::variant<mpq_class, double>;
  explicit Scalar(Storage s) : value_(std::move(s)) {}
  void require_same_field(const Scalar& o) const;

  Storage value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace jetfol
