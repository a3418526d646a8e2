#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "sgspec/error.hpp"

namespace sgspec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p"; canonicalizes to lowest terms with positive q.
Rational rational_from_string(const std::string& text);

/// Canonical serialization: "p" for integers, "p/q" with q > 0 otherwise.
std::string rational_to_string(const Rational& r);

BigInt rational_floor(const Rational& r);

bool is_square_free(long m);

// A real number a + b*sqrt(m) with a, b rational and m a square-free
// non-negative integer. b == 0 is normalized to m == 0, so rationals have a
// unique representation. Comparisons are exact.
class Quad {
 public:
  Quad() : a_(0), b_(0), m_(0) {}
  Quad(long v) : a_(v), b_(0), m_(0) {}           // NOLINT(google-explicit-constructor)
  Quad(const Rational& v) : a_(v), b_(0), m_(0) {}  // NOLINT(google-explicit-constructor)
  Quad(Rational a, Rational b, long m);

  static Quad sqrt_of(long m) { return Quad(Rational(0), Rational(1), m); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long m() const { return m_; }
  bool is_rational() const { return m_ == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// -1, 0 or +1; decided by rationalization, never by floats.
  int sign() const;

  Quad operator-() const;
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad l, const Quad& r) { return l += r; }
  friend Quad operator-(Quad l, const Quad& r) { return l -= r; }
  friend Quad operator*(Quad l, const Quad& r) { return l *= r; }
  friend Quad operator/(Quad l, const Quad& r) { return l /= r; }

  friend bool operator==(const Quad& l, const Quad& r) { return (l - r).sign() == 0; }
  friend bool operator!=(const Quad& l, const Quad& r) { return !(l == r); }
  friend bool operator<(const Quad& l, const Quad& r) { return (l - r).sign() < 0; }
  friend bool operator>(const Quad& l, const Quad& r) { return (l - r).sign() > 0; }
  friend bool operator<=(const Quad& l, const Quad& r) { return (l - r).sign() <= 0; }
  friend bool operator>=(const Quad& l, const Quad& r) { return (l - r).sign() >= 0; }

  Quad conjugate() const;  // a - b*sqrt(m)
  BigInt floor() const;
  double to_double() const;

  /// Field of the sum/product of two values; throws FIELD_MISMATCH when both
  /// are irrational over distinct radicands.
  static long join_field(const Quad& l, const Quad& r);

 private:
  void normalize();
  Rational a_, b_;
  long m_;
};

/// Parses the CLI value grammar: "3/2", "sqrt(3)", "2*sqrt(5)/3",
/// "(1+sqrt(33))/2", "1-sqrt(2)".
Quad quad_from_string(const std::string& text);

std::string quad_to_string(const Quad& q);  // human-readable, e.g. "(1+1*sqrt(33))/2" style

}  // namespace sgspec
