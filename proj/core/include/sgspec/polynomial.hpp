#pragma once

#include <optional>
#include <vector>

#include "sgspec/numbers.hpp"

namespace sgspec {

// Polynomial with arbitrary-precision integer coefficients, stored constant
// term first (the serialization order used in every report).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly from_longs(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& operator[](size_t i) const { return c_[i]; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  IntPoly derivative() const;
  IntPoly primitive_part() const;  // content removed, leading sign preserved

  BigInt eval(const BigInt& x) const;
  Rational eval(const Rational& x) const;
  Quad eval(const Quad& x) const;
  int sign_at(const Quad& x) const;
  int sign_at_plus_infinity() const;

  friend IntPoly operator+(const IntPoly& l, const IntPoly& r);
  friend IntPoly operator-(const IntPoly& l, const IntPoly& r);
  friend IntPoly operator*(const IntPoly& l, const IntPoly& r);
  friend bool operator==(const IntPoly& l, const IntPoly& r) { return l.c_ == r.c_; }

  /// Quotient when r divides *this exactly over the integers.
  std::optional<IntPoly> divide_exact(const IntPoly& r) const;

  std::string to_string() const;  // for diagnostics: "x^3 - 3*x + 2" style

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// x - a for rational a (scaled integer), or x^2 - 2ax + (a^2 - m b^2) for
/// quadratic values; scaled to integer coefficients by the denominator lcm.
/// The scaling leaves root sets and matrix-kernel ranks unchanged.
IntPoly scaled_minimal_polynomial(const Quad& value);

/// gcd of primitive parts, computed by a fraction-free remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
  IntPoly factor;    // squarefree, primitive
  int multiplicity;  // >= 1
};

/// Yun decomposition: p = lc * prod factor_i^multiplicity_i (up to content).
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);

/// Number of distinct real roots of a squarefree polynomial in (threshold, +inf).
int sturm_count_above(const IntPoly& squarefree, const Quad& threshold);

/// Number of distinct real roots of a squarefree polynomial in (lo, hi].
int sturm_count_interval(const IntPoly& squarefree, const Rational& lo, const Rational& hi);

/// Real roots strictly greater than the threshold, counted with multiplicity.
int roots_above(const IntPoly& p, const Quad& threshold);

/// Total number of distinct real roots.
int real_root_count(const IntPoly& squarefree);

enum class Irreducibility { IRREDUCIBLE, REDUCIBLE, UNKNOWN };

struct IrreducibilityResult {
  Irreducibility verdict;
  long certificate_prime = 0;       // set for IRREDUCIBLE
  std::optional<IntPoly> factor;    // set for REDUCIBLE
};

/// One-sided probe: IRREDUCIBLE iff irreducible mod one of the primes
/// 2,3,5,7,11,13; REDUCIBLE via rational roots or a monic factor of degree
/// <= 3 (found through divisor matching at x = 0, 1, -1); UNKNOWN otherwise.
/// Requires a monic input.
IrreducibilityResult irreducibility_probe(const IntPoly& p);

/// Power sums s_1..s_k of the roots of a monic polynomial (Newton identities).
std::vector<BigInt> power_sums(const IntPoly& monic, int k);

}  // namespace sgspec
