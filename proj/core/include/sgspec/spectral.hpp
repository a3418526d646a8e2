#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgspec/canonical.hpp"
#include "sgspec/graph.hpp"

namespace sgspec {

// Eigenvalue to query: either a closed-form value of degree <= 2, or a monic
// irreducible minimal polynomial together with a rational isolating interval.
struct SpectralQuery {
  std::optional<Quad> value;
  std::optional<IntPoly> minpoly;
  std::optional<std::pair<Rational, Rational>> interval;  // (lo, hi]

  static SpectralQuery of(const Quad& v);
  /// Validates: probe must not prove the polynomial reducible, and the
  /// interval must isolate exactly one real root.
  static SpectralQuery of_minpoly(IntPoly p, Rational lo, Rational hi);

  int degree() const;
};

/// Exact eigenvalue multiplicity: (n - rank p(A)) / deg p, where p is the
/// (scaled) minimal polynomial. Conjugate eigenvalues of a symmetric integer
/// matrix occur with equal multiplicity, which makes the division exact.
int multiplicity(const SignedGraph& g, const SpectralQuery& q);
int multiplicity(const SignedGraph& g, const Quad& lambda);

enum class TopCmp { LESS, EQUAL, GREATER };

struct TopComparison {
  TopCmp cmp;
  // For GREATER: exact vector x with x^T (lambda I - A) x < 0.
  std::vector<Quad> witness;
};

/// Compares lambda_1(g) against lambda (> 0, degree <= 2) without floats:
/// EQUAL iff lambda I - A is PSD and lambda is an eigenvalue, LESS iff PSD
/// and not an eigenvalue, GREATER otherwise.
TopComparison compare_top_eigenvalue(const SignedGraph& g, const Quad& lambda);

/// True iff lambda_k(g) <= lambda, via the Sturm root count of char_poly.
bool tail_check(const SignedGraph& g, int k, const Quad& lambda);

/// Floating-point spectrum, descending. Cross-validation only, never
/// authoritative.
std::vector<double> spectrum_float(const SignedGraph& g);

IntPoly char_poly(const SignedGraph& g);
IntPoly char_poly(const Graph& g);

}  // namespace sgspec
