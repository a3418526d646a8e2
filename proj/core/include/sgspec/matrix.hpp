#pragma once

#include <vector>

#include "sgspec/numbers.hpp"
#include "sgspec/polynomial.hpp"

namespace sgspec {

// Dense matrix over Q(sqrt m); all entries are joined into one field on
// construction/assignment. Row-major.
class QuadMatrix {
 public:
  QuadMatrix() = default;
  QuadMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static QuadMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Quad& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Quad& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_symmetric() const;
  bool is_integer() const;
  /// Common radicand of all entries; throws FIELD_MISMATCH if entries span
  /// two distinct quadratic fields.
  long field() const;

  friend QuadMatrix operator+(const QuadMatrix& l, const QuadMatrix& r);
  friend QuadMatrix operator-(const QuadMatrix& l, const QuadMatrix& r);
  friend QuadMatrix operator*(const QuadMatrix& l, const QuadMatrix& r);
  QuadMatrix scaled(const Quad& s) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Quad> e_;
};

/// Exact rank over the field, by fraction-free (Bareiss) elimination with
/// full pivoting.
int rank_exact(const QuadMatrix& m);

struct PsdOutcome {
  bool psd = false;
  int rank = 0;
  // LDLT-style diagonal pivots (of the denominator-cleared matrix) for the
  // positive-semidefinite certificate; all strictly positive, one per rank.
  std::vector<Quad> pivots;
  // When not PSD: an exact vector with witness_value = x^T M x < 0.
  std::vector<Quad> witness;
  Quad witness_value;
};

/// Throws NOT_SYMMETRIC for asymmetric input.
PsdOutcome psd_ldlt(const QuadMatrix& m);

/// det(xI - A) with exact integer coefficients (Faddeev-LeVerrier).
/// Throws NON_INTEGER_ENTRIES unless every entry is a plain integer.
IntPoly char_poly(const QuadMatrix& m);

}  // namespace sgspec
