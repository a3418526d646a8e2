#include "sgspec/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cassert>

#include "sgspec/error.hpp"

namespace sgspec {

SpectralQuery SpectralQuery::of(const Quad& v) {
  SpectralQuery q;
  q.value = v;
  return q;
}

SpectralQuery SpectralQuery::of_minpoly(IntPoly p, Rational lo, Rational hi) {
  if (!p.is_monic()) throw Error(Errc::BAD_PARAMS, "minimal polynomial must be monic");
  auto probe = irreducibility_probe(p);
  if (probe.verdict == Irreducibility::REDUCIBLE)
    throw Error(Errc::REDUCIBLE_MINPOLY, "minimal polynomial has factor " + probe.factor->to_string());
  if (sturm_count_interval(p, lo, hi) != 1)
    throw Error(Errc::BAD_PARAMS, "interval does not isolate exactly one root");
  SpectralQuery q;
  q.minpoly = std::move(p);
  q.interval = {std::move(lo), std::move(hi)};
  return q;
}

int SpectralQuery::degree() const {
  if (value) return value->is_rational() ? 1 : 2;
  return minpoly->degree();
}

namespace {

// p(A) over the integers, by Horner on matrices.
QuadMatrix poly_of_adjacency(const SignedGraph& g, const IntPoly& p) {
  const int n = g.size();
  QuadMatrix a = g.adjacency();
  QuadMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quad(Rational(p[p.degree()]));
  for (int d = p.degree() - 1; d >= 0; --d) {
    m = m * a;
    for (int i = 0; i < n; ++i) m.at(i, i) += Quad(Rational(p[d]));
  }
  return m;
}

}  // namespace

int multiplicity(const SignedGraph& g, const SpectralQuery& q) {
  const int n = g.size();
  if (n == 0) return 0;
  const IntPoly p = q.value ? scaled_minimal_polynomial(*q.value) : *q.minpoly;
  const int deg = q.degree();
  const int rank = rank_exact(poly_of_adjacency(g, p));
  const int kernel = n - rank;
  assert(kernel % deg == 0 && "conjugate multiplicities must balance");
  return kernel / deg;
}

int multiplicity(const SignedGraph& g, const Quad& lambda) {
  return multiplicity(g, SpectralQuery::of(lambda));
}

TopComparison compare_top_eigenvalue(const SignedGraph& g, const Quad& lambda) {
  if (lambda.sign() <= 0) throw Error(Errc::BAD_PARAMS, "top-eigenvalue comparison requires lambda > 0");
  const int n = g.size();
  QuadMatrix m = g.adjacency().scaled(Quad(-1));
  for (int i = 0; i < n; ++i) m.at(i, i) += lambda;
  PsdOutcome psd = psd_ldlt(m);
  if (!psd.psd) return {TopCmp::GREATER, std::move(psd.witness)};
  return {multiplicity(g, lambda) >= 1 ? TopCmp::EQUAL : TopCmp::LESS, {}};
}

bool tail_check(const SignedGraph& g, int k, const Quad& lambda) {
  if (k < 1 || k > g.size()) throw Error(Errc::INDEX_OUT_OF_RANGE, "tail index outside 1..n");
  return roots_above(char_poly(g), lambda) <= k - 1;
}

std::vector<double> spectrum_float(const SignedGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.sign;
    a(e.v, e.u) = e.sign;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw Error(Errc::NUMERIC_FAILURE, "eigensolver failed");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

IntPoly char_poly(const SignedGraph& g) { return char_poly(g.adjacency()); }

IntPoly char_poly(const Graph& g) { return char_poly(g.adjacency()); }

}  // namespace sgspec
