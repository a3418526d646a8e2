#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgspec/enumerate.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

// Every isomorphism class on at most h vertices with top eigenvalue
// strictly above lambda, keyed by canonical form.
struct ForbiddenFamily {
  Quad lambda;
  int h = 0;
  long floor_lambda_sq = 0;
  std::vector<SignedGraph> members;  // canonical representatives, key order
  std::set<CanonicalKey> keys;

  bool empty() const { return members.empty(); }
  /// Any induced subgraph on <= h vertices isomorphic to a member?
  bool contains_member_induced(const SignedGraph& g) const;
  /// Same, restricted to vertex subsets containing the last vertex (the
  /// incremental check used while augmenting).
  bool extension_hits(const SignedGraph& g) const;
  /// Degree bound (p-1)*floor(lambda^2), valid once the family spans all
  /// graphs up to floor(lambda^2)+2 vertices.
  std::optional<int> degree_cap_for(int p) const;
};

ForbiddenFamily forbidden_family(const Quad& lambda, int h);

struct SearchOptions {
  int jobs = 1;
  bool connected_only = false;
  bool no_pruning = false;           // soundness testing
  std::optional<double> time_limit_sec;
  int witness_cap = 16;
};

enum class SearchMode { K_ORDER, KP_RATIO, M_VALUE, BOUND_VERIFY };

struct SearchReport {
  SearchMode mode;
  Quad lambda;
  int p = 0;
  int n_max = 0;
  std::optional<Rational> value;     // k, best ratio, or max multiplicity
  bool pass = true;                  // BOUND_VERIFY verdict
  bool inconclusive = false;         // K_ORDER: nothing found within n_max
  std::vector<SignedGraph> witnesses;
  EnumCounters counters;
  std::optional<int> k_lambda;       // spectral radius order used for bounds
  std::optional<Quad> cor44_lower;   // p*k/(p*k - 2*lambda), p >= 2
  std::string notes;
};

/// k(lambda): least vertex count of a plain graph with spectral radius
/// exactly lambda, searched up to n_max.
SearchReport spectral_radius_order(const Quad& lambda, int n_max, const SearchOptions& opt = {});

/// Minimum |G|/mult(lambda, G) over signed classes with chi <= p and
/// lambda_1 = lambda, up to n_max vertices.
SearchReport kp_search(const Quad& lambda, int p, int n_max, const SearchOptions& opt = {});

/// Checks mult(lambda, G) <= coeff * |G| over all signed classes with
/// chi <= p on up to n_max vertices, by full enumeration.
SearchReport verify_mult_bound(const Quad& lambda, int p, int n_max, const Rational& coeff,
                               const SearchOptions& opt = {});

/// The boundary reduction for the (sqrt3, p=3, 3/7) instance: a violation on
/// n in {4,6,8} forces A^2 = 3I, so it suffices to test every signing of the
/// connected cubic graphs on those orders for chi <= 3. Covers all n <= 8.
SearchReport verify_mult_bound_reduction(const SearchOptions& opt = {});

/// Exact M_{p,H}(lambda, N): maximum multiplicity over classes on at most N
/// vertices with chi <= p, lambda_{p+1} <= lambda, avoiding the family.
SearchReport compute_M(const Quad& lambda, int p, int N, const ForbiddenFamily& family,
                       const SearchOptions& opt = {});

}  // namespace sgspec
