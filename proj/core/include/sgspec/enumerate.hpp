#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sgspec/canonical.hpp"
#include "sgspec/graph.hpp"

namespace sgspec {

/// Enumeration cap: SGSPEC_MAX_N when set, otherwise 8.
int enumeration_cap();

// Constraints closed under taking induced subgraphs; safe to prune the
// augmentation tree with. Non-hereditary conditions (connectedness, exact
// top-eigenvalue equality) belong in the visitor.
struct EnumConstraints {
  std::optional<int> chi_max;
  std::optional<int> degree_cap;
  std::optional<Quad> lambda1_max;                 // exact PSD test on lambda I - A
  std::optional<std::pair<int, Quad>> tail_bound;  // lambda_k <= value (Sturm)
  bool unsigned_only = false;                      // restrict signs to {0, +1}
  bool no_pruning = false;  // constraints applied only when visiting (soundness tests)
  std::function<bool(const SignedGraph&)> hereditary_filter;  // extra prune, may be null
  std::optional<double> time_limit_sec;
};

struct EnumCounters {
  long long classes = 0;     // isomorphism classes visited over all levels
  long long candidates = 0;  // labeled one-vertex extensions examined
  long long pruned = 0;      // extensions rejected by constraints
  std::vector<long long> per_level;  // classes per level, index = vertex count
};

// Level-synchronous canonical-augmentation enumeration: level n holds one
// canonical representative per isomorphism class on exactly n vertices that
// satisfies every hereditary constraint. Children are produced by attaching
// vertex n with all sign patterns to each representative and deduplicated by
// canonical form; results and counters are independent of the worker count.
class LevelEnumerator {
 public:
  LevelEnumerator(EnumConstraints constraints, int n_max, int jobs = 1);

  /// Advances one level and returns its representatives in canonical-key
  /// order. Empty once past n_max (or when every class is pruned).
  const std::vector<SignedGraph>& advance();

  int level() const { return level_; }
  bool done() const { return level_ >= n_max_; }
  const EnumCounters& counters() const { return counters_; }

  /// True iff g satisfies every constraint (used by visitors in
  /// no-pruning mode and by the completeness tests).
  bool satisfies(const SignedGraph& g) const;

 private:
  EnumConstraints c_;
  int n_max_;
  int jobs_;
  int level_ = 0;
  std::vector<SignedGraph> reps_;
  EnumCounters counters_;
  std::chrono::steady_clock::time_point start_;
};

using EnumVisitor = std::function<void(const SignedGraph&, int level)>;

/// Runs all levels 1..n_max, visiting each constrained class once per level
/// in deterministic order.
EnumCounters enumerate_signed(int n_max, const EnumConstraints& constraints,
                              const EnumVisitor& visit, int jobs = 1);

}  // namespace sgspec
