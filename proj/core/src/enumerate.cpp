#include "sgspec/enumerate.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include "sgspec/error.hpp"
#include "sgspec/polynomial.hpp"
#include "sgspec/spectral.hpp"

namespace sgspec {

int enumeration_cap() {
  if (const char* env = std::getenv("SGSPEC_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

namespace {

constexpr long long kClassStoreCap = 4'000'000;

bool check_constraints(const SignedGraph& g, const EnumConstraints& c) {
  if (c.degree_cap && g.max_degree() > *c.degree_cap) return false;
  if (c.chi_max) {
    auto col = chromatic_number(g);
    if (!col.finite || col.chi > *c.chi_max) return false;
  }
  if (c.hereditary_filter && !c.hereditary_filter(g)) return false;
  if (c.lambda1_max) {
    QuadMatrix m = g.adjacency().scaled(Quad(-1));
    for (int i = 0; i < g.size(); ++i) m.at(i, i) += *c.lambda1_max;
    if (!psd_ldlt(m).psd) return false;
  }
  if (c.tail_bound) {
    const auto& [k, lam] = *c.tail_bound;
    if (g.size() >= k && !tail_check(g, k, lam)) return false;
  }
  return true;
}

}  // namespace

LevelEnumerator::LevelEnumerator(EnumConstraints constraints, int n_max, int jobs)
    : c_(std::move(constraints)), n_max_(n_max), jobs_(jobs < 1 ? 1 : jobs) {
  if (n_max < 1) throw Error(Errc::BAD_PARAMS, "n_max must be >= 1");
  if (n_max > enumeration_cap())
    throw Error(Errc::LIMIT_EXCEEDED, "n_max " + std::to_string(n_max) + " exceeds the enumeration cap " +
                                          std::to_string(enumeration_cap()) + " (see SGSPEC_MAX_N)");
  start_ = std::chrono::steady_clock::now();
  counters_.per_level.assign(n_max + 1, 0);
}

bool LevelEnumerator::satisfies(const SignedGraph& g) const { return check_constraints(g, c_); }

const std::vector<SignedGraph>& LevelEnumerator::advance() {
  if (level_ >= n_max_) {
    reps_.clear();
    return reps_;
  }
  if (c_.time_limit_sec) {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > *c_.time_limit_sec) throw Error(Errc::LIMIT_EXCEEDED, "enumeration time limit exceeded");
  }

  const int n = level_ + 1;
  using KeyMap = std::map<CanonicalKey, SignedGraph>;

  auto extend_range = [&](size_t lo, size_t hi, KeyMap& out, long long& cand, long long& pruned) {
    const int signs_per_slot = c_.unsigned_only ? 2 : 3;
    long long patterns = 1;
    for (int i = 0; i < n - 1; ++i) patterns *= signs_per_slot;
    for (size_t pi = lo; pi < hi; ++pi) {
      const SignedGraph& parent = reps_[pi];
      for (long long code = 0; code < patterns; ++code) {
        ++cand;
        std::vector<SignedEdge> edges = parent.edges();
        long long rest = code;
        for (int u = 0; u < n - 1; ++u) {
          const int digit = static_cast<int>(rest % signs_per_slot);
          rest /= signs_per_slot;
          if (digit == 1) edges.push_back({u, n - 1, +1});
          else if (digit == 2) edges.push_back({u, n - 1, -1});
        }
        SignedGraph child(n, std::move(edges));
        if (!c_.no_pruning && !check_constraints(child, c_)) {
          ++pruned;
          continue;
        }
        SignedGraph canon = canonical_relabel(child);
        CanonicalKey key = canonical_form(canon);
        out.emplace(std::move(key), std::move(canon));
      }
    }
  };

  KeyMap merged;
  long long cand_total = 0, pruned_total = 0;
  if (n == 1) {
    SignedGraph single(1, {});
    ++cand_total;
    if (c_.no_pruning || check_constraints(single, c_)) merged.emplace(canonical_form(single), single);
    else ++pruned_total;
  } else if (jobs_ == 1 || reps_.size() < 2) {
    extend_range(0, reps_.size(), merged, cand_total, pruned_total);
  } else {
    const size_t workers = std::min<size_t>(jobs_, reps_.size());
    std::vector<KeyMap> maps(workers);
    std::vector<long long> cands(workers, 0), prunes(workers, 0);
    std::vector<std::thread> pool;
    const size_t chunk = (reps_.size() + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      const size_t lo = w * chunk, hi = std::min(reps_.size(), (w + 1) * chunk);
      pool.emplace_back([&, w, lo, hi] { extend_range(lo, hi, maps[w], cands[w], prunes[w]); });
    }
    for (auto& t : pool) t.join();
    for (size_t w = 0; w < workers; ++w) {
      cand_total += cands[w];
      pruned_total += prunes[w];
      merged.merge(maps[w]);  // identical keys carry identical graphs
    }
  }

  if (static_cast<long long>(merged.size()) > kClassStoreCap)
    throw Error(Errc::LIMIT_EXCEEDED, "class store exceeded at level " + std::to_string(n));

  reps_.clear();
  reps_.reserve(merged.size());
  for (auto& [key, graph] : merged) reps_.push_back(std::move(graph));
  counters_.candidates += cand_total;
  counters_.pruned += pruned_total;
  counters_.per_level[n] = static_cast<long long>(reps_.size());
  counters_.classes += static_cast<long long>(reps_.size());
  level_ = n;
  return reps_;
}

EnumCounters enumerate_signed(int n_max, const EnumConstraints& constraints, const EnumVisitor& visit,
                              int jobs) {
  LevelEnumerator en(constraints, n_max, jobs);
  while (!en.done()) {
    const auto& reps = en.advance();
    for (const auto& g : reps) {
      if (constraints.no_pruning && !en.satisfies(g)) continue;
      if (visit) visit(g, en.level());
    }
  }
  return en.counters();
}

}  // namespace sgspec
