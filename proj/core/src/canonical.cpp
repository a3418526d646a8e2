#include "sgspec/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sgspec/error.hpp"

namespace sgspec {

namespace {

// Individualization-refinement search for the lexicographically smallest
// adjacency encoding. Cells are kept in a canonical order (splits ordered by
// invariant signatures), so restricting candidate labelings to cell order is
// isomorphism-invariant.
struct CanonSearch {
  const SignedGraph& g;
  int n;
  std::vector<uint8_t> best;      // best encoding body so far (empty = none)
  std::vector<int> best_pos;      // vertex -> position for the best encoding

  explicit CanonSearch(const SignedGraph& graph) : g(graph), n(graph.size()) {}

  using Cells = std::vector<std::vector<int>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() <= 1) continue;
        // signature of v: per-cell (positive, negative) neighbor counts
        std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups;
        for (int v : cells[ci]) {
          std::vector<std::pair<int, int>> sig(cells.size(), {0, 0});
          for (size_t cj = 0; cj < cells.size(); ++cj)
            for (int u : cells[cj]) {
              const int s = g.sign(v, u);
              if (s > 0) ++sig[cj].first;
              else if (s < 0) ++sig[cj].second;
            }
          groups[std::move(sig)].push_back(v);
        }
        if (groups.size() > 1) {
          Cells next;
          next.reserve(cells.size() + groups.size() - 1);
          for (size_t cj = 0; cj < cells.size(); ++cj) {
            if (cj != ci) {
              next.push_back(std::move(cells[cj]));
            } else {
              for (auto& [sig, members] : groups) next.push_back(std::move(members));
            }
          }
          cells = std::move(next);
          changed = true;
          break;
        }
      }
    }
  }

  static uint8_t code(int sign) { return sign == 0 ? 0 : (sign > 0 ? 1 : 2); }

  // Column-major upper-triangle bytes: all entries within the first f
  // positions form a prefix of the full encoding.
  void encode_prefix(const std::vector<int>& vert_at, int upto, std::vector<uint8_t>& out) const {
    out.clear();
    for (int j = 1; j < upto; ++j)
      for (int i = 0; i < j; ++i) out.push_back(code(g.sign(vert_at[i], vert_at[j])));
  }

  void dfs(Cells& cells) {
    int f = 0;
    while (f < static_cast<int>(cells.size()) && cells[f].size() == 1) ++f;

    std::vector<int> vert_at(f);
    for (int i = 0; i < f; ++i) vert_at[i] = cells[i][0];
    if (!best.empty()) {
      std::vector<uint8_t> prefix;
      encode_prefix(vert_at, f, prefix);
      if (std::lexicographical_compare(best.begin(), best.begin() + prefix.size(), prefix.begin(),
                                       prefix.end()))
        return;  // already worse than the incumbent on decided entries
    }

    if (f == static_cast<int>(cells.size())) {
      std::vector<uint8_t> enc;
      encode_prefix(vert_at, n, enc);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_pos.assign(n, 0);
        for (int i = 0; i < n; ++i) best_pos[vert_at[i]] = i;
      }
      return;
    }

    const std::vector<int> target = cells[f];
    for (int v : target) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (int i = 0; i < f; ++i) child.push_back(cells[i]);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : target)
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (size_t i = f + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      refine(child);
      dfs(child);
    }
  }

  void run() {
    if (n == 0) {
      best.clear();
      best_pos.clear();
      return;
    }
    Cells cells = {std::vector<int>(n)};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine(cells);
    dfs(cells);
  }
};

}  // namespace

CanonicalKey canonical_form(const SignedGraph& g) {
  CanonSearch s(g);
  s.run();
  CanonicalKey key;
  key.reserve(s.best.size() + 2);
  key.push_back('S');
  key.push_back(static_cast<uint8_t>(g.size()));
  key.insert(key.end(), s.best.begin(), s.best.end());
  return key;
}

CanonicalKey canonical_form(const Graph& g) {
  CanonicalKey key = canonical_form(all_positive(g));
  key[0] = 'P';
  return key;
}

std::vector<int> canonical_labeling(const SignedGraph& g) {
  CanonSearch s(g);
  s.run();
  return s.best_pos;
}

SignedGraph canonical_relabel(const SignedGraph& g) {
  std::vector<int> pos = canonical_labeling(g);
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.push_back({pos[e.u], pos[e.v], e.sign});
  return SignedGraph(g.size(), std::move(edges));
}

bool isomorphic_brute(const SignedGraph& a, const SignedGraph& b) {
  if (a.size() != b.size()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  const int n = a.size();
  if (n > 8) throw Error(Errc::LIMIT_EXCEEDED, "brute-force isomorphism capped at 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.sign(u, v) != b.sign(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace sgspec
