#include "sgspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "sgspec/error.hpp"

namespace sgspec {

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n) {
  if (n < 0) throw Error(Errc::BAD_PARAMS, "negative vertex count");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw Error(Errc::LOOP, "loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw Error(Errc::INDEX_OUT_OF_RANGE,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." + std::to_string(n - 1));
    if (e.sign != 1 && e.sign != -1) throw Error(Errc::BAD_PARAMS, "edge sign must be +1 or -1");
    if (adj_[static_cast<size_t>(e.u) * n_ + e.v] != 0)
      throw Error(Errc::DUPLICATE_EDGE,
                  "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    adj_[static_cast<size_t>(e.u) * n_ + e.v] = static_cast<int8_t>(e.sign);
    adj_[static_cast<size_t>(e.v) * n_ + e.u] = static_cast<int8_t>(e.sign);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

int SignedGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (sign(v, u) != 0) ++d;
  return d;
}

int SignedGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool SignedGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n_; ++u)
      if (sign(v, u) != 0 && !seen[u]) {
        seen[u] = true;
        ++cnt;
        q.push(u);
      }
  }
  return cnt == n_;
}

QuadMatrix SignedGraph::adjacency() const {
  QuadMatrix m(n_, n_);
  for (const auto& e : edges_) {
    m.at(e.u, e.v) = Quad(e.sign);
    m.at(e.v, e.u) = Quad(e.sign);
  }
  return m;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error(Errc::BAD_PARAMS, "negative vertex count");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first == e.second) throw Error(Errc::LOOP, "loop at vertex " + std::to_string(e.first));
    if (e.first < 0 || e.second >= n) throw Error(Errc::INDEX_OUT_OF_RANGE, "edge endpoint out of range");
    if (adj_[static_cast<size_t>(e.first) * n_ + e.second] != 0)
      throw Error(Errc::DUPLICATE_EDGE, "duplicate edge");
    adj_[static_cast<size_t>(e.first) * n_ + e.second] = 1;
    adj_[static_cast<size_t>(e.second) * n_ + e.first] = 1;
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (has_edge(v, u)) ++d;
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u) && !seen[u]) {
        seen[u] = true;
        ++cnt;
        q.push(u);
      }
  }
  return cnt == n_;
}

QuadMatrix Graph::adjacency() const {
  QuadMatrix m(n_, n_);
  for (const auto& [u, v] : edges_) {
    m.at(u, v) = Quad(1);
    m.at(v, u) = Quad(1);
  }
  return m;
}

Graph underlying(const SignedGraph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return Graph(g.size(), std::move(edges));
}

SignedGraph all_negative(const Graph& g) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v, -1});
  return SignedGraph(g.size(), std::move(edges));
}

SignedGraph all_positive(const Graph& g) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v, +1});
  return SignedGraph(g.size(), std::move(edges));
}

SignedGraph switch_signs(const SignedGraph& g, const std::vector<bool>& side) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (side[e.u] != side[e.v]) e.sign = -e.sign;
  return SignedGraph(g.size(), std::move(edges));
}

Partition::Partition(int n, std::vector<std::vector<int>> parts) : n_(n), parts_(std::move(parts)) {
  part_of_.assign(n, -1);
  for (auto& p : parts_) {
    if (p.empty()) throw Error(Errc::BAD_PARAMS, "empty partition part");
    std::sort(p.begin(), p.end());
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (size_t i = 0; i < parts_.size(); ++i) {
    for (int v : parts_[i]) {
      if (v < 0 || v >= n) throw Error(Errc::INDEX_OUT_OF_RANGE, "partition vertex out of range");
      if (part_of_[v] != -1) throw Error(Errc::BAD_PARAMS, "partition parts overlap");
      part_of_[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (part_of_[v] == -1) throw Error(Errc::BAD_PARAMS, "partition does not cover vertex " + std::to_string(v));
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> parts(n);
  for (int v = 0; v < n; ++v) parts[v] = {v};
  return Partition(n, std::move(parts));
}

bool is_valid_coloring(const SignedGraph& g, const Partition& p) {
  if (p.n() != g.size()) return false;
  for (const auto& e : g.edges()) {
    const bool same = p.part_of(e.u) == p.part_of(e.v);
    if (e.sign > 0 && !same) return false;
    if (e.sign < 0 && same) return false;
  }
  return true;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

// Exact k-colorability of a simple graph given as an adjacency predicate,
// with first-use-of-new-color symmetry breaking. Vertices pre-ordered.
bool colorable(int n, const std::vector<std::vector<bool>>& adj, int k, std::vector<int>& colors) {
  colors.assign(n, -1);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adj[i][j]) ++deg[i];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  std::function<bool(int, int)> bt = [&](int idx, int used) {
    if (idx == n) return true;
    const int v = order[idx];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j)
        if (adj[v][order[j]] && colors[order[j]] == c) ok = false;
      if (!ok) continue;
      colors[v] = c;
      if (bt(idx + 1, std::max(used, c + 1))) return true;
      colors[v] = -1;
    }
    return false;
  };
  return bt(0, 0);
}

int greedy_clique_lower_bound(int n, const std::vector<std::vector<bool>>& adj) {
  int best = n > 0 ? 1 : 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> clique = {s};
    for (int v = 0; v < n; ++v) {
      if (v == s) continue;
      bool ok = true;
      for (int c : clique)
        if (!adj[v][c]) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

int chromatic_number_exact(const Graph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<int> colors;
  for (int k = greedy_clique_lower_bound(n, adj); k <= n; ++k)
    if (colorable(n, adj, k, colors)) return k;
  return n;
}

ColoringOutcome chromatic_number(const SignedGraph& g) {
  const int n = g.size();
  ColoringOutcome out;
  if (n == 0) {
    out.finite = true;
    out.chi = 0;
    out.certificate = Partition(0, {});
    return out;
  }
  DisjointSets ds(n);
  for (const auto& e : g.edges())
    if (e.sign > 0) ds.unite(e.u, e.v);

  for (const auto& e : g.edges()) {
    if (e.sign < 0 && ds.find(e.u) == ds.find(e.v)) {
      // witness: positive path u -> v inside the shared component
      std::vector<int> prev(n, -1);
      std::queue<int> q;
      q.push(e.u);
      prev[e.u] = e.u;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == e.v) break;
        for (int y = 0; y < n; ++y)
          if (g.sign(x, y) > 0 && prev[y] == -1) {
            prev[y] = x;
            q.push(y);
          }
      }
      std::vector<int> path;
      for (int x = e.v; x != e.u; x = prev[x]) path.push_back(x);
      path.push_back(e.u);
      std::reverse(path.begin(), path.end());
      out.finite = false;
      out.witness = InfiniteWitness{e.u, e.v, std::move(path)};
      return out;
    }
  }

  // quotient on positive components, edges from negative edges
  std::vector<int> root(n), comp_of(n);
  std::vector<int> roots;
  for (int v = 0; v < n; ++v) root[v] = ds.find(v);
  for (int v = 0; v < n; ++v) {
    auto it = std::find(roots.begin(), roots.end(), root[v]);
    if (it == roots.end()) {
      comp_of[v] = static_cast<int>(roots.size());
      roots.push_back(root[v]);
    } else {
      comp_of[v] = static_cast<int>(it - roots.begin());
    }
  }
  const int m = static_cast<int>(roots.size());
  std::vector<std::vector<bool>> qadj(m, std::vector<bool>(m, false));
  for (const auto& e : g.edges())
    if (e.sign < 0) {
      int a = comp_of[e.u], b = comp_of[e.v];
      qadj[a][b] = qadj[b][a] = true;
    }

  std::vector<int> colors;
  int chi = m;
  for (int k = greedy_clique_lower_bound(m, qadj); k <= m; ++k)
    if (colorable(m, qadj, k, colors)) {
      chi = k;
      break;
    }

  std::vector<std::vector<int>> parts(chi);
  for (int v = 0; v < n; ++v) parts[colors[comp_of[v]]].push_back(v);
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }),
              parts.end());
  out.finite = true;
  out.chi = chi;
  out.certificate = Partition(n, std::move(parts));
  return out;
}

SignedGraph induced_subgraph(const SignedGraph& g, std::span<const int> vertices) {
  std::vector<int> map(g.size(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.size()) throw Error(Errc::INDEX_OUT_OF_RANGE, "induced vertex out of range");
    if (map[v] != -1) throw Error(Errc::BAD_PARAMS, "repeated vertex in induced set");
    map[v] = static_cast<int>(i);
  }
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges())
    if (map[e.u] != -1 && map[e.v] != -1) edges.push_back({map[e.u], map[e.v], e.sign});
  return SignedGraph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> map(g.size(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.size()) throw Error(Errc::INDEX_OUT_OF_RANGE, "induced vertex out of range");
    if (map[v] != -1) throw Error(Errc::BAD_PARAMS, "repeated vertex in induced set");
    map[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (map[u] != -1 && map[v] != -1) edges.emplace_back(map[u], map[v]);
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

SignedGraph disjoint_copies(const SignedGraph& g, int ell) {
  if (ell < 1) throw Error(Errc::BAD_PARAMS, "copy count must be >= 1");
  const int n = g.size();
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size() * ell);
  for (int c = 0; c < ell; ++c)
    for (const auto& e : g.edges()) edges.push_back({e.u + c * n, e.v + c * n, e.sign});
  return SignedGraph(n * ell, std::move(edges));
}

Graph overlay_multipartite(const SignedGraph& g, const Partition& parts) {
  if (parts.n() != g.size()) throw Error(Errc::BAD_PARAMS, "partition size mismatch");
  if (!is_valid_coloring(g, parts))
    throw Error(Errc::INVALID_COLORING, "partition is not a valid coloring of the signed graph");
  const int n = g.size();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int jprime = parts.part_of(u) != parts.part_of(v) ? 1 : 0;
      const int a = g.sign(u, v) + jprime;  // entries stay in {0,1} for valid colorings
      if (a == 1) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

SignedGraph split_by_partition(const Graph& g, const Partition& parts) {
  if (parts.n() != g.size()) throw Error(Errc::BAD_PARAMS, "partition size mismatch");
  const int n = g.size();
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool same = parts.part_of(u) == parts.part_of(v);
      if (g.has_edge(u, v) && same) edges.push_back({u, v, +1});
      else if (!g.has_edge(u, v) && !same) edges.push_back({u, v, -1});
    }
  return SignedGraph(n, std::move(edges));
}

}  // namespace sgspec
