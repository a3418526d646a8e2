#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgspec/matrix.hpp"

namespace sgspec {

struct SignedEdge {
  int u, v;   // u < v after validation
  int sign;   // +1 or -1
  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

// Immutable signed graph: vertex set {0..n-1}, at most one signed edge per
// pair, no loops. Carries a dense sign matrix for O(1) lookups.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<SignedEdge> edges);

  int size() const { return n_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  int sign(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }
  int degree(int v) const;
  int max_degree() const;
  bool is_connected() const;  // as the underlying graph; true for n <= 1

  QuadMatrix adjacency() const;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;  // sorted by (u, v)
  std::vector<int8_t> adj_;
};

class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  int degree(int v) const;
  int max_degree() const;
  bool is_connected() const;

  QuadMatrix adjacency() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<int8_t> adj_;
};

Graph underlying(const SignedGraph& g);
SignedGraph all_negative(const Graph& g);
SignedGraph all_positive(const Graph& g);

/// Negates every edge crossing (side, complement); conjugation by a +-1
/// diagonal matrix, so the spectrum is preserved.
SignedGraph switch_signs(const SignedGraph& g, const std::vector<bool>& side);

// Ordered partition of {0..n-1} into non-empty disjoint parts. Normalized:
// parts sorted internally and ordered by smallest element.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<std::vector<int>> parts);

  int n() const { return n_; }
  int parts_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int part_of(int v) const { return part_of_[v]; }

  static Partition singletons(int n);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> parts_;
  std::vector<int> part_of_;
};

struct InfiniteWitness {
  int u, v;                        // joined by a negative edge
  std::vector<int> positive_path;  // u -> v through positive edges
};

struct ColoringOutcome {
  bool finite = false;
  int chi = 0;  // valid when finite
  std::optional<Partition> certificate;
  std::optional<InfiniteWitness> witness;
};

/// Exact signed chromatic number: contract positive components, then an exact
/// chromatic number of the negative quotient (branch and bound).
ColoringOutcome chromatic_number(const SignedGraph& g);

/// Positive edges inside parts, negative edges across.
bool is_valid_coloring(const SignedGraph& g, const Partition& p);

/// Exact chromatic number of a plain graph.
int chromatic_number_exact(const Graph& g);

SignedGraph induced_subgraph(const SignedGraph& g, std::span<const int> vertices);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

SignedGraph disjoint_copies(const SignedGraph& g, int ell);

/// Unsigned overlay: adjacency(A_signed + complete multipartite on parts),
/// entrywise in {0,1}. Throws INVALID_COLORING unless parts validly colors g.
Graph overlay_multipartite(const SignedGraph& g, const Partition& parts);

/// Inverse transformation: +1 on in-part edges of g, -1 on missing cross-part
/// pairs, 0 otherwise.
SignedGraph split_by_partition(const Graph& g, const Partition& parts);

}  // namespace sgspec
