#pragma once

#include <cstdint>
#include <vector>

#include "sgspec/graph.hpp"

namespace sgspec {

using CanonicalKey = std::vector<uint8_t>;

/// Isomorphism-class key: equal byte strings iff the signed graphs are
/// isomorphic under a sign-preserving vertex bijection. Deterministic.
CanonicalKey canonical_form(const SignedGraph& g);

/// Canonical key for plain graphs (tagged distinctly from signed keys).
CanonicalKey canonical_form(const Graph& g);

/// The relabeling of g whose identity labeling realizes canonical_form(g).
SignedGraph canonical_relabel(const SignedGraph& g);

/// The canonical labeling itself: position of each input vertex.
std::vector<int> canonical_labeling(const SignedGraph& g);

/// Exhaustive sign-preserving isomorphism search; intended for validation at
/// small orders (n <= 8 guarded).
bool isomorphic_brute(const SignedGraph& a, const SignedGraph& b);

}  // namespace sgspec
