#pragma once

#include <cstdint>
#include <vector>

#include "ramsey/linear_forest.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

/// Order of a longest simple path; 0 for the empty graph. Exact for every
/// input: subset DP per component up to 24 vertices, branch-and-bound above.
int longest_path_order(const SmallGraph& g);

/// True iff G contains a path on n vertices (n >= 1), with early exit.
bool contains_path(const SmallGraph& g, int n);

/// True iff some vertex has degree >= m (m >= 1), i.e. K_{1,m} embeds.
bool contains_star(const SmallGraph& g, int m);

/// True iff G contains vertex-disjoint simple paths with exactly the given
/// orders (each >= 1, any input order; normalized to descending internally).
bool linear_forest_embeds(const SmallGraph& g, const std::vector<int>& orders);

/// True iff some vertex v sees the whole forest inside its neighborhood,
/// i.e. the quasar K_1 v F embeds with center v.
bool contains_quasar(const SmallGraph& g, const LinearForest& f);

namespace detail {

inline constexpr int subset_dp_max_vertices = 24;

/// Longest path within one connected component (given as a vertex mask),
/// stopping early once `target` is reached.
int longest_path_in_component(const SmallGraph& g, std::uint64_t comp, int target);

/// Forest embedding restricted to an allowed vertex mask.
bool forest_embeds_in_mask(const SmallGraph& g, std::uint64_t allowed,
                           const std::vector<int>& descending_orders);

}  // namespace detail

}  // namespace ramsey
