#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

/// Undirected simple graph on at most 64 vertices with one bitset
/// adjacency row per vertex. Values are cheap to copy and meant to be
/// treated as immutable once built.
class SmallGraph {
public:
    static constexpr int max_order = 64;

    SmallGraph() = default;
    explicit SmallGraph(int order);

    int order() const noexcept { return order_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Adjacency row of v as a bitset over vertex indices.
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const noexcept;  // 0 for the empty graph
    int max_degree() const noexcept;
    std::size_t edge_count() const noexcept;
    std::uint64_t vertex_mask() const noexcept;

    bool operator==(const SmallGraph&) const = default;

    static SmallGraph empty(int n);
    static SmallGraph complete(int n);
    static SmallGraph path(int n);
    static SmallGraph cycle(int n);
    static SmallGraph star(int leaves);  // K_{1,m}, center at vertex 0
    static SmallGraph wheel(int rim);    // hub 0 joined to a cycle on 1..rim

private:
    void check_vertex(int v) const;

    int order_ = 0;
    std::array<std::uint64_t, max_order> adj_{};
};

/// Disjoint union of cliques; size-0 entries are dropped, negative sizes
/// are rejected, and the total order must stay within SmallGraph::max_order.
struct CliqueUnionSpec {
    std::vector<int> clique_sizes;
};

SmallGraph complement(const SmallGraph& g);

/// Connected components as vertex bitsets, ordered by least contained vertex.
std::vector<std::uint64_t> components(const SmallGraph& g);

int odd_component_count(const SmallGraph& g);

SmallGraph clique_union(const CliqueUnionSpec& spec);

/// Standard graph6 text encoding (upper triangle, column major, 6-bit
/// printable chunks). Decoding rejects malformed headers, nonzero padding
/// and trailing bytes; orders above 64 are out of range.
std::string graph6_encode(const SmallGraph& g);
SmallGraph graph6_decode(std::string_view text);

/// DOT source with every vertex listed and each edge exactly once.
std::string dot_export(const SmallGraph& g, std::string_view label);

}  // namespace ramsey
