#include "ramsey/small_graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace ramsey {

SmallGraph::SmallGraph(int order) : order_(order) {
    if (order < 0 || order > max_order)
        throw std::invalid_argument("graph order must be between 0 and 64");
}

void SmallGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw std::invalid_argument("vertex index out of range");
}

bool SmallGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void SmallGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

std::uint64_t SmallGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int SmallGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int SmallGraph::min_degree() const noexcept {
    int d = order_ == 0 ? 0 : max_order;
    for (int v = 0; v < order_; ++v) d = std::min(d, std::popcount(adj_[v]));
    return d;
}

int SmallGraph::max_degree() const noexcept {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

std::size_t SmallGraph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (int v = 0; v < order_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::uint64_t SmallGraph::vertex_mask() const noexcept {
    return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
}

SmallGraph SmallGraph::empty(int n) { return SmallGraph(n); }

SmallGraph SmallGraph::complete(int n) {
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SmallGraph SmallGraph::path(int n) {
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SmallGraph SmallGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    SmallGraph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

SmallGraph SmallGraph::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star leaf count must be nonnegative");
    SmallGraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

SmallGraph SmallGraph::wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("a wheel rim needs at least 3 vertices");
    SmallGraph g(rim + 1);
    for (int v = 1; v <= rim; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v == rim ? 1 : v + 1);
    }
    return g;
}

SmallGraph complement(const SmallGraph& g) {
    const int n = g.order();
    SmallGraph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

std::vector<std::uint64_t> components(const SmallGraph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t unseen = g.vertex_mask();
    while (unseen) {
        std::uint64_t comp = 0;
        std::uint64_t frontier = unseen & (~unseen + 1);
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= g.neighbors(std::countr_zero(f));
            frontier = next & ~comp;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

int odd_component_count(const SmallGraph& g) {
    int odd = 0;
    for (std::uint64_t comp : components(g))
        if (std::popcount(comp) % 2 == 1) ++odd;
    return odd;
}

SmallGraph clique_union(const CliqueUnionSpec& spec) {
    long long total = 0;
    for (int s : spec.clique_sizes) {
        if (s < 0) throw std::invalid_argument("clique sizes must be nonnegative");
        total += s;
    }
    if (total > SmallGraph::max_order)
        throw std::invalid_argument("clique union exceeds the 64 vertex limit");
    SmallGraph g(static_cast<int>(total));
    int base = 0;
    for (int s : spec.clique_sizes) {
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
    }
    return g;
}

namespace {

// graph6 stores n, then the upper triangle read column by column
// (edge (i, j) with i < j contributes the bit for column j, row i),
// packed big endian into 6-bit groups, each group printed as group+63.
constexpr int g6_offset = 63;

void append_g6_header(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(g6_offset + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(g6_offset + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(g6_offset + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(g6_offset + (n & 63)));
    }
}

}  // namespace

std::string graph6_encode(const SmallGraph& g) {
    const int n = g.order();
    std::string out;
    append_g6_header(out, n);
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(g6_offset + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(g6_offset + (group << (6 - filled))));
    return out;
}

SmallGraph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = text[0] - g6_offset;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw std::invalid_argument("graph6: order beyond the 64 vertex limit");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated long header");
        n = (static_cast<long long>(text[1] - g6_offset) << 12) |
            (static_cast<long long>(text[2] - g6_offset) << 6) |
            static_cast<long long>(text[3] - g6_offset);
        pos = 4;
    }
    if (n > SmallGraph::max_order)
        throw std::invalid_argument("graph6: order beyond the 64 vertex limit");

    const long long bits = n * (n - 1) / 2;
    const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < want) throw std::invalid_argument("graph6: truncated body");
    if (text.size() - pos > want) throw std::invalid_argument("graph6: trailing bytes");

    SmallGraph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = text[pos + bit / 6] - g6_offset;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int tail = text[pos + want - 1] - g6_offset;
        const int pad = static_cast<int>(6 - bits % 6);
        if (tail & ((1 << pad) - 1))
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

std::string dot_export(const SmallGraph& g, std::string_view label) {
    std::string quoted;
    for (char c : label) {
        if (c == '"' || c == '\\') quoted.push_back('\\');
        quoted.push_back(c);
    }
    std::string out = "graph \"" + quoted + "\" {\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v))
                out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ramsey
