#include "ramsey/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <map>
#include <utility>

#include "ramsey/detectors.hpp"

namespace ramsey {

// ---------- target patterns ----------

TargetPattern TargetPattern::star(int m) {
    if (m < 1) throw std::invalid_argument("star target needs m >= 1");
    return {Kind::star, m, std::nullopt};
}

TargetPattern TargetPattern::quasar(LinearForest f) {
    const int m = f.total_order();
    return {Kind::quasar, m, std::move(f)};
}

TargetPattern TargetPattern::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle target needs m >= 3");
    return {Kind::cycle, m, std::nullopt};
}

TargetPattern TargetPattern::wheel(int m) {
    if (m < 3) throw std::invalid_argument("wheel target needs m >= 3");
    return {Kind::wheel, m, std::nullopt};
}

TargetPattern TargetPattern::path(int n) {
    if (n < 1) throw std::invalid_argument("path target needs n >= 1");
    return {Kind::path, n, std::nullopt};
}

namespace {

SmallGraph induced_subgraph(const SmallGraph& g, std::uint64_t mask) {
    int local[SmallGraph::max_order];
    int k = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) local[k++] = std::countr_zero(m);
    SmallGraph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(local[i], local[j])) h.add_edge(i, j);
    return h;
}

// Cycle detection by subset DP anchored at the lowest vertex of each
// candidate mask: dp[mask] holds endpoints of simple paths that start at
// the mask's minimum and span the mask, extending only upward from it.
bool contains_cycle_exact(const SmallGraph& g, int m) {
    const int n = g.order();
    if (n < m) return false;
    if (n > 20) throw std::invalid_argument("cycle containment supports order <= 20");
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t ends = dp[mask];
        if (!ends) continue;
        const int s = std::countr_zero(mask);
        const int len = std::popcount(mask);
        if (len == m) {
            for (std::uint32_t e = ends; e; e &= e - 1) {
                const int v = std::countr_zero(e);
                if (v != s && g.has_edge(v, s)) return true;
            }
            continue;
        }
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            std::uint32_t ext =
                static_cast<std::uint32_t>(g.neighbors(v)) & full & ~mask;
            ext &= ~((std::uint32_t{1} << (s + 1)) - 1);  // keep s minimal
            for (; ext; ext &= ext - 1) {
                const int w = std::countr_zero(ext);
                dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return false;
}

bool contains_wheel_exact(const SmallGraph& g, int m) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < m) continue;
        if (contains_cycle_exact(induced_subgraph(g, g.neighbors(v)), m)) return true;
    }
    return false;
}

}  // namespace

bool TargetPattern::contained_in(const SmallGraph& host) const {
    switch (kind) {
        case Kind::star: return contains_star(host, param);
        case Kind::quasar: return contains_quasar(host, *forest);
        case Kind::cycle: return contains_cycle_exact(host, param);
        case Kind::wheel: return contains_wheel_exact(host, param);
        case Kind::path: return contains_path(host, param);
    }
    throw std::logic_error("unhandled target kind");
}

std::string TargetPattern::to_string() const {
    switch (kind) {
        case Kind::star: return "star:" + std::to_string(param);
        case Kind::quasar: return "quasar:" + forest->to_string();
        case Kind::cycle: return "cycle:" + std::to_string(param);
        case Kind::wheel: return "wheel:" + std::to_string(param);
        case Kind::path: return "path:" + std::to_string(param);
    }
    throw std::logic_error("unhandled target kind");
}

// ---------- canonical form ----------

namespace {

constexpr int canon_max_order = 11;  // key needs n(n-1)/2 <= 64 bits

// One round of color refinement: new color = rank of (old color, sorted
// neighbor colors). Ranks are assigned by signature order, which is
// label-independent, so the partition is an isomorphism invariant.
int refine_colors(const SmallGraph& g, std::array<int, canon_max_order>& color) {
    const int n = g.order();
    std::array<std::pair<std::vector<int>, int>, canon_max_order> sig;
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (std::uint64_t m = g.neighbors(v); m; m &= m - 1)
            nb.push_back(color[std::countr_zero(m)]);
        std::sort(nb.begin(), nb.end());
        nb.insert(nb.begin(), color[v]);
        sig[v] = {std::move(nb), v};
    }
    std::array<int, canon_max_order> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    int classes = 0;
    std::array<int, canon_max_order> next{};
    for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++classes;
        next[order[i]] = classes;
    }
    color = next;
    return classes + 1;
}

struct CanonSearch {
    const SmallGraph& g;
    int n;
    int total_bits;
    const std::array<int, canon_max_order>& pos_color;  // color demanded per position
    const std::array<int, canon_max_order>& color;
    std::uint64_t best;
    std::array<int, canon_max_order> chosen{};
    std::uint16_t used = 0;

    void place(int j, std::uint64_t partial, int bits) {
        if (j == n) {
            best = partial;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (color[v] != pos_color[j]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < j; ++i)
                col = (col << 1) | (g.has_edge(chosen[i], v) ? 1 : 0);
            const std::uint64_t next = (partial << j) | col;
            const int next_bits = bits + j;
            if (next > (best >> (total_bits - next_bits))) continue;
            chosen[j] = v;
            used |= std::uint16_t{1} << v;
            place(j + 1, next, next_bits);
            used &= ~(std::uint16_t{1} << v);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    const int n = g.order();
    if (n > canon_max_order)
        throw std::invalid_argument("canonical form supports order <= 11");
    if (n <= 1) return {0, g};

    std::array<int, canon_max_order> color{};
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = refine_colors(g, color);
    for (;;) {
        const int next = refine_colors(g, color);
        if (next == classes) break;  // splits only; equal count means stable
        classes = next;
    }

    // Position j of the canonical ordering must host a vertex of the j-th
    // smallest remaining color; within a color class all orders are tried.
    std::array<int, canon_max_order> pos_color{};
    {
        std::array<int, canon_max_order> sorted{};
        for (int v = 0; v < n; ++v) sorted[v] = color[v];
        std::sort(sorted.begin(), sorted.begin() + n);
        pos_color = sorted;
    }

    const int total_bits = n * (n - 1) / 2;
    CanonSearch search{g, n, total_bits, pos_color, color,
                       (std::uint64_t{1} << total_bits) - 1};
    search.place(0, 0, 0);

    SmallGraph canon(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if ((search.best >> (total_bits - 1 - idx)) & 1) canon.add_edge(i, j);
    return {search.best, canon};
}

// ---------- isomorph-free P_n-free enumeration ----------

namespace {

// dp[mask] = endpoints of simple paths spanning exactly mask.
std::vector<std::uint16_t> path_endpoint_table(const SmallGraph& g) {
    const int k = g.order();
    std::vector<std::uint16_t> dp(std::size_t{1} << k, 0);
    for (int v = 0; v < k; ++v) dp[std::uint16_t{1} << v] = std::uint16_t{1} << v;
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint16_t ends = dp[mask];
        if (!ends) continue;
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            std::uint32_t ext = static_cast<std::uint32_t>(g.neighbors(v)) & full & ~mask;
            for (; ext; ext &= ext - 1) {
                const int w = std::countr_zero(ext);
                dp[mask | (std::uint32_t{1} << w)] |= std::uint16_t{1} << w;
            }
        }
    }
    return dp;
}

// Rejects neighborhoods S of a new vertex that would close a P_n inside
// parent + new vertex. The new vertex either ends an (n-1)-vertex path of
// the parent (S meets e1) or sits inside one, joining two disjoint paths
// with n-1 vertices total whose inner endpoints are both in S.
struct AugmentPruner {
    std::uint16_t e1 = 0;
    std::array<std::uint16_t, canon_max_order> pair_with{};

    AugmentPruner(const SmallGraph& parent, int n) {
        const int k = parent.order();
        const auto dp = path_endpoint_table(parent);
        std::array<std::vector<std::pair<std::uint16_t, std::uint16_t>>,
                   canon_max_order + 1>
            by_size{};
        const std::uint32_t full = (std::uint32_t{1} << k) - 1;
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            if (dp[mask])
                by_size[std::popcount(mask)].push_back(
                    {static_cast<std::uint16_t>(mask), dp[mask]});
        if (n - 1 <= k)
            for (const auto& [mask, ends] : by_size[n - 1]) e1 |= ends;
        for (int s1 = 1; s1 <= n - 2; ++s1) {
            const int s2 = n - 1 - s1;
            if (s1 > k || s2 < 1 || s2 > k) continue;
            for (const auto& [m1, ends1] : by_size[s1])
                for (const auto& [m2, ends2] : by_size[s2]) {
                    if (m1 & m2) continue;
                    for (std::uint32_t e = ends1; e; e &= e - 1)
                        pair_with[std::countr_zero(e)] |= ends2;
                }
        }
    }

    bool rejects(std::uint32_t s) const {
        if (s & e1) return true;
        for (std::uint32_t a = s; a; a &= a - 1)
            if (pair_with[std::countr_zero(a)] & s) return true;
        return false;
    }
};

using ClassCache = std::map<std::pair<int, int>, std::vector<SmallGraph>>;

ClassCache& class_cache() {
    static ClassCache cache;
    return cache;
}

const std::vector<SmallGraph>& classes_for(int r, int n_eff) {
    auto& cache = class_cache();
    if (auto it = cache.find({r, n_eff}); it != cache.end()) return it->second;
    std::vector<SmallGraph> level;
    if (r == 0) {
        level.push_back(SmallGraph(0));
    } else {
        const auto& parents = classes_for(r - 1, std::min(n_eff, r));
        const bool check = r >= n_eff;
        std::map<std::uint64_t, SmallGraph> seen;
        for (const SmallGraph& parent : parents) {
            const int k = parent.order();
            std::optional<AugmentPruner> pruner;
            if (check) pruner.emplace(parent, n_eff);
            const std::uint32_t top = (std::uint32_t{1} << k) - 1;
            for (std::uint32_t s = 0; s <= top; ++s) {
                if (check && pruner->rejects(s)) continue;
                // grow by one vertex adjacent to exactly s
                SmallGraph grown(k + 1);
                for (int u = 0; u < k; ++u)
                    for (std::uint64_t row = parent.neighbors(u) &
                                             ~((std::uint64_t{1} << (u + 1)) - 1);
                         row; row &= row - 1)
                        grown.add_edge(u, std::countr_zero(row));
                for (std::uint32_t b = s; b; b &= b - 1)
                    grown.add_edge(std::countr_zero(b), k);
                auto canon = canonical_form(grown);
                seen.emplace(canon.key, std::move(canon.graph));
            }
        }
        level.reserve(seen.size());
        for (auto& [key, graph] : seen) level.push_back(std::move(graph));
    }
    auto [it, inserted] = cache.emplace(std::make_pair(r, n_eff), std::move(level));
    return it->second;
}

}  // namespace

const std::vector<SmallGraph>& pn_free_classes(int r, int n) {
    if (n < 2) throw std::invalid_argument("path order must be >= 2");
    if (r < 0) throw std::invalid_argument("graph order must be >= 0");
    if (r > oracle_order_cap)
        throw capacity_error("enumeration beyond the order cap " +
                                 std::to_string(oracle_order_cap),
                             "", 0);
    return classes_for(r, std::min(n, r + 1));
}

// ---------- arrows and exact values ----------

ArrowsOutcome arrows(int r, int n, const TargetPattern& target) {
    const auto& classes = pn_free_classes(r, n);
    ArrowsOutcome out;
    const bool star_kind = target.kind == TargetPattern::Kind::star;
    for (const SmallGraph& g : classes) {
        ++out.graphs_examined;
        // complement(g) avoids K_{1,m} iff every complement degree is
        // below m, i.e. every degree of g is at least r-m.
        const bool counterexample = star_kind
                                        ? g.min_degree() >= r - target.param
                                        : !target.contained_in(complement(g));
        if (counterexample) {
            out.arrows = false;
            out.counterexample = g;
            return out;
        }
    }
    out.arrows = true;
    return out;
}

OracleResult ramsey_exact(int n, const TargetPattern& target, int r_cap) {
    if (n < 2) throw std::invalid_argument("ramsey_exact needs n >= 2");
    if (r_cap < 1 || r_cap > oracle_order_cap)
        throw std::invalid_argument("oracle cap must be between 1 and 10");
    const auto start = std::chrono::steady_clock::now();
    SmallGraph largest;
    std::uint64_t examined = 0;
    for (int r = 1; r <= r_cap; ++r) {
        ArrowsOutcome out = arrows(r, n, target);
        examined += out.graphs_examined;
        if (out.arrows) {
            OracleResult result;
            result.ramsey_value = r;
            result.counterexample = largest;
            result.graphs_examined = examined;
            result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - start);
            return result;
        }
        largest = std::move(*out.counterexample);
    }
    throw capacity_error("no Ramsey value for " + target.to_string() + " within " +
                             std::to_string(r_cap) + " vertices",
                         graph6_encode(largest), examined);
}

// ---------- results log ----------

std::string format_log_line(const OracleLogEntry& e) {
    return "n=" + std::to_string(e.n) + " target=" + e.target +
           " r=" + std::to_string(e.ramsey_value) +
           " counterexample=" + e.counterexample_g6 +
           " examined=" + std::to_string(e.graphs_examined) +
           " elapsed_ms=" + std::to_string(e.elapsed_ms);
}

namespace {

bool split_field(std::string_view token, std::string_view key, std::string_view& value) {
    if (token.size() <= key.size() + 1) return false;
    if (token.substr(0, key.size()) != key || token[key.size()] != '=') return false;
    value = token.substr(key.size() + 1);
    return true;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(text.data(), end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

}  // namespace

std::optional<OracleLogEntry> parse_log_line(std::string_view line) {
    std::array<std::string_view, 6> tokens;
    std::size_t count = 0;
    while (!line.empty()) {
        const auto space = line.find(' ');
        const auto token = line.substr(0, space);
        if (!token.empty()) {
            if (count == tokens.size()) return std::nullopt;
            tokens[count++] = token;
        }
        if (space == std::string_view::npos) break;
        line.remove_prefix(space + 1);
    }
    if (count != tokens.size()) return std::nullopt;
    OracleLogEntry e;
    std::string_view value;
    if (!split_field(tokens[0], "n", value) || !parse_number(value, e.n)) return std::nullopt;
    if (!split_field(tokens[1], "target", value)) return std::nullopt;
    e.target = std::string(value);
    if (!split_field(tokens[2], "r", value) || !parse_number(value, e.ramsey_value))
        return std::nullopt;
    if (!split_field(tokens[3], "counterexample", value)) return std::nullopt;
    e.counterexample_g6 = std::string(value);
    if (!split_field(tokens[4], "examined", value) || !parse_number(value, e.graphs_examined))
        return std::nullopt;
    if (!split_field(tokens[5], "elapsed_ms", value) || !parse_number(value, e.elapsed_ms))
        return std::nullopt;
    return e;
}

}  // namespace ramsey
