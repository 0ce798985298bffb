#include "ramsey/detectors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace ramsey {

namespace {

// Subset DP over one component, compressed to local indices: dp[mask] is
// the set of endpoints of simple paths whose vertex set is exactly mask.
int longest_path_subset_dp(const SmallGraph& g, std::uint64_t comp, int target) {
    int verts[detail::subset_dp_max_vertices];
    int k = 0;
    for (std::uint64_t m = comp; m; m &= m - 1) verts[k++] = std::countr_zero(m);
    std::uint32_t ladj[detail::subset_dp_max_vertices] = {};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[i], verts[j])) {
                ladj[i] |= std::uint32_t{1} << j;
                ladj[j] |= std::uint32_t{1} << i;
            }

    if (target <= 1) return k > 0 ? 1 : 0;
    std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
    for (int i = 0; i < k; ++i) dp[std::uint32_t{1} << i] = std::uint32_t{1} << i;
    int best = 1;
    const std::uint32_t full = (k == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t ends = dp[mask];
        if (!ends) continue;
        const int len = std::popcount(mask);
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t ext = ladj[v] & ~mask; ext; ext &= ext - 1) {
                const int w = std::countr_zero(ext);
                const std::uint32_t nm = mask | (std::uint32_t{1} << w);
                dp[nm] |= std::uint32_t{1} << w;
                if (len + 1 > best) {
                    best = len + 1;
                    if (best >= target) return best;
                }
            }
        }
    }
    return best;
}

std::uint64_t reachable_within(const SmallGraph& g, std::uint64_t from, std::uint64_t allowed) {
    std::uint64_t seen = 0;
    std::uint64_t frontier = from & allowed;
    while (frontier) {
        seen |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= g.neighbors(std::countr_zero(f));
        frontier = next & allowed & ~seen;
    }
    return seen;
}

struct PathBnb {
    const SmallGraph& g;
    std::uint64_t comp;
    int target;
    int best = 0;

    bool extend(int v, std::uint64_t visited, int len) {
        if (len > best) {
            best = len;
            if (best >= target) return true;
        }
        const std::uint64_t avail = comp & ~visited;
        std::uint64_t next = g.neighbors(v) & avail;
        if (!next) return false;
        // A path out of v stays inside what is reachable from v, which
        // caps the achievable order.
        const std::uint64_t reach = reachable_within(g, next, avail);
        if (len + std::popcount(reach) <= best) return false;
        int order[SmallGraph::max_order];
        int cnt = 0;
        for (std::uint64_t f = next; f; f &= f - 1) order[cnt++] = std::countr_zero(f);
        std::sort(order, order + cnt,
                  [&](int a, int b) { return g.degree(a) < g.degree(b); });
        for (int i = 0; i < cnt; ++i) {
            const int w = order[i];
            if (extend(w, visited | (std::uint64_t{1} << w), len + 1)) return true;
        }
        return false;
    }
};

}  // namespace

namespace detail {

int longest_path_in_component(const SmallGraph& g, std::uint64_t comp, int target) {
    const int size = std::popcount(comp);
    if (size == 0) return 0;
    if (size <= subset_dp_max_vertices)
        return longest_path_subset_dp(g, comp, std::min(target, size));
    PathBnb search{g, comp, std::min(target, size)};
    for (std::uint64_t m = comp; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (search.extend(v, std::uint64_t{1} << v, 1)) break;
    }
    return search.best;
}

}  // namespace detail

int longest_path_order(const SmallGraph& g) {
    int best = 0;
    for (std::uint64_t comp : components(g))
        best = std::max(best, detail::longest_path_in_component(g, comp, g.order()));
    return best;
}

bool contains_path(const SmallGraph& g, int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    if (n == 1) return g.order() >= 1;
    for (std::uint64_t comp : components(g)) {
        if (std::popcount(comp) < n) continue;
        if (detail::longest_path_in_component(g, comp, n) >= n) return true;
    }
    return false;
}

bool contains_star(const SmallGraph& g, int m) {
    if (m < 1) throw std::invalid_argument("star leaf count must be >= 1");
    return g.max_degree() >= m;
}

namespace {

// Places paths longest first inside an allowed mask. Equal-order paths are
// forced into increasing minimum-vertex order and each path is accepted in
// one orientation only, so permutations of identical pieces are not retried.
struct ForestSearch {
    const SmallGraph& g;
    std::vector<int> paths;   // orders >= 2, descending
    int singles = 0;          // order-1 components, consumed by counting
    std::vector<int> demand;  // demand[i] = singles + sum of paths[i..]

    bool place(std::size_t idx, std::uint64_t free, int prev_min) {
        if (idx == paths.size()) return std::popcount(free) >= singles;
        if (std::popcount(free) < demand[idx]) return false;
        std::uint64_t usable = free;
        if (idx > 0 && paths[idx] == paths[idx - 1])
            usable &= ~((std::uint64_t{2} << prev_min) - 1);
        const int len = paths[idx];
        for (std::uint64_t s = usable; s; s &= s - 1) {
            const int start = std::countr_zero(s);
            if (grow(start, std::uint64_t{1} << start, start, 1, len, usable, idx, free))
                return true;
        }
        return false;
    }

    bool grow(int last, std::uint64_t used, int start, int len, int want,
              std::uint64_t usable, std::size_t idx, std::uint64_t free) {
        if (len == want) {
            if (want >= 2 && start > last) return false;  // canonical orientation
            const int path_min = std::countr_zero(used);
            return place(idx + 1, free & ~used, path_min);
        }
        for (std::uint64_t e = g.neighbors(last) & usable & ~used; e; e &= e - 1) {
            const int w = std::countr_zero(e);
            if (grow(w, used | (std::uint64_t{1} << w), start, len + 1, want, usable, idx, free))
                return true;
        }
        return false;
    }
};

}  // namespace

namespace detail {

bool forest_embeds_in_mask(const SmallGraph& g, std::uint64_t allowed,
                           const std::vector<int>& descending_orders) {
    ForestSearch search{g, {}, 0, {}};
    int total = 0;
    for (int p : descending_orders) {
        total += p;
        if (p >= 2)
            search.paths.push_back(p);
        else
            ++search.singles;
    }
    if (std::popcount(allowed) < total) return false;
    search.demand.resize(search.paths.size());
    int acc = search.singles;
    for (std::size_t i = search.paths.size(); i-- > 0;) {
        acc += search.paths[i];
        search.demand[i] = acc;
    }
    return search.place(0, allowed, -1);
}

}  // namespace detail

bool linear_forest_embeds(const SmallGraph& g, const std::vector<int>& orders) {
    std::vector<int> sorted = orders;
    for (int p : sorted)
        if (p < 1) throw std::invalid_argument("forest component orders must be >= 1");
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return detail::forest_embeds_in_mask(g, g.vertex_mask(), sorted);
}

bool contains_quasar(const SmallGraph& g, const LinearForest& f) {
    for (int v = 0; v < g.order(); ++v) {
        const std::uint64_t nb = g.neighbors(v);
        if (std::popcount(nb) < f.total_order()) continue;
        if (detail::forest_embeds_in_mask(g, nb, f.orders())) return true;
    }
    return false;
}

}  // namespace ramsey
