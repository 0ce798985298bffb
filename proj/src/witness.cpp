#include "ramsey/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/detectors.hpp"
#include "ramsey/formulas.hpp"

namespace ramsey {

std::string target_description(const WitnessTarget& target) {
    if (const auto* star = std::get_if<StarTarget>(&target))
        return "K_{1," + std::to_string(star->leaves) + "}";
    return "K_1 v [" + std::get<QuasarTarget>(target).forest.to_string() + "]";
}

std::vector<int> star_witness_partition(int n, int m) {
    const std::int64_t r = t_closed(n, m);
    const std::int64_t lo = std::max<std::int64_t>(r - m, 1);
    const std::int64_t hi = n - 1;
    // Least part count whose balanced sizes can reach r-1; the minimal
    // characterization guarantees r-1 is reachable from [lo, hi].
    const std::int64_t k = (r - 2 + hi) / hi;
    if (k < 1 || k * lo > r - 1)
        throw std::logic_error("no clique partition for the star witness");
    const std::int64_t q = (r - 1) / k;
    const std::int64_t rem = (r - 1) % k;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
        parts.push_back(static_cast<int>(i < rem ? q + 1 : q));
    for (int p : parts)
        if (p < lo || p > hi)
            throw std::logic_error("balanced clique partition left its interval");
    return parts;
}

SmallGraph star_witness(int n, int m) {
    return clique_union({star_witness_partition(n, m)});
}

std::vector<SmallGraph> quasar_witnesses(int n, const LinearForest& f) {
    if (n < 2) throw std::invalid_argument("quasar witnesses need n >= 2");
    const int m = f.total_order();
    if (m < n + 1 || m > 2 * n - 1)
        throw std::invalid_argument("quasar witnesses apply for n+1 <= m <= 2n-1");
    const int o = f.odd_count();
    if ((m - o) % 2 != 0)
        throw std::logic_error("forest order and odd component count disagree in parity");
    const int half_even = (m - o) / 2 - 1;
    return {
        clique_union({{n - 1, n - 1}}),
        clique_union({{m / 2, (m + 1) / 2 - 1, (m + 1) / 2 - 1}}),
        clique_union({{n - 1, half_even, half_even}}),
    };
}

WitnessReport verify_witness(const SmallGraph& g, int n, const WitnessTarget& target) {
    WitnessReport report;
    report.graph = g;
    report.target = target_description(target);
    report.n = n;
    report.no_path = !contains_path(g, n);
    const SmallGraph co = complement(g);
    if (const auto* star = std::get_if<StarTarget>(&target))
        report.no_target_in_complement = !contains_star(co, star->leaves);
    else
        report.no_target_in_complement =
            !contains_quasar(co, std::get<QuasarTarget>(target).forest);
    report.claimed_bound = g.order() + 1;
    return report;
}

}  // namespace ramsey
