#include "ramsey/formulas.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramsey {

namespace {

void require_path_star_domain(std::int64_t n, std::int64_t m) {
    if (n < 2 || m < 2)
        throw std::invalid_argument("path-star numbers need n >= 2 and m >= 2");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return (a + b - 1) / b;
}

}  // namespace

std::string_view provenance_label(Provenance p) noexcept {
    switch (p) {
        case Provenance::path_star_closed: return "path-star formula";
        case Provenance::parsons_recursion: return "path-star recursion";
        case Provenance::quasar_small_forest: return "small-forest case";
        case Provenance::quasar_large_forest: return "large-forest case";
        case Provenance::quasar_even_forest: return "even-forest case";
        case Provenance::quasar_midrange_bounds: return "mid-range bounds";
        case Provenance::quasar_midrange_conjecture: return "conjectured mid-range value";
        case Provenance::path_cycle_closed: return "path-cycle formula";
        case Provenance::path_wheel_closed: return "path-wheel formula";
    }
    return "unknown";
}

RamseyAnswer RamseyAnswer::exact(std::int64_t v, Provenance src) {
    return {Kind::exact, v, v, v, src};
}

RamseyAnswer RamseyAnswer::bounds(std::int64_t lo, std::int64_t hi, Provenance src) {
    if (lo > hi) throw std::logic_error("bounds out of order");
    return {Kind::bounds, 0, lo, hi, src};
}

std::string RamseyAnswer::to_string() const {
    std::string out;
    if (is_exact())
        out = std::to_string(value);
    else
        out = "BOUNDS [" + std::to_string(lower) + "," + std::to_string(upper) + "]";
    out += " (";
    out += provenance_label(source);
    out += ")";
    return out;
}

bool interval_sum_contains(std::int64_t t, std::int64_t s, std::int64_t e) noexcept {
    if (t == 0) return true;
    if (t < 0) return false;
    const std::int64_t lo = s < 1 ? 1 : s;
    if (e < lo) return false;
    // k summands from [lo, e] reach exactly the totals in [k*lo, k*e],
    // so t is reachable iff some k has k*lo <= t <= k*e.
    return ceil_div(t, e) <= t / lo;
}

std::int64_t t_closed(std::int64_t n, std::int64_t m) {
    require_path_star_domain(n, m);
    const std::int64_t beta = ceil_div(m - 1, n - 1);
    // alpha <= gamma, i.e. (m-1)/(n-1) <= beta^2/(beta+1), compared in
    // integers to keep the boundary exact.
    if ((m - 1) * (beta + 1) <= beta * beta * (n - 1))
        return (n - 1) * beta + 1;
    return (m - 1) / beta + m;
}

std::int64_t t_min_char(std::int64_t n, std::int64_t m) {
    require_path_star_domain(n, m);
    // The interval [t-m+1, n-1] is empty once t >= m+n-1, so the scan
    // below always stops by then.
    for (std::int64_t t = 1;; ++t) {
        if (!interval_sum_contains(t, t - m + 1, n - 1)) return t;
        if (t > m + n) throw std::logic_error("interval-sum scan failed to terminate");
    }
}

namespace {

std::int64_t parsons_impl(std::int64_t n, std::int64_t m,
                          std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& memo) {
    if (n == 2) return m + 1;
    if (m <= ceil_div(n, 2)) return n;
    if (m <= n) return 2 * m - 1;
    const auto key = std::make_pair(n, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::int64_t a = parsons_impl(n - 1, m, memo);
    const std::int64_t b = parsons_impl(n, m - n + 1, memo) + n - 1;
    const std::int64_t value = a > b ? a : b;
    memo.emplace(key, value);
    return value;
}

}  // namespace

std::int64_t parsons_path_star(std::int64_t n, std::int64_t m) {
    require_path_star_domain(n, m);
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;
    return parsons_impl(n, m, memo);
}

std::int64_t path_star(std::int64_t n, std::int64_t m) {
    const std::int64_t value = t_closed(n, m);
    assert(value == t_min_char(n, m));
    assert(value == parsons_path_star(n, m));
    return value;
}

std::int64_t path_cycle(std::int64_t n, std::int64_t m) {
    if (n < 2 || m < 3)
        throw std::invalid_argument("path-cycle numbers need n >= 2 and m >= 3");
    if (n >= m)
        return m % 2 == 1 ? 2 * n - 1 : n + m / 2 - 1;
    if (m % 2 == 1)
        return std::max(m + n / 2 - 1, 2 * n - 1);
    return m + n / 2 - 1;
}

std::int64_t path_wheel(std::int64_t n, std::int64_t m) {
    if (n < 2 || m < 3)
        throw std::invalid_argument("path-wheel numbers need n >= 2 and m >= 3");
    if (m <= n + 1)
        return m % 2 == 1 ? 3 * n - 2 : 2 * n - 1;
    if (m <= 2 * n)
        return m % 2 == 1 ? 3 * n - 2 : m + n - 2;
    return t_closed(n, m);
}

int parity(std::int64_t m) noexcept {
    return m % 2 == 0 ? 0 : 1;
}

RamseyAnswer path_quasar(std::int64_t n, const LinearForest& f) {
    if (n < 2) throw std::invalid_argument("path-quasar numbers need n >= 2");
    const std::int64_t m = f.total_order();
    if (m <= n)
        return RamseyAnswer::exact(2 * n - 1, Provenance::quasar_small_forest);
    if (m >= 2 * n)
        return RamseyAnswer::exact(t_closed(n, m), Provenance::quasar_large_forest);
    if (f.odd_count() == 0)
        return RamseyAnswer::exact(m + n - 2, Provenance::quasar_even_forest);
    const std::int64_t lo = conjecture_value(n, f);
    const std::int64_t hi = m + n - 2 + parity(m);
    return RamseyAnswer::bounds(lo, hi, Provenance::quasar_midrange_bounds);
}

std::int64_t conjecture_value(std::int64_t n, const LinearForest& f) {
    if (n < 2) throw std::invalid_argument("path-quasar numbers need n >= 2");
    const std::int64_t m = f.total_order();
    if (m < n + 1 || m > 2 * n - 1)
        throw std::invalid_argument("conjectured value only applies for n+1 <= m <= 2n-1");
    std::int64_t best = 2 * n - 1;
    best = std::max(best, ceil_div(3 * m, 2) - 1);
    best = std::max(best, m + n - f.odd_count() - 2);
    return best;
}

RamseyAnswer path_fan(std::int64_t n, std::int64_t k) {
    if (n < 2 || k < 1)
        throw std::invalid_argument("path-fan numbers need n >= 2 and k >= 1");
    if (2 * k > std::numeric_limits<int>::max())
        throw std::invalid_argument("fan size out of range");
    std::vector<int> orders(static_cast<std::size_t>(k), 2);
    return path_quasar(n, LinearForest(std::move(orders)));
}

GridCheck check_equivalence_grid(std::int64_t n_max, std::int64_t m_max,
                                 const PathStarFn& a, const PathStarFn& b,
                                 const PathStarFn& c) {
    GridCheck out;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::int64_t m = 2; m <= m_max; ++m) {
            ++out.cells;
            const std::int64_t va = a(n, m);
            const std::int64_t vb = b(n, m);
            const std::int64_t vc = c(n, m);
            if (va != vb || va != vc) {
                out.agreed = false;
                out.first_n = n;
                out.first_m = m;
                out.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             ": closed=" + std::to_string(va) +
                             " minimal=" + std::to_string(vb) +
                             " recursive=" + std::to_string(vc);
                return out;
            }
        }
    }
    return out;
}

GridCheck check_sandwich_grid(std::int64_t n_max, std::int64_t m_max, const PathStarFn& fn) {
    GridCheck out;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (std::int64_t m = 2; m <= m_max; ++m) {
            ++out.cells;
            const std::int64_t v = fn(n, m);
            if (v < m + n / 2 || v > m + n - 1) {
                out.agreed = false;
                out.first_n = n;
                out.first_m = m;
                out.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             ": value " + std::to_string(v) + " outside [" +
                             std::to_string(m + n / 2) + "," + std::to_string(m + n - 1) + "]";
                return out;
            }
        }
    }
    return out;
}

}  // namespace ramsey
