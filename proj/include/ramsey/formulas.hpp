#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ramsey/linear_forest.hpp"

namespace ramsey {

/// Where a computed Ramsey value (or bound pair) comes from.
enum class Provenance {
    path_star_closed,        // explicit path-star formula
    parsons_recursion,       // path-star recursion, used as a cross-check
    quasar_small_forest,     // forest order m with 2 <= m <= n
    quasar_large_forest,     // m >= 2n, star-like regime
    quasar_even_forest,      // n+1 <= m <= 2n-1 with every component even
    quasar_midrange_bounds,  // n+1 <= m <= 2n-1 with an odd component
    quasar_midrange_conjecture,
    path_cycle_closed,
    path_wheel_closed,
};

std::string_view provenance_label(Provenance p) noexcept;

/// Either an exact Ramsey value or a lower/upper bound pair.
/// Exact answers keep lower == upper == value.
struct RamseyAnswer {
    enum class Kind { exact, bounds };

    Kind kind = Kind::exact;
    std::int64_t value = 0;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    Provenance source = Provenance::path_star_closed;

    static RamseyAnswer exact(std::int64_t v, Provenance src);
    static RamseyAnswer bounds(std::int64_t lo, std::int64_t hi, Provenance src);

    bool is_exact() const noexcept { return kind == Kind::exact; }
    bool operator==(const RamseyAnswer&) const = default;
    std::string to_string() const;
};

/// True iff t lies in the additive closure of the integer interval
/// [max(s,1), e]: t == 0 or some k >= 1 has k*max(s,1) <= t <= k*e.
bool interval_sum_contains(std::int64_t t, std::int64_t s, std::int64_t e) noexcept;

/// Path-star number R(P_n, K_{1,m}) by the closed two-case formula.
std::int64_t t_closed(std::int64_t n, std::int64_t m);

/// Same value characterized as the least t dodging the interval-sum
/// language: smallest t >= 1 outside the closure of [t-m+1, n-1].
std::int64_t t_min_char(std::int64_t n, std::int64_t m);

/// Same value again via the classical path-star recursion.
std::int64_t parsons_path_star(std::int64_t n, std::int64_t m);

/// Production entry point for R(P_n, K_{1,m}); uses t_closed.
std::int64_t path_star(std::int64_t n, std::int64_t m);

/// R(P_n, C_m) for n >= 2, m >= 3.
std::int64_t path_cycle(std::int64_t n, std::int64_t m);

/// R(P_n, W_m) for n >= 2, m >= 3, via the path-cycle and path-star values.
std::int64_t path_wheel(std::int64_t n, std::int64_t m);

/// R(P_n, K_1 v F) for a linear forest F: exact outside the middle range
/// n+1 <= m <= 2n-1, exact inside it when every component of F is even,
/// and a bound pair otherwise.
RamseyAnswer path_quasar(std::int64_t n, const LinearForest& f);

/// Conjectured exact value for the middle range: max of the general
/// lower bounds. Matches path_quasar wherever that is exact.
std::int64_t conjecture_value(std::int64_t n, const LinearForest& f);

/// R(P_n, K_1 v kK_2), the path-fan special case (k >= 1).
RamseyAnswer path_fan(std::int64_t n, std::int64_t k);

/// Parity indicator pa(m): 1 for odd m, 0 for even m, so that
/// m + parity(m) is always even.
int parity(std::int64_t m) noexcept;

/// Grid check used by selfcheck and as a property-test harness: compare
/// three path-star evaluators over 2 <= n <= n_max, 2 <= m <= m_max.
struct GridCheck {
    std::uint64_t cells = 0;
    bool agreed = true;
    std::int64_t first_n = 0, first_m = 0;  // first disagreement, if any
    std::string detail;
};

using PathStarFn = std::function<std::int64_t(std::int64_t, std::int64_t)>;

GridCheck check_equivalence_grid(std::int64_t n_max, std::int64_t m_max,
                                 const PathStarFn& a = t_closed,
                                 const PathStarFn& b = t_min_char,
                                 const PathStarFn& c = parsons_path_star);

/// Sandwich invariant m + floor(n/2) <= R(P_n, K_{1,m}) <= m + n - 1
/// over the same grid.
GridCheck check_sandwich_grid(std::int64_t n_max, std::int64_t m_max,
                              const PathStarFn& fn = t_closed);

}  // namespace ramsey
