#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ramsey/formulas.hpp"

using namespace ramsey;

TEST_SUITE("formulas") {

TEST_CASE("interval sum membership") {
    CHECK(interval_sum_contains(0, 5, 7));       // empty sum
    CHECK(interval_sum_contains(6, 5, 7));       // one summand
    CHECK(interval_sum_contains(10, 5, 7));      // 5+5
    CHECK_FALSE(interval_sum_contains(8, 5, 7)); // gap between 7 and 10
    CHECK_FALSE(interval_sum_contains(4, 5, 7));
    CHECK(interval_sum_contains(9, -3, 3));      // interval clips to [1,3]
    CHECK(interval_sum_contains(1, -3, 3));
    CHECK_FALSE(interval_sum_contains(3, 4, 2)); // empty interval
    CHECK_FALSE(interval_sum_contains(-1, 1, 2));
    // every t >= 1 splits into parts from [1, e]
    for (int t = 1; t <= 30; ++t) CHECK(interval_sum_contains(t, 1, 2));
}

TEST_CASE("closed path-star values") {
    CHECK(t_closed(5, 2) == 5);
    CHECK(t_closed(5, 4) == 7);
    CHECK(t_closed(2, 7) == 8);
    CHECK(t_closed(4, 8) == 10);
    CHECK(t_closed(3, 4) == 5);
    CHECK(t_closed(3, 3) == 5);
    CHECK(t_closed(4, 2) == 4);
    CHECK(t_closed(5, 6) == 9);
    CHECK(t_closed(4, 3) == 5);
    CHECK_THROWS_AS(t_closed(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(t_closed(5, 1), std::invalid_argument);
}

TEST_CASE("minimal characterization matches worked cases") {
    CHECK(t_min_char(5, 4) == 7);
    CHECK(t_min_char(2, 7) == 8);
    CHECK(t_min_char(3, 4) == 5);
    CHECK(t_min_char(12, 40) == t_closed(12, 40));
}

TEST_CASE("recursive characterization matches worked cases") {
    CHECK(parsons_path_star(2, 9) == 10);
    CHECK(parsons_path_star(5, 2) == 5);   // plateau row
    CHECK(parsons_path_star(4, 3) == 5);   // 2m-1 row
    CHECK(parsons_path_star(5, 6) == 9);   // recursive case
    CHECK(parsons_path_star(12, 40) == t_closed(12, 40));
}

TEST_CASE("the three characterizations agree on the full grid") {
    const GridCheck grid = check_equivalence_grid(12, 40);
    CHECK(grid.agreed);
    CHECK(grid.cells == 429);
    CHECK(grid.detail.empty());
}

TEST_CASE("a perturbed evaluator is caught with the first bad cell") {
    const auto skewed = [](std::int64_t n, std::int64_t m) {
        const std::int64_t v = t_closed(n, m);
        return (n == 7 && m == 11) ? v + 1 : v;
    };
    const GridCheck grid = check_equivalence_grid(12, 40, t_closed, skewed);
    CHECK_FALSE(grid.agreed);
    CHECK(grid.first_n == 7);
    CHECK(grid.first_m == 11);
    CHECK_FALSE(grid.detail.empty());
}

TEST_CASE("closed rows: plateau then odd climb") {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const std::int64_t half = (n + 1) / 2;  // ceil(n/2)
        for (std::int64_t m = 2; m <= half; ++m) CHECK(t_closed(n, m) == n);
        for (std::int64_t m = half + 1; m <= n; ++m) CHECK(t_closed(n, m) == 2 * m - 1);
    }
}

TEST_CASE("sandwich bounds hold on the grid") {
    const GridCheck grid = check_sandwich_grid(12, 40);
    CHECK(grid.agreed);
    CHECK(grid.cells == 429);
    // and the n=2 row collapses to m+1
    for (std::int64_t m = 2; m <= 40; ++m) CHECK(t_closed(2, m) == m + 1);
}

TEST_CASE("path versus cycle formula") {
    CHECK(path_cycle(6, 3) == 11);
    CHECK(path_cycle(6, 4) == 7);
    CHECK(path_cycle(4, 7) == 8);
    CHECK(path_cycle(4, 6) == 7);
    CHECK(path_cycle(5, 5) == 9);   // n >= m, odd
    CHECK(path_cycle(2, 3) == 3);   // max{3+1-1, 3} with m > n
    CHECK_THROWS_AS(path_cycle(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(path_cycle(4, 2), std::invalid_argument);
}

TEST_CASE("path versus wheel formula") {
    CHECK(path_wheel(5, 5) == 13);
    CHECK(path_wheel(4, 8) == 10);
    CHECK(path_wheel(3, 7) == 9);
    CHECK(path_wheel(6, 4) == 11);  // small even rim: 2n-1
    CHECK(path_wheel(5, 8) == 11);  // mid even rim: m+n-2
    CHECK(path_wheel(5, 7) == 13);  // mid odd rim: 3n-2
    CHECK(path_wheel(2, 5) == t_closed(2, 5));
    CHECK_THROWS_AS(path_wheel(5, 2), std::invalid_argument);
}

TEST_CASE("parity indicator") {
    CHECK(parity(4) == 0);
    CHECK(parity(7) == 1);
    CHECK(parity(0) == 0);
}

TEST_CASE("path-quasar: exact ranges") {
    CHECK(path_quasar(5, LinearForest({3})) ==
          RamseyAnswer::exact(9, Provenance::quasar_small_forest));
    CHECK(path_quasar(3, LinearForest({4})) ==
          RamseyAnswer::exact(5, Provenance::quasar_even_forest));
    CHECK(path_quasar(4, LinearForest({8})) ==
          RamseyAnswer::exact(10, Provenance::quasar_large_forest));
    CHECK(path_quasar(4, LinearForest({2, 2, 2})) ==
          RamseyAnswer::exact(8, Provenance::quasar_even_forest));
    CHECK_THROWS_AS(path_quasar(1, LinearForest({2})), std::invalid_argument);
}

TEST_CASE("path-quasar: mid-range bounds") {
    const RamseyAnswer a = path_quasar(4, LinearForest({5}));
    CHECK_FALSE(a.is_exact());
    CHECK(a.lower == 7);
    CHECK(a.upper == 8);
    CHECK(a.source == Provenance::quasar_midrange_bounds);
    CHECK(a.to_string() == "BOUNDS [7,8] (mid-range bounds)");

    // bounds are ordered and contain the conjectured value on a sweep
    for (int n = 2; n <= 9; ++n)
        for (int m = n + 1; m <= 2 * n - 1; ++m)
            for (int odd_pair = 0; 3 + 2 * odd_pair <= m; ++odd_pair) {
                std::vector<int> orders{3};
                for (int i = 0; i < odd_pair; ++i) orders.push_back(2);
                int used = 3 + 2 * odd_pair;
                if (used < m) orders.push_back(m - used);
                const LinearForest f(orders);
                if (f.total_order() != m) continue;
                const RamseyAnswer b = path_quasar(n, f);
                if (b.is_exact()) continue;
                CHECK(b.lower <= b.upper);
                const std::int64_t c = conjecture_value(n, f);
                CHECK(b.lower <= c);
                CHECK(c <= b.upper);
            }
}

TEST_CASE("path-quasar: lower bound never increases with more odd components") {
    const int n = 10;
    const int m = 13;
    std::int64_t last = 1 << 20;
    // forests with o(F) = 1, 3, 5 on 13 vertices
    for (const auto& orders : std::vector<std::vector<int>>{
             {13}, {5, 5, 3}, {3, 3, 3, 2, 1, 1}}) {
        const LinearForest f(orders);
        REQUIRE(f.total_order() == m);
        const RamseyAnswer a = path_quasar(n, f);
        REQUIRE_FALSE(a.is_exact());
        CHECK(a.lower <= last);
        last = a.lower;
    }
}

TEST_CASE("path-quasar value never exceeds the even-rim wheel value") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 3; m <= 3 * n; ++m) {
            // W_4 has five vertices, so R(P_2, W_4) = 5 while the
            // range formula yields 4; that one degenerate cell is skipped
            if (n == 2 && m == 4) continue;
            std::vector<int> orders;
            int rest = m;
            while (rest > 3) {
                orders.push_back(2);
                rest -= 2;
            }
            orders.push_back(rest);
            const LinearForest f(orders);
            REQUIRE(f.total_order() == m);
            const RamseyAnswer a = path_quasar(n, f);
            const std::int64_t cap = path_wheel(n, m + parity(m));
            CHECK((a.is_exact() ? a.value : a.upper) <= cap);
        }
}

TEST_CASE("boundary splice: forests of order exactly 2n meet the even-forest value") {
    for (int n = 3; n <= 10; ++n) {
        const std::int64_t t = t_closed(n, 2 * n);
        CHECK(t == 3 * n - 2);
        CHECK(t == (2 * n) + n - 2);
        const RamseyAnswer a = path_quasar(n, LinearForest(std::vector<int>(n, 2)));
        CHECK(a == RamseyAnswer::exact(t, Provenance::quasar_large_forest));
    }
    // n = 2 sits outside the splice: the star-like value takes over
    CHECK(t_closed(2, 4) == 5);
}

TEST_CASE("conjectured mid-range value") {
    CHECK(conjecture_value(4, LinearForest({5})) == 7);
    CHECK(conjecture_value(4, LinearForest({3, 2})) == 7);
    CHECK(conjecture_value(5, LinearForest({2, 2, 2})) == 9);
    CHECK_THROWS_AS(conjecture_value(4, LinearForest({4})), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_value(4, LinearForest({8})), std::invalid_argument);
}

TEST_CASE("path-fan values are always exact") {
    CHECK(path_fan(5, 2) == RamseyAnswer::exact(9, Provenance::quasar_small_forest));
    CHECK(path_fan(3, 2) == RamseyAnswer::exact(5, Provenance::quasar_even_forest));
    CHECK(path_fan(2, 3) == RamseyAnswer::exact(7, Provenance::quasar_large_forest));
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= 14; ++k) CHECK(path_fan(n, k).is_exact());
    CHECK_THROWS_AS(path_fan(5, 0), std::invalid_argument);
}

TEST_CASE("answer formatting") {
    CHECK(RamseyAnswer::exact(7, Provenance::path_star_closed).to_string() ==
          "7 (path-star formula)");
    CHECK_THROWS_AS(RamseyAnswer::bounds(8, 7, Provenance::quasar_midrange_bounds),
                    std::logic_error);
}

}  // TEST_SUITE
