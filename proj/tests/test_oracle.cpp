#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "ramsey/detectors.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/linear_forest.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/small_graph.hpp"
#include "ramsey/witness.hpp"

using namespace ramsey;

namespace {

SmallGraph random_graph(std::mt19937_64& rng, int order, double p) {
    SmallGraph g(order);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm) {
    SmallGraph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

// labeled-graph count per isomorphism class on r vertices: r! / |Aut|,
// recovered here by brute force over all permutations
std::uint64_t labeled_copies(const SmallGraph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::string, int> seen;
    do {
        seen.emplace(graph6_encode(relabel(g, perm)), 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return seen.size();
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(60901);
    std::vector<int> perm;
    for (int trial = 0; trial < 120; ++trial) {
        const int order = 1 + trial % 9;
        const SmallGraph g = random_graph(rng, order, 0.15 + 0.2 * (trial % 4));
        const CanonicalForm base = canonical_form(g);
        perm.resize(order);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const CanonicalForm shuffled = canonical_form(relabel(g, perm));
        CHECK(base.key == shuffled.key);
        CHECK(graph6_encode(base.graph) == graph6_encode(shuffled.graph));
        // the stored representative reproduces its own key
        CHECK(canonical_form(base.graph).key == base.key);
    }
}

TEST_CASE("canonical keys order graphs like their graph6 encodings") {
    std::mt19937_64 rng(2211);
    for (int trial = 0; trial < 60; ++trial) {
        const SmallGraph a = random_graph(rng, 7, 0.4);
        const SmallGraph b = random_graph(rng, 7, 0.4);
        const CanonicalForm ca = canonical_form(a);
        const CanonicalForm cb = canonical_form(b);
        CHECK((ca.key < cb.key) ==
              (graph6_encode(ca.graph) < graph6_encode(cb.graph)));
    }
}

TEST_CASE("path-free class counts match the catalog") {
    // no P_{r+1} on r vertices excludes nothing: all classes remain
    const std::uint64_t all_classes[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int r = 0; r <= 8; ++r)
        CHECK(pn_free_classes(r, std::max(r + 1, 2)).size() == all_classes[r]);
    // P_3-free means a matching plus isolated vertices
    for (int r = 1; r <= 10; ++r)
        CHECK(pn_free_classes(r, 3).size() ==
              static_cast<std::size_t>(r / 2 + 1));
    // filtering all classes by the detector gives the P_5-free count
    std::size_t expect = 0;
    for (const SmallGraph& g : pn_free_classes(5, 6))
        if (!contains_path(g, 5)) ++expect;
    CHECK(pn_free_classes(5, 5).size() == expect);
}

TEST_CASE("class lists are sorted, duplicate-free, and path-free") {
    for (int n = 3; n <= 6; ++n) {
        const auto& classes = pn_free_classes(6, n);
        std::uint64_t last = 0;
        bool first = true;
        for (const SmallGraph& g : classes) {
            CHECK_FALSE(contains_path(g, n));
            const CanonicalForm cf = canonical_form(g);
            CHECK(graph6_encode(cf.graph) == graph6_encode(g));
            if (!first) CHECK(last < cf.key);
            last = cf.key;
            first = false;
        }
    }
}

TEST_CASE("classes on five vertices cover every labeled path-free graph") {
    // sum over classes of r!/|Aut| must equal the labeled count
    for (int n = 3; n <= 6; ++n) {
        std::uint64_t labeled = 0;
        for (unsigned bits = 0; bits < (1u << 10); ++bits) {
            SmallGraph g(5);
            int b = 0;
            for (int u = 0; u < 5; ++u)
                for (int v = u + 1; v < 5; ++v, ++b)
                    if (bits >> b & 1) g.add_edge(u, v);
            if (!contains_path(g, n)) ++labeled;
        }
        std::uint64_t covered = 0;
        for (const SmallGraph& g : pn_free_classes(5, n)) covered += labeled_copies(g);
        CHECK(covered == labeled);
    }
}

TEST_CASE("arrows on worked star cases") {
    const ArrowsOutcome small = arrows(2, 3, TargetPattern::star(2));
    CHECK_FALSE(small.arrows);
    REQUIRE(small.counterexample.has_value());
    // the least canonical counterexample on 2 vertices is the empty graph
    CHECK(graph6_encode(*small.counterexample) == "A?");

    // on 4 vertices only 2K_2 survives: sparser graphs leave K_{1,3}
    // in the complement
    const ArrowsOutcome four = arrows(4, 3, TargetPattern::star(3));
    CHECK_FALSE(four.arrows);
    REQUIRE(four.counterexample.has_value());
    CHECK(graph6_encode(*four.counterexample) == "CK");

    const ArrowsOutcome five = arrows(5, 3, TargetPattern::star(4));
    CHECK(five.arrows);
    CHECK_FALSE(five.counterexample.has_value());
    CHECK(five.graphs_examined == 3);  // the three P_3-free classes on 5
}

TEST_CASE("counterexamples certify themselves through the witness checker") {
    const ArrowsOutcome out = arrows(6, 4, TargetPattern::star(4));
    REQUIRE_FALSE(out.arrows);
    REQUIRE(out.counterexample.has_value());
    const WitnessReport rep = verify_witness(*out.counterexample, 4, StarTarget{4});
    CHECK(rep.valid());
    CHECK(rep.claimed_bound == 7);
}

TEST_CASE("exhaustive star values match the closed formula") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 4; ++m) {
            const std::int64_t expect = t_closed(n, m);
            if (expect > 9) continue;
            const OracleResult res =
                ramsey_exact(n, TargetPattern::star(m));
            CHECK(res.ramsey_value == expect);
            CHECK(res.counterexample.order() == expect - 1);
            CHECK_FALSE(contains_path(res.counterexample, n));
            CHECK_FALSE(contains_star(complement(res.counterexample), m));
        }
}

TEST_CASE("exhaustive quasar values match the formula answers") {
    const OracleResult a = ramsey_exact(4, TargetPattern::quasar(LinearForest({3})));
    CHECK(a.ramsey_value == 7);
    const OracleResult b = ramsey_exact(3, TargetPattern::quasar(LinearForest({4})));
    CHECK(b.ramsey_value == 5);
    const OracleResult c = ramsey_exact(3, TargetPattern::quasar(LinearForest({2, 2})));
    CHECK(c.ramsey_value == 5);
    const OracleResult d = ramsey_exact(2, TargetPattern::quasar(LinearForest({3})));
    CHECK(d.ramsey_value == 4);
}

TEST_CASE("oracle pins the open mid-range case at small sizes") {
    // n=4, F=[5]: the formula reports bounds [7,8]; the search settles 7
    const OracleResult res = ramsey_exact(4, TargetPattern::quasar(LinearForest({5})));
    CHECK(res.ramsey_value == 7);
    const RamseyAnswer a = path_quasar(4, LinearForest({5}));
    REQUIRE_FALSE(a.is_exact());
    CHECK(a.lower <= res.ramsey_value);
    CHECK(res.ramsey_value <= a.upper);
    CHECK(res.ramsey_value == conjecture_value(4, LinearForest({5})));
}

TEST_CASE("cycle and wheel targets agree with their formulas") {
    const OracleResult cyc = ramsey_exact(4, TargetPattern::cycle(3));
    CHECK(cyc.ramsey_value == path_cycle(4, 3));
    const OracleResult wheel = ramsey_exact(3, TargetPattern::wheel(4));
    CHECK(wheel.ramsey_value == path_wheel(3, 4));
    const OracleResult path = ramsey_exact(4, TargetPattern::path(3), 9);
    CHECK(path.ramsey_value == 4);  // P_3 itself is the 3-vertex counterexample
}

TEST_CASE("arrows never flips back once true") {
    const TargetPattern target = TargetPattern::star(3);
    bool seen_true = false;
    for (int r = 2; r <= 8; ++r) {
        const bool now = arrows(r, 4, target).arrows;
        if (seen_true) CHECK(now);
        seen_true = seen_true || now;
    }
    CHECK(seen_true);
}

TEST_CASE("capacity errors carry the largest counterexample") {
    // R(P_4, K_{1,8}) = 10 exceeds a cap of 9 vertices
    try {
        ramsey_exact(4, TargetPattern::star(8), 9);
        FAIL("expected capacity_error");
    } catch (const capacity_error& e) {
        CHECK(e.graphs_examined > 0);
        REQUIRE_FALSE(e.largest_counterexample_g6.empty());
        const SmallGraph cex = graph6_decode(e.largest_counterexample_g6);
        CHECK(cex.order() == 9);
        CHECK(verify_witness(cex, 4, StarTarget{8}).valid());
    }
    CHECK_THROWS_AS(ramsey_exact(5, TargetPattern::star(5), oracle_order_cap + 1),
                    std::invalid_argument);
}

TEST_CASE("target pattern containment and labels") {
    CHECK(TargetPattern::star(3).contained_in(SmallGraph::star(3)));
    CHECK_FALSE(TargetPattern::star(4).contained_in(SmallGraph::star(3)));
    CHECK(TargetPattern::cycle(5).contained_in(SmallGraph::cycle(5)));
    CHECK_FALSE(TargetPattern::cycle(4).contained_in(SmallGraph::cycle(5)));
    CHECK(TargetPattern::cycle(3).contained_in(SmallGraph::complete(4)));
    CHECK(TargetPattern::wheel(5).contained_in(SmallGraph::wheel(5)));
    CHECK_FALSE(TargetPattern::wheel(5).contained_in(SmallGraph::cycle(6)));
    CHECK(TargetPattern::path(4).contained_in(SmallGraph::path(4)));
    CHECK(TargetPattern::quasar(LinearForest({2, 2}))
              .contained_in(SmallGraph::wheel(4)));
    CHECK(TargetPattern::star(4).to_string() == "star:4");
    CHECK(TargetPattern::quasar(LinearForest({3, 2})).to_string() == "quasar:3,2");
    CHECK(TargetPattern::path(6).to_string() == "path:6");
}

TEST_CASE("log lines round-trip") {
    OracleLogEntry e;
    e.n = 3;
    e.target = "star:3";
    e.ramsey_value = 5;
    e.counterexample_g6 = "CK";
    e.graphs_examined = 9;
    e.elapsed_ms = 0;
    const std::string line = format_log_line(e);
    CHECK(line == "n=3 target=star:3 r=5 counterexample=CK examined=9 elapsed_ms=0");
    const auto back = parse_log_line(line);
    REQUIRE(back.has_value());
    CHECK(back->n == e.n);
    CHECK(back->target == e.target);
    CHECK(back->ramsey_value == e.ramsey_value);
    CHECK(back->counterexample_g6 == e.counterexample_g6);
    CHECK(back->graphs_examined == e.graphs_examined);
    CHECK(back->elapsed_ms == e.elapsed_ms);

    CHECK_FALSE(parse_log_line("").has_value());
    CHECK_FALSE(parse_log_line("n=3 target=star:3").has_value());
    CHECK_FALSE(parse_log_line("n=x target=star:3 r=5 counterexample=CK examined=9 elapsed_ms=0")
                    .has_value());
    CHECK_FALSE(parse_log_line("a=3 b=s c=5 d=CK e=9 f=0").has_value());
}

}  // TEST_SUITE
