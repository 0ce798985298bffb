#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/linear_forest.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

/// Hard ceiling on exhaustive-search order.
inline constexpr int oracle_order_cap = 10;

/// Raised when a search would exceed the cap; carries the best (largest)
/// counterexample seen so the caller still learns a lower bound.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, std::string largest_counterexample_g6,
                   std::uint64_t graphs_examined)
        : std::runtime_error(what),
          largest_counterexample_g6(std::move(largest_counterexample_g6)),
          graphs_examined(graphs_examined) {}

    std::string largest_counterexample_g6;
    std::uint64_t graphs_examined = 0;
};

/// What the complement must avoid for a graph to be a counterexample.
struct TargetPattern {
    enum class Kind { star, quasar, cycle, wheel, path };

    Kind kind = Kind::star;
    int param = 0;                       // m, or the path order
    std::optional<LinearForest> forest;  // quasar only

    static TargetPattern star(int m);
    static TargetPattern quasar(LinearForest f);
    static TargetPattern cycle(int m);
    static TargetPattern wheel(int m);
    static TargetPattern path(int n);

    /// Exact containment of this pattern in a host graph.
    bool contained_in(const SmallGraph& host) const;

    /// Compact key used in result logs, e.g. "star:4" or "quasar:3,2".
    std::string to_string() const;
};

/// Canonical representative and its packed adjacency key. Keys compare
/// like the canonical graph6 bodies: for a fixed order, key order is
/// lexicographic order of the encodings.
struct CanonicalForm {
    std::uint64_t key = 0;
    SmallGraph graph;
};

CanonicalForm canonical_form(const SmallGraph& g);  // order <= 11

/// One representative per isomorphism class of graphs on r vertices with
/// no P_n, sorted by canonical key. Cached; later calls return the same
/// list. r <= oracle_order_cap.
const std::vector<SmallGraph>& pn_free_classes(int r, int n);

struct ArrowsOutcome {
    bool arrows = false;
    std::optional<SmallGraph> counterexample;  // least canonical key, when !arrows
    std::uint64_t graphs_examined = 0;
};

/// Does every graph on r vertices contain P_n or its complement contain
/// the target? Decided by scanning the P_n-free classes.
ArrowsOutcome arrows(int r, int n, const TargetPattern& target);

struct OracleResult {
    int ramsey_value = 0;
    SmallGraph counterexample;  // on ramsey_value - 1 vertices
    std::uint64_t graphs_examined = 0;
    std::chrono::microseconds elapsed{0};
};

/// Least r <= r_cap with arrows(r, n, target); throws capacity_error when
/// even r_cap vertices admit a counterexample.
OracleResult ramsey_exact(int n, const TargetPattern& target, int r_cap = 9);

/// Append-only results log plumbing: one line per completed query.
struct OracleLogEntry {
    int n = 0;
    std::string target;
    int ramsey_value = 0;
    std::string counterexample_g6;
    std::uint64_t graphs_examined = 0;
    std::int64_t elapsed_ms = 0;
};

std::string format_log_line(const OracleLogEntry& e);
std::optional<OracleLogEntry> parse_log_line(std::string_view line);

}  // namespace ramsey
