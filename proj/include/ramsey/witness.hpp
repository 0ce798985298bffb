#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ramsey/linear_forest.hpp"
#include "ramsey/small_graph.hpp"

namespace ramsey {

struct StarTarget {
    int leaves;  // m >= 1
};

struct QuasarTarget {
    LinearForest forest;
};

using WitnessTarget = std::variant<StarTarget, QuasarTarget>;

std::string target_description(const WitnessTarget& target);

/// Verification record for a lower-bound construction: a graph on order
/// vertices certifies R >= order+1 when it avoids P_n and its complement
/// avoids the target.
struct WitnessReport {
    SmallGraph graph;
    std::string target;
    int n = 0;
    bool no_path = false;
    bool no_target_in_complement = false;
    int claimed_bound = 0;  // graph order + 1

    bool valid() const noexcept { return no_path && no_target_in_complement; }
};

/// The balanced clique partition backing star_witness: the least number of
/// parts k with k*max(r-m,1) <= r-1 <= k*(n-1), sizes differing by at most
/// one, listed descending. r is t_closed(n,m).
std::vector<int> star_witness_partition(int n, int m);

/// Disjoint clique union on t_closed(n,m)-1 vertices with no P_n whose
/// complement has no K_{1,m}.
SmallGraph star_witness(int n, int m);

/// The three lower-bound graphs for the mid-range quasar case
/// (n+1 <= m <= 2n-1): 2K_{n-1}, K_{floor(m/2)} u 2K_{ceil(m/2)-1} and
/// K_{n-1} u 2K_{(m-o(F))/2-1}, zero-size parts dropped.
std::vector<SmallGraph> quasar_witnesses(int n, const LinearForest& f);

/// Runs the path detector on G and the target detector on complement(G).
WitnessReport verify_witness(const SmallGraph& g, int n, const WitnessTarget& target);

}  // namespace ramsey
