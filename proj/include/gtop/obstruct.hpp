#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtop/fundamental.hpp"
#include "gtop/graph.hpp"

namespace gtop {

inline constexpr long long kDefaultHomNodes = 100'000'000;

struct HomSearch {
    std::optional<GraphMap> map;  // lexicographically least assignment
    bool complete = true;         // false when the node budget ran out
    long long nodes = 0;
    bool none() const { return complete && !map; }
};

// Backtracking in vertex order with arc consistency after every assignment.
// pins fixes some vertices in advance (vertex -> value).
HomSearch find_hom(const Graph& g, const Graph& h, long long max_nodes = kDefaultHomNodes,
                   const std::vector<std::pair<int, int>>& pins = {});
HomSearch find_hom_serial(const Graph& g, const Graph& h, long long max_nodes = kDefaultHomNodes,
                          const std::vector<std::pair<int, int>>& pins = {});

// Every graph map g -> h in lexicographic order. Throws BudgetExceeded past max_maps.
std::vector<std::vector<int>> enumerate_homs(const Graph& g, const Graph& h, long long max_maps = 1'000'000,
                                             const std::vector<std::pair<int, int>>& pins = {});

struct ChromaticResult {
    std::optional<int> value;  // absent: above max_k, or g has a loop
    bool complete = true;
};
ChromaticResult chromatic_number(const Graph& g, int max_k, long long max_nodes = kDefaultHomNodes);

// shortest odd closed walk; absent for bipartite graphs
std::optional<int> odd_girth(const Graph& g);

enum class Obstruction { obstructed, not_obstructed, inconclusive };
const char* to_string(Obstruction o);

enum class HomCheck { exists, none, not_run, budget };
const char* to_string(HomCheck h);

struct CycleReport {
    Obstruction verdict = Obstruction::inconclusive;
    int n = 0, r = 0;
    GroupIdentity group;
    std::string reason;
    // certificate: an odd loop, a power, and the length of a walk in the class of that power
    std::optional<Walk> odd_loop;
    int power = 0;
    int power_length = 0;
    HomCheck hom = HomCheck::not_run;
    bool consistent = true;  // false only if obstructed while a map was found
};

// Stable-length obstruction for maps to C_n.
CycleReport cycle_obstruction_report(const BasedGraph& g, int n, int r, int max_power = 3,
                                     long long hom_nodes = 10'000'000);

struct H1Report {
    Obstruction verdict = Obstruction::inconclusive;
    int n = 0, r = 0;
    AbelianInvariants h1;
    std::string reason;
    HomCheck hom = HomCheck::not_run;
    bool consistent = true;
};

// No Z summand in H_1(N_r(G)) rules out maps to C_n when 2r < n and chi(G) >= 3.
H1Report h1_obstruction_report(const Graph& g, int n, int r, long long hom_nodes = 10'000'000);

struct TorsionReport {
    Obstruction verdict = Obstruction::inconclusive;
    int r = 2;
    GroupIdentity source, target;
    std::optional<long long> odd_order;       // least order of an odd element in the source
    std::vector<long long> target_odd_orders;  // orders of odd elements in the target
    std::string reason;
    HomCheck hom = HomCheck::not_run;
    bool consistent = true;
};

// A map sends an odd element of order k to an odd element of order dividing k.
TorsionReport torsion_obstruction_report(const BasedGraph& g, const BasedGraph& h, int r = 2,
                                         long long hom_nodes = 10'000'000);

}  // namespace gtop
