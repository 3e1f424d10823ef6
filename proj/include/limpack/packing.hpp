#pragma once

#include <string>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

// A vertex set X with |N[v] ∩ X| <= k at every vertex v, stamped with the
// order of the graph it was validated against.
struct PackingSet {
    int k = 1;
    int graph_n = 0;
    std::vector<int> members;  // sorted ascending

    int size() const { return static_cast<int>(members.size()); }
};

struct PackingViolation {
    int vertex;
    int count;  // |N[vertex] ∩ X|, strictly above k
};

// Empty result means X is a valid k-limited packing. Throws
// std::invalid_argument on out-of-range or duplicate members, or k < 1.
std::vector<PackingViolation> packing_violations(const Graph& g,
                                                 const std::vector<int>& members, int k);
bool is_valid_packing(const Graph& g, const std::vector<int>& members, int k);

// Validates and stamps; throws std::invalid_argument when X is not a
// valid k-limited packing of g.
PackingSet make_packing(const Graph& g, std::vector<int> members, int k);

enum class ScanOrder { ascending_id, descending_id };

// Greedy completion of a valid packing: vertices are tried in the given
// order and added whenever validity is preserved. The result admits no
// further additions. Deterministic for a fixed order.
PackingSet extend_to_maximal(const Graph& g, const std::vector<int>& members, int k,
                             ScanOrder order = ScanOrder::ascending_id);
bool is_maximal_packing(const Graph& g, const std::vector<int>& members, int k);

enum class SolveStatus { solved, budget_exhausted };
enum class SolveMethod { enumeration, branch_and_bound, trivial_high_k };

struct ExactResult {
    SolveStatus status = SolveStatus::solved;
    SolveMethod method = SolveMethod::branch_and_bound;
    long long optimum = 0;  // exact when status == solved, otherwise best found
    PackingSet witness;
    long long nodes_explored = 0;
};

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Maximum k-limited packing size. Returns n immediately (zero search
// nodes) when k >= max_deg + 1. On budget exhaustion the result carries
// the best packing found and status budget_exhausted, never a silently
// wrong optimum.
ExactResult max_packing_exact(const Graph& g, int k, long long node_budget = kDefaultNodeBudget);

// Exhaustive subset scan, independent of the branch-and-bound path.
// Guarded to n <= 25.
ExactResult max_packing_enumerate(const Graph& g, int k);

// True iff members are pairwise at hop distance >= 3 (unreachable pairs
// count as far enough).
bool is_distance3_packing(const Graph& g, const std::vector<int>& members);

std::string to_string(SolveStatus s);
std::string to_string(SolveMethod m);

}  // namespace limpack
