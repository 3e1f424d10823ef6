#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace limpack {

// Simple undirected graph over dense 0-based vertex ids. Immutable once
// built; adjacency lists are sorted ascending and hold no duplicates or
// self-loops, so iteration order is canonical.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;
    std::vector<int> deg;
    int max_deg = 0;
    int min_deg = 0;

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// Duplicate pairs collapse to a single edge. Throws std::invalid_argument
// on self-loops or out-of-range endpoints.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// {v} together with its neighbors, sorted ascending.
std::vector<int> closed_neighborhood(const Graph& g, int v);

// Hop distance between u and v; nullopt when unreachable.
std::optional<int> bfs_distance(const Graph& g, int u, int v);

// Hop distance from source to every vertex; -1 marks unreachable.
std::vector<int> bfs_all(const Graph& g, int source);

bool is_connected(const Graph& g);  // n == 0 counts as connected
bool is_regular(const Graph& g);    // max_deg == min_deg

// Largest hop distance over all pairs; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

}  // namespace limpack
