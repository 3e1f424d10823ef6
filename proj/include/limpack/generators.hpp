#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

Graph gen_path(int n);
Graph gen_cycle(int n);  // n >= 3
Graph gen_complete(int n);
Graph gen_petersen();    // fixed 10 vertices, 15 edges

// Each of the C(n,2) pairs appears independently with probability p.
// Identical (n, p, seed) gives an identical graph on every platform.
Graph gen_gnp(int n, double p, uint64_t seed);

// Pairing model with full rejection of self-loops and multi-edges,
// retried up to a fixed cap. Requires n*degree even and degree < n.
Graph gen_random_regular(int n, int degree, uint64_t seed);

// Vertex ids of part j are offset by the total order of parts before it.
Graph disjoint_union(const std::vector<Graph>& parts);

enum class Family { path, cycle, complete, petersen, gnp, random_regular };

struct GenSpec {
    Family family = Family::path;
    int n = 0;
    double p = 0.0;
    int degree = 0;
    int copies = 1;  // > 1 builds a disjoint union of identical copies
    uint64_t seed = 0;
};

Family family_from_string(const std::string& s);  // accepts '-' or '_' word breaks
std::string to_string(Family f);

Graph generate(const GenSpec& spec);
std::string family_tag(const GenSpec& spec);  // "petersen", "petersen_x3", ...

}  // namespace limpack
