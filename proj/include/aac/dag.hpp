#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aac/chain.hpp"

namespace aac {

struct DagVertex {
    std::string code;
    std::uint64_t size = 0;
    bool building_block = false;
};

// The pathway DAG of a chain: one vertex per referenced building block
// (deduplicated by code), one per step; each step receives one edge from
// each of its two parents (two parallel edges when both parents are the
// same vertex), so every step vertex has indegree exactly 2 and every
// building-block vertex indegree 0.
struct PathwayDag {
    std::vector<DagVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // parent index -> child index
    int target = -1;                         // vertex of the chain's last step
};

// Builds the DAG; the chain is assumed to verify.
PathwayDag to_dag(const AssemblyChain& chain);

// Number of vertices with positive indegree. For a duplicate-free chain
// this equals the chain length; minimized over optimal chains it equals
// the assembly index.
int e_plus(const PathwayDag& dag);

// Graphviz rendering, vertices labeled by code (building blocks boxed).
std::string to_dot(const PathwayDag& dag);

}  // namespace aac
