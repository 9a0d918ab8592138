#pragma once

#include <cstdint>
#include <utility>

#include "nichrom/graph.hpp"
#include "nichrom/palette.hpp"

namespace nichrom {

struct SolveResult {
    int value = 0;            // distinct colours in the witness
    Coloring witness;
    std::uint64_t nodes = 0;  // search nodes expanded
    bool complete = false;    // value proven to equal t_i(G)
};

/// Largest order the exhaustive oracle accepts (Bell(11) = 678570 partitions).
inline constexpr int kOracleMaxOrder = 11;

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Exhaustive t_i(G): enumerates every set partition of V(G) as a
/// restricted-growth string and keeps the first (lexicographically) one with
/// the most blocks that is a valid N_i coloring. Graphs need not be connected.
SolveResult oracle_ti(const Graph& g, int i);

struct SolveOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// 1 runs the deterministic sequential search. Larger values split the
    /// top of the tree across worker threads; the value is unchanged but the
    /// witness may be any optimum.
    unsigned threads = 1;
};

/// Depth-first branch and bound over restricted-growth colourings.
SolveResult solve_ti(const Graph& g, int i, const SolveOptions& options = {});

struct CoverResult {
    int size = 0;
    VertexSet witness;
};

/// Minimum connected vertex cover; the witness is the lexicographically
/// smallest optimum. Needs a connected graph with n >= 2.
CoverResult min_connected_vertex_cover(const Graph& g);

}  // namespace nichrom
