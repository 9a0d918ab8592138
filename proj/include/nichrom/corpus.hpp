#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nichrom/graph.hpp"

namespace nichrom {

/// Seedable generator with platform-independent output: std::mt19937_64
/// (its output sequence is fixed by the standard) plus our own bounded
/// draws, since the standard distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound), bound >= 1; rejection sampling.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

private:
    std::mt19937_64 engine_;
};

enum class Family {
    VcExtremal,
    MaxdegExtremal,
    SeqJoinComplete,
    Star,
    DoubleStar,
    Path,
    Cycle,
    Complete,
    RandomTree,
    RandomCactus,
    RandomConnected,
};

struct FamilySpec {
    Family family;
    std::vector<int> params;
};

/// "name" or "name:p1,p2,..." e.g. "seq_join_complete:1,3,3,3,1".
FamilySpec parse_family(const std::string& text);
std::string family_name(Family f);
/// Parameter layout per family, for help text.
std::string family_usage();

/// Builds the family member. Random families take their seed separately.
Graph generate(const FamilySpec& spec, std::uint64_t seed = 0);

/// Caterpillar on a centre path w_1..w_alpha whose minimum connected vertex
/// cover is the centre path. alpha <= 4 reproduces the fixed examples; larger
/// alpha gives w_1 three leaves and every later centre two.
Graph gen_vc_extremal(int alpha);

/// Hub v with pendants u_1..u_k and a cycle u_k, w_1, ..., w_{n-k-1}.
/// Needs n-k-1 >= 2 so the cycle is simple.
Graph gen_maxdeg_extremal(int n, int k);

Graph gen_seq_join_complete(const std::vector<int>& sizes);

/// Two adjacent centres with a and b pendant leaves.
Graph double_star(int a, int b);

/// Decodes a uniformly random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);
/// Random tree plus chords whose tree paths are pairwise edge-disjoint;
/// always at least one cycle.
Graph random_cactus(int n, std::uint64_t seed);
/// Random tree plus `extra_edges` distinct non-tree edges.
Graph random_connected(int n, int extra_edges, std::uint64_t seed);

/// Decodes a Pruefer sequence over 0..n-1 (length n-2).
Graph tree_from_pruefer(int n, const std::vector<int>& sequence);

struct CorpusEntry {
    std::string name;
    Graph graph;
};

/// Deterministic mixed corpus of connected graphs of order lo..hi: named
/// families plus `per_order` random connected graphs of each order.
std::vector<CorpusEntry> standard_corpus(int lo, int hi, int per_order, std::uint64_t seed);

}  // namespace nichrom
