#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nichrom/exact.hpp"
#include "nichrom/graph.hpp"
#include "nichrom/palette.hpp"

namespace nichrom {

/// t_3 upper bound from a minimum connected vertex cover of size alpha:
/// 1+3a (a=1), 3a (a=2), 2a+2 (a>=3).
int vc_bound(int alpha);

/// n - delta + i, for 1 <= i <= delta <= n-1.
int maxdeg_bound(int n, int delta, int i);

/// Claimed t_i for a dominating vertex (delta = n-1): i+1. Needs n >= i+2.
int deg_n1_value(int n, int i);
/// Claimed t_i when delta = n-2: i+2. Needs n >= i+2.
int deg_n2_value(int n, int i);

/// Claimed diameter lower bound, piecewise in d mod 3; i >= 3.
int diam_lower(int d, int i);

/// Structure of an (i+1)-colour N_i coloring around a dominating vertex.
struct DominatingDiagnosis {
    Vertex center = -1;
    bool neighborhood_disconnected = false;
    /// Sizes of the colour classes of N(center), ascending by colour.
    std::vector<int> class_sizes;
    int degree_limit = 0;  // n - 1 - min class size
    std::vector<Vertex> violators;  // neighbours whose degree exceeds the limit
    bool holds() const { return neighborhood_disconnected || violators.empty(); }
};

DominatingDiagnosis dominating_structure_check(const Graph& g, const Coloring& f, int i);

enum class BoundKind { Upper, Lower, ExactClaim };

std::string to_string(BoundKind k);

struct BoundEntry {
    std::string name;
    BoundKind kind;
    int value = 0;
    bool applicable = false;
    /// Proved by direct counting; violations are bugs, not findings.
    bool sound = false;
    std::string anchor;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    const BoundEntry* find(const std::string& name) const;
};

/// Largest order for which the connected vertex cover is computed exactly.
inline constexpr int kCoverMaxOrder = 12;

/// Every bound and claimed value applicable to a connected g, in a fixed
/// order. Pure and deterministic.
BoundReport report(const Graph& g, int i);

struct Discrepancy {
    std::string claim;
    std::string graph;
    int n = 0;
    int i = 0;
    int claimed = 0;
    int oracle = 0;
    std::string direction;  // claimed-equality-fails | claimed-lower-bound-fails

    bool operator==(const Discrepancy&) const = default;
};

enum class AuditStatus { Conclusive, Inconclusive };

struct AuditResult {
    AuditStatus status = AuditStatus::Conclusive;
    int ground_truth = 0;
    bool used_oracle = false;
    std::vector<Discrepancy> discrepancies;
};

struct AuditOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    unsigned threads = 1;
    /// Random subsets S drawn for the neighbourhood-colour bound check.
    int psi_samples = 32;
    std::uint64_t seed = 1;
};

/// Compares every claim in report(g, i) with ground truth (oracle when
/// n <= kOracleMaxOrder, otherwise a complete branch-and-bound solve).
/// Throws SoundnessViolation when a sound bound fails.
AuditResult audit(const Graph& g, int i, const std::string& name, const AuditOptions& options = {});

}  // namespace nichrom
