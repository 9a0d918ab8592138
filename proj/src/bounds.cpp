#include "nichrom/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "nichrom/corpus.hpp"
#include "nichrom/errors.hpp"
#include "nichrom/treecactus.hpp"

namespace nichrom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

int vc_bound(int alpha) {
    if (alpha < 1) throw PreconditionError("vc_bound: alpha must be >= 1");
    if (alpha == 1) return 1 + 3 * alpha;
    if (alpha == 2) return 3 * alpha;
    return 2 * alpha + 2;
}

int maxdeg_bound(int n, int delta, int i) {
    if (!(1 <= i && i <= delta && delta <= n - 1)) {
        throw PreconditionError("maxdeg_bound: need 1 <= i <= delta <= n-1");
    }
    return n - delta + i;
}

int deg_n1_value(int n, int i) {
    if (n < i + 2) throw PreconditionError("deg_n1_value: inapplicable, n < i+2");
    return i + 1;
}

int deg_n2_value(int n, int i) {
    if (n < i + 2) throw PreconditionError("deg_n2_value: inapplicable, n < i+2");
    return i + 2;
}

int diam_lower(int d, int i) {
    if (i < 3) throw PreconditionError("diam_lower: need i >= 3");
    if (d < 1) throw PreconditionError("diam_lower: need d >= 1");
    const int blocks = ceil_div(d, 3);
    switch (d % 3) {
        case 1: return blocks * i - ceil_div(i - 1, 2);
        case 2: return blocks * i;
        default: return blocks * i + 1;
    }
}

DominatingDiagnosis dominating_structure_check(const Graph& g, const Coloring& f, int i) {
    const int n = g.order();
    if (n < 2 || !is_connected(g)) throw PreconditionError("dominating_structure_check: need a connected graph");
    if (!verify(g, f, i).valid) throw PreconditionError("dominating_structure_check: not a valid N_i coloring");
    if (color_count(f) != static_cast<std::size_t>(i + 1)) {
        throw PreconditionError("dominating_structure_check: coloring must use exactly i+1 colours");
    }
    DominatingDiagnosis d;
    for (Vertex v = 0; v < n && d.center < 0; ++v) {
        if (g.degree(v) == n - 1) d.center = v;
    }
    if (d.center < 0) throw PreconditionError("dominating_structure_check: no vertex of degree n-1");

    VertexSet nbhd(g.neighbors(d.center).begin(), g.neighbors(d.center).end());
    if (!induces_connected(g, nbhd)) {
        d.neighborhood_disconnected = true;
        return d;
    }
    ColorSet classes = neighborhood_palette(g, f, d.center);
    for (Color c : classes) {
        d.class_sizes.push_back(static_cast<int>(std::count_if(nbhd.begin(), nbhd.end(), [&](Vertex x) { return f[x] == c; })));
    }
    d.degree_limit = n - 1 - *std::min_element(d.class_sizes.begin(), d.class_sizes.end());
    for (Vertex x : nbhd) {
        if (g.degree(x) > d.degree_limit) d.violators.push_back(x);
    }
    return d;
}

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Upper: return "upper";
        case BoundKind::Lower: return "lower";
        case BoundKind::ExactClaim: return "exact-claim";
    }
    return "?";
}

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

BoundReport report(const Graph& g, int i) {
    const int n = g.order();
    if (i < 1) throw PreconditionError("report: i must be >= 1");
    if (n < 1 || !is_connected(g)) throw PreconditionError("report: graph must be connected");
    const int delta = max_degree(g);
    const int d = diameter(g);
    const bool tree = is_tree(g);
    const bool cactus = is_cactus(g);

    BoundReport r;
    auto add = [&](std::string name, BoundKind kind, bool applicable, bool sound, std::string anchor,
                   auto&& value_fn) {
        BoundEntry e{std::move(name), kind, 0, applicable, sound, std::move(anchor)};
        if (applicable) e.value = value_fn();
        r.entries.push_back(std::move(e));
    };

    add("order-upper", BoundKind::Upper, true, true, "t_i <= n", [&] { return n; });
    add("one-colour-lower", BoundKind::Lower, true, true, "t_i >= 1", [] { return 1; });
    add("all-distinct-exact", BoundKind::ExactClaim, i >= delta, true, "t_i = n when i >= max degree",
        [&] { return n; });
    add("max-degree-upper", BoundKind::Upper, true, true, "t_i <= n - max degree + i (clipped to n)",
        [&] { return std::min(n, n - delta + i); });
    add("connected-cover-upper", BoundKind::Upper, i == 3 && n >= 2 && n <= kCoverMaxOrder, true,
        "t_3 <= 1+3a | 3a | 2a+2 for minimum connected vertex cover size a",
        [&] { return vc_bound(min_connected_vertex_cover(g).size); });
    add("dominating-vertex", BoundKind::ExactClaim, n >= 2 && delta == n - 1 && n >= i + 2, false,
        "t_i = i+1 when max degree = n-1 and n >= i+2", [&] { return deg_n1_value(n, i); });
    add("near-dominating-vertex", BoundKind::ExactClaim, n >= 2 && delta == n - 2 && n >= i + 2, false,
        "t_i = i+2 when max degree = n-2 and n >= i+2", [&] { return deg_n2_value(n, i); });
    add("diameter-lower", BoundKind::Lower, i >= 3 && n >= i, false,
        "t_i >= piecewise(ceil(d/3), d mod 3) for n >= i >= 3", [&] { return diam_lower(std::max(d, 1), i); });

    bool sharp = false;
    if (i >= 3 && n >= i && d >= 2) {
        auto parts = recognize_clique_chain(g);
        sharp = parts.size() >= 3 &&
                std::all_of(parts.begin() + 1, parts.end() - 1, [&](int a) { return a >= i; });
    }
    add("diameter-sharpness", BoundKind::ExactClaim, sharp, false,
        "equality in the diameter bound for sequential joins of cliques with middle parts >= i",
        [&] { return diam_lower(d, i); });
    add("layered-lower", BoundKind::Lower, i >= 3, true, "colours used by the BFS-layer construction",
        [&] { return layered_coloring(g, i).count; });

    add("tree-t2-closed", BoundKind::ExactClaim, tree && n >= 2 && i == 2, false, "t_2(T) = n - l + 2",
        [&] { return tree_t2_closed(g); });
    add("tree-t3-closed", BoundKind::ExactClaim, tree && n >= 2 && i == 3, false,
        "t_3(T) = 2n - 2l + 2 - n_2", [&] { return tree_t3_closed(g); });
    add("tree-ti-closed", BoundKind::ExactClaim, tree && n >= 2 && i >= 4, false,
        "t_i(T) = 2n - 2l + 2 - (n_2 + ... + n_{i-1})", [&] { return tree_ti_closed(g, i); });
    add("tree-degree-rule-lower", BoundKind::Lower, tree && i >= 2, true,
        "colours used by leaf re-attachment, degree rule",
        [&] { return tree_inductive(g, i, TreePolicy::DegreeRule).count; });
    add("tree-palette-greedy-lower", BoundKind::Lower, tree && i >= 2, true,
        "colours used by leaf re-attachment, palette-greedy rule",
        [&] { return tree_inductive(g, i, TreePolicy::PaletteGreedy).count; });

    add("cactus-t3-closed", BoundKind::ExactClaim, cactus && !tree && n >= 3 && i == 3, false,
        "t_3 = 2n - 2l - 2r + 2 - n_2, r = cycles holding a degree-2 vertex",
        [&] { return cactus_t3_closed(g); });
    int cactus_count = 0;
    bool cactus_ok = false;
    std::string cactus_anchor = "colours used by the cactus re-attachment construction (N_3-valid)";
    if (cactus && n >= 3 && i >= 3) {
        try {
            cactus_count = cactus_inductive(g).count;
            cactus_ok = true;
        } catch (const ConstructionGap& gap) {
            cactus_anchor += "; construction gap: " + std::string(gap.what());
        }
    }
    add("cactus-inductive-lower", BoundKind::Lower, cactus_ok, true, cactus_anchor, [&] { return cactus_count; });
    return r;
}

AuditResult audit(const Graph& g, int i, const std::string& name, const AuditOptions& options) {
    const BoundReport rep = report(g, i);
    AuditResult result;
    SolveResult truth;
    if (g.order() <= kOracleMaxOrder) {
        truth = oracle_ti(g, i);
        result.used_oracle = true;
    } else {
        truth = solve_ti(g, i, {options.node_budget, options.threads});
        if (!truth.complete) {
            result.status = AuditStatus::Inconclusive;
            return result;
        }
    }
    result.ground_truth = truth.value;
    const int t = truth.value;

    auto fail = [&](const BoundEntry& e, const char* relation) {
        std::ostringstream os;
        os << "sound bound '" << e.name << "' violated on " << name << " (i=" << i << "): t_i = " << t
           << " but bound says " << relation << " " << e.value;
        throw SoundnessViolation(os.str());
    };
    for (const auto& e : rep.entries) {
        if (!e.applicable) continue;
        if (e.sound) {
            if (e.kind == BoundKind::Upper && t > e.value) fail(e, "<=");
            if (e.kind == BoundKind::Lower && t < e.value) fail(e, ">=");
            if (e.kind == BoundKind::ExactClaim && t != e.value) fail(e, "==");
            continue;
        }
        if (e.kind == BoundKind::ExactClaim && e.value != t) {
            result.discrepancies.push_back({e.name, name, g.order(), i, e.value, t, "claimed-equality-fails"});
        } else if (e.kind == BoundKind::Lower && e.value > t) {
            result.discrepancies.push_back({e.name, name, g.order(), i, e.value, t, "claimed-lower-bound-fails"});
        }
    }

    // The component-wise neighbourhood-colour bound is only sound for i >= 3.
    if (i >= 3 && g.order() >= 1) {
        Rng rng(options.seed);
        const int n = g.order();
        for (int k = 0; k < options.psi_samples; ++k) {
            VertexSet s;
            for (Vertex v = 0; v < n; ++v) {
                if (rng.below(2)) s.push_back(v);
            }
            if (s.empty()) s.push_back(static_cast<Vertex>(rng.below(n)));
            const PsiBound b = psi_bound(g, truth.witness, i, s);
            if (!b.holds) {
                std::ostringstream os;
                os << "neighbourhood-colour bound violated on " << name << " (i=" << i << "): " << b.lhs << " > "
                   << b.rhs;
                throw SoundnessViolation(os.str());
            }
        }
    }
    return result;
}

}  // namespace nichrom
