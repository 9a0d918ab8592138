#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "nichrom/bounds.hpp"
#include "nichrom/corpus.hpp"
#include "nichrom/errors.hpp"
#include "nichrom/exact.hpp"
#include "nichrom/io.hpp"
#include "nichrom/treecactus.hpp"

namespace nichrom::cli {

namespace {

struct Range {
    int lo = 0;
    int hi = -1;
    bool set() const { return hi >= lo; }
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range '" + text + "'");
    return r;
}

// Where a command takes its graphs from: a file, or a family (optionally
// swept over an order range and several seeds).
struct Source {
    std::string graph_file;
    std::string family;
    std::string n_range;
    std::uint64_t seed = 1;
    int count = 1;

    void attach(CLI::App* cmd, bool positional) {
        if (positional) {
            cmd->add_option("graph", graph_file, "graph file (JSON or edge list)");
        } else {
            cmd->add_option("--graph", graph_file, "graph file (JSON or edge list)");
        }
        cmd->add_option("--family", family, "family name, optionally name:p1,p2,...");
        cmd->add_option("--n", n_range, "order N or LO..HI for order-parameterised families");
        cmd->add_option("--seed", seed, "seed for random families");
        cmd->add_option("--count", count, "instances per order for random families")->check(CLI::PositiveNumber);
    }

    std::vector<CorpusEntry> load() const {
        if (!graph_file.empty()) {
            auto doc = io::read_graph_file(graph_file);
            return {{doc.name.value_or(graph_file), std::move(doc.graph)}};
        }
        if (family.empty()) throw CLI::ValidationError("input", "give a graph file or --family");
        FamilySpec base = parse_family(family);
        const bool random = base.family == Family::RandomTree || base.family == Family::RandomCactus ||
                            base.family == Family::RandomConnected;
        std::vector<CorpusEntry> out;
        auto emit = [&](const FamilySpec& spec) {
            std::ostringstream name;
            name << family_name(spec.family);
            for (std::size_t k = 0; k < spec.params.size(); ++k) name << (k ? "," : ":") << spec.params[k];
            const int reps = random ? count : 1;
            for (int k = 0; k < reps; ++k) {
                const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
                std::string label = name.str();
                if (random) label += "@" + std::to_string(s);
                out.push_back({label, generate(spec, s)});
            }
        };
        if (n_range.empty()) {
            emit(base);
        } else {
            Range r = parse_range(n_range);
            for (int n = r.lo; n <= r.hi; ++n) {
                FamilySpec spec = base;
                spec.params.insert(spec.params.begin(), n);
                emit(spec);
            }
        }
        return out;
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw io::ParseError("cannot write '" + path + "'", 0, 0);
    return f;
}

unsigned worker_count(bool sequential) {
    if (sequential) return 1;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(k) for k in [0, count) on `threads` workers. Callers write into
// slot k so output order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < count;) {
                    try {
                        fn(k);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_solve(Context& ctx, const Source& src, int i, bool use_oracle, std::uint64_t budget, bool sequential,
              const std::string& out_path) {
    auto graphs = src.load();
    int code = kOk;
    for (const auto& entry : graphs) {
        SolveResult r;
        if (use_oracle) {
            if (entry.graph.order() > kOracleMaxOrder) {
                ctx.err << "error: oracle cap exceeded, use solve_ti (n = " << entry.graph.order() << " > "
                        << kOracleMaxOrder << ")\n";
                return kUsage;
            }
            r = oracle_ti(entry.graph, i);
        } else {
            r = solve_ti(entry.graph, i, {budget, worker_count(sequential)});
        }
        if (graphs.size() > 1) ctx.out << entry.name << ": ";
        ctx.out << "t_" << i << " = " << r.value << (r.complete ? " (complete)" : " (incomplete, lower bound)")
                << "\n";
        ctx.out << "nodes: " << r.nodes << "\n";
        if (!out_path.empty()) {
            auto f = open_out(out_path);
            io::write_coloring_json(f, {i, r.witness});
        }
        if (!r.complete) code = kIncomplete;
    }
    return code;
}

int cmd_verify(Context& ctx, const std::string& graph_file, const std::string& coloring_file,
               std::optional<int> i_override) {
    auto g = io::read_graph_file(graph_file);
    auto c = io::read_coloring_file(coloring_file);
    const int i = i_override.value_or(c.i);
    auto verdict = verify(g.graph, c.coloring, i);
    ctx.out << (verdict.valid ? "VALID" : "INVALID") << " N_" << i << " coloring with "
            << color_count(c.coloring) << " colours\n";
    for (const auto& v : verdict.violations) {
        ctx.out << "vertex " << v.vertex << ": " << v.palette_size << " colours in neighbourhood\n";
    }
    return verdict.valid ? kOk : kInvalid;
}

int cmd_bounds(Context& ctx, const Source& src, int i) {
    for (const auto& entry : src.load()) {
        auto rep = report(entry.graph, i);
        ctx.out << "# " << entry.name << " (" << describe(entry.graph) << "), i = " << i << "\n";
        ctx.out << std::left << std::setw(28) << "name" << std::setw(13) << "kind" << std::setw(7) << "value"
                << std::setw(7) << "sound" << "anchor\n";
        for (const auto& e : rep.entries) {
            if (!e.applicable) continue;
            ctx.out << std::left << std::setw(28) << e.name << std::setw(13) << to_string(e.kind) << std::setw(7)
                    << e.value << std::setw(7) << (e.sound ? "yes" : "claim") << e.anchor << "\n";
        }
    }
    return kOk;
}

int cmd_audit(Context& ctx, const Source& src, const std::string& i_range, const std::string& format,
              const std::string& out_path, bool sequential, std::uint64_t budget) {
    const auto graphs = src.load();
    const Range ir = parse_range(i_range);
    struct Job {
        std::size_t graph;
        int i;
    };
    std::vector<Job> jobs;
    for (std::size_t g = 0; g < graphs.size(); ++g)
        for (int i = ir.lo; i <= ir.hi; ++i) jobs.push_back({g, i});

    std::vector<AuditResult> results(jobs.size());
    AuditOptions options;
    options.node_budget = budget;
    options.seed = src.seed;
    parallel_for(jobs.size(), worker_count(sequential), [&](std::size_t k) {
        results[k] = audit(graphs[jobs[k].graph].graph, jobs[k].i, graphs[jobs[k].graph].name, options);
    });

    std::vector<Discrepancy> rows;
    int inconclusive = 0;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        if (results[k].status == AuditStatus::Inconclusive) {
            ++inconclusive;
            ctx.err << "inconclusive: " << graphs[jobs[k].graph].name << " i=" << jobs[k].i << "\n";
        }
        rows.insert(rows.end(), results[k].discrepancies.begin(), results[k].discrepancies.end());
    }
    std::ofstream file;
    if (!out_path.empty()) file = open_out(out_path);
    std::ostream& sink = out_path.empty() ? ctx.out : file;
    if (format == "json") {
        io::write_discrepancies_json(sink, rows);
    } else {
        io::write_discrepancies_csv(sink, rows);
    }
    ctx.err << "audited " << jobs.size() << " instance(s): " << rows.size() << " discrepancy row(s), "
            << inconclusive << " inconclusive\n";
    return kOk;
}

int cmd_construct(Context& ctx, const std::string& which, const Source& src, int i, const std::string& prefix) {
    int code = kOk;
    const auto graphs = src.load();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        const auto& entry = graphs[k];
        Construction c;
        int used_i = i;
        if (which == "layered") {
            c = layered_coloring(entry.graph, i);
        } else if (which == "tree-degree-rule") {
            c = tree_inductive(entry.graph, i, TreePolicy::DegreeRule);
        } else if (which == "tree-greedy") {
            c = tree_inductive(entry.graph, i, TreePolicy::PaletteGreedy);
        } else if (which == "cactus") {
            used_i = 3;
            c = cactus_inductive(entry.graph);
        } else {
            throw CLI::ValidationError("constructor", "unknown constructor '" + which + "'");
        }
        const bool valid = verify(entry.graph, c.coloring, used_i).valid;
        ctx.out << entry.name << ": " << which << " uses " << c.count << " colours, "
                << (valid ? "VALID" : "INVALID") << " N_" << used_i << " coloring\n";
        if (!valid) code = kInvalid;
        if (!prefix.empty()) {
            const std::string base = graphs.size() > 1 ? prefix + "." + std::to_string(k) : prefix;
            auto gf = open_out(base + ".graph.json");
            io::write_graph_json(gf, {entry.name, entry.graph});
            auto cf = open_out(base + ".coloring.json");
            io::write_coloring_json(cf, {used_i, c.coloring});
            auto df = open_out(base + ".dot");
            io::write_dot(df, entry.graph, &c.coloring, entry.name);
        }
    }
    return code;
}

int cmd_gen(Context& ctx, const Source& src, const std::string& format, const std::string& out_path) {
    const auto graphs = src.load();
    std::ofstream file;
    if (!out_path.empty()) file = open_out(out_path);
    std::ostream& sink = out_path.empty() ? ctx.out : file;
    for (const auto& entry : graphs) {
        if (format == "edgelist") {
            io::write_graph_edgelist(sink, entry.graph);
        } else if (format == "dot") {
            io::write_dot(sink, entry.graph, nullptr, entry.name);
        } else {
            io::write_graph_json(sink, {entry.name, entry.graph});
        }
    }
    return kOk;
}

int cmd_bench(Context& ctx, const Source& src, const std::string& i_range, std::uint64_t budget, bool sequential) {
    const Range ir = parse_range(i_range);
    ctx.out << "graph,n,i,value,complete,nodes,millis\n";
    for (const auto& entry : src.load()) {
        for (int i = ir.lo; i <= ir.hi; ++i) {
            const auto start = std::chrono::steady_clock::now();
            auto r = solve_ti(entry.graph, i, {budget, worker_count(sequential)});
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            ctx.out << entry.name << "," << entry.graph.order() << "," << i << "," << r.value << ","
                    << (r.complete ? 1 : 0) << "," << r.nodes << "," << std::fixed << std::setprecision(3)
                    << ms.count() << "\n";
        }
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for N_i vertex colorings: t_i(G), bounds, constructions, audits", "nichrom"};
    app.require_subcommand(1);
    Context ctx{out, err};
    int code = kOk;

    int i = 3;
    std::string i_range = "3";
    std::uint64_t budget = kDefaultNodeBudget;
    bool sequential = false;
    bool use_oracle = false;
    std::string out_path, format;

    auto* solve = app.add_subcommand("solve", "compute t_i(G) exactly");
    Source solve_src;
    solve_src.attach(solve, true);
    solve->add_option("--i", i, "neighbourhood colour limit")->check(CLI::PositiveNumber);
    solve->add_flag("--oracle", use_oracle, "exhaustive enumeration (n <= 11)");
    solve->add_option("--budget", budget, "node budget for branch and bound");
    solve->add_flag("--sequential", sequential, "single-threaded deterministic search");
    solve->add_option("--out", out_path, "write the witness coloring JSON here");

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a graph");
    std::string graph_file, coloring_file;
    std::optional<int> i_override;
    verify_cmd->add_option("graph", graph_file)->required();
    verify_cmd->add_option("coloring", coloring_file)->required();
    verify_cmd->add_option("--i", i_override, "override the coloring file's i");

    auto* bounds_cmd = app.add_subcommand("bounds", "print every applicable bound and claimed value");
    Source bounds_src;
    bounds_src.attach(bounds_cmd, true);
    bounds_cmd->add_option("--i", i)->check(CLI::PositiveNumber);

    auto* audit_cmd = app.add_subcommand("audit", "compare claimed values with ground truth");
    audit_cmd->footer(std::string("CSV columns: ") + io::kDiscrepancyColumns +
                      "\n  direction is claimed-equality-fails or claimed-lower-bound-fails;"
                      " a header-only CSV means no discrepancies.\nFamilies:\n" + family_usage());
    Source audit_src;
    audit_src.attach(audit_cmd, false);
    audit_cmd->add_option("--i", i_range, "i or LO..HI");
    audit_cmd->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));
    audit_cmd->add_option("--out", out_path);
    audit_cmd->add_flag("--sequential", sequential);
    audit_cmd->add_option("--budget", budget);

    auto* construct_cmd = app.add_subcommand("construct", "run a constructive coloring and verify it");
    std::string which;
    Source construct_src;
    construct_cmd->add_option("constructor", which, "layered | tree-degree-rule | tree-greedy | cactus")->required();
    construct_src.attach(construct_cmd, false);
    construct_cmd->add_option("--i", i)->check(CLI::PositiveNumber);
    construct_cmd->add_option("--out", out_path, "prefix for .graph.json, .coloring.json, .dot");

    auto* gen_cmd = app.add_subcommand("gen", "generate a family member");
    gen_cmd->footer("Families:\n" + family_usage());
    Source gen_src;
    gen_src.attach(gen_cmd, false);
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "edgelist", "dot"}));
    gen_cmd->add_option("--out", out_path);

    auto* bench_cmd = app.add_subcommand("bench", "time the solver, CSV on stdout");
    Source bench_src;
    bench_src.attach(bench_cmd, false);
    bench_cmd->add_option("--i", i_range);
    bench_cmd->add_option("--budget", budget);
    bench_cmd->add_flag("--sequential", sequential);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
        if (solve->parsed()) code = cmd_solve(ctx, solve_src, i, use_oracle, budget, sequential, out_path);
        if (verify_cmd->parsed()) code = cmd_verify(ctx, graph_file, coloring_file, i_override);
        if (bounds_cmd->parsed()) code = cmd_bounds(ctx, bounds_src, i);
        if (audit_cmd->parsed()) code = cmd_audit(ctx, audit_src, i_range, format, out_path, sequential, budget);
        if (construct_cmd->parsed()) code = cmd_construct(ctx, which, construct_src, i, out_path);
        if (gen_cmd->parsed()) code = cmd_gen(ctx, gen_src, format, out_path);
        if (bench_cmd->parsed()) code = cmd_bench(ctx, bench_src, i_range, budget, sequential);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const SoundnessViolation& e) {
        err << "BUG: " << e.what() << "\n";
        return kUnsound;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}

}  // namespace nichrom::cli
