#include "burn/cli.hpp"

#include "burn/burning.hpp"
#include "burn/decomposition.hpp"
#include "burn/dense.hpp"
#include "burn/errors.hpp"
#include "burn/generators.hpp"
#include "burn/io.hpp"
#include "burn/isqrt.hpp"
#include "burn/pathlen.hpp"
#include "burn/treelen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

namespace burn::cli {

namespace {

constexpr const char* kFooter =
    "Exit codes: 0 success, 1 schedule fails verification, 2 input error "
    "(unreadable or malformed files, bad arguments), 3 precondition violation "
    "(disconnected graph, missing or unsuitable decomposition).";

struct BurnArgs {
    std::string algorithm;
    std::string graph;
    std::string decomp;
    bool trace = false;
    bool json = false;
    bool timing = false;
    bool binary_search = false;
    std::size_t root_bag = 1;
    std::optional<Round> budget;
};

struct GenArgs {
    std::string family;
    std::vector<std::uint64_t> params;
    std::uint64_t seed = 0;
    std::string out;
};

struct VerifyArgs {
    std::string graph;
    std::string schedule;
    Round rounds = 0;
    bool trace = false;
};

struct BoundsArgs {
    std::string graph;
    std::string decomp;
    bool json = false;
};

std::vector<std::string> burn_round_lines(const Graph& g, const BurningSchedule& s) {
    const auto report = simulate(g, s);
    std::vector<std::string> lines;
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto& r = report.burn_round[v];
        lines.push_back("vertex " + std::to_string(v) + " round " +
                        (r ? std::to_string(*r) : std::string("never")));
    }
    return lines;
}

Decomposition require_decomposition(const BurnArgs& a, const char* what) {
    if (a.decomp.empty()) {
        throw PreconditionError(std::string(a.algorithm) + " requires " + what + " (--decomp)");
    }
    return io::load_decomposition(a.decomp);
}

int run_burn(const BurnArgs& a, std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    const auto g = io::load_graph(a.graph);
    if (g.size() == 0) throw PreconditionError("graph has no vertices");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    const auto m = metrics(g);

    io::RunReport report;
    report.algorithm = a.algorithm;
    report.vertices = g.size();
    report.edges = g.edge_count();
    report.lower = lower_bound_diameter(m.diameter);

    auto as_int = [](auto v) { return io::DetailValue{static_cast<std::int64_t>(v)}; };

    if (a.algorithm == "dense") {
        const auto plan = burn_dense(g);
        report.schedule = plan.schedule;
        report.bound = plan.bound;
        report.details = {{"min_degree", as_int(m.min_degree)},
                          {"radius", as_int(m.radius)},
                          {"diameter", as_int(m.diameter)},
                          {"radius_shortcut", plan.used_radius_shortcut},
                          {"separation_radius", as_int(plan.r)},
                          {"separated_set_size", as_int(plan.activator_set.size())}};
    } else if (a.algorithm == "pathlen") {
        const auto t = require_decomposition(a, "a path decomposition");
        if (t.kind() != DecompositionKind::Path) {
            throw PreconditionError("pathlen requires a path decomposition; the given tree branches");
        }
        const auto res = burn_pathlen(g, t);
        report.schedule = res.schedule;
        report.bound = res.certified_bound;
        const char* mode = res.mode == PathlenResult::Mode::Spine       ? "spine"
                           : res.mode == PathlenResult::Mode::SingleBag ? "single_bag"
                                                                        : "exact_fallback";
        report.details = {{"mode", std::string(mode)},
                          {"path_length", as_int(res.path_length)},
                          {"diameter", as_int(res.diameter)}};
        if (res.spine) {
            report.details.emplace_back("spine_vertices", as_int(res.spine->spine.size()));
            report.details.emplace_back("x", as_int(res.spine->x));
            report.details.emplace_back("y", as_int(res.spine->y));
        }
    } else if (a.algorithm == "treelen") {
        const auto t = require_decomposition(a, "a tree decomposition");
        if (a.root_bag < 1 || a.root_bag > t.size()) throw InputError("--root names a missing bag");
        const auto res = search_g_star(g, t, a.binary_search ? GuessSearch::Binary : GuessSearch::Linear,
                                       GuessOptions{a.root_bag - 1});
        report.schedule = res.schedule;
        report.bound = res.upper;
        report.lower = res.lower;
        report.details = {{"g_star", as_int(res.g_star)},
                          {"tree_length", as_int(res.tree_length)},
                          {"upper", as_int(res.upper)},
                          {"ratio_bound", res.ratio_bound},
                          {"proven_lower", as_int(res.proven_lower)},
                          {"search", std::string(a.binary_search ? "binary" : "linear")},
                          {"root_bag", as_int(res.outcome.root + 1)},
                          {"origin", as_int(res.outcome.origin)}};
        if (a.trace) {
            std::istringstream lines(format_trace(res.outcome));
            for (std::string line; std::getline(lines, line);) report.trace.push_back(line);
        }
    } else {
        const auto res = exact_burning_number(g, a.budget);
        if (res.status == ExactStatus::BudgetExceeded) {
            throw PreconditionError("no schedule within the round budget of " +
                                    std::to_string(*a.budget));
        }
        report.schedule = res.schedule;
        report.bound = res.rounds;
        report.lower = res.rounds;
        report.details = {{"rounds", as_int(res.rounds)}};
    }

    report.completion = simulate(g, report.schedule).completion_round;
    if (a.trace && a.algorithm != "treelen") report.trace = burn_round_lines(g, report.schedule);
    if (a.timing) {
        report.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    out << (a.json ? io::to_json(report) + "\n" : io::to_text(report));
    return kOk;
}

std::uint64_t param(const GenArgs& a, std::size_t i, const char* name) {
    if (i >= a.params.size()) {
        throw InputError("family '" + a.family + "' needs parameter <" + name + ">");
    }
    return a.params[i];
}

int run_gen(const GenArgs& a, std::ostream& out) {
    auto expect = [&](std::size_t count) {
        if (a.params.size() != count) {
            throw InputError("family '" + a.family + "' takes " + std::to_string(count) +
                             " parameter(s), got " + std::to_string(a.params.size()));
        }
    };
    GeneratedInstance inst;
    if (a.family == "path") {
        expect(1);
        inst = gen_path(param(a, 0, "n"));
    } else if (a.family == "cycle") {
        expect(1);
        inst = gen_cycle(param(a, 0, "n"));
    } else if (a.family == "star") {
        expect(1);
        inst = gen_star(param(a, 0, "leaves"));
    } else if (a.family == "spider") {
        expect(2);
        inst = gen_spider(param(a, 0, "legs"), param(a, 1, "leg_length"));
    } else if (a.family == "grid") {
        expect(2);
        inst = gen_grid(param(a, 0, "rows"), param(a, 1, "cols"));
    } else if (a.family == "mindeg") {
        expect(2);
        inst = gen_random_min_degree(param(a, 0, "n"), param(a, 1, "delta"), a.seed);
    } else if (a.family == "interval") {
        expect(2);
        inst = gen_interval(param(a, 0, "n"), param(a, 1, "max_coord"), a.seed);
    } else if (a.family == "ktree") {
        expect(2);
        inst = gen_ktree_chordal(param(a, 0, "n"), param(a, 1, "k"), a.seed);
    } else {
        throw InputError("unknown family '" + a.family + "'");
    }

    io::save_graph(a.out + ".burn", inst.graph);
    out << "family: " << to_string(inst.family) << '\n';
    out << "graph: " << a.out << ".burn (n=" << inst.graph.size()
        << ", m=" << inst.graph.edge_count() << ")\n";
    if (inst.decomposition) {
        io::save_decomposition(a.out + ".tdec", *inst.decomposition);
        out << "decomposition: " << a.out << ".tdec (bags=" << inst.decomposition->size()
            << ", length=" << *inst.decomposition_length << ", kind="
            << (inst.decomposition->kind() == DecompositionKind::Path ? "path" : "tree") << ")\n";
    }
    out << "min_degree: " << inst.min_degree << '\n';
    out << "diameter: " << inst.diameter << '\n';
    return kOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    const auto g = io::load_graph(a.graph);
    const auto s = io::parse_schedule(a.schedule);
    const auto report = simulate(g, s);
    const bool ok = verify(g, s, a.rounds);
    if (a.trace) {
        for (const auto& line : burn_round_lines(g, s)) out << line << '\n';
    }
    out << (ok ? "ok" : "fail") << ": schedule of length " << s.size();
    if (report.complete) out << " completes in round " << report.completion_round;
    else out << " never burns every vertex";
    out << " (limit " << a.rounds << ")\n";
    return ok ? kOk : kVerifyFailed;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
    const auto g = io::load_graph(a.graph);
    if (g.size() == 0) throw PreconditionError("graph has no vertices");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    const auto m = metrics(g);

    nlohmann::ordered_json j;
    j["n"] = g.size();
    j["m"] = g.edge_count();
    j["diameter"] = m.diameter;
    j["min_degree"] = m.min_degree;
    j["lower"] = lower_bound_diameter(m.diameter);
    j["dense_bound"] = dense_bound(g.size(), m.min_degree);
    if (!a.decomp.empty()) {
        const auto t = io::load_decomposition(a.decomp);
        if (auto v = validate(g, t)) throw PreconditionError("invalid decomposition: " + v->message);
        const auto len = length_of(g, t).length;
        const bool path = t.kind() == DecompositionKind::Path;
        j["decomposition_kind"] = path ? "path" : "tree";
        j["decomposition_length"] = len;
        if (path && m.diameter >= 2) {
            j["pathlen_bound"] = ceil_sqrt(m.diameter - 1) + len;
        }
    }

    if (a.json) {
        out << j.dump() << '\n';
    } else {
        for (const auto& [key, value] : j.items()) {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph burning schedules with certified bounds", "graphburn"};
    app.footer(kFooter);
    app.require_subcommand(1);

    BurnArgs burn_args;
    auto* burn = app.add_subcommand("burn", "Compute and simulate a burning schedule");
    burn->add_option("algorithm", burn_args.algorithm, "dense | pathlen | treelen | exact")
        ->required()
        ->check(CLI::IsMember({"dense", "pathlen", "treelen", "exact"}));
    burn->add_option("--graph", burn_args.graph, "Graph file")->required();
    burn->add_option("--decomp", burn_args.decomp, "Decomposition file (pathlen, treelen)");
    burn->add_flag("--trace", burn_args.trace, "Print per-vertex burn rounds or guess iterations");
    burn->add_flag("--json", burn_args.json, "Single-line JSON report");
    burn->add_flag("--timing", burn_args.timing, "Include wall time (breaks byte-identical output)");
    burn->add_flag("--binary-search", burn_args.binary_search, "treelen: binary search for g*");
    burn->add_option("--root", burn_args.root_bag, "treelen: 1-based root bag")->capture_default_str();
    burn->add_option("--budget", burn_args.budget, "exact: give up beyond this many rounds");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate an instance (graph + decomposition)");
    gen->add_option("family", gen_args.family,
                    "path n | cycle n | star leaves | spider legs len | grid rows cols | "
                    "mindeg n delta | interval n max_coord | ktree n k")
        ->required();
    gen->add_option("params", gen_args.params, "Family parameters");
    gen->add_option("--seed", gen_args.seed, "RNG seed")->capture_default_str();
    gen->add_option("--out", gen_args.out, "Output prefix")->required();

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Check that a schedule burns the graph in k rounds");
    ver->add_option("--graph", verify_args.graph, "Graph file")->required();
    ver->add_option("--schedule", verify_args.schedule, "Whitespace-separated activators")->required();
    ver->add_option("--rounds", verify_args.rounds, "Round limit k")->required();
    ver->add_flag("--trace", verify_args.trace, "Print per-vertex burn rounds");

    BoundsArgs bounds_args;
    auto* bnd = app.add_subcommand("bounds", "Print lower and upper bounds on the burning number");
    bnd->add_option("--graph", bounds_args.graph, "Graph file")->required();
    bnd->add_option("--decomp", bounds_args.decomp, "Decomposition file");
    bnd->add_flag("--json", bounds_args.json, "Single-line JSON");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // help requests carry exit code 0
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*burn) return run_burn(burn_args, out);
        if (*gen) return run_gen(gen_args, out);
        if (*ver) return run_verify(verify_args, out);
        return run_bounds(bounds_args, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return kPreconditionError;
    }
}

} // namespace burn::cli
