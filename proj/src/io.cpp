#include "burn/io.hpp"

#include "burn/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace burn::io {

namespace {

// Splits one line into whitespace-separated tokens.
std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool skippable(const std::vector<std::string_view>& tok) {
    return tok.empty() || tok[0].front() == '#' || tok[0] == "c";
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t number(std::string_view s, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                       std::string(s) + "'");
    }
    return v;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::optional<std::pair<std::size_t, std::size_t>> header;
    std::vector<Edge> edges;
    std::map<Edge, std::size_t> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto tok = tokens(raw);
        if (skippable(tok)) continue;
        if (tok[0] == "p") {
            if (header) fail(lineno, "duplicate header");
            if (tok.size() != 4 || tok[1] != "burn") fail(lineno, "header must read 'p burn <n> <m>'");
            header = {number(tok[2], lineno, "n"), number(tok[3], lineno, "m")};
        } else if (tok[0] == "e") {
            if (!header) fail(lineno, "edge before the 'p burn' header");
            if (tok.size() != 3) fail(lineno, "edge must read 'e <u> <v>'");
            const auto u = number(tok[1], lineno, "u");
            const auto v = number(tok[2], lineno, "v");
            if (u >= header->first || v >= header->first) {
                fail(lineno, "vertex id out of range 0.." + std::to_string(header->first - 1));
            }
            if (u == v) fail(lineno, "self-loop at vertex " + std::to_string(u));
            const Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
            if (auto [it, fresh] = seen.emplace(key, lineno); !fresh) {
                fail(lineno, "duplicate edge {" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + "} (first on line " +
                                 std::to_string(it->second) + ")");
            }
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            fail(lineno, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) throw InputError("missing 'p burn <n> <m>' header");
    if (edges.size() != header->second) {
        throw InputError("header declares " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()));
    }
    return Graph::from_edges(header->first, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p burn " << g.size() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

Decomposition read_decomposition(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::map<std::uint64_t, std::vector<Vertex>> bags;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> links;
    std::vector<std::size_t> link_lines;
    std::optional<std::uint64_t> root;
    while (std::getline(in, raw)) {
        ++lineno;
        auto tok = tokens(raw);
        if (skippable(tok)) continue;
        if (tok[0] == "bag") {
            // accept both "bag 3: 1 2" and "bag 3 : 1 2"
            if (tok.size() < 2) fail(lineno, "bag must read 'bag <id>: v1 v2 ...'");
            std::string_view id = tok[1];
            std::size_t first_vertex = 2;
            if (id.ends_with(':')) {
                id.remove_suffix(1);
            } else if (tok.size() > 2 && tok[2] == ":") {
                first_vertex = 3;
            } else {
                fail(lineno, "bag must read 'bag <id>: v1 v2 ...'");
            }
            const auto b = number(id, lineno, "bag id");
            if (b == 0) fail(lineno, "bag ids are 1-based");
            std::vector<Vertex> members;
            for (std::size_t i = first_vertex; i < tok.size(); ++i) {
                members.push_back(static_cast<Vertex>(number(tok[i], lineno, "vertex")));
            }
            std::sort(members.begin(), members.end());
            if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
                fail(lineno, "bag " + std::to_string(b) + " repeats a vertex");
            }
            if (!bags.emplace(b, std::move(members)).second) {
                fail(lineno, "bag " + std::to_string(b) + " defined twice");
            }
        } else if (tok[0] == "tedge") {
            if (tok.size() != 3) fail(lineno, "tree edge must read 'tedge <child> <parent>'");
            links.emplace_back(number(tok[1], lineno, "child"), number(tok[2], lineno, "parent"));
            link_lines.push_back(lineno);
        } else if (tok[0] == "root") {
            if (tok.size() != 2) fail(lineno, "root must read 'root <id>'");
            if (root) fail(lineno, "duplicate root");
            root = number(tok[1], lineno, "root");
        } else {
            fail(lineno, "unknown record '" + std::string(tok[0]) + "'");
        }
    }

    const auto xi = bags.size();
    if (xi == 0) throw InputError("decomposition has no bags");
    if (bags.rbegin()->first != xi) throw InputError("bag ids must be exactly 1.." + std::to_string(xi));

    Decomposition t;
    for (auto& [id, members] : bags) t.bags.push_back(std::move(members));
    const auto r = root.value_or(1);
    if (r < 1 || r > xi) throw InputError("root " + std::to_string(r) + " is not a bag");
    t.root = r - 1;

    // Tree edges are oriented towards the root regardless of how they were
    // written, so "tedge a b" and "tedge b a" mean the same tree.
    std::vector<std::vector<BagIndex>> adj(xi);
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto [child, parent] = links[i];
        if (child < 1 || child > xi || parent < 1 || parent > xi) {
            fail(link_lines[i], "tree edge names a missing bag");
        }
        if (child == parent) fail(link_lines[i], "tree edge is a loop");
        adj[child - 1].push_back(parent - 1);
        adj[parent - 1].push_back(child - 1);
    }
    if (links.size() != xi - 1) {
        throw InputError("a tree on " + std::to_string(xi) + " bags needs " + std::to_string(xi - 1) +
                         " tree edges, found " + std::to_string(links.size()));
    }
    t.parent.assign(xi, std::nullopt);
    std::vector<bool> reached(xi, false);
    std::vector<BagIndex> queue{t.root};
    reached[t.root] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto next : adj[queue[q]]) {
            if (reached[next]) continue;
            reached[next] = true;
            t.parent[next] = queue[q];
            queue.push_back(next);
        }
    }
    if (queue.size() != xi) throw InputError("tree edges do not connect all bags");
    return t;
}

void write_decomposition(std::ostream& out, const Decomposition& t) {
    for (BagIndex b = 0; b < t.size(); ++b) {
        out << "bag " << b + 1 << ':';
        for (Vertex v : t.bags[b]) out << ' ' << v;
        out << '\n';
    }
    for (BagIndex b = 0; b < t.size(); ++b) {
        if (t.parent[b]) out << "tedge " << b + 1 << ' ' << *t.parent[b] + 1 << '\n';
    }
    out << "root " << t.root + 1 << '\n';
}

Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_graph(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Decomposition load_decomposition(const std::string& path) {
    auto in = open_in(path);
    try {
        return read_decomposition(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void save_graph(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_graph(out, g);
}

void save_decomposition(const std::string& path, const Decomposition& t) {
    auto out = open_out(path);
    write_decomposition(out, t);
}

BurningSchedule parse_schedule(std::string_view text) {
    BurningSchedule s;
    for (auto tok : tokens(text)) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InputError("schedule entry '" + std::string(tok) + "' is not a vertex id");
        }
        s.activators.push_back(static_cast<Vertex>(v));
    }
    return s;
}

std::string format_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

std::string to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["algorithm"] = report.algorithm;
    j["n"] = report.vertices;
    j["m"] = report.edges;
    j["schedule"] = report.schedule.activators;
    j["completion"] = report.completion;
    j["bound"] = report.bound;
    j["lower"] = report.lower;
    j["ratio"] = std::round(report.ratio() * 1e4) / 1e4;
    auto details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.details) {
        std::visit([&](const auto& v) { details[key] = v; }, value);
    }
    j["details"] = details;
    if (!report.trace.empty()) j["trace"] = report.trace;
    if (report.wall_time_ms) j["wall_time_ms"] = *report.wall_time_ms;
    return j.dump();
}

std::string to_text(const RunReport& report) {
    std::ostringstream os;
    os << "algorithm: " << report.algorithm << '\n';
    os << "vertices: " << report.vertices << '\n';
    os << "edges: " << report.edges << '\n';
    os << "schedule:";
    for (Vertex v : report.schedule.activators) os << ' ' << v;
    os << '\n';
    os << "completion: " << report.completion << '\n';
    os << "bound: " << report.bound << '\n';
    os << "lower: " << report.lower << '\n';
    os << "ratio: " << format_ratio(report.ratio()) << '\n';
    for (const auto& [key, value] : report.details) {
        os << key << ": ";
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, bool>) os << (v ? "yes" : "no");
                else if constexpr (std::is_same_v<T, double>) os << format_ratio(v);
                else os << v;
            },
            value);
        os << '\n';
    }
    for (const auto& line : report.trace) os << line << '\n';
    if (report.wall_time_ms) os << "wall_time_ms: " << format_ratio(*report.wall_time_ms) << '\n';
    return os.str();
}

} // namespace burn::io
