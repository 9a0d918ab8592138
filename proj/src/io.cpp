#include "nichrom/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "nichrom/errors.hpp"

namespace nichrom::io {

using nlohmann::json;

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) + ", column " +
                                        std::to_string(column)
                                  : what),
      line_(line), column_(column) {}

namespace {

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    return in;
}

// 1-based line/column of a byte offset.
std::pair<int, int> locate(const std::string& text, std::size_t offset) {
    int line = 1, column = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = locate(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON", line, column);
    }
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("'") + what + "' must be an integer", 0, 0);
    return j.get<int>();
}

GraphDocument graph_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ParseError("graph JSON needs fields 'n' and 'edges'", 0, 0);
    }
    GraphDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("'name' must be a string", 0, 0);
        doc.name = j["name"].get<std::string>();
    }
    const int n = as_int(j["n"], "n");
    std::vector<Edge> edges;
    if (!j["edges"].is_array()) throw ParseError("'edges' must be an array", 0, 0);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]", 0, 0);
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    try {
        doc.graph = Graph::build(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what(), 0, 0);
    }
    return doc;
}

GraphDocument graph_from_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::istringstream& fields) {
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            fields = std::istringstream(line);
            return true;
        }
        return false;
    };
    auto read_two = [&](std::istringstream& fields, long long& a, long long& b) {
        if (!(fields >> a >> b)) throw ParseError("expected two integers", lineno, 1);
        std::string rest;
        if (fields >> rest) {
            throw ParseError("unexpected trailing text '" + rest + "'", lineno,
                             static_cast<int>(line.find(rest)) + 1);
        }
    };
    std::istringstream fields;
    if (!next_line(fields)) throw ParseError("empty edge list", 1, 1);
    long long n = 0, m = 0;
    read_two(fields, n, m);
    if (n < 0 || m < 0) throw ParseError("negative count in header", lineno, 1);
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        if (!next_line(fields)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(k), lineno + 1, 1);
        long long u = 0, v = 0;
        read_two(fields, u, v);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(fields)) throw ParseError("more edge lines than announced", lineno, 1);
    GraphDocument doc;
    try {
        doc.graph = Graph::build(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what(), 0, 0);
    }
    return doc;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line, int lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        char c = line[k];
        if (quoted) {
            if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
                cur += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote", lineno, static_cast<int>(line.size()));
    out.push_back(std::move(cur));
    return out;
}

}  // namespace

GraphDocument read_graph(std::istream& in) {
    const std::string text = slurp(in);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
    return graph_from_edgelist(text);
}

GraphDocument read_graph_file(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

void write_graph_json(std::ostream& out, const GraphDocument& doc) {
    json j;
    if (doc.name) j["name"] = *doc.name;
    j["n"] = doc.graph.order();
    j["edges"] = json::array();
    for (auto [u, v] : doc.graph.edges()) j["edges"].push_back({u, v});
    out << j.dump() << "\n";
}

void write_graph_edgelist(std::ostream& out, const Graph& g) {
    out << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_dot(std::ostream& out, const Graph& g, const Coloring* coloring, const std::string& name) {
    out << "graph \"" << name << "\" {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (coloring) out << " [label=\"" << v << ":" << (*coloring)[v] << "\", color=" << (*coloring)[v] << "]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

ColoringDocument read_coloring(std::istream& in) {
    json j = parse_json(slurp(in));
    if (!j.is_object() || !j.contains("i") || !j.contains("colors") || !j["colors"].is_array()) {
        throw ParseError("coloring JSON needs 'i' and a 'colors' array", 0, 0);
    }
    ColoringDocument doc;
    doc.i = as_int(j["i"], "i");
    std::vector<Color> colors;
    for (const auto& c : j["colors"]) colors.push_back(as_int(c, "colour"));
    try {
        doc.coloring = Coloring(std::move(colors));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), 0, 0);
    }
    return doc;
}

ColoringDocument read_coloring_file(const std::string& path) {
    auto in = open(path);
    return read_coloring(in);
}

void write_coloring_json(std::ostream& out, const ColoringDocument& doc) {
    json j;
    j["i"] = doc.i;
    j["colors"] = doc.coloring.colors();
    out << j.dump() << "\n";
}

void write_discrepancies_csv(std::ostream& out, const std::vector<Discrepancy>& rows) {
    out << kDiscrepancyColumns << "\n";
    for (const auto& d : rows) {
        out << csv_field(d.claim) << "," << csv_field(d.graph) << "," << d.n << "," << d.i << "," << d.claimed
            << "," << d.oracle << "," << csv_field(d.direction) << "\n";
    }
}

void write_discrepancies_json(std::ostream& out, const std::vector<Discrepancy>& rows) {
    json arr = json::array();
    for (const auto& d : rows) {
        arr.push_back({{"claim", d.claim},
                       {"graph", d.graph},
                       {"n", d.n},
                       {"i", d.i},
                       {"claimed", d.claimed},
                       {"oracle", d.oracle},
                       {"direction", d.direction}});
    }
    out << arr.dump(2) << "\n";
}

std::vector<Discrepancy> read_discrepancies_csv(std::istream& in) {
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line) || csv_split(line, 1) != csv_split(kDiscrepancyColumns, 1)) {
        throw ParseError("missing discrepancy CSV header", 1, 1);
    }
    std::vector<Discrepancy> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = csv_split(line, lineno);
        if (f.size() != 7) throw ParseError("expected 7 columns", lineno, 1);
        try {
            rows.push_back({f[0], f[1], std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]), std::stoi(f[5]), f[6]});
        } catch (const std::logic_error&) {
            throw ParseError("non-integer numeric column", lineno, 1);
        }
    }
    return rows;
}

}  // namespace nichrom::io
