#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichrom/bounds.hpp"
#include "nichrom/graph.hpp"
#include "nichrom/palette.hpp"

namespace nichrom::io {

/// Input that does not parse. line/column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct GraphDocument {
    std::optional<std::string> name;
    Graph graph;
};

enum class GraphFormat { Json, EdgeList, Dot };

/// JSON {"name": ..., "n": ..., "edges": [[u, v], ...]} or a plain edge
/// list ("n m" then m lines "u v"); the first non-blank character decides.
GraphDocument read_graph(std::istream& in);
GraphDocument read_graph_file(const std::string& path);

void write_graph_json(std::ostream& out, const GraphDocument& doc);
void write_graph_edgelist(std::ostream& out, const Graph& g);
/// Write-only; when a coloring is given each vertex carries a `color` label.
void write_dot(std::ostream& out, const Graph& g, const Coloring* coloring = nullptr,
               const std::string& name = "G");

struct ColoringDocument {
    int i = 0;
    Coloring coloring;
};

ColoringDocument read_coloring(std::istream& in);
ColoringDocument read_coloring_file(const std::string& path);
void write_coloring_json(std::ostream& out, const ColoringDocument& doc);

inline constexpr const char* kDiscrepancyColumns = "claim,graph,n,i,claimed,oracle,direction";

void write_discrepancies_csv(std::ostream& out, const std::vector<Discrepancy>& rows);
void write_discrepancies_json(std::ostream& out, const std::vector<Discrepancy>& rows);
std::vector<Discrepancy> read_discrepancies_csv(std::istream& in);

}  // namespace nichrom::io
