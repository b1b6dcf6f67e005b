#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rdvhc/graph.hpp"
#include "rdvhc/rdv.hpp"
#include "rdvhc/reduction.hpp"

namespace rdvhc::io {

/// Vertex/node name grammar: [A-Za-z][A-Za-z0-9_]*
bool valid_name(const std::string& name);

// Graph format: `c` comment lines, one `p graph <nv> <ne>` header, then
// `v <name>` lines, then `e <name> <name>` lines.
Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Clique-tree format: `p cliquetree <n>`, `t <node> : <member>...` lines,
// then `a <parent> <child>` lines. Structurally broken trees (e.g. two
// roots) parse fine; verification reports on them separately.
CliqueTree parse_clique_tree(std::istream& in);
void write_clique_tree(std::ostream& out, const CliqueTree& ct);

/// Raw bipartite file content, before normalization.
struct BipartiteFile {
    int r = 0;
    std::vector<std::pair<int, int>> edges;
};

// Bipartite format: `c` comments, `p bipartite <r> <ne>`, `e <i> <j>` lines.
BipartiteFile parse_bipartite(std::istream& in);
void write_bipartite(std::ostream& out, const BipartiteInstance& b);

// Cycle format: whitespace-separated vertex names.
Cycle parse_cycle(std::istream& in);
void write_cycle(std::ostream& out, const Cycle& c);

std::string to_string(const Graph& g);
std::string to_string(const CliqueTree& ct);
std::string to_string(const BipartiteInstance& b);
std::string to_string(const Cycle& c);

}  // namespace rdvhc::io
