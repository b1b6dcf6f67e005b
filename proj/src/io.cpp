#include "rdvhc/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "rdvhc/errors.hpp"

namespace rdvhc::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_count(const std::string& tok, int line, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    }
    if (used != tok.size() || value < 0)
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    return value;
}

int parse_index(const std::string& tok, int line) {
    const int v = parse_count(tok, line, "a positive index");
    if (v < 1) throw ParseError(line, "index must be >= 1, got '" + tok + "'");
    return v;
}

void check_name(const std::string& name, int line) {
    if (!valid_name(name)) throw ParseError(line, "bad name '" + name + "'");
}

// Reads logical lines, skipping blanks and `c` comments; f gets (tokens, line).
template <typename F>
void for_each_line(std::istream& in, F&& f) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        f(tokens, line_no);
    }
}

}  // namespace

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    return true;
}

Graph parse_graph(std::istream& in) {
    Graph g;
    int nv = -1, ne = -1;
    int seen_v = 0, seen_e = 0;
    for_each_line(in, [&](const std::vector<std::string>& tok, int line) {
        if (tok[0] == "p") {
            if (nv >= 0) throw ParseError(line, "duplicate p line");
            if (tok.size() != 4 || tok[1] != "graph")
                throw ParseError(line, "expected 'p graph <nv> <ne>'");
            nv = parse_count(tok[2], line, "a vertex count");
            ne = parse_count(tok[3], line, "an edge count");
        } else if (tok[0] == "v") {
            if (nv < 0) throw ParseError(line, "v line before p line");
            if (seen_e > 0) throw ParseError(line, "v line after e lines");
            if (tok.size() != 2) throw ParseError(line, "expected 'v <name>'");
            check_name(tok[1], line);
            if (g.has_vertex(tok[1])) throw ParseError(line, "duplicate vertex " + tok[1]);
            g.add_vertex(tok[1]);
            ++seen_v;
        } else if (tok[0] == "e") {
            if (nv < 0) throw ParseError(line, "e line before p line");
            if (tok.size() != 3) throw ParseError(line, "expected 'e <name> <name>'");
            check_name(tok[1], line);
            check_name(tok[2], line);
            if (!g.has_vertex(tok[1])) throw ParseError(line, "unknown vertex " + tok[1]);
            if (!g.has_vertex(tok[2])) throw ParseError(line, "unknown vertex " + tok[2]);
            if (tok[1] == tok[2]) throw ParseError(line, "self-loop at " + tok[1]);
            if (g.has_edge(tok[1], tok[2]))
                throw ParseError(line, "duplicate edge " + tok[1] + " " + tok[2]);
            g.add_edge(tok[1], tok[2]);
            ++seen_e;
        } else {
            throw ParseError(line, "unknown line type '" + tok[0] + "'");
        }
    });
    if (nv < 0) throw ParseError(0, "missing p line");
    if (seen_v != nv)
        throw ParseError(0, "p line declares " + std::to_string(nv) + " vertices, found " +
                                std::to_string(seen_v));
    if (seen_e != ne)
        throw ParseError(0, "p line declares " + std::to_string(ne) + " edges, found " +
                                std::to_string(seen_e));
    return g;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& [a, b] : g.sorted_edges()) out << "e " << a << " " << b << "\n";
}

CliqueTree parse_clique_tree(std::istream& in) {
    CliqueTree ct;
    int nn = -1;
    int seen_t = 0, seen_a = 0;
    for_each_line(in, [&](const std::vector<std::string>& tok, int line) {
        if (tok[0] == "p") {
            if (nn >= 0) throw ParseError(line, "duplicate p line");
            if (tok.size() != 3 || tok[1] != "cliquetree")
                throw ParseError(line, "expected 'p cliquetree <n>'");
            nn = parse_count(tok[2], line, "a node count");
        } else if (tok[0] == "t") {
            if (nn < 0) throw ParseError(line, "t line before p line");
            if (seen_a > 0) throw ParseError(line, "t line after a lines");
            if (tok.size() < 4 || tok[2] != ":")
                throw ParseError(line, "expected 't <node> : <member>...'");
            check_name(tok[1], line);
            if (ct.tree.has_node(tok[1])) throw ParseError(line, "duplicate node " + tok[1]);
            ct.tree.add_node(tok[1]);
            std::vector<std::string> members(tok.begin() + 3, tok.end());
            for (const auto& m : members) check_name(m, line);
            std::sort(members.begin(), members.end());
            for (std::size_t k = 1; k < members.size(); ++k)
                if (members[k] == members[k - 1])
                    throw ParseError(line, "repeated member " + members[k]);
            ct.label[tok[1]] = std::move(members);
            ++seen_t;
        } else if (tok[0] == "a") {
            if (nn < 0) throw ParseError(line, "a line before p line");
            if (tok.size() != 3) throw ParseError(line, "expected 'a <parent> <child>'");
            check_name(tok[1], line);
            check_name(tok[2], line);
            if (!ct.tree.has_node(tok[1])) throw ParseError(line, "unknown node " + tok[1]);
            if (!ct.tree.has_node(tok[2])) throw ParseError(line, "unknown node " + tok[2]);
            if (tok[1] == tok[2]) throw ParseError(line, "self-arc at " + tok[1]);
            if (ct.tree.has_arc(ct.tree.index_of(tok[1]), ct.tree.index_of(tok[2])))
                throw ParseError(line, "duplicate arc " + tok[1] + " " + tok[2]);
            ct.tree.add_arc(tok[1], tok[2]);
            ++seen_a;
        } else {
            throw ParseError(line, "unknown line type '" + tok[0] + "'");
        }
    });
    if (nn < 0) throw ParseError(0, "missing p line");
    if (seen_t != nn)
        throw ParseError(0, "p line declares " + std::to_string(nn) + " nodes, found " +
                                std::to_string(seen_t));
    return ct;
}

void write_clique_tree(std::ostream& out, const CliqueTree& ct) {
    out << "p cliquetree " << ct.tree.node_count() << "\n";
    for (const auto& node : ct.tree.nodes()) {
        out << "t " << node << " :";
        for (const auto& member : ct.label.at(node)) out << " " << member;
        out << "\n";
    }
    for (const auto& [p, c] : ct.tree.arcs())
        out << "a " << ct.tree.name_of(p) << " " << ct.tree.name_of(c) << "\n";
}

BipartiteFile parse_bipartite(std::istream& in) {
    BipartiteFile file;
    int declared = -1;
    int seen_e = 0;
    for_each_line(in, [&](const std::vector<std::string>& tok, int line) {
        if (tok[0] == "p") {
            if (declared >= 0) throw ParseError(line, "duplicate p line");
            if (tok.size() != 4 || tok[1] != "bipartite")
                throw ParseError(line, "expected 'p bipartite <r> <ne>'");
            file.r = parse_count(tok[2], line, "a side size");
            declared = parse_count(tok[3], line, "an edge count");
        } else if (tok[0] == "e") {
            if (declared < 0) throw ParseError(line, "e line before p line");
            if (tok.size() != 3) throw ParseError(line, "expected 'e <i> <j>'");
            file.edges.emplace_back(parse_index(tok[1], line), parse_index(tok[2], line));
            ++seen_e;
        } else {
            throw ParseError(line, "unknown line type '" + tok[0] + "'");
        }
    });
    if (declared < 0) throw ParseError(0, "missing p line");
    if (seen_e != declared)
        throw ParseError(0, "p line declares " + std::to_string(declared) + " edges, found " +
                                std::to_string(seen_e));
    return file;
}

void write_bipartite(std::ostream& out, const BipartiteInstance& b) {
    out << "p bipartite " << b.r << " " << b.edges.size() << "\n";
    for (auto [i, j] : b.edges) out << "e " << i << " " << j << "\n";
}

Cycle parse_cycle(std::istream& in) {
    std::vector<std::string> names;
    for_each_line(in, [&](const std::vector<std::string>& tok, int line) {
        for (const auto& name : tok) {
            check_name(name, line);
            names.push_back(name);
        }
    });
    try {
        return Cycle{std::move(names)};
    } catch (const ValidationError& e) {
        throw ParseError(0, e.what());
    }
}

void write_cycle(std::ostream& out, const Cycle& c) {
    bool first = true;
    for (const auto& name : c.order()) {
        if (!first) out << " ";
        out << name;
        first = false;
    }
    out << "\n";
}

std::string to_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::string to_string(const CliqueTree& ct) {
    std::ostringstream out;
    write_clique_tree(out, ct);
    return out.str();
}

std::string to_string(const BipartiteInstance& b) {
    std::ostringstream out;
    write_bipartite(out, b);
    return out.str();
}

std::string to_string(const Cycle& c) {
    std::ostringstream out;
    write_cycle(out, c);
    return out.str();
}

}  // namespace rdvhc::io
