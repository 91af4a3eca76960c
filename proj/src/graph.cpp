#include "entgraph/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "entgraph/errors.hpp"

namespace entgraph {

EntangledGraph::EntangledGraph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices_ < 1) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    for (auto& [i, j] : edges_) {
        if (i == j) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        }
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n_vertices_) {
            throw std::invalid_argument("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                                        ") out of range for " + std::to_string(n_vertices_) +
                                        " vertices");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
}

bool EntangledGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

int EntangledGraph::degree(int v) const {
    int d = 0;
    for (const auto& [i, j] : edges_) {
        if (i == v || j == v) ++d;
    }
    return d;
}

namespace {

// A line is skippable if blank or its first non-space character is '#'.
bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

int parse_int_token(const std::string& token, int line_no) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + token + "'", line_no);
    }
    if (pos != token.size()) {
        throw parse_error("expected an integer, got '" + token + "'", line_no);
    }
    return value;
}

} // namespace

EntangledGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;

        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);

        if (n < 0) {
            if (tokens.size() != 1) {
                throw parse_error("header must be a single integer vertex count", line_no);
            }
            n = parse_int_token(tokens[0], line_no);
            if (n < 1) {
                throw parse_error("vertex count must be positive", line_no);
            }
            continue;
        }

        if (tokens.size() != 2) {
            throw parse_error("edge line must be two integers \"i j\"", line_no);
        }
        int i = parse_int_token(tokens[0], line_no);
        int j = parse_int_token(tokens[1], line_no);
        if (i < 1 || i > n || j < 1 || j > n) {
            throw parse_error("vertex index out of range [1, " + std::to_string(n) + "]", line_no);
        }
        if (i == j) {
            throw parse_error("self-loop at vertex " + std::to_string(i), line_no);
        }
        Edge e{std::min(i, j), std::max(i, j)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
            throw parse_error("duplicate edge (" + std::to_string(e.first) + ", " +
                              std::to_string(e.second) + ")", line_no);
        }
        edges.push_back(e);
    }

    if (n < 0) {
        throw parse_error("empty graph file: missing vertex-count header", line_no);
    }
    return EntangledGraph(n, std::move(edges));
}

EntangledGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const EntangledGraph& g) {
    std::string out = std::to_string(g.n_vertices()) + "\n";
    for (const auto& [i, j] : g.edges()) {
        out += std::to_string(i) + " " + std::to_string(j) + "\n";
    }
    return out;
}

GraphStats graph_stats(const EntangledGraph& g, int i, int j) {
    if (i < 1 || j > g.n_vertices() || i >= j) {
        throw std::invalid_argument("graph_stats requires 1 <= i < j <= N");
    }
    GraphStats st;
    st.i = i;
    st.j = j;
    st.n_i = g.degree(i);
    st.n_j = g.degree(j);
    st.k = g.edge_count();
    st.is_edge = g.has_edge(i, j);
    for (int c = 1; c <= g.n_vertices(); ++c) {
        if (c != i && c != j && g.has_edge(i, c) && g.has_edge(j, c)) ++st.n_ij;
    }
    return st;
}

std::string emit_dot(const EntangledGraph& g, const std::map<Edge, double>* edge_labels) {
    if (edge_labels) {
        for (const auto& [edge, label] : *edge_labels) {
            (void)label;
            if (!g.has_edge(edge.first, edge.second)) {
                throw std::invalid_argument("label refers to non-existent edge (" +
                                            std::to_string(edge.first) + ", " +
                                            std::to_string(edge.second) + ")");
            }
        }
    }
    std::string out = "graph G {\n";
    for (int v = 1; v <= g.n_vertices(); ++v) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const auto& e : g.edges()) {
        out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second);
        if (edge_labels) {
            if (auto it = edge_labels->find(e); it != edge_labels->end()) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.4f", it->second);
                out += std::string(" [label=\"") + buf + "\"]";
            }
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::vector<Edge> all_pairs(int n_vertices) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<size_t>(n_vertices) * (n_vertices - 1) / 2);
    for (int i = 1; i <= n_vertices; ++i) {
        for (int j = i + 1; j <= n_vertices; ++j) {
            pairs.push_back({i, j});
        }
    }
    return pairs;
}

} // namespace entgraph
