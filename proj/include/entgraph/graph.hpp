#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace entgraph {

// Vertex pair with i < j, 1-based labels.
using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 1..N describing which qubit pairs
/// are required to be entangled. Edges are kept sorted and canonical (i < j).
class EntangledGraph {
public:
    EntangledGraph(int n_vertices, std::vector<Edge> edges);

    int n_vertices() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int i, int j) const;
    int degree(int v) const;

    bool operator==(const EntangledGraph& other) const = default;

private:
    int n_vertices_;
    std::vector<Edge> edges_;
};

// Per-pair counts entering the closed-form reduced matrices.
struct GraphStats {
    int i = 0;
    int j = 0;
    int n_i = 0;   // degree of i
    int n_j = 0;   // degree of j
    int n_ij = 0;  // vertices adjacent to both i and j
    int k = 0;     // total edge count
    bool is_edge = false;
};

/// Parse the graph file format: first non-comment line is N, each following
/// non-comment line is "i j". Lines starting with '#' and blank lines are
/// ignored. Duplicate edges (including reversed ones) are hard errors.
EntangledGraph parse_graph(std::istream& in);
EntangledGraph parse_graph(const std::string& text);

/// Inverse writer for parse_graph (round-trips exactly).
std::string serialize_graph(const EntangledGraph& g);

GraphStats graph_stats(const EntangledGraph& g, int i, int j);

/// Undirected DOT output, deterministic ordering: vertices ascending, then
/// edges lexicographic. Labels (if given) must refer to existing edges and
/// are printed with four decimals.
std::string emit_dot(const EntangledGraph& g,
                     const std::map<Edge, double>* edge_labels = nullptr);

/// All pairs (i, j), i < j, in lexicographic order.
std::vector<Edge> all_pairs(int n_vertices);

} // namespace entgraph
