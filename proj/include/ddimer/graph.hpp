#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddimer/pairings.hpp"
#include "ddimer/rational.hpp"

namespace ddimer {

struct Vertex {
    int id;
    Color color;
    Rat x, y;
};

struct GraphEdge {
    int u, v;  // vertex ids
    Rat weight;
};

// Planar bipartite graph with straight-line rational coordinates and an
// ordered list of boundary nodes (counterclockwise on the outer face).
// Node labels 1..2n refer to positions in `nodes`; vertex ids are arbitrary.
struct EmbeddedGraph {
    std::vector<Vertex> vertices;  // ascending id
    std::vector<GraphEdge> edges;
    std::vector<int> nodes;  // vertex ids
    std::optional<RgbSplit> rgb;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int index_of(int id) const;  // -1 if absent
    const Vertex& vertex(int id) const;
    int node_vertex(int label) const { return nodes[label - 1]; }
    bool is_node(int id) const;
    NodeColoring node_coloring() const;
};

EmbeddedGraph parse_graph(const std::string& text);
std::string serialize(const EmbeddedGraph& g);
std::string graph_json(const EmbeddedGraph& g);

// Throws ValidationError unless all structural invariants hold.
void validate(const EmbeddedGraph& g);

// G minus the vertices behind the given node labels (edges pruned, node
// order preserved, RGB class counts updated).
EmbeddedGraph delete_nodes(const EmbeddedGraph& g, const std::vector<int>& labels);

// G minus arbitrary vertices by id (incident edges pruned; any node entries
// for them dropped).
EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::vector<int>& ids);

// Same graph, node status dropped for all labels outside `keep`; the kept
// nodes are relabeled 1..2m by position.
EmbeddedGraph restrict_nodes(const EmbeddedGraph& g, const std::vector<int>& keep);

// Combinatorial embedding derived from the coordinates.
struct Face {
    std::vector<int> vertex_walk;  // vertex indices, closed walk
    std::vector<int> edge_walk;    // edge indices along the walk
    int component;
    bool outer;
};

struct Embedding {
    // per vertex index: (neighbor vertex index, edge index), ccw by angle
    std::vector<std::vector<std::pair<int, int>>> rotation;
    std::vector<int> component;  // per vertex index
    int num_components;
    std::vector<Face> faces;
};

Embedding build_embedding(const EmbeddedGraph& g);

// Vertex ids on the outer face of one component, counterclockwise.
std::vector<int> outer_face_ccw(const EmbeddedGraph& g, const Embedding& e, int component);

}  // namespace ddimer
