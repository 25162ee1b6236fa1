#pragma once

#include <cstdint>
#include <random>

#include "ddimer/graph.hpp"

namespace ddimer {

// Deterministic RNG; bounded draws use plain modulo so that identical seeds
// reproduce instances bit-for-bit on every platform.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool percent(int p) { return uniform(0, 99) < p; }
};

uint64_t derive_seed(uint64_t master, uint64_t index);

struct InstanceSpec {
    int rows = 4, cols = 4;
    int delete_percent = 25;
    int weight_num_max = 5, weight_den_max = 3;
    int node_count = 6;  // 0 = no boundary nodes
    bool require_nonzero_zd = false;
    int max_attempts = 5000;
};

// Connected induced subgraph of a rows x cols grid with balanced colors,
// boundary nodes sampled on the outer face with balanced colors.
EmbeddedGraph gen_grid_instance(Rng& rng, const InstanceSpec& spec);

// Full rows x cols grid, unit weights; the outer ring becomes the node list
// when it is color-balanced, otherwise the graph has no nodes.
EmbeddedGraph grid_graph(int rows, int cols, bool ring_nodes = false);

// vertex 1 black at (0,0), vertex 2 white at (1,0), one edge.
EmbeddedGraph single_edge_graph(const Rat& weight);

// unit 4-cycle with all four vertices as nodes.
EmbeddedGraph cycle4_graph();

// 8x8 demo grid with 8 boundary nodes and RGB split (3,3,2); the
// tripartite pairing is ((1,8),(3,4),(5,2),(7,6)).
EmbeddedGraph demo8x8_graph();

// All (r,g,b) with r+g+b = 2n satisfying the triangle inequality.
std::vector<RgbSplit> all_valid_splits(int two_n);

// Balanced random subset of the node labels (possibly empty or full).
std::vector<int> random_balanced_node_set(Rng& rng, const NodeColoring& c);

}  // namespace ddimer
