#include "ddimer/instances.hpp"

#include <algorithm>

#include "ddimer/kasteleyn.hpp"

namespace ddimer {

uint64_t derive_seed(uint64_t master, uint64_t index) {
    // splitmix64 over master ^ golden-ratio-scaled index
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

struct GridCells {
    int rows, cols;
    std::vector<char> keep;
    int id(int r, int c) const { return r * cols + c + 1; }
    bool kept(int r, int c) const {
        return r >= 0 && r < rows && c >= 0 && c < cols && keep[r * cols + c];
    }
};

EmbeddedGraph grid_from_cells(const GridCells& cells,
                              const std::function<Rat(int)>& weight_for_edge) {
    EmbeddedGraph g;
    for (int r = 0; r < cells.rows; ++r)
        for (int c = 0; c < cells.cols; ++c) {
            if (!cells.kept(r, c)) continue;
            Color color = (r + c) % 2 == 0 ? Color::Black : Color::White;
            g.vertices.push_back({cells.id(r, c), color, Rat(c), Rat(r)});
        }
    int edge_counter = 0;
    for (int r = 0; r < cells.rows; ++r)
        for (int c = 0; c < cells.cols; ++c) {
            if (!cells.kept(r, c)) continue;
            if (cells.kept(r, c + 1))
                g.edges.push_back({cells.id(r, c), cells.id(r, c + 1),
                                   weight_for_edge(edge_counter++)});
            if (cells.kept(r + 1, c))
                g.edges.push_back({cells.id(r, c), cells.id(r + 1, c),
                                   weight_for_edge(edge_counter++)});
        }
    return g;
}

bool connected(const GridCells& cells) {
    int total = 0, start_r = -1, start_c = -1;
    for (int r = 0; r < cells.rows; ++r)
        for (int c = 0; c < cells.cols; ++c)
            if (cells.kept(r, c)) {
                ++total;
                start_r = r;
                start_c = c;
            }
    if (total == 0) return false;
    std::vector<char> seen(cells.rows * cells.cols, 0);
    std::vector<std::pair<int, int>> stack{{start_r, start_c}};
    seen[start_r * cells.cols + start_c] = 1;
    int visited = 0;
    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        ++visited;
        const int dr[] = {1, -1, 0, 0}, dc[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int nr = r + dr[k], nc = c + dc[k];
            if (cells.kept(nr, nc) && !seen[nr * cells.cols + nc]) {
                seen[nr * cells.cols + nc] = 1;
                stack.emplace_back(nr, nc);
            }
        }
    }
    return visited == total;
}

bool balanced_vertices(const EmbeddedGraph& g) {
    long black = std::count_if(g.vertices.begin(), g.vertices.end(),
                               [](const Vertex& v) { return v.color == Color::Black; });
    return 2 * black == g.num_vertices();
}

std::vector<int> pick_k(Rng& rng, std::vector<int> pool, int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
        int at = rng.uniform(0, static_cast<int>(pool.size()) - 1);
        out.push_back(pool[at]);
        pool.erase(pool.begin() + at);
    }
    return out;
}

}  // namespace

EmbeddedGraph gen_grid_instance(Rng& rng, const InstanceSpec& spec) {
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        GridCells cells{spec.rows, spec.cols, {}};
        cells.keep.assign(spec.rows * spec.cols, 0);
        for (char& k : cells.keep) k = rng.percent(100 - spec.delete_percent) ? 1 : 0;
        if (!connected(cells)) continue;

        std::vector<Rat> weights;
        EmbeddedGraph g = grid_from_cells(cells, [&](int) {
            Rat w(rng.uniform(1, spec.weight_num_max), rng.uniform(1, spec.weight_den_max));
            w.canonicalize();
            return w;
        });
        if (g.num_vertices() < 2 || !balanced_vertices(g)) continue;

        if (spec.node_count > 0) {
            Embedding emb = build_embedding(g);
            std::vector<int> walk = outer_face_ccw(g, emb, 0);
            std::vector<int> distinct;
            for (int id : walk)
                if (std::find(distinct.begin(), distinct.end(), id) == distinct.end())
                    distinct.push_back(id);
            std::vector<int> blacks, whites;
            for (int id : distinct)
                (g.vertex(id).color == Color::Black ? blacks : whites).push_back(id);
            int k = spec.node_count / 2;
            if (static_cast<int>(blacks.size()) < k || static_cast<int>(whites.size()) < k)
                continue;
            std::vector<int> chosen = pick_k(rng, blacks, k);
            std::vector<int> chosen_w = pick_k(rng, whites, k);
            chosen.insert(chosen.end(), chosen_w.begin(), chosen_w.end());
            std::vector<int> nodes;
            for (int id : distinct)
                if (std::find(chosen.begin(), chosen.end(), id) != chosen.end())
                    nodes.push_back(id);
            g.nodes = nodes;
        }
        if (spec.require_nonzero_zd && zd_det(g) == 0) continue;
        validate(g);
        return g;
    }
    throw Error("gen_grid_instance: no valid instance after max_attempts");
}

EmbeddedGraph grid_graph(int rows, int cols, bool ring_nodes) {
    GridCells cells{rows, cols, std::vector<char>(rows * cols, 1)};
    EmbeddedGraph g = grid_from_cells(cells, [](int) { return Rat(1); });
    if (!balanced_vertices(g)) return g;  // odd grids: a fixture with Z^D = 0
    if (ring_nodes) {
        Embedding emb = build_embedding(g);
        std::vector<int> walk = outer_face_ccw(g, emb, 0);
        std::vector<int> distinct;
        for (int id : walk)
            if (std::find(distinct.begin(), distinct.end(), id) == distinct.end())
                distinct.push_back(id);
        long black = std::count_if(distinct.begin(), distinct.end(), [&](int id) {
            return g.vertex(id).color == Color::Black;
        });
        if (2 * black == static_cast<long>(distinct.size())) g.nodes = distinct;
    }
    validate(g);
    return g;
}

EmbeddedGraph single_edge_graph(const Rat& weight) {
    EmbeddedGraph g;
    g.vertices.push_back({1, Color::Black, Rat(0), Rat(0)});
    g.vertices.push_back({2, Color::White, Rat(1), Rat(0)});
    g.edges.push_back({1, 2, weight});
    g.nodes = {1, 2};
    validate(g);
    return g;
}

EmbeddedGraph cycle4_graph() {
    EmbeddedGraph g;
    g.vertices.push_back({1, Color::Black, Rat(0), Rat(0)});
    g.vertices.push_back({2, Color::White, Rat(1), Rat(0)});
    g.vertices.push_back({3, Color::Black, Rat(1), Rat(1)});
    g.vertices.push_back({4, Color::White, Rat(0), Rat(1)});
    g.edges.push_back({1, 2, Rat(1)});
    g.edges.push_back({2, 3, Rat(1)});
    g.edges.push_back({3, 4, Rat(1)});
    g.edges.push_back({4, 1, Rat(1)});
    g.nodes = {1, 2, 3, 4};
    validate(g);
    return g;
}

EmbeddedGraph demo8x8_graph() {
    EmbeddedGraph g = grid_graph(8, 8, false);
    auto id_at = [](int x, int y) { return y * 8 + x + 1; };
    g.nodes = {id_at(0, 0), id_at(3, 0), id_at(6, 0), id_at(7, 2),
               id_at(7, 7), id_at(4, 7), id_at(1, 7), id_at(0, 5)};
    g.rgb = RgbSplit{3, 3, 2};
    validate(g);
    return g;
}

std::vector<RgbSplit> all_valid_splits(int two_n) {
    std::vector<RgbSplit> out;
    for (int r = 0; r <= two_n; ++r)
        for (int gg = 0; r + gg <= two_n; ++gg) {
            RgbSplit s{r, gg, two_n - r - gg};
            if (s.triangle_ok()) out.push_back(s);
        }
    return out;
}

std::vector<int> random_balanced_node_set(Rng& rng, const NodeColoring& c) {
    std::vector<int> blacks, whites;
    for (int i = 1; i <= c.size(); ++i)
        (c.color(i) == Color::Black ? blacks : whites).push_back(i);
    int k = rng.uniform(0, static_cast<int>(blacks.size()));
    std::vector<int> s = pick_k(rng, blacks, k);
    std::vector<int> w = pick_k(rng, whites, k);
    s.insert(s.end(), w.begin(), w.end());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace ddimer
