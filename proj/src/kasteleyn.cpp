#include "ddimer/kasteleyn.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "ddimer/enumerate.hpp"

namespace ddimer {

namespace {

// Edges occurring exactly once in the face walk; bridges drop out.
std::vector<int> face_cycle(const Face& f) {
    std::map<int, int> count;
    for (int ei : f.edge_walk) count[ei]++;
    std::vector<int> cycle;
    for (auto [ei, c] : count)
        if (c == 1) cycle.push_back(ei);
    return cycle;
}

bool cycle_flat(const std::vector<int>& cycle, const std::vector<int>& sign) {
    int minus = 0;
    for (int ei : cycle)
        if (sign[ei] < 0) ++minus;
    size_t len = cycle.size();
    assert(len % 2 == 0);
    if (len % 4 == 0) return minus % 2 == 1;
    return minus % 2 == 0;
}

}  // namespace

KasteleynWeighting build_weighting(const EmbeddedGraph& g) {
    if (g.num_vertices() % 2 != 0)
        throw Error("Kasteleyn weighting needs an even number of vertices");
    KasteleynWeighting w;
    w.sign.assign(g.edges.size(), 0);

    Embedding emb = build_embedding(g);

    // spanning forest: +1 on tree edges
    std::vector<char> tree_edge(g.edges.size(), 0);
    {
        std::vector<char> seen(g.num_vertices(), 0);
        for (int root = 0; root < g.num_vertices(); ++root) {
            if (seen[root]) continue;
            std::vector<int> stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [other, ei] : emb.rotation[v]) {
                    if (seen[other]) continue;
                    seen[other] = 1;
                    tree_edge[ei] = 1;
                    w.sign[ei] = 1;
                    stack.push_back(other);
                }
            }
        }
    }

    // peel bounded faces: each step some face cycle has one unsigned edge
    struct PendingFace {
        std::vector<int> cycle;
    };
    std::vector<PendingFace> pending;
    for (const Face& f : emb.faces) {
        if (f.outer) continue;
        pending.push_back({face_cycle(f)});
    }
    std::vector<char> done(pending.size(), 0);
    size_t remaining = pending.size();
    while (remaining > 0) {
        bool progress = false;
        for (size_t fi = 0; fi < pending.size(); ++fi) {
            if (done[fi]) continue;
            int unsigned_edge = -1, unsigned_count = 0, minus = 0;
            for (int ei : pending[fi].cycle) {
                if (w.sign[ei] == 0) {
                    unsigned_edge = ei;
                    ++unsigned_count;
                } else if (w.sign[ei] < 0) {
                    ++minus;
                }
            }
            if (unsigned_count != 1) continue;
            size_t len = pending[fi].cycle.size();
            bool want_odd_minus = (len % 4 == 0);
            bool is_odd_minus = (minus % 2 == 1);
            w.sign[unsigned_edge] = (want_odd_minus == is_odd_minus) ? 1 : -1;
            done[fi] = 1;
            --remaining;
            progress = true;
        }
        if (!progress) throw Error("Kasteleyn weighting: face peeling stalled");
    }
    for (int& s : w.sign)
        if (s == 0) s = 1;  // cotree edges in no bounded face (outer only)

    assert(all_faces_flat(g, w));
    return w;
}

bool all_faces_flat(const EmbeddedGraph& g, const KasteleynWeighting& w) {
    Embedding emb = build_embedding(g);
    for (const Face& f : emb.faces) {
        if (f.outer) continue;
        if (!cycle_flat(face_cycle(f), w.sign)) return false;
    }
    return true;
}

KasteleynMatrix kasteleyn_matrix(const EmbeddedGraph& g, const KasteleynWeighting& w) {
    KasteleynMatrix k;
    for (const Vertex& v : g.vertices)
        (v.color == Color::Black ? k.black_ids : k.white_ids).push_back(v.id);
    std::map<int, int> row, col;
    for (size_t i = 0; i < k.black_ids.size(); ++i) row[k.black_ids[i]] = static_cast<int>(i);
    for (size_t j = 0; j < k.white_ids.size(); ++j) col[k.white_ids[j]] = static_cast<int>(j);
    k.entries.assign(k.black_ids.size(), std::vector<Rat>(k.white_ids.size(), Rat(0)));
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const GraphEdge& e = g.edges[ei];
        int b = g.vertex(e.u).color == Color::Black ? e.u : e.v;
        int wv = (b == e.u) ? e.v : e.u;
        k.entries[row[b]][col[wv]] = w.sign[ei] * e.weight;
    }
    return k;
}

Rat zd_det(const EmbeddedGraph& g) {
    if (g.num_vertices() == 0) return 1;
    long black = std::count_if(g.vertices.begin(), g.vertices.end(),
                               [](const Vertex& v) { return v.color == Color::Black; });
    if (2 * black != g.num_vertices()) return 0;
    KasteleynWeighting w = build_weighting(g);
    KasteleynMatrix k = kasteleyn_matrix(g, w);
    Rat d = det_rational(k.entries);
    return d < 0 ? Rat(-d) : d;
}

SubmatrixReport submatrix_check(const EmbeddedGraph& g, const std::vector<int>& s_labels) {
    NodeColoring c = g.node_coloring();
    long black = 0, white = 0;
    for (int label : s_labels)
        (c.color(label) == Color::Black ? black : white)++;
    if (black != white) throw Error("submatrix_check: unbalanced node set");

    std::set<int> dead;
    for (int label : s_labels) dead.insert(g.node_vertex(label));

    SubmatrixReport report;
    if (g.num_vertices() == 0) {
        report.det_value = 1;
    } else {
        KasteleynWeighting w = build_weighting(g);
        KasteleynMatrix k = kasteleyn_matrix(g, w);
        RatMatrix sub;
        for (size_t i = 0; i < k.black_ids.size(); ++i) {
            if (dead.count(k.black_ids[i])) continue;
            std::vector<Rat> row;
            for (size_t j = 0; j < k.white_ids.size(); ++j)
                if (!dead.count(k.white_ids[j])) row.push_back(k.entries[i][j]);
            sub.push_back(std::move(row));
        }
        Rat d = det_rational(sub);
        report.det_value = d < 0 ? Rat(-d) : d;
    }
    report.oracle = zd_enumerate(delete_nodes(g, s_labels));
    report.ok = report.det_value == report.oracle;
    return report;
}

}  // namespace ddimer
