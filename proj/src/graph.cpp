#include "ddimer/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ddimer {

int EmbeddedGraph::index_of(int id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                               [](const Vertex& v, int key) { return v.id < key; });
    if (it == vertices.end() || it->id != id) return -1;
    return static_cast<int>(it - vertices.begin());
}

const Vertex& EmbeddedGraph::vertex(int id) const {
    int i = index_of(id);
    if (i < 0) throw Error("unknown vertex id " + std::to_string(id));
    return vertices[i];
}

bool EmbeddedGraph::is_node(int id) const {
    return std::find(nodes.begin(), nodes.end(), id) != nodes.end();
}

NodeColoring EmbeddedGraph::node_coloring() const {
    NodeColoring c;
    for (int id : nodes) c.seq.push_back(vertex(id).color);
    return c;
}

namespace {

int orient(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by, const Rat& cx,
           const Rat& cy) {
    Rat d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sgn(d);
}

bool on_segment_interior(const Vertex& a, const Vertex& b, const Vertex& p) {
    if (orient(a.x, a.y, b.x, b.y, p.x, p.y) != 0) return false;
    bool in_x = (p.x > std::min(a.x, b.x) && p.x < std::max(a.x, b.x));
    bool in_y = (p.y > std::min(a.y, b.y) && p.y < std::max(a.y, b.y));
    if (a.x == b.x) return in_y;
    return in_x;
}

bool segments_conflict(const Vertex& a, const Vertex& b, const Vertex& c, const Vertex& d) {
    // shared endpoints are fine; anything else touching is a crossing
    bool share = (a.id == c.id || a.id == d.id || b.id == c.id || b.id == d.id);
    int o1 = orient(a.x, a.y, b.x, b.y, c.x, c.y);
    int o2 = orient(a.x, a.y, b.x, b.y, d.x, d.y);
    int o3 = orient(c.x, c.y, d.x, d.y, a.x, a.y);
    int o4 = orient(c.x, c.y, d.x, d.y, b.x, b.y);
    if (share) {
        // collinear overlap through the shared endpoint
        if (o1 == 0 && o2 == 0) {
            return on_segment_interior(a, b, c) || on_segment_interior(a, b, d) ||
                   on_segment_interior(c, d, a) || on_segment_interior(c, d, b);
        }
        return false;
    }
    if (o1 != o2 && o3 != o4 && o1 * o2 != 0 && o3 * o4 != 0) return true;  // proper cross
    // endpoint of one in the interior of the other, or collinear overlap
    return on_segment_interior(a, b, c) || on_segment_interior(a, b, d) ||
           on_segment_interior(c, d, a) || on_segment_interior(c, d, b);
}

// ccw-from-east angular order of direction vectors, exact
bool angle_less(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) {
    auto half = [](const Rat& x, const Rat& y) {
        return (sgn(y) > 0 || (sgn(y) == 0 && sgn(x) > 0)) ? 0 : 1;
    };
    int ha = half(ax, ay), hb = half(bx, by);
    if (ha != hb) return ha < hb;
    Rat cross = ax * by - ay * bx;
    return sgn(cross) > 0;
}

}  // namespace

Embedding build_embedding(const EmbeddedGraph& g) {
    Embedding e;
    int nv = g.num_vertices();
    e.rotation.assign(nv, {});
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        int ui = g.index_of(g.edges[ei].u);
        int vi = g.index_of(g.edges[ei].v);
        e.rotation[ui].emplace_back(vi, static_cast<int>(ei));
        e.rotation[vi].emplace_back(ui, static_cast<int>(ei));
    }
    for (int v = 0; v < nv; ++v) {
        const Vertex& base = g.vertices[v];
        std::sort(e.rotation[v].begin(), e.rotation[v].end(),
                  [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                      const Vertex& va = g.vertices[a.first];
                      const Vertex& vb = g.vertices[b.first];
                      return angle_less(va.x - base.x, va.y - base.y, vb.x - base.x,
                                        vb.y - base.y);
                  });
    }

    e.component.assign(nv, -1);
    e.num_components = 0;
    for (int start = 0; start < nv; ++start) {
        if (e.component[start] != -1) continue;
        int id = e.num_components++;
        std::vector<int> stack{start};
        e.component[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, ei] : e.rotation[v])
                if (e.component[w] == -1) {
                    e.component[w] = id;
                    stack.push_back(w);
                }
        }
    }

    // face tracing: next dart of (u -> v) is (v -> w), w the ccw-predecessor
    // of u around v; bounded faces come out counterclockwise
    std::map<std::pair<int, int>, bool> used;  // dart (tail, head) by rotation slot
    auto slot_of = [&](int v, int u) {
        for (size_t i = 0; i < e.rotation[v].size(); ++i)
            if (e.rotation[v][i].first == u) return static_cast<int>(i);
        throw Error("embedding: missing rotation slot");
    };
    std::set<std::pair<int, int>> visited;  // darts as (tail, slot index at tail)
    for (int v = 0; v < nv; ++v) {
        for (size_t s = 0; s < e.rotation[v].size(); ++s) {
            if (visited.count({v, static_cast<int>(s)})) continue;
            Face face;
            face.component = e.component[v];
            face.outer = false;
            int cv = v;
            int cs = static_cast<int>(s);
            do {
                visited.insert({cv, cs});
                auto [w, ei] = e.rotation[cv][cs];
                face.vertex_walk.push_back(cv);
                face.edge_walk.push_back(ei);
                int back = slot_of(w, cv);
                int next = (back - 1 + static_cast<int>(e.rotation[w].size())) %
                           static_cast<int>(e.rotation[w].size());
                cv = w;
                cs = next;
            } while (!visited.count({cv, cs}));
            e.faces.push_back(std::move(face));
        }
        if (e.rotation[v].empty()) {
            // isolated vertex: its own outer face
            Face face;
            face.component = e.component[v];
            face.outer = true;
            face.vertex_walk.push_back(v);
            e.faces.push_back(std::move(face));
        }
    }

    // the outer face of a component is the one traced clockwise
    std::vector<int> outer_of(e.num_components, -1);
    for (size_t f = 0; f < e.faces.size(); ++f) {
        Face& face = e.faces[f];
        if (face.edge_walk.empty()) continue;
        Rat twice_area = 0;
        for (size_t i = 0; i < face.vertex_walk.size(); ++i) {
            const Vertex& a = g.vertices[face.vertex_walk[i]];
            const Vertex& b =
                g.vertices[face.vertex_walk[(i + 1) % face.vertex_walk.size()]];
            twice_area += a.x * b.y - b.x * a.y;
        }
        if (sgn(twice_area) < 0) {
            if (outer_of[face.component] != -1)
                throw Error("embedding: two outer faces in one component");
            outer_of[face.component] = static_cast<int>(f);
            face.outer = true;
        }
    }
    // forest components have a single zero-area face
    for (size_t f = 0; f < e.faces.size(); ++f) {
        Face& face = e.faces[f];
        if (!face.edge_walk.empty() && outer_of[face.component] == -1) {
            outer_of[face.component] = static_cast<int>(f);
            face.outer = true;
        }
    }
    return e;
}

std::vector<int> outer_face_ccw(const EmbeddedGraph& g, const Embedding& e, int component) {
    for (const Face& f : e.faces) {
        if (f.component != component || !f.outer) continue;
        std::vector<int> ids;
        for (int vi : f.vertex_walk) ids.push_back(g.vertices[vi].id);
        std::reverse(ids.begin(), ids.end());  // traced walk is clockwise
        return ids;
    }
    throw Error("no outer face for component " + std::to_string(component));
}

namespace {

// Can `labels` be matched, in order, to a cyclic subsequence of `walk`?
bool cyclic_subsequence(const std::vector<int>& labels, const std::vector<int>& walk) {
    if (labels.empty()) return true;
    size_t L = walk.size();
    for (size_t start = 0; start < L; ++start) {
        if (walk[start] != labels[0]) continue;
        size_t pos = 0;  // offset past start
        bool ok = true;
        for (size_t k = 1; k < labels.size(); ++k) {
            ++pos;
            while (pos < L && walk[(start + pos) % L] != labels[k]) ++pos;
            if (pos >= L) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

void validate(const EmbeddedGraph& g) {
    for (size_t i = 1; i < g.vertices.size(); ++i)
        if (g.vertices[i - 1].id >= g.vertices[i].id)
            throw ValidationError("vertex ids must be distinct");
    for (size_t i = 0; i < g.vertices.size(); ++i)
        for (size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i].x == g.vertices[j].x && g.vertices[i].y == g.vertices[j].y)
                throw ValidationError("vertices " + std::to_string(g.vertices[i].id) + " and " +
                                      std::to_string(g.vertices[j].id) +
                                      " share coordinates");
    std::set<std::pair<int, int>> seen_edges;
    for (const GraphEdge& ed : g.edges) {
        if (g.index_of(ed.u) < 0 || g.index_of(ed.v) < 0)
            throw ValidationError("edge endpoint not a vertex");
        if (ed.u == ed.v) throw ValidationError("self-loop");
        if (sgn(ed.weight) <= 0) throw ValidationError("edge weight must be positive");
        if (g.vertex(ed.u).color == g.vertex(ed.v).color)
            throw ValidationError("edge (" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                                  ") joins same-color vertices (bipartite violation)");
        auto key = std::minmax(ed.u, ed.v);
        if (!seen_edges.insert(key).second) throw ValidationError("duplicate edge");
    }

    long black = std::count_if(g.vertices.begin(), g.vertices.end(),
                               [](const Vertex& v) { return v.color == Color::Black; });
    if (2 * black != static_cast<long>(g.vertices.size()))
        throw ValidationError("unbalanced vertex colors");

    // straight-line drawing has no crossings
    for (size_t i = 0; i < g.edges.size(); ++i)
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            const Vertex& a = g.vertex(g.edges[i].u);
            const Vertex& b = g.vertex(g.edges[i].v);
            const Vertex& c = g.vertex(g.edges[j].u);
            const Vertex& d = g.vertex(g.edges[j].v);
            if (segments_conflict(a, b, c, d))
                throw ValidationError("crossing edges (" + std::to_string(a.id) + "," +
                                      std::to_string(b.id) + ") x (" + std::to_string(c.id) +
                                      "," + std::to_string(d.id) + ")");
        }
    for (const Vertex& p : g.vertices)
        for (const GraphEdge& ed : g.edges) {
            if (p.id == ed.u || p.id == ed.v) continue;
            if (on_segment_interior(g.vertex(ed.u), g.vertex(ed.v), p))
                throw ValidationError("vertex " + std::to_string(p.id) +
                                      " lies on edge (" + std::to_string(ed.u) + "," +
                                      std::to_string(ed.v) + ")");
        }

    std::set<int> node_set;
    long node_black = 0;
    for (int id : g.nodes) {
        if (g.index_of(id) < 0) throw ValidationError("node id " + std::to_string(id) +
                                                      " is not a vertex");
        if (!node_set.insert(id).second) throw ValidationError("duplicate node");
        if (g.vertex(id).color == Color::Black) ++node_black;
    }
    if (2 * node_black != static_cast<long>(g.nodes.size()))
        throw ValidationError("unbalanced node colors");

    if (!g.nodes.empty()) {
        Embedding e = build_embedding(g);
        for (int comp = 0; comp < e.num_components; ++comp) {
            std::vector<int> comp_nodes;
            for (int id : g.nodes)
                if (e.component[g.index_of(id)] == comp) comp_nodes.push_back(id);
            if (comp_nodes.empty()) continue;
            std::vector<int> walk = outer_face_ccw(g, e, comp);
            for (int id : comp_nodes)
                if (std::find(walk.begin(), walk.end(), id) == walk.end())
                    throw ValidationError("node " + std::to_string(id) +
                                          " is not on the outer face");
            if (!cyclic_subsequence(comp_nodes, walk))
                throw ValidationError("node order does not match the outer face ccw order");
        }
    }

    if (g.rgb && g.rgb->total() != g.num_nodes())
        throw ValidationError("rgb split does not sum to the node count");
}

EmbeddedGraph parse_graph(const std::string& text) {
    EmbeddedGraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_nodes = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        try {
            if (kind == "vertex") {
                int id;
                std::string color, xs, ys;
                if (!(ls >> id >> color >> xs >> ys))
                    throw Error("expected: vertex <id> <B|W> <x> <y>");
                if (color != "B" && color != "W") throw Error("vertex color must be B or W");
                g.vertices.push_back(
                    {id, color == "B" ? Color::Black : Color::White, parse_rational(xs),
                     parse_rational(ys)});
            } else if (kind == "edge") {
                int u, v;
                std::string ws;
                if (!(ls >> u >> v >> ws)) throw Error("expected: edge <id1> <id2> <weight>");
                g.edges.push_back({u, v, parse_rational(ws)});
            } else if (kind == "nodes") {
                if (saw_nodes) throw Error("duplicate nodes line");
                saw_nodes = true;
                int id;
                while (ls >> id) g.nodes.push_back(id);
            } else if (kind == "rgb") {
                RgbSplit split;
                if (!(ls >> split.r >> split.g >> split.b))
                    throw Error("expected: rgb <r> <g> <b>");
                if (split.r < 0 || split.g < 0 || split.b < 0)
                    throw Error("rgb counts must be nonnegative");
                g.rgb = split;
            } else {
                throw Error("unknown directive '" + kind + "'");
            }
            std::string rest;
            if (ls >> rest) throw Error("trailing token '" + rest + "'");
        } catch (const Error& err) {
            throw ParseError(lineno, err.what());
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    validate(g);
    return g;
}

std::string serialize(const EmbeddedGraph& g) {
    std::ostringstream out;
    for (const Vertex& v : g.vertices)
        out << "vertex " << v.id << ' ' << (v.color == Color::Black ? 'B' : 'W') << ' '
            << rat_str(v.x) << ' ' << rat_str(v.y) << '\n';
    for (const GraphEdge& e : g.edges)
        out << "edge " << e.u << ' ' << e.v << ' ' << rat_str(e.weight) << '\n';
    if (!g.nodes.empty()) {
        out << "nodes";
        for (int id : g.nodes) out << ' ' << id;
        out << '\n';
    }
    if (g.rgb) out << "rgb " << g.rgb->r << ' ' << g.rgb->g << ' ' << g.rgb->b << '\n';
    return out.str();
}

std::string graph_json(const EmbeddedGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Vertex& v : g.vertices)
        j["vertices"].push_back({{"id", v.id},
                                 {"color", v.color == Color::Black ? "B" : "W"},
                                 {"x", rat_str(v.x)},
                                 {"y", rat_str(v.y)}});
    j["edges"] = nlohmann::json::array();
    for (const GraphEdge& e : g.edges)
        j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", rat_str(e.weight)}});
    j["nodes"] = g.nodes;
    if (g.rgb) j["rgb"] = {g.rgb->r, g.rgb->g, g.rgb->b};
    return j.dump(2);
}

namespace {

RgbSplit surviving_split(const RgbSplit& split, const std::vector<bool>& keep) {
    RgbSplit out;
    for (size_t i = 0; i < keep.size(); ++i) {
        if (!keep[i]) continue;
        int cls = split.class_of(static_cast<int>(i) + 1);
        (cls == 0 ? out.r : cls == 1 ? out.g : out.b)++;
    }
    return out;
}

}  // namespace

EmbeddedGraph delete_nodes(const EmbeddedGraph& g, const std::vector<int>& labels) {
    std::vector<bool> keep(g.num_nodes(), true);
    std::set<int> dead_ids;
    for (int label : labels) {
        if (label < 1 || label > g.num_nodes())
            throw Error("unknown node label " + std::to_string(label));
        keep[label - 1] = false;
        dead_ids.insert(g.node_vertex(label));
    }
    EmbeddedGraph out;
    for (const Vertex& v : g.vertices)
        if (!dead_ids.count(v.id)) out.vertices.push_back(v);
    for (const GraphEdge& e : g.edges)
        if (!dead_ids.count(e.u) && !dead_ids.count(e.v)) out.edges.push_back(e);
    for (int label = 1; label <= g.num_nodes(); ++label)
        if (keep[label - 1]) out.nodes.push_back(g.node_vertex(label));
    if (g.rgb) out.rgb = surviving_split(*g.rgb, keep);
    return out;
}

EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::vector<int>& ids) {
    std::set<int> dead(ids.begin(), ids.end());
    for (int id : ids)
        if (g.index_of(id) < 0) throw Error("unknown vertex id " + std::to_string(id));
    EmbeddedGraph out;
    for (const Vertex& v : g.vertices)
        if (!dead.count(v.id)) out.vertices.push_back(v);
    for (const GraphEdge& e : g.edges)
        if (!dead.count(e.u) && !dead.count(e.v)) out.edges.push_back(e);
    for (int id : g.nodes)
        if (!dead.count(id)) out.nodes.push_back(id);
    return out;
}

EmbeddedGraph restrict_nodes(const EmbeddedGraph& g, const std::vector<int>& keep_labels) {
    std::vector<bool> keep(g.num_nodes(), false);
    for (int label : keep_labels) {
        if (label < 1 || label > g.num_nodes())
            throw Error("unknown node label " + std::to_string(label));
        keep[label - 1] = true;
    }
    EmbeddedGraph out = g;
    out.nodes.clear();
    for (int label = 1; label <= g.num_nodes(); ++label)
        if (keep[label - 1]) out.nodes.push_back(g.node_vertex(label));
    if (g.rgb) out.rgb = surviving_split(*g.rgb, keep);
    return out;
}

}  // namespace ddimer
