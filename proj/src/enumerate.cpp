#include "ddimer/enumerate.hpp"

#include <atomic>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ddimer {

namespace {

struct Workspace {
    const EmbeddedGraph* g;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex idx -> (edge idx, other idx)
    std::vector<int> node_label;                        // vertex idx -> label or 0
    std::vector<int> full_budget;                       // 2 internal, 1 node

    explicit Workspace(const EmbeddedGraph& graph) : g(&graph) {
        int nv = graph.num_vertices();
        adj.assign(nv, {});
        node_label.assign(nv, 0);
        full_budget.assign(nv, 2);
        for (size_t ei = 0; ei < graph.edges.size(); ++ei) {
            int u = graph.index_of(graph.edges[ei].u);
            int v = graph.index_of(graph.edges[ei].v);
            adj[u].emplace_back(static_cast<int>(ei), v);
            adj[v].emplace_back(static_cast<int>(ei), u);
        }
        for (int label = 1; label <= graph.num_nodes(); ++label) {
            int vi = graph.index_of(graph.node_vertex(label));
            node_label[vi] = label;
            full_budget[vi] = 1;
        }
    }
};

struct StateCounter {
    std::atomic<long long> used{0};
    long long cap;
    explicit StateCounter(long long c) : cap(c) {}
    void add(long long amount) {
        if (used.fetch_add(amount, std::memory_order_relaxed) + amount > cap)
            throw CapExceeded("enumeration exceeded " + std::to_string(cap) +
                              " partial states");
    }
};

// batches cap accounting so the shared atomic is touched rarely
struct Ticker {
    StateCounter* shared;
    long long local = 0;
    explicit Ticker(StateCounter& c) : shared(&c) {}
    void tick() {
        if (++local >= 8192) flush();
    }
    void flush() {
        if (local > 0) {
            shared->add(local);
            local = 0;
        }
    }
};

// ---- perfect matchings ----

struct MatchState {
    std::vector<char> covered;
    Rat weight;
};

void match_rec(const Workspace& ws, MatchState& st, Ticker& ticker, Rat& total) {
    ticker.tick();
    int nv = static_cast<int>(st.covered.size());
    int first = -1;
    for (int v = 0; v < nv; ++v)
        if (!st.covered[v]) {
            first = v;
            break;
        }
    if (first < 0) {
        total += st.weight;
        return;
    }
    for (auto [ei, other] : ws.adj[first]) {
        if (st.covered[other]) continue;
        st.covered[first] = st.covered[other] = 1;
        Rat saved = st.weight;
        st.weight *= ws.g->edges[ei].weight;
        match_rec(ws, st, ticker, total);
        st.weight = saved;
        st.covered[first] = st.covered[other] = 0;
    }
}

// expand the recursion tree breadth-first into independent tasks
std::vector<MatchState> match_frontier(const Workspace& ws, int min_tasks) {
    std::vector<MatchState> frontier{{std::vector<char>(ws.adj.size(), 0), Rat(1)}};
    for (int depth = 0; depth < 8 && static_cast<int>(frontier.size()) < min_tasks; ++depth) {
        std::vector<MatchState> next;
        for (const MatchState& st : frontier) {
            int nv = static_cast<int>(st.covered.size());
            int first = -1;
            for (int v = 0; v < nv; ++v)
                if (!st.covered[v]) {
                    first = v;
                    break;
                }
            if (first < 0) {
                next.push_back(st);
                continue;
            }
            for (auto [ei, other] : ws.adj[first]) {
                if (st.covered[other]) continue;
                MatchState child = st;
                child.covered[first] = child.covered[other] = 1;
                child.weight *= ws.g->edges[ei].weight;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
        bool all_done = true;
        for (const MatchState& st : frontier)
            for (char c : st.covered) all_done = all_done && c;
        if (all_done) break;
    }
    return frontier;
}

}  // namespace

Rat zd_enumerate_serial(const EmbeddedGraph& g, const EnumOptions& opts) {
    if (g.num_vertices() == 0) return 1;
    Workspace ws(g);
    StateCounter counter(opts.cap);
    Ticker ticker(counter);
    MatchState st{std::vector<char>(g.num_vertices(), 0), Rat(1)};
    Rat total = 0;
    match_rec(ws, st, ticker, total);
    ticker.flush();
    return total;
}

Rat zd_enumerate(const EmbeddedGraph& g, const EnumOptions& opts) {
    if (!opts.parallel) return zd_enumerate_serial(g, opts);
    if (g.num_vertices() == 0) return 1;
    Workspace ws(g);
    StateCounter counter(opts.cap);
    std::vector<MatchState> frontier = match_frontier(ws, 64);
    std::vector<Rat> partial(frontier.size(), Rat(0));
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < frontier.size(); ++i) {
        try {
            Ticker ticker(counter);
            MatchState st = frontier[i];
            match_rec(ws, st, ticker, partial[i]);
            ticker.flush();
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    Rat total = 0;
    for (const Rat& p : partial) total += p;
    return total;
}

// ---- double-dimer configurations ----

DoubleDimerConfig decompose_config(const EmbeddedGraph& g,
                                   const std::vector<uint8_t>& multiplicity) {
    Workspace ws(g);
    DoubleDimerConfig cfg;
    cfg.multiplicity = multiplicity;
    cfg.weight = 1;
    int nv = g.num_vertices();

    std::vector<std::vector<std::pair<int, int>>> single(nv);  // (edge idx, other)
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (multiplicity[ei] == 0) continue;
        cfg.weight *= g.edges[ei].weight;
        if (multiplicity[ei] == 2) cfg.weight *= g.edges[ei].weight;
        if (multiplicity[ei] == 1) {
            int u = g.index_of(g.edges[ei].u);
            int v = g.index_of(g.edges[ei].v);
            single[u].emplace_back(static_cast<int>(ei), v);
            single[v].emplace_back(static_cast<int>(ei), u);
        }
    }

    std::vector<char> edge_seen(g.edges.size(), 0);
    std::vector<std::pair<int, int>> pairs;
    for (int label = 1; label <= g.num_nodes(); ++label) {
        int v = g.index_of(g.node_vertex(label));
        bool fresh = false;
        for (auto [ei, other] : single[v]) fresh = fresh || !edge_seen[ei];
        if (!fresh) continue;  // already the end of an earlier walk
        int cur = v;
        int came_from_edge = -1;
        while (true) {
            int next_edge = -1, next_vertex = -1;
            for (auto [ei, other] : single[cur])
                if (ei != came_from_edge && !edge_seen[ei]) {
                    next_edge = ei;
                    next_vertex = other;
                    break;
                }
            assert(next_edge >= 0);
            edge_seen[next_edge] = 1;
            cur = next_vertex;
            came_from_edge = next_edge;
            if (ws.node_label[cur] != 0) break;
        }
        pairs.emplace_back(label, ws.node_label[cur]);
    }
    cfg.pairing = Pairing::from_pairs(g.num_nodes(), pairs);

    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        if (multiplicity[ei] != 1 || edge_seen[ei]) continue;
        ++cfg.loops;
        int start = g.index_of(g.edges[ei].u);
        int cur = start;
        int came_from_edge = -1;
        do {
            int next_edge = -1, next_vertex = -1;
            for (auto [e2, other] : single[cur])
                if (e2 != came_from_edge && !edge_seen[e2]) {
                    next_edge = e2;
                    next_vertex = other;
                    break;
                }
            assert(next_edge >= 0);
            edge_seen[next_edge] = 1;
            cur = next_vertex;
            came_from_edge = next_edge;
        } while (cur != start);
        cfg.weight *= 2;
    }
    return cfg;
}

namespace {

struct DDState {
    int next_edge = 0;
    std::vector<int> budget;   // remaining degree per vertex index
    std::vector<int> rem_cap;  // 2 * unprocessed incident edges
    std::vector<uint8_t> mult;
};

DDState dd_initial(const Workspace& ws) {
    DDState st;
    st.budget = ws.full_budget;
    st.rem_cap.assign(ws.adj.size(), 0);
    for (size_t v = 0; v < ws.adj.size(); ++v)
        st.rem_cap[v] = 2 * static_cast<int>(ws.adj[v].size());
    st.mult.assign(ws.g->edges.size(), 0);
    return st;
}

void dd_rec(const Workspace& ws, DDState& st, Ticker& ticker,
            std::map<Pairing, Rat>& sums) {
    ticker.tick();
    const EmbeddedGraph& g = *ws.g;
    if (st.next_edge == static_cast<int>(g.edges.size())) {
        for (int b : st.budget)
            if (b != 0) return;
        DoubleDimerConfig cfg = decompose_config(g, st.mult);
        sums[cfg.pairing] += cfg.weight;
        return;
    }
    int ei = st.next_edge;
    int u = g.index_of(g.edges[ei].u);
    int v = g.index_of(g.edges[ei].v);
    st.next_edge++;
    st.rem_cap[u] -= 2;
    st.rem_cap[v] -= 2;
    int max_m = std::min({2, st.budget[u], st.budget[v]});
    for (int m = 0; m <= max_m; ++m) {
        st.budget[u] -= m;
        st.budget[v] -= m;
        if (st.budget[u] <= st.rem_cap[u] && st.budget[v] <= st.rem_cap[v]) {
            st.mult[ei] = static_cast<uint8_t>(m);
            dd_rec(ws, st, ticker, sums);
            st.mult[ei] = 0;
        }
        st.budget[u] += m;
        st.budget[v] += m;
    }
    st.next_edge--;
    st.rem_cap[u] += 2;
    st.rem_cap[v] += 2;
}

std::vector<DDState> dd_frontier(const Workspace& ws, int min_tasks) {
    const EmbeddedGraph& g = *ws.g;
    std::vector<DDState> frontier{dd_initial(ws)};
    int ne = static_cast<int>(g.edges.size());
    while (!frontier.empty() && frontier[0].next_edge < ne &&
           static_cast<int>(frontier.size()) < min_tasks) {
        std::vector<DDState> next;
        for (const DDState& st : frontier) {
            int ei = st.next_edge;
            int u = g.index_of(g.edges[ei].u);
            int v = g.index_of(g.edges[ei].v);
            for (int m = 0; m <= std::min({2, st.budget[u], st.budget[v]}); ++m) {
                DDState child = st;
                child.next_edge = ei + 1;
                child.rem_cap[u] -= 2;
                child.rem_cap[v] -= 2;
                child.budget[u] -= m;
                child.budget[v] -= m;
                child.mult[ei] = static_cast<uint8_t>(m);
                if (child.budget[u] <= child.rem_cap[u] && child.budget[v] <= child.rem_cap[v])
                    next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

void dd_continue(const Workspace& ws, const DDState& start, StateCounter& counter,
                 std::map<Pairing, Rat>& sums) {
    Ticker ticker(counter);
    DDState st = start;
    dd_rec(ws, st, ticker, sums);
    ticker.flush();
}

}  // namespace

std::map<Pairing, Rat> all_pairing_sums_serial(const EmbeddedGraph& g,
                                               const EnumOptions& opts) {
    Workspace ws(g);
    StateCounter counter(opts.cap);
    Ticker ticker(counter);
    std::map<Pairing, Rat> sums;
    DDState st = dd_initial(ws);
    dd_rec(ws, st, ticker, sums);
    ticker.flush();
    return sums;
}

std::map<Pairing, Rat> all_pairing_sums(const EmbeddedGraph& g, const EnumOptions& opts) {
    if (!opts.parallel) return all_pairing_sums_serial(g, opts);
    Workspace ws(g);
    StateCounter counter(opts.cap);
    std::vector<DDState> frontier = dd_frontier(ws, 64);
    std::vector<std::map<Pairing, Rat>> partial(frontier.size());
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < frontier.size(); ++i) {
        try {
            dd_continue(ws, frontier[i], counter, partial[i]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::map<Pairing, Rat> sums;
    for (auto& part : partial)
        for (auto& [pairing, value] : part) sums[pairing] += value;
    return sums;
}

Rat zdd_enumerate(const EmbeddedGraph& g, const Pairing& sigma, const EnumOptions& opts) {
    if (sigma.size() != g.num_nodes())
        throw Error("pairing size does not match the node count");
    auto sums = all_pairing_sums(g, opts);
    auto it = sums.find(sigma);
    return it == sums.end() ? Rat(0) : it->second;
}

Rat pr_tilde_oracle(const EmbeddedGraph& g, const Pairing& sigma, const EnumOptions& opts) {
    Rat zd = zd_enumerate(g, opts);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");
    Rat r = zdd_enumerate(g, sigma, opts) / (zd * zd);
    r.canonicalize();
    return r;
}

}  // namespace ddimer
