#include "ddimer/verify.hpp"

#include <algorithm>
#include <set>

#include "ddimer/enumerate.hpp"
#include "ddimer/instances.hpp"
#include "ddimer/kasteleyn.hpp"
#include "ddimer/qdd.hpp"
#include "ddimer/tripartite.hpp"
#include "json.hpp"

namespace ddimer {

namespace {

using nlohmann::json;

json instance_header(const EmbeddedGraph& g, uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["vertices"] = g.num_vertices();
    j["edges"] = g.edges.size();
    j["nodes"] = g.num_nodes();
    return j;
}

json run_tripartite_instance(uint64_t seed, long long cap) {
    Rng rng(seed);
    InstanceSpec spec;
    spec.node_count = 4 + 2 * rng.uniform(0, 2);  // 4, 6 or 8
    spec.require_nonzero_zd = true;
    EmbeddedGraph g = gen_grid_instance(rng, spec);

    EnumOptions opts;
    opts.cap = cap;
    Rat zd = zd_enumerate(g, opts);
    auto sums = all_pairing_sums(g, opts);

    json j = instance_header(g, seed);
    json splits = json::array();
    bool ok = true;
    for (const RgbSplit& split : all_valid_splits(g.num_nodes())) {
        Pairing sigma = rgb_pairing(g.num_nodes(), split);
        Rat oracle = 0;
        if (auto it = sums.find(sigma); it != sums.end()) oracle = it->second;
        oracle /= zd * zd;
        oracle.canonicalize();
        Rat formula = tripartite_pr(g, split);
        bool match = formula == oracle;
        ok = ok && match;
        splits.push_back({{"split", {split.r, split.g, split.b}},
                          {"pr", rat_str(formula)},
                          {"oracle", rat_str(oracle)},
                          {"ok", match}});
    }
    j["splits"] = splits;
    j["ok"] = ok;
    return j;
}

json run_kuo_instance(uint64_t seed, long long cap) {
    Rng rng(seed);
    InstanceSpec spec;
    spec.rows = rng.uniform(3, 4);
    spec.cols = 4;
    spec.node_count = 0;
    spec.delete_percent = rng.uniform(10, 30);
    EmbeddedGraph g = gen_grid_instance(rng, spec);

    // a,b,c,d in cyclic order on some face, alternating color classes
    Embedding emb = build_embedding(g);
    int a = 0, b = 0, c = 0, d = 0;
    bool found = false;
    for (int tries = 0; tries < 4000 && !found; ++tries) {
        const Face& f = emb.faces[rng.uniform(0, static_cast<int>(emb.faces.size()) - 1)];
        std::vector<int> distinct;
        for (int vi : f.vertex_walk) {
            int id = g.vertices[vi].id;
            if (std::find(distinct.begin(), distinct.end(), id) == distinct.end())
                distinct.push_back(id);
        }
        if (distinct.size() < 4) continue;
        std::set<int> pick;
        while (pick.size() < 4)
            pick.insert(rng.uniform(0, static_cast<int>(distinct.size()) - 1));
        std::vector<int> quad;
        for (int at : pick) quad.push_back(distinct[at]);
        auto color = [&](int id) { return g.vertex(id).color; };
        if (color(quad[0]) == color(quad[2]) && color(quad[1]) == color(quad[3]) &&
            color(quad[0]) != color(quad[1])) {
            a = quad[0];
            b = quad[1];
            c = quad[2];
            d = quad[3];
            found = true;
        }
    }
    json j = instance_header(g, seed);
    if (!found) {
        j["skipped"] = "no face quadruple";
        j["ok"] = true;
        return j;
    }
    KuoReport rep = kuo_check(g, a, b, c, d);
    bool ok = rep.ok;
    j["quad"] = {a, b, c, d};
    j["values"] = rep.str();

    if (g.num_vertices() <= 14) {
        EnumOptions opts;
        opts.cap = cap;
        ok = ok && zd_det(g) == zd_enumerate(g, opts);
        j["enumeration_cross_check"] = ok;
    }
    j["ok"] = ok;
    return j;
}

json run_condense_instance(uint64_t seed, long long cap) {
    Rng rng(seed);
    InstanceSpec spec;
    spec.node_count = 6 + 2 * rng.uniform(0, 1);  // 6 or 8
    spec.require_nonzero_zd = true;
    spec.delete_percent = 20;
    EmbeddedGraph g = gen_grid_instance(rng, spec);
    NodeColoring c = g.node_coloring();

    auto splits = all_valid_splits(g.num_nodes());
    RgbSplit split = splits[rng.uniform(0, static_cast<int>(splits.size()) - 1)];

    // x,w in one bipartite class, y,v in the other
    std::vector<int> blacks, whites;
    for (int i = 1; i <= g.num_nodes(); ++i)
        (c.color(i) == Color::Black ? blacks : whites).push_back(i);
    int x = blacks[rng.uniform(0, static_cast<int>(blacks.size()) - 1)];
    int w = x;
    while (w == x) w = blacks[rng.uniform(0, static_cast<int>(blacks.size()) - 1)];
    int y = whites[rng.uniform(0, static_cast<int>(whites.size()) - 1)];
    int v = y;
    while (v == y) v = whites[rng.uniform(0, static_cast<int>(whites.size()) - 1)];

    CondensationReport rep = dd_condensation_check(g, split, x, y, w, v);
    bool ok = rep.ok;

    json j = instance_header(g, seed);
    // oracle confirmation of every existing factor on small graphs
    if (g.num_vertices() <= 14) {
        EnumOptions opts;
        opts.cap = cap;
        Rat zd = zd_enumerate(g, opts);
        bool oracle_ok = zd != 0;
        for (const CondensationTerm* t :
             {&rep.base, &rep.xy, &rep.wv, &rep.xv, &rep.wy, &rep.xywv}) {
            if (!t->exists || !oracle_ok) continue;
            std::set<int> removed(t->removed.begin(), t->removed.end());
            std::vector<int> keep;
            for (int label = 1; label <= g.num_nodes(); ++label)
                if (!removed.count(label)) keep.push_back(label);
            EmbeddedGraph inst = restrict_nodes(g, keep);
            Pairing sigma = Pairing::parse(inst.num_nodes(), t->pairing);
            Rat oracle = zdd_enumerate(inst, sigma, opts);
            oracle_ok = oracle_ok && oracle == t->zdd;
        }
        j["oracle_factors_ok"] = oracle_ok;
        ok = ok && oracle_ok;
    }
    j["report"] = json::parse(rep.json());
    j["ok"] = ok;
    return j;
}

json run_kasteleyn_instance(uint64_t seed, long long cap) {
    Rng rng(seed);
    InstanceSpec spec;
    spec.rows = rng.uniform(2, 4);
    spec.cols = rng.uniform(3, 4);
    spec.node_count = 4 + 2 * rng.uniform(0, 2);
    EmbeddedGraph g = gen_grid_instance(rng, spec);

    EnumOptions opts;
    opts.cap = cap;
    json j = instance_header(g, seed);
    bool ok = zd_det(g) == zd_enumerate(g, opts);
    j["det_equals_enumeration"] = ok;

    json subs = json::array();
    for (int k = 0; k < 3; ++k) {
        std::vector<int> s = random_balanced_node_set(rng, g.node_coloring());
        SubmatrixReport rep = submatrix_check(g, s);
        subs.push_back({{"s", s},
                        {"det", rat_str(rep.det_value)},
                        {"oracle", rat_str(rep.oracle)},
                        {"ok", rep.ok}});
        ok = ok && rep.ok;
    }
    j["submatrix_checks"] = subs;
    j["ok"] = ok;
    return j;
}

json run_signs_exhaustive() {
    json j;
    bool ok = true;
    long master_checked = 0, set_checked = 0, split_checked = 0;
    for (int two_n = 2; two_n <= 8; two_n += 2) {
        auto colorings = all_balanced_colorings(two_n);
        auto oe = all_odd_even_pairings(two_n);
        for (const NodeColoring& c : colorings) {
            auto bw = all_black_white_pairings(c);
            for (const Pairing& rho : bw) {
                int lhs = sign_cons(c) * sign_bw(rho, c);
                for (auto [b, w] : rho.pairs()) lhs *= sign_pair(c, b, w);
                int rhs = crossings(rho) % 2 == 0 ? 1 : -1;
                ok = ok && lhs == rhs;
                ++master_checked;
            }
            // sign_set routes agree on every balanced subset
            std::vector<int> blacks, whites;
            for (int i = 1; i <= two_n; ++i)
                (c.color(i) == Color::Black ? blacks : whites).push_back(i);
            int nb = static_cast<int>(blacks.size());
            for (int mb = 0; mb < (1 << nb); ++mb)
                for (int mw = 0; mw < (1 << nb); ++mw) {
                    if (__builtin_popcount(mb) != __builtin_popcount(mw)) continue;
                    std::vector<int> s;
                    for (int i = 0; i < nb; ++i) {
                        if ((mb >> i) & 1) s.push_back(blacks[i]);
                        if ((mw >> i) & 1) s.push_back(whites[i]);
                    }
                    std::sort(s.begin(), s.end());
                    ok = ok && sign_set_definitional(s, c) == sign_set_formula(s, c);
                    ++set_checked;
                }
            // split counts
            std::vector<bool> in_t(two_n + 1, false);
            for (int x : t_set(c)) in_t[x] = true;
            for (const Pairing& pi : oe)
                for (const Pairing& rho : bw) {
                    auto splits = admissible_splits(pi, rho, c);
                    size_t expect = size_t{1} << components(pi, rho);
                    bool good = splits.size() == expect;
                    std::set<std::vector<int>> uniq(splits.begin(), splits.end());
                    good = good && uniq.size() == expect;
                    for (const auto& s : splits) {
                        good = good && !connects(rho, s);
                        std::vector<int> sxt;
                        std::vector<bool> in_s(two_n + 1, false);
                        for (int x : s) in_s[x] = true;
                        for (int i = 1; i <= two_n; ++i)
                            if (in_s[i] != in_t[i]) sxt.push_back(i);
                        good = good && !connects(pi, sxt);
                    }
                    ok = ok && good;
                    ++split_checked;
                }
        }
    }
    j["master_identity_cases"] = master_checked;
    j["sign_set_cases"] = set_checked;
    j["split_count_cases"] = split_checked;
    j["ok"] = ok;
    return j;
}

}  // namespace

SuiteResult run_suite(const std::string& name, uint64_t seed, int count, long long cap) {
    SuiteResult result;
    json out;
    out["suite"] = name;
    out["seed"] = seed;
    json instances = json::array();

    if (name == "signs") {
        json j = run_signs_exhaustive();
        result.pass = j["ok"].get<bool>();
        instances.push_back(j);
    } else {
        std::function<json(uint64_t, long long)> runner;
        if (name == "kuo")
            runner = run_kuo_instance;
        else if (name == "condense")
            runner = run_condense_instance;
        else if (name == "tripartite")
            runner = run_tripartite_instance;
        else if (name == "kasteleyn")
            runner = run_kasteleyn_instance;
        else
            throw Error("unknown suite '" + name + "'");

        std::vector<json> slots(count);
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) slots[i] = runner(derive_seed(seed, i), cap);
        for (int i = 0; i < count; ++i) {
            result.pass = result.pass && slots[i]["ok"].get<bool>();
            instances.push_back(slots[i]);
        }
    }
    out["count"] = instances.size();
    out["instances"] = instances;
    out["pass"] = result.pass;
    result.report = out.dump(2);
    return result;
}

}  // namespace ddimer
