#include "ddimer/tripartite.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "ddimer/kasteleyn.hpp"
#include "json.hpp"

namespace ddimer {

namespace {

RatMatrix masked_y_entries(const EmbeddedGraph& g, const Rat& zd,
                           const std::vector<int>& black_labels,
                           const std::vector<int>& white_labels,
                           const std::function<bool(int, int)>& keep) {
    RatMatrix m(black_labels.size(), std::vector<Rat>(white_labels.size(), Rat(0)));
    for (size_t i = 0; i < black_labels.size(); ++i)
        for (size_t j = 0; j < white_labels.size(); ++j) {
            int b = black_labels[i], w = white_labels[j];
            if (!keep(b, w)) continue;
            Rat y = zd_det(delete_nodes(g, {b, w})) / zd;
            y.canonicalize();
            m[i][j] = y;
        }
    return m;
}

void split_labels(const NodeColoring& c, std::vector<int>& black_labels,
                  std::vector<int>& white_labels) {
    for (int i = 1; i <= c.size(); ++i)
        (c.color(i) == Color::Black ? black_labels : white_labels).push_back(i);
}

}  // namespace

Rat y_value(const EmbeddedGraph& g, int i, int j) {
    NodeColoring c = g.node_coloring();
    if (c.color(i) == c.color(j)) return 0;
    Rat zd = zd_det(g);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");
    Rat y = zd_det(delete_nodes(g, {i, j})) / zd;
    y.canonicalize();
    return y;
}

YMatrix y_matrix(const EmbeddedGraph& g, const RgbSplit& split) {
    if (split.total() != g.num_nodes()) throw Error("rgb split does not cover the nodes");
    Rat zd = zd_det(g);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");
    YMatrix m;
    split_labels(g.node_coloring(), m.black_labels, m.white_labels);
    m.entries = masked_y_entries(g, zd, m.black_labels, m.white_labels, [&](int b, int w) {
        return split.class_of(b) != split.class_of(w);
    });
    return m;
}

Rat tripartite_pr(const EmbeddedGraph& g, const RgbSplit& split) {
    Pairing sigma = rgb_pairing(g.num_nodes(), split);  // NoTripartitePairing if invalid
    YMatrix m = y_matrix(g, split);
    Rat pr = sign_oe(sigma) * det_rational(m.entries);
    pr.canonicalize();
    return pr;
}

PfaffianResult tripartite_pfaffian(const EmbeddedGraph& g, const RgbSplit& split) {
    Pairing sigma = rgb_pairing(g.num_nodes(), split);
    NodeColoring c = g.node_coloring();
    Rat zd = zd_det(g);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");
    int two_n = g.num_nodes();
    RatMatrix a(two_n, std::vector<Rat>(two_n, Rat(0)));
    for (int i = 1; i <= two_n; ++i)
        for (int j = i + 1; j <= two_n; ++j) {
            if (split.class_of(i) == split.class_of(j)) continue;
            if (c.color(i) == c.color(j)) continue;
            Rat y = zd_det(delete_nodes(g, {i, j})) / zd;
            y.canonicalize();
            Rat entry = sign_pair(c, i, j) * y;
            a[i - 1][j - 1] = entry;
            a[j - 1][i - 1] = -entry;
        }
    PfaffianResult res;
    res.pf = pfaffian(a);
    res.sign_cons_n = sign_cons(c);
    res.sign_oe_sigma = sign_oe(sigma);
    res.pr = res.sign_cons_n * res.sign_oe_sigma * res.pf;
    res.pr.canonicalize();
    return res;
}

CheckerboardReport checkerboard_t(const NodeColoring& c) {
    std::vector<int> blacks, whites;
    split_labels(c, blacks, whites);
    size_t n = blacks.size();
    CheckerboardReport rep;
    rep.sign_cons_n = sign_cons(c);
    int floor_sum = 0;
    for (int ni : couples(c).all) floor_sum += ni / 2;
    rep.floor_sum_parity = floor_sum % 2;
    if (n == 0) {
        rep.t_parity = 0;
        rep.formula_holds = rep.sign_cons_n == 1;
        return rep;
    }
    // d[r][c] = 1 where the entry sign differs from the target checkerboard
    std::vector<std::vector<int>> d(n, std::vector<int>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t col = 0; col < n; ++col) {
            int b = blacks[r], w = whites[col];
            int s = sign_pair(c, b, w) * (b > w ? -1 : 1);
            int target = ((r + col) % 2 == 0) ? 1 : -1;
            d[r][col] = (s == target) ? 0 : 1;
        }
    // solve f_r xor g_c = d[r][c] with g_0 = 0
    std::vector<int> f(n), g(n);
    g[0] = 0;
    for (size_t r = 0; r < n; ++r) f[r] = d[r][0];
    for (size_t col = 0; col < n; ++col) g[col] = d[0][col] ^ f[0];
    for (size_t r = 0; r < n; ++r)
        for (size_t col = 0; col < n; ++col)
            if ((f[r] ^ g[col]) != d[r][col])
                throw Error("checkerboard structure violated (not block-staggered)");
    int t = 0;
    for (size_t r = 0; r < n; ++r) t += f[r] + g[r];
    rep.t_parity = t % 2;

    int rhs = (rep.sign_cons_n == 1 ? 0 : 1) ^ rep.floor_sum_parity;
    if (c.color(1) == Color::White && n % 2 == 1) rhs ^= 1;
    rep.formula_holds = rep.t_parity == rhs;
    return rep;
}

Rat balanced_set_det(const EmbeddedGraph& g, const std::vector<int>& s_labels) {
    NodeColoring c = g.node_coloring();
    Rat zd = zd_det(g);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");
    std::set<int> in_s(s_labels.begin(), s_labels.end());
    std::vector<int> blacks, whites;
    split_labels(c, blacks, whites);
    RatMatrix m = masked_y_entries(g, zd, blacks, whites, [&](int b, int w) {
        return in_s.count(b) == in_s.count(w);
    });
    for (size_t i = 0; i < blacks.size(); ++i)
        for (size_t j = 0; j < whites.size(); ++j)
            m[i][j] *= sign_pair(c, blacks[i], whites[j]);
    Rat result = sign_cons(c) * sign_set_definitional(s_labels, c) * det_rational(m);
    result.canonicalize();
    return result;
}

namespace {

// order appearances of `labels` as a cyclic subsequence of `walk`
bool cyclic_order_on_walk(const std::vector<int>& labels, const std::vector<int>& walk) {
    size_t L = walk.size();
    for (size_t start = 0; start < L; ++start) {
        if (walk[start] != labels[0]) continue;
        size_t pos = 0;
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

std::string KuoReport::str() const {
    std::ostringstream out;
    out << "Z=" << rat_str(z) << " Z(abcd)=" << rat_str(z_abcd) << " Z(ab)=" << rat_str(z_ab)
        << " Z(cd)=" << rat_str(z_cd) << " Z(ad)=" << rat_str(z_ad)
        << " Z(bc)=" << rat_str(z_bc) << (ok ? " ok" : " MISMATCH");
    return out.str();
}

KuoReport kuo_check(const EmbeddedGraph& g, int a, int b, int c, int d) {
    const Vertex &va = g.vertex(a), &vb = g.vertex(b), &vc = g.vertex(c), &vd = g.vertex(d);
    if (va.color != vc.color || vb.color != vd.color || va.color == vb.color)
        throw Error("kuo_check: need a,c in one color class and b,d in the other");
    Embedding emb = build_embedding(g);
    bool found = false;
    for (const Face& f : emb.faces) {
        std::vector<int> walk;
        for (int vi : f.vertex_walk) walk.push_back(g.vertices[vi].id);
        std::set<int> on_face(walk.begin(), walk.end());
        if (!on_face.count(a) || !on_face.count(b) || !on_face.count(c) || !on_face.count(d))
            continue;
        if (cyclic_order_on_walk({a, b, c, d}, walk) ||
            cyclic_order_on_walk({a, d, c, b}, walk)) {
            found = true;
            break;
        }
    }
    if (!found) throw Error("kuo_check: vertices are not in cyclic order on a common face");

    KuoReport rep;
    rep.z = zd_det(g);
    rep.z_abcd = zd_det(delete_vertices(g, {a, b, c, d}));
    rep.z_ab = zd_det(delete_vertices(g, {a, b}));
    rep.z_cd = zd_det(delete_vertices(g, {c, d}));
    rep.z_ad = zd_det(delete_vertices(g, {a, d}));
    rep.z_bc = zd_det(delete_vertices(g, {b, c}));
    rep.ok = rep.z * rep.z_abcd == rep.z_ab * rep.z_cd + rep.z_ad * rep.z_bc;
    return rep;
}

namespace {

RgbSplit surviving_split(const RgbSplit& split, int two_n, const std::set<int>& removed) {
    RgbSplit out;
    for (int label = 1; label <= two_n; ++label) {
        if (removed.count(label)) continue;
        int cls = split.class_of(label);
        (cls == 0 ? out.r : cls == 1 ? out.g : out.b)++;
    }
    return out;
}

CondensationTerm make_term(const EmbeddedGraph& g, const RgbSplit& split, const Rat& zd,
                           const std::string& name, const std::vector<int>& removed) {
    CondensationTerm term;
    term.name = name;
    term.removed = removed;
    std::set<int> removed_set(removed.begin(), removed.end());
    std::vector<int> keep;
    for (int label = 1; label <= g.num_nodes(); ++label)
        if (!removed_set.count(label)) keep.push_back(label);
    EmbeddedGraph inst = restrict_nodes(g, keep);
    RgbSplit sub = surviving_split(split, g.num_nodes(), removed_set);
    inst.rgb = sub;

    YMatrix m = y_matrix(inst, sub);
    term.det = det_rational(m.entries);
    term.exists = sub.triangle_ok();
    if (term.exists) {
        Pairing sigma = rgb_pairing(inst.num_nodes(), sub);
        term.pairing = sigma.str();
        term.sign = sign_oe(sigma);
        term.zdd = term.sign * term.det * zd * zd;
        term.zdd.canonicalize();
    }
    return term;
}

nlohmann::json term_json(const CondensationTerm& t) {
    nlohmann::json j;
    j["name"] = t.name;
    j["removed"] = t.removed;
    j["exists"] = t.exists;
    j["pairing"] = t.pairing;
    j["sign_oe"] = t.sign;
    j["zdd"] = rat_str(t.zdd);
    j["det"] = rat_str(t.det);
    return j;
}

}  // namespace

std::string CondensationReport::json() const {
    nlohmann::json j;
    j["split"] = {split.r, split.g, split.b};
    j["quad"] = {x, y, w, v};
    j["terms"] = {term_json(base), term_json(xy),   term_json(wv),
                  term_json(xv),   term_json(wy),   term_json(xywv)};
    j["branch"] = branch;
    j["lhs"] = rat_str(lhs);
    j["rhs"] = rat_str(rhs);
    if (positive_form_checked) {
        j["positive_lhs"] = rat_str(positive_lhs);
        j["positive_rhs"] = rat_str(positive_rhs);
    }
    j["ok"] = ok;
    return j.dump(2);
}

CondensationReport dd_condensation_check(const EmbeddedGraph& g, const RgbSplit& split,
                                         int x, int y, int w, int v) {
    NodeColoring c = g.node_coloring();
    if (c.color(x) != c.color(w) || c.color(y) != c.color(v) || c.color(x) == c.color(y))
        throw Error("dd_condensation_check: need x,w in one bipartite class, y,v in the other");
    std::set<int> quad{x, y, w, v};
    if (quad.size() != 4) throw Error("dd_condensation_check: nodes must be distinct");
    if (!split.triangle_ok())
        throw NoTripartitePairing("base split violates the triangle inequality");

    Rat zd = zd_det(g);
    if (zd == 0) throw ZeroDimerPartition("Z^D(G) = 0");

    CondensationReport rep;
    rep.split = split;
    rep.x = x;
    rep.y = y;
    rep.w = w;
    rep.v = v;
    rep.base = make_term(g, split, zd, "base", {});
    rep.xy = make_term(g, split, zd, "xy", {x, y});
    rep.wv = make_term(g, split, zd, "wv", {w, v});
    rep.xv = make_term(g, split, zd, "xv", {x, v});
    rep.wy = make_term(g, split, zd, "wy", {w, y});
    rep.xywv = make_term(g, split, zd, "xywv", {x, y, w, v});

    // every nonexistent tripartite pairing must come with a vanishing determinant
    bool zeros_ok = true;
    for (const CondensationTerm* t : {&rep.xy, &rep.wv, &rep.xv, &rep.wy, &rep.xywv})
        if (!t->exists && t->det != 0) zeros_ok = false;

    bool exy = rep.xy.exists, ewv = rep.wv.exists;
    bool exv = rep.xv.exists, ewy = rep.wy.exists, e4 = rep.xywv.exists;

    // Moving the y column to x's row position and the v column to w's keeps
    // their relative order only when (x < w) == (y < v); in the exchanged
    // arrangement the two right-hand products of the identity swap.
    bool same_order = (x < w) == (y < v);

    if (exy && ewv && exv && ewy && e4) {
        rep.branch = "signed";
        rep.lhs = rep.base.sign * rep.xywv.sign * rep.base.zdd * rep.xywv.zdd;
        Rat prod_a = rep.xy.sign * rep.wv.sign * rep.xy.zdd * rep.wv.zdd;
        Rat prod_b = rep.xv.sign * rep.wy.sign * rep.xv.zdd * rep.wy.zdd;
        rep.rhs = same_order ? Rat(prod_a - prod_b) : Rat(prod_b - prod_a);
        rep.ok = rep.lhs == rep.rhs;

        // the positive form applies when the quadruple is in cyclic order
        // and hits all three RGB colors
        std::vector<int> order{x, y, w, v};
        std::vector<int> all_labels;
        for (int i = 1; i <= g.num_nodes(); ++i) all_labels.push_back(i);
        std::vector<int> rev{x, v, w, y};
        std::set<int> classes;
        for (int q : order) classes.insert(split.class_of(q));
        if (classes.size() == 3 &&
            (cyclic_order_on_walk(order, all_labels) ||
             cyclic_order_on_walk(rev, all_labels))) {
            rep.positive_form_checked = true;
            rep.positive_lhs = rep.base.zdd * rep.xywv.zdd;
            rep.positive_rhs = rep.xy.zdd * rep.wv.zdd + rep.xv.zdd * rep.wy.zdd;
            rep.ok = rep.ok && rep.positive_lhs == rep.positive_rhs;
        }
    } else if (e4 && exv && ewy && !(exy && ewv)) {
        rep.branch = "reduced: Z_sigma Z_xywv = Z_xv Z_wy";
        rep.lhs = rep.base.zdd * rep.xywv.zdd;
        rep.rhs = rep.xv.zdd * rep.wy.zdd;
        rep.ok = zeros_ok && rep.lhs == rep.rhs;
    } else if (e4 && exy && ewv && !(exv && ewy)) {
        rep.branch = "reduced: Z_sigma Z_xywv = Z_xy Z_wv";
        rep.lhs = rep.base.zdd * rep.xywv.zdd;
        rep.rhs = rep.xy.zdd * rep.wv.zdd;
        rep.ok = zeros_ok && rep.lhs == rep.rhs;
    } else if (!e4 && exy && ewv && exv && ewy) {
        rep.branch = "pair products equal: Z_xy Z_wv = Z_xv Z_wy";
        rep.lhs = rep.xy.zdd * rep.wv.zdd;
        rep.rhs = rep.xv.zdd * rep.wy.zdd;
        rep.ok = zeros_ok && rep.lhs == rep.rhs;
    } else {
        rep.branch = "trivial: all products carry a vanishing factor";
        rep.lhs = 0;
        rep.rhs = 0;
        rep.ok = zeros_ok;
    }
    return rep;
}

int rgb_sign_delta(const RgbSplit& split, int i, int j) {
    if ((split.r + split.g - split.b) % 2 != 0)
        throw Error("rgb_sign_delta: split has odd pair counts");
    int rg = (split.r + split.g - split.b) / 2;
    int gb = (split.g + split.b - split.r) / 2;
    int rb = (split.r + split.b - split.g) / 2;
    if (rg < 0 || gb < 0 || rb < 0)
        throw NoTripartitePairing("rgb_sign_delta: base split invalid");
    std::set<int> removed{i, j};
    RgbSplit sub = surviving_split(split, split.total(), removed);
    if (!sub.triangle_ok())
        throw NoTripartitePairing("rgb_sign_delta: no tripartite pairing after removal");
    int ci = split.class_of(i), cj = split.class_of(j);
    auto neg_pow = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (ci == cj) return neg_pow(rb);
    int lo = std::min(ci, cj), hi = std::max(ci, cj);
    if (lo == 0 && hi == 2) return neg_pow(rg + gb + rb - 1);  // red + blue
    if (lo == 0 && hi == 1) return neg_pow(rb + rg - 1);       // red + green
    return neg_pow(rb + gb - 1);                               // green + blue
}

}  // namespace ddimer
