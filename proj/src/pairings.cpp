#include "ddimer/pairings.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace ddimer {

bool NodeColoring::balanced() const {
    long black = std::count(seq.begin(), seq.end(), Color::Black);
    return 2 * black == static_cast<long>(seq.size());
}

std::string NodeColoring::str() const {
    std::string s;
    for (Color c : seq) s += (c == Color::Black ? 'B' : 'W');
    return s;
}

NodeColoring NodeColoring::from_string(const std::string& bw) {
    NodeColoring c;
    for (char ch : bw) {
        if (ch == 'B' || ch == 'b')
            c.seq.push_back(Color::Black);
        else if (ch == 'W' || ch == 'w')
            c.seq.push_back(Color::White);
        else
            throw Error(std::string("bad coloring character '") + ch + "'");
    }
    return c;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> ps;
    for (int i = 1; i <= size(); ++i)
        if (i < partner[i]) ps.emplace_back(i, partner[i]);
    return ps;
}

std::string Pairing::str() const {
    std::ostringstream out;
    for (auto [a, b] : pairs()) out << '(' << a << ' ' << b << ')';
    return out.str();
}

Pairing Pairing::from_pairs(int two_n, const std::vector<std::pair<int, int>>& ps) {
    Pairing p;
    p.partner.assign(two_n + 1, 0);
    for (auto [a, b] : ps) {
        if (a < 1 || a > two_n || b < 1 || b > two_n || a == b)
            throw Error("bad pair (" + std::to_string(a) + " " + std::to_string(b) + ")");
        if (p.partner[a] != 0 || p.partner[b] != 0)
            throw Error("node paired twice in pairing");
        p.partner[a] = b;
        p.partner[b] = a;
    }
    for (int i = 1; i <= two_n; ++i)
        if (p.partner[i] == 0) throw Error("node " + std::to_string(i) + " unpaired");
    return p;
}

Pairing Pairing::parse(int two_n, const std::string& text) {
    std::vector<std::pair<int, int>> ps;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&] {
        skip_ws();
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw Error("bad pairing text '" + text + "'");
        int v = std::stoi(text.substr(i, j - i));
        i = j;
        return v;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw Error("bad pairing text '" + text + "'");
        ++i;
        int a = read_int();
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
        int b = read_int();
        skip_ws();
        if (i >= text.size() || text[i] != ')') throw Error("bad pairing text '" + text + "'");
        ++i;
        ps.emplace_back(a, b);
        skip_ws();
    }
    return from_pairs(two_n, ps);
}

long crossings(const Pairing& p) {
    auto ps = p.pairs();
    long count = 0;
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            auto [a1, b1] = ps[i];
            auto [a2, b2] = ps[j];
            if (a2 > a1 && a2 < b1 && b2 > b1) ++count;
            if (a1 > a2 && a1 < b2 && b1 > b2) ++count;
        }
    return count;
}

long nestings(const Pairing& p) {
    auto ps = p.pairs();
    long count = 0;
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            auto [a1, b1] = ps[i];
            auto [a2, b2] = ps[j];
            if (a1 < a2 && a2 < b2 && b2 < b1) ++count;
        }
    return count / 1;  // each nested pair counted once: (outer, inner)
}

bool is_planar(const Pairing& p) { return crossings(p) == 0; }

bool is_odd_even(const Pairing& p) {
    for (int i = 1; i <= p.size(); i += 2)
        if (p.partner[i] % 2 != 0) return false;
    return true;
}

bool is_black_white(const Pairing& p, const NodeColoring& c) {
    for (int i = 1; i <= p.size(); ++i)
        if (c.color(i) == c.color(p.partner[i])) return false;
    return true;
}

namespace {

int permutation_parity(const std::vector<int>& one_line) {
    long inv = 0;
    for (size_t i = 0; i < one_line.size(); ++i)
        for (size_t j = i + 1; j < one_line.size(); ++j)
            if (one_line[i] > one_line[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

int sign_oe(const Pairing& p) {
    if (!is_odd_even(p)) throw NotOddEven("pairing " + p.str() + " is not odd-even");
    std::vector<int> w;
    for (int i = 1; i <= p.size(); i += 2) w.push_back(p.partner[i] / 2);
    return permutation_parity(w);
}

int sign_bw(const Pairing& p, const NodeColoring& c) {
    if (!is_black_white(p, c))
        throw NotBlackWhite("pairing " + p.str() + " is not black-white under " + c.str());
    std::vector<int> whites;  // partners of the blacks in ascending black order
    for (int i = 1; i <= p.size(); ++i)
        if (c.color(i) == Color::Black) whites.push_back(p.partner[i]);
    std::vector<int> sorted = whites;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rank;
    for (int w : whites)
        rank.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w) -
                                        sorted.begin()) +
                       1);
    return permutation_parity(rank);
}

ConsecutiveCouples couples(const NodeColoring& c) {
    ConsecutiveCouples cc;
    int two_n = c.size();
    for (int i = 1; i <= two_n; ++i) {
        int next = (i == two_n) ? 1 : i + 1;
        if (c.color(i) == c.color(next)) {
            cc.all.push_back(i);
            (c.color(i) == Color::Black ? cc.black : cc.white).push_back(i);
        }
    }
    return cc;
}

int a_between(const NodeColoring& c, int b, int w) {
    if (c.color(b) == c.color(w)) throw Error("a_between needs opposite-color endpoints");
    int lo = std::min(b, w), hi = std::max(b, w);
    int count = 0;
    for (int x = lo; x + 1 <= hi; ++x)
        if (c.color(x) == c.color(x + 1)) ++count;
    return count;
}

int sign_pair(const NodeColoring& c, int b, int w) {
    int a = a_between(c, b, w);
    int e = std::abs(b - w) + a - 1;
    assert(e % 2 == 0);
    return (e / 2) % 2 == 0 ? 1 : -1;
}

int sign_cons(const NodeColoring& c) {
    ConsecutiveCouples cc = couples(c);
    if (cc.all.empty()) return 1;
    bool node1_black = c.color(1) == Color::Black;
    std::vector<int> one_line;
    for (int n : cc.all) {
        auto& firsts = (c.color(n) == Color::Black) ? cc.black : cc.white;
        int idx = static_cast<int>(std::lower_bound(firsts.begin(), firsts.end(), n) -
                                   firsts.begin());
        bool is_white = c.color(n) == Color::White;
        // node 1 black: phi(u_i) = 2i-1, phi(s_i) = 2i; node 1 white: reversed
        int phi = (is_white == node1_black) ? 2 * idx + 1 : 2 * idx + 2;
        one_line.push_back(phi);
    }
    return permutation_parity(one_line);
}

Pairing planar_bw_pairing(const NodeColoring& c) {
    if (!c.balanced()) throw Error("planar_bw_pairing needs a balanced coloring");
    int two_n = c.size();

    // Recursion on labels 1..m with colors col; returns pairs in those labels.
    std::function<std::vector<std::pair<int, int>>(const std::vector<Color>&)> build =
        [&](const std::vector<Color>& col) -> std::vector<std::pair<int, int>> {
        int m = static_cast<int>(col.size());
        if (m == 0) return {};
        std::vector<int> cpl;  // first elements of same-color couples, wrap as m
        for (int i = 1; i <= m; ++i) {
            int next = (i == m) ? 1 : i + 1;
            if (col[i - 1] == col[next - 1]) cpl.push_back(i);
        }
        std::vector<std::pair<int, int>> out;
        if (cpl.empty()) {
            for (int i = 1; i <= m; i += 2) out.emplace_back(i, i + 1);
            return out;
        }
        if (cpl.size() == 2) {
            if (col[cpl[0] - 1] != col[0]) {
                for (int i = 1; i <= m; i += 2) out.emplace_back(i, i + 1);
            } else {
                out.emplace_back(m, 1);
                for (int i = 2; i + 1 <= m - 1; i += 2) out.emplace_back(i, i + 1);
            }
            return out;
        }
        // h: smallest index >= 2 with couples of different colors
        int h = -1;
        for (size_t i = 1; i < cpl.size(); ++i)
            if (col[cpl[i] - 1] != col[cpl[i - 1] - 1]) {
                h = static_cast<int>(i);
                break;
            }
        assert(h > 0);
        int lo = cpl[h - 1], hi = cpl[h];
        for (int i = lo + 1; i + 1 <= hi; i += 2) out.emplace_back(i, i + 1);
        std::vector<Color> reduced;
        std::vector<int> back_map;
        for (int i = 1; i <= m; ++i)
            if (i <= lo || i > hi) {
                reduced.push_back(col[i - 1]);
                back_map.push_back(i);
            }
        for (auto [a, b] : build(reduced)) out.emplace_back(back_map[a - 1], back_map[b - 1]);
        return out;
    };

    Pairing p = Pairing::from_pairs(two_n, build(c.seq));
    assert(is_planar(p) && is_black_white(p, c));
    return p;
}

int components(const Pairing& p, const Pairing& q) {
    if (p.size() != q.size()) throw Error("components: size mismatch");
    int two_n = p.size();
    std::vector<bool> seen(two_n + 1, false);
    int count = 0;
    for (int start = 1; start <= two_n; ++start) {
        if (seen[start]) continue;
        ++count;
        int v = start;
        bool use_p = true;
        do {
            seen[v] = true;
            v = use_p ? p.partner[v] : q.partner[v];
            use_p = !use_p;
        } while (v != start || !use_p);
    }
    return count;
}

std::vector<int> t_set(const NodeColoring& c) {
    std::vector<int> t;
    for (int i = 1; i <= c.size(); ++i) {
        bool odd = i % 2 == 1;
        bool white = c.color(i) == Color::White;
        if (odd == white) t.push_back(i);
    }
    return t;
}

bool connects(const Pairing& p, const std::vector<int>& s) {
    std::vector<bool> in(p.size() + 1, false);
    for (int x : s) in[x] = true;
    for (int i = 1; i <= p.size(); ++i)
        if (in[i] != in[p.partner[i]]) return true;
    return false;
}

std::vector<std::vector<int>> admissible_splits(const Pairing& pi, const Pairing& rho,
                                                const NodeColoring& c) {
    if (!is_odd_even(pi)) throw NotOddEven("admissible_splits: pi must be odd-even");
    if (!is_black_white(rho, c))
        throw NotBlackWhite("admissible_splits: rho must be black-white");
    int two_n = c.size();
    std::vector<bool> in_t(two_n + 1, false);
    for (int x : t_set(c)) in_t[x] = true;

    // One traversal per component, seeded at its lowest node; membership of
    // every other node is forced relative to the seed:
    //   inS(pi(a)) = inS(a) xor T(a) xor T(pi(a)),   inS(rho(a)) = inS(a).
    std::vector<int> comp_of(two_n + 1, -1);
    std::vector<std::vector<int>> comp_nodes;
    std::vector<std::vector<bool>> rel;  // relative membership vs seed
    for (int start = 1; start <= two_n; ++start) {
        if (comp_of[start] != -1) continue;
        int id = static_cast<int>(comp_nodes.size());
        comp_nodes.emplace_back();
        std::vector<bool> in_s(two_n + 1, false);
        int v = start;
        bool member = true;  // seed in S
        bool use_pi = true;
        do {
            comp_of[v] = id;
            comp_nodes[id].push_back(v);
            in_s[v] = member;
            int w = use_pi ? pi.partner[v] : rho.partner[v];
            bool next_member = use_pi ? (member ^ in_t[v] ^ in_t[w]) : member;
            // consistency when closing the cycle
            if (comp_of[w] == id && w == start && !use_pi) {
                // about to close via rho; rho keeps membership
                assert(in_s[w] == next_member);
            }
            v = w;
            member = next_member;
            use_pi = !use_pi;
        } while (v != start || !use_pi);
        rel.push_back(std::move(in_s));
    }

    int k = static_cast<int>(comp_nodes.size());
    std::vector<std::vector<int>> result;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int id = 0; id < k; ++id) {
            bool flip = (mask >> id) & 1;
            for (int v : comp_nodes[id])
                if (rel[id][v] != flip) s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        result.push_back(std::move(s));
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// Planar black-white pairing of the sub-coloring on the sorted labels.
std::vector<std::pair<int, int>> planar_bw_on_subset(const std::vector<int>& labels,
                                                     const NodeColoring& c) {
    NodeColoring sub;
    for (int x : labels) sub.seq.push_back(c.color(x));
    if (sub.size() == 0) return {};
    Pairing p = planar_bw_pairing(sub);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : p.pairs()) out.emplace_back(labels[a - 1], labels[b - 1]);
    return out;
}

bool is_balanced_set(const std::vector<int>& s, const NodeColoring& c) {
    long black = 0, white = 0;
    for (int x : s) (c.color(x) == Color::Black ? black : white)++;
    return black == white;
}

}  // namespace

int sign_set_definitional(const std::vector<int>& s, const NodeColoring& c) {
    if (!is_balanced_set(s, c)) throw Error("sign_set: set is not balanced");
    std::vector<int> comp;
    {
        std::vector<bool> in(c.size() + 1, false);
        for (int x : s) in[x] = true;
        for (int i = 1; i <= c.size(); ++i)
            if (!in[i]) comp.push_back(i);
    }
    auto ps = planar_bw_on_subset(s, c);
    auto qs = planar_bw_on_subset(comp, c);
    ps.insert(ps.end(), qs.begin(), qs.end());
    Pairing rho = Pairing::from_pairs(c.size(), ps);
    return crossings(rho) % 2 == 0 ? 1 : -1;
}

int sign_set_formula(const std::vector<int>& s, const NodeColoring& c) {
    if (!is_balanced_set(s, c)) throw Error("sign_set: set is not balanced");
    int two_n = c.size();
    std::vector<bool> in_s(two_n + 1, false);
    for (int x : s) in_s[x] = true;

    std::vector<int> comp;
    for (int i = 1; i <= two_n; ++i)
        if (!in_s[i]) comp.push_back(i);
    auto ps = planar_bw_on_subset(s, c);
    auto qs = planar_bw_on_subset(comp, c);
    ps.insert(ps.end(), qs.begin(), qs.end());
    Pairing rho = Pairing::from_pairs(two_n, ps);

    // Odd-even pairing not connecting S xor T to its complement: pair odds
    // with evens ascending inside S xor T and inside the complement.
    std::vector<bool> in_t(two_n + 1, false);
    for (int x : t_set(c)) in_t[x] = true;
    std::vector<int> odd_in, even_in, odd_out, even_out;
    for (int i = 1; i <= two_n; ++i) {
        bool v = in_s[i] ^ in_t[i];
        if (i % 2 == 1)
            (v ? odd_in : odd_out).push_back(i);
        else
            (v ? even_in : even_out).push_back(i);
    }
    if (odd_in.size() != even_in.size())
        throw Error("sign_set: S xor T is not parity-balanced");
    std::vector<std::pair<int, int>> pi_pairs;
    for (size_t i = 0; i < odd_in.size(); ++i) pi_pairs.emplace_back(odd_in[i], even_in[i]);
    for (size_t i = 0; i < odd_out.size(); ++i) pi_pairs.emplace_back(odd_out[i], even_out[i]);
    Pairing pi = Pairing::from_pairs(two_n, pi_pairs);

    int n = two_n / 2;
    int sgn = (n % 2 == 0 ? 1 : -1) * (components(pi, rho) % 2 == 0 ? 1 : -1) * sign_oe(pi) *
              sign_bw(rho, c);
    return sgn;
}

Pairing rgb_pairing(int two_n, const RgbSplit& split) {
    if (split.total() != two_n) throw Error("rgb split does not cover the nodes");
    if (!split.triangle_ok())
        throw NoTripartitePairing("split (" + std::to_string(split.r) + "," +
                                  std::to_string(split.g) + "," + std::to_string(split.b) +
                                  ") violates the triangle inequality");
    std::vector<int> labels(two_n), cls(two_n);
    std::iota(labels.begin(), labels.end(), 1);
    for (int i = 0; i < two_n; ++i) cls[i] = split.class_of(i + 1);

    std::vector<std::pair<int, int>> out;
    while (!labels.empty()) {
        int m = static_cast<int>(labels.size());
        int counts[3] = {0, 0, 0};
        for (int x : cls) counts[x]++;
        bool paired = false;
        for (int i = 0; i < m && !paired; ++i) {
            int j = (i + 1) % m;
            if (cls[i] == cls[j]) continue;
            int rem[3] = {counts[0], counts[1], counts[2]};
            rem[cls[i]]--;
            rem[cls[j]]--;
            if (rem[0] > rem[1] + rem[2] || rem[1] > rem[0] + rem[2] || rem[2] > rem[0] + rem[1])
                continue;
            out.emplace_back(labels[i], labels[j]);
            if (j > i) {
                labels.erase(labels.begin() + j);
                cls.erase(cls.begin() + j);
                labels.erase(labels.begin() + i);
                cls.erase(cls.begin() + i);
            } else {  // j == 0, i == m-1
                labels.erase(labels.begin() + i);
                cls.erase(cls.begin() + i);
                labels.erase(labels.begin());
                cls.erase(cls.begin());
            }
            paired = true;
        }
        if (!paired) throw Error("rgb_pairing: no admissible adjacent pair (internal)");
    }
    return Pairing::from_pairs(two_n, out);
}

std::pair<Pairing, std::vector<std::pair<int, int>>> relabel_consecutive(
    const std::vector<int>& surviving, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> sorted = surviving;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> map;
    for (size_t i = 0; i < sorted.size(); ++i)
        map.emplace_back(sorted[i], static_cast<int>(i) + 1);
    auto lookup = [&](int old) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), old);
        if (it == sorted.end() || *it != old)
            throw Error("pairing mentions deleted node " + std::to_string(old));
        return static_cast<int>(it - sorted.begin()) + 1;
    };
    std::vector<std::pair<int, int>> new_pairs;
    for (auto [a, b] : pairs) new_pairs.emplace_back(lookup(a), lookup(b));
    return {Pairing::from_pairs(static_cast<int>(sorted.size()), new_pairs), map};
}

std::vector<Pairing> all_pairings(int two_n) {
    std::vector<Pairing> out;
    std::vector<int> partner(two_n + 1, 0);
    std::function<void()> rec = [&] {
        int first = 0;
        for (int i = 1; i <= two_n; ++i)
            if (partner[i] == 0) {
                first = i;
                break;
            }
        if (first == 0) {
            Pairing p;
            p.partner = partner;
            out.push_back(p);
            return;
        }
        for (int j = first + 1; j <= two_n; ++j) {
            if (partner[j] != 0) continue;
            partner[first] = j;
            partner[j] = first;
            rec();
            partner[first] = 0;
            partner[j] = 0;
        }
    };
    rec();
    return out;
}

std::vector<Pairing> all_planar_pairings(int two_n) {
    std::vector<Pairing> out;
    for (auto& p : all_pairings(two_n))
        if (is_planar(p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pairing> all_odd_even_pairings(int two_n) {
    std::vector<Pairing> out;
    for (auto& p : all_pairings(two_n))
        if (is_odd_even(p)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pairing> all_black_white_pairings(const NodeColoring& c) {
    std::vector<Pairing> out;
    for (auto& p : all_pairings(c.size()))
        if (is_black_white(p, c)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeColoring> all_balanced_colorings(int two_n) {
    std::vector<NodeColoring> out;
    for (int mask = 0; mask < (1 << two_n); ++mask) {
        if (__builtin_popcount(mask) != two_n / 2) continue;
        NodeColoring c;
        for (int i = 0; i < two_n; ++i)
            c.seq.push_back((mask >> i) & 1 ? Color::Black : Color::White);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ddimer
