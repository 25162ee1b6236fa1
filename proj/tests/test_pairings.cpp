#include <set>

#include "ddimer/pairings.hpp"
#include "doctest.h"

using namespace ddimer;

namespace {

Pairing mk(int two_n, std::vector<std::pair<int, int>> ps) {
    return Pairing::from_pairs(two_n, ps);
}

// a 12-node coloring with two black couples and two white couples:
// nodes 1,3,4,5,7,10 black
NodeColoring coloring12() { return NodeColoring::from_string("BWBBBWBWWBWW"); }

int components_unionfind(const Pairing& p, const Pairing& q) {
    int n = p.size();
    std::vector<int> parent(n + 1);
    for (int i = 0; i <= n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 1; i <= n; ++i) {
        parent[find(i)] = find(p.partner[i]);
        parent[find(i)] = find(q.partner[i]);
    }
    std::set<int> roots;
    for (int i = 1; i <= n; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("crossings") {
    CHECK(crossings(mk(4, {{1, 2}, {3, 4}})) == 0);
    CHECK(crossings(mk(4, {{1, 3}, {2, 4}})) == 1);
    CHECK(crossings(mk(8, {{1, 8}, {3, 4}, {5, 2}, {7, 6}})) == 0);
}

TEST_CASE("nestings") {
    CHECK(nestings(mk(4, {{1, 2}, {3, 4}})) == 0);
    CHECK(nestings(mk(4, {{1, 4}, {3, 2}})) == 1);
    CHECK(nestings(mk(8, {{1, 8}, {3, 4}, {5, 2}, {7, 6}})) == 4);
}

TEST_CASE("sign_oe") {
    CHECK(sign_oe(mk(4, {{1, 2}, {3, 4}})) == 1);
    CHECK(sign_oe(mk(8, {{1, 8}, {3, 4}, {5, 2}, {7, 6}})) == 1);
    CHECK(sign_oe(mk(8, {{1, 8}, {3, 4}, {5, 6}, {7, 2}})) == -1);
    CHECK_THROWS_AS(sign_oe(mk(4, {{1, 3}, {2, 4}})), NotOddEven);
}

TEST_CASE("sign_bw") {
    NodeColoring alt = NodeColoring::from_string("BWBW");
    CHECK(sign_bw(mk(4, {{1, 2}, {3, 4}}), alt) == 1);
    NodeColoring bbww = NodeColoring::from_string("BBWW");
    CHECK(sign_bw(mk(4, {{1, 4}, {2, 3}}), bbww) == -1);
    CHECK_THROWS_AS(sign_bw(mk(4, {{1, 2}, {3, 4}}), bbww), NotBlackWhite);
}

TEST_CASE("sign_bw equals sign_oe on odd-even black-white pairings") {
    for (int two_n : {4, 6, 8}) {
        for (const NodeColoring& c : all_balanced_colorings(two_n))
            for (const Pairing& p : all_black_white_pairings(c))
                if (is_odd_even(p)) CHECK(sign_bw(p, c) == sign_oe(p));
    }
}

TEST_CASE("couples") {
    ConsecutiveCouples cc = couples(coloring12());
    CHECK(cc.all == std::vector<int>{3, 4, 8, 11});
    CHECK(cc.black == std::vector<int>{3, 4});
    CHECK(cc.white == std::vector<int>{8, 11});

    CHECK(couples(NodeColoring::from_string("BWBWBW")).all.empty());

    ConsecutiveCouples cc8 = couples(NodeColoring::from_string("BWBBWBWW"));
    CHECK(cc8.all == std::vector<int>{3, 7});
}

TEST_CASE("couples include the wrap couple") {
    ConsecutiveCouples cc = couples(NodeColoring::from_string("BWWB"));
    CHECK(cc.all == std::vector<int>{2, 4});
    CHECK(cc.black == std::vector<int>{4});  // couple (4, 1)
    CHECK(cc.white == std::vector<int>{2});
}

TEST_CASE("couples split evenly between the colors") {
    for (int two_n : {2, 4, 6, 8, 10})
        for (const NodeColoring& c : all_balanced_colorings(two_n)) {
            ConsecutiveCouples cc = couples(c);
            CHECK(cc.black.size() == cc.white.size());
            CHECK(cc.all.size() == cc.black.size() + cc.white.size());
        }
}

TEST_CASE("a_between and sign_pair") {
    NodeColoring c12 = coloring12();
    CHECK(a_between(c12, 1, 12) == 4);
    CHECK(sign_pair(c12, 1, 12) == -1);

    NodeColoring alt = NodeColoring::from_string("BWBWBWBW");
    for (int b = 1; b <= 8; b += 2)
        for (int w = 2; w <= 8; w += 2) {
            CHECK(a_between(alt, b, w) == 0);
            int expect = ((std::abs(b - w) - 1) / 2) % 2 == 0 ? 1 : -1;
            CHECK(sign_pair(alt, b, w) == expect);
        }
    // adjacent opposite-color pair
    CHECK(sign_pair(c12, 1, 2) == 1);
    CHECK_THROWS(sign_pair(c12, 3, 4));
}

TEST_CASE("sign_cons") {
    CHECK(sign_cons(NodeColoring::from_string("BWBW")) == 1);  // no couples
    CHECK(sign_cons(NodeColoring::from_string("BBWW")) == -1);
    CHECK(sign_cons(NodeColoring::from_string("BWWB")) == 1);
    CHECK(sign_cons(coloring12()) == -1);  // s1 < s2 < u1 < u2 pattern: (2 4 1 3)
}

TEST_CASE("planar_bw_pairing on the twelve-node coloring") {
    Pairing rho = planar_bw_pairing(coloring12());
    CHECK(rho == mk(12, {{1, 12}, {3, 2}, {5, 6}, {7, 8}, {9, 4}, {11, 10}}));

    CHECK(planar_bw_pairing(NodeColoring::from_string("BWBWBW")) ==
          mk(6, {{1, 2}, {3, 4}, {5, 6}}));
    CHECK(planar_bw_pairing(NodeColoring::from_string("BW")) == mk(2, {{1, 2}}));
}

TEST_CASE("planar_bw_pairing properties for all balanced colorings") {
    for (int two_n : {2, 4, 6, 8, 10}) {
        for (const NodeColoring& c : all_balanced_colorings(two_n)) {
            Pairing rho = planar_bw_pairing(c);
            CHECK(is_planar(rho));
            CHECK(is_black_white(rho, c));
            int prod = sign_bw(rho, c);
            for (auto [b, w] : rho.pairs()) prod *= sign_pair(c, b, w);
            CHECK(prod == sign_cons(c));
        }
    }
}

TEST_CASE("master sign identity, exhaustive to 2n = 8") {
    for (int two_n : {2, 4, 6, 8}) {
        for (const NodeColoring& c : all_balanced_colorings(two_n)) {
            int sc = sign_cons(c);
            for (const Pairing& rho : all_black_white_pairings(c)) {
                int lhs = sc * sign_bw(rho, c);
                for (auto [b, w] : rho.pairs()) lhs *= sign_pair(c, b, w);
                int rhs = crossings(rho) % 2 == 0 ? 1 : -1;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("swap flips the pairing signs") {
    // swapping two same-parity nodes flips sign_oe
    Pairing p = mk(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    Pairing q = p;
    std::swap(q.partner[2], q.partner[4]);
    q.partner[q.partner[2]] = 2;
    q.partner[q.partner[4]] = 4;
    CHECK(sign_oe(p) == -sign_oe(q));

    // swapping two same-color nodes flips sign_bw
    NodeColoring c = NodeColoring::from_string("BWBWBWBW");
    Pairing r = p;
    std::swap(r.partner[1], r.partner[3]);
    r.partner[r.partner[1]] = 1;
    r.partner[r.partner[3]] = 3;
    CHECK(sign_bw(p, c) == -sign_bw(r, c));
}

TEST_CASE("components") {
    CHECK(components(mk(6, {{1, 2}, {3, 4}, {5, 6}}), mk(6, {{1, 5}, {2, 6}, {3, 4}})) == 2);
    Pairing p = mk(8, {{1, 4}, {2, 7}, {3, 6}, {5, 8}});
    CHECK(components(p, p) == 4);
    for (const Pairing& a : all_pairings(6))
        for (const Pairing& b : all_pairings(6))
            CHECK(components(a, b) == components_unionfind(a, b));
}

TEST_CASE("t_set") {
    CHECK(t_set(coloring12()) == std::vector<int>{4, 9, 10, 11});
    CHECK(t_set(NodeColoring::from_string("BWBWBW")).empty());
    CHECK(t_set(NodeColoring::from_string("WBWBWB")) == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("connects") {
    CHECK_FALSE(connects(mk(4, {{1, 2}, {3, 4}}), {1, 2}));
    CHECK(connects(mk(4, {{1, 3}, {2, 4}}), {1, 2}));
}

TEST_CASE("admissible_splits base case example") {
    NodeColoring c = NodeColoring::from_string("BBWW");  // T = {2, 3}
    CHECK(t_set(c) == std::vector<int>{2, 3});
    auto splits = admissible_splits(mk(4, {{1, 2}, {3, 4}}), mk(4, {{1, 4}, {2, 3}}), c);
    CHECK(splits.size() == 2);  // one component
    bool has_14 = false;
    for (auto& s : splits) has_14 = has_14 || s == std::vector<int>{1, 4};
    CHECK(has_14);

    auto splits2 = admissible_splits(mk(4, {{1, 4}, {3, 2}}), mk(4, {{1, 3}, {2, 4}}), c);
    bool has_all = false;
    for (auto& s : splits2) has_all = has_all || s == std::vector<int>{1, 2, 3, 4};
    CHECK(has_all);
}

TEST_CASE("admissible_splits with identical alternating pairings") {
    NodeColoring c = NodeColoring::from_string("BWBWBW");
    Pairing p = mk(6, {{1, 2}, {3, 4}, {5, 6}});
    auto splits = admissible_splits(p, p, c);
    CHECK(splits.size() == 8);  // unions of the three pairs
    for (auto& s : splits) CHECK(s.size() % 2 == 0);
    bool has_pair = false;
    for (auto& s : splits) has_pair = has_pair || s == std::vector<int>{3, 4};
    CHECK(has_pair);
}

TEST_CASE("sign_set") {
    NodeColoring c = NodeColoring::from_string("BWBWBW");
    CHECK(sign_set_definitional({}, c) == 1);
    Pairing rho = planar_bw_pairing(c);
    auto ps = rho.pairs();
    std::vector<int> s{ps[0].first, ps[0].second, ps[1].first, ps[1].second};
    std::sort(s.begin(), s.end());
    CHECK(sign_set_definitional(s, c) == 1);

    CHECK(sign_set_definitional({1, 2}, NodeColoring::from_string("BWBW")) ==
          sign_set_formula({1, 2}, NodeColoring::from_string("BWBW")));
    CHECK_THROWS(sign_set_definitional({1, 3}, NodeColoring::from_string("BWBW")));
}

TEST_CASE("rgb_pairing") {
    CHECK(rgb_pairing(8, {3, 3, 2}) == mk(8, {{1, 8}, {3, 4}, {5, 2}, {7, 6}}));
    CHECK(rgb_pairing(2, {1, 1, 0}) == mk(2, {{1, 2}}));
    CHECK_THROWS_AS(rgb_pairing(6, RgbSplit{4, 1, 1}), NoTripartitePairing);

    // split (3,2,3) carries the odd-signed tripartite pairing
    Pairing sigma = rgb_pairing(8, {3, 2, 3});
    CHECK(sigma == mk(8, {{1, 8}, {3, 4}, {5, 6}, {7, 2}}));
    CHECK(sign_oe(sigma) == -1);
}

TEST_CASE("rgb_pairing is the unique mono-free planar pairing") {
    for (int two_n : {2, 4, 6, 8, 10}) {
        for (int r = 0; r <= two_n; ++r)
            for (int g = 0; r + g <= two_n; ++g) {
                RgbSplit split{r, g, two_n - r - g};
                if (!split.triangle_ok()) continue;
                Pairing sigma = rgb_pairing(two_n, split);
                CHECK(is_planar(sigma));
                int matches = 0;
                for (const Pairing& p : all_planar_pairings(two_n)) {
                    bool mono = false;
                    for (auto [a, b] : p.pairs())
                        mono = mono || split.class_of(a) == split.class_of(b);
                    if (!mono) {
                        ++matches;
                        CHECK(p == sigma);
                    }
                }
                CHECK(matches == 1);
            }
    }
}

TEST_CASE("relabel_consecutive") {
    auto [p, map] = relabel_consecutive({1, 3, 4, 6, 7, 8}, {{1, 8}, {3, 4}, {7, 6}});
    CHECK(p == mk(6, {{1, 6}, {2, 3}, {5, 4}}));

    auto [q, map2] = relabel_consecutive({1, 2, 3, 4}, {{1, 2}, {3, 4}});
    CHECK(q == mk(4, {{1, 2}, {3, 4}}));

    std::vector<int> surviving{1, 2, 3, 4, 9, 10, 11, 12};
    auto [r, map3] =
        relabel_consecutive(surviving, {{1, 2}, {3, 4}, {9, 10}, {11, 12}});
    for (auto [from, to] : map3) {
        if (from == 9) CHECK(to == 5);
        if (from == 12) CHECK(to == 8);
    }
    CHECK_THROWS(relabel_consecutive({1, 2}, {{1, 3}, {2, 4}}));
}

TEST_CASE("pairing parse and print round-trip") {
    Pairing p = Pairing::parse(8, "(1 8)(3 4)(5 2)(7 6)");
    CHECK(p == mk(8, {{1, 8}, {3, 4}, {5, 2}, {7, 6}}));
    CHECK(Pairing::parse(8, p.str()) == p);
    CHECK_THROWS(Pairing::parse(2, "(1 1)"));
}

TEST_CASE("planar pairing count is Catalan") {
    CHECK(all_planar_pairings(2).size() == 1);
    CHECK(all_planar_pairings(4).size() == 2);
    CHECK(all_planar_pairings(6).size() == 5);
    CHECK(all_planar_pairings(8).size() == 14);
    CHECK(all_planar_pairings(10).size() == 42);
}
