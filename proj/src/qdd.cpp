#include "ddimer/qdd.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <sstream>

namespace ddimer {

namespace {

// crossings (a,b,c,d) with (a,c),(b,d) paired and a<b<c<d, sorted
std::vector<std::array<int, 4>> crossing_list(const Pairing& p) {
    std::vector<std::array<int, 4>> out;
    auto ps = p.pairs();
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            auto [a1, b1] = ps[i];
            auto [a2, b2] = ps[j];
            if (a2 > a1 && a2 < b1 && b2 > b1) out.push_back({a1, a2, b1, b2});
            if (a1 > a2 && a1 < b2 && b1 > b2) out.push_back({a2, a1, b2, b1});
        }
    std::sort(out.begin(), out.end());
    return out;
}

Pairing replace_pairs(const Pairing& p, int a, int b, int c, int d) {
    Pairing q = p;
    q.partner[a] = b;
    q.partner[b] = a;
    q.partner[c] = d;
    q.partner[d] = c;
    return q;
}

PairingCombo resolve_impl(const Pairing& rho, const std::function<size_t(size_t)>& pick) {
    PairingCombo result;
    std::map<Pairing, long> work;
    work[rho] = 1;
    while (!work.empty()) {
        auto it = work.begin();
        Pairing p = it->first;
        long coeff = it->second;
        work.erase(it);
        if (coeff == 0) continue;
        auto crossings_of_p = crossing_list(p);
        if (crossings_of_p.empty()) {
            result[p] += coeff;
            if (result[p] == 0) result.erase(p);
            continue;
        }
        auto [a, b, c, d] = crossings_of_p[pick(crossings_of_p.size())];
        work[replace_pairs(p, a, b, c, d)] -= coeff;
        work[replace_pairs(p, a, d, b, c)] -= coeff;
    }
    return result;
}

int parity_sign(int v) { return v % 2 == 0 ? 1 : -1; }

}  // namespace

PairingCombo resolve_crossings(const Pairing& rho) {
    return resolve_impl(rho, [](size_t) { return 0; });
}

PairingCombo resolve_crossings_with_choice(const Pairing& rho,
                                           const std::function<size_t(size_t)>& pick) {
    return resolve_impl(rho, pick);
}

PairingCombo q_coeffs(const Pairing& rho, const NodeColoring& c) {
    int sbw = sign_bw(rho, c);  // throws NotBlackWhite
    PairingCombo combo = resolve_crossings(rho);
    PairingCombo out;
    for (auto& [sigma, coeff] : combo) out[sigma] = coeff * sign_oe(sigma) * sbw;
    return out;
}

IntMatrix meander_matrix(int n) {
    auto planar = all_planar_pairings(2 * n);
    size_t m = planar.size();
    IntMatrix mat(m, std::vector<Int>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Int e = 1;
            e <<= components(planar[i], planar[j]);
            mat[i][j] = e;
        }
    return mat;
}

IntMatrix b2_matrix(const NodeColoring& c) {
    if (!c.balanced()) throw Error("b2_matrix needs a balanced coloring");
    auto planar = all_planar_pairings(c.size());
    auto bw = all_black_white_pairings(c);
    int n = c.size() / 2;
    IntMatrix mat(planar.size(), std::vector<Int>(bw.size()));
    for (size_t i = 0; i < planar.size(); ++i) {
        int soe = sign_oe(planar[i]);
        for (size_t j = 0; j < bw.size(); ++j) {
            int comp = components(planar[i], bw[j]);
            int s = parity_sign(n) * parity_sign(comp) * soe * sign_bw(bw[j], c);
            Int e = 1;
            e <<= comp;
            mat[i][j] = s * e;
        }
    }
    return mat;
}

QMatrix q_matrix_combinatorial(const NodeColoring& c) {
    QMatrix q;
    q.rows = all_planar_pairings(c.size());
    q.cols = all_black_white_pairings(c);
    q.entries.assign(q.rows.size(), std::vector<Int>(q.cols.size(), 0));
    std::map<Pairing, size_t> row_of;
    for (size_t i = 0; i < q.rows.size(); ++i) row_of[q.rows[i]] = i;
#pragma omp parallel for schedule(dynamic)
    for (size_t j = 0; j < q.cols.size(); ++j) {
        PairingCombo combo = q_coeffs(q.cols[j], c);
        for (auto& [sigma, coeff] : combo) q.entries[row_of.at(sigma)][j] = coeff;
    }
    return q;
}

QMatrix q_matrix_solve(const NodeColoring& c) {
    QMatrix q;
    q.rows = all_planar_pairings(c.size());
    q.cols = all_black_white_pairings(c);
    IntMatrix m2 = meander_matrix(c.size() / 2);
    IntMatrix b2 = b2_matrix(c);
    RatMatrix a(m2.size()), b(b2.size());
    for (size_t i = 0; i < m2.size(); ++i)
        for (auto& v : m2[i]) a[i].emplace_back(v);
    for (size_t i = 0; i < b2.size(); ++i)
        for (auto& v : b2[i]) b[i].emplace_back(v);
    RatMatrix x = solve_rational(std::move(a), std::move(b));
    q.entries.assign(q.rows.size(), std::vector<Int>(q.cols.size()));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x[i].size(); ++j) {
            if (x[i][j].get_den() != 1)
                throw Error("Q^(DD) solve produced a non-integer entry");
            q.entries[i][j] = x[i][j].get_num();
        }
    return q;
}

std::string SignedMonomialPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms) {
        long c = t.coeff;
        if (c >= 0)
            out << (first ? "" : " + ");
        else
            out << (first ? "-" : " - ");
        long mag = std::abs(c);
        if (mag != 1 || t.pairs.empty()) out << mag;
        for (auto [b, w] : t.pairs) out << "Y[" << b << "," << w << "]";
        first = false;
    }
    return out.str();
}

SignedMonomialPoly pr_polynomial(const Pairing& sigma, const NodeColoring& c) {
    if (!is_planar(sigma)) throw Error("pr_polynomial: sigma must be planar");
    auto bw = all_black_white_pairings(c);
    std::map<std::vector<std::pair<int, int>>, long> acc;
    for (const Pairing& rho : bw) {
        PairingCombo combo = q_coeffs(rho, c);
        auto it = combo.find(sigma);
        if (it == combo.end() || it->second == 0) continue;
        long coeff = it->second * (crossings(rho) % 2 == 0 ? 1 : -1);
        std::vector<std::pair<int, int>> mono;  // (black, white), blacks ascending
        for (int i = 1; i <= c.size(); ++i)
            if (c.color(i) == Color::Black) mono.emplace_back(i, rho.partner[i]);
        acc[mono] += coeff;
    }
    SignedMonomialPoly poly;
    for (auto& [mono, coeff] : acc)
        if (coeff != 0) poly.terms.push_back({coeff, mono});
    return poly;
}

}  // namespace ddimer
