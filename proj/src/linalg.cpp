#include "ddimer/linalg.hpp"

#include <cassert>
#include <unordered_map>

namespace ddimer {

Int det_bareiss(IntMatrix a) {
    size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw Error("det: matrix not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rat det_rational(const RatMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    IntMatrix a(n, std::vector<Int>(n));
    Int scale = 1;
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("det: matrix not square");
        Int d = 1;
        for (size_t j = 0; j < n; ++j) d = lcm(d, m[i][j].get_den());
        for (size_t j = 0; j < n; ++j) {
            Rat scaled = m[i][j] * Rat(d);
            assert(scaled.get_den() == 1);
            a[i][j] = scaled.get_num();
        }
        scale *= d;
    }
    Rat det(det_bareiss(std::move(a)), scale);
    det.canonicalize();
    return det;
}

RatMatrix solve_rational(RatMatrix a, RatMatrix b) {
    size_t n = a.size();
    if (b.size() != n) throw Error("solve: dimension mismatch");
    size_t cols = n == 0 ? 0 : b[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error("solve: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        Rat inv = 1 / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        for (size_t j = 0; j < cols; ++j) b[col][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            for (size_t j = 0; j < cols; ++j) b[i][j] -= f * b[col][j];
        }
    }
    return b;
}

namespace {

Rat pf_rec(const RatMatrix& a, uint32_t mask, std::unordered_map<uint32_t, Rat>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = __builtin_ctz(mask);
    uint32_t rest = mask & ~(1u << first);
    Rat total = 0;
    int sign = 1;
    for (uint32_t m = rest; m != 0; m &= m - 1) {
        int j = __builtin_ctz(m);
        if (a[first][j] != 0)
            total += sign * a[first][j] * pf_rec(a, rest & ~(1u << j), memo);
        sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
}

}  // namespace

Rat pfaffian(const RatMatrix& a) {
    size_t n = a.size();
    if (n % 2 != 0) throw Error("pfaffian: odd order");
    if (n > 31) throw Error("pfaffian: order too large");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != -a[j][i]) throw Error("pfaffian: matrix not antisymmetric");
    std::unordered_map<uint32_t, Rat> memo;
    return pf_rec(a, n == 0 ? 0 : (1u << n) - 1, memo);
}

}  // namespace ddimer
