#ifndef KFOLD_INTLIN_HPP_
#define KFOLD_INTLIN_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "kfold/scalar.hpp"

namespace kfold {

using IntMat = std::vector<std::vector<Int>>;  // row-major

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? Int(-l) : l;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

/// Solutions of a*n == c (mod m), m > 0: the residue class n0 (mod step),
/// or nullopt when unsolvable.
inline std::optional<std::pair<Int, Int>> solve_congruence(Int a, Int c, Int m) {
    if (m < 0) m = -m;
    if (m == 0) return std::nullopt;
    a %= m; if (a < 0) a += m;
    c %= m; if (c < 0) c += m;
    auto [g, x, y] = ext_gcd(a, m);
    (void)y;
    if (g == 0) return (c == 0) ? std::make_optional(std::make_pair(Int(0), Int(1))) : std::nullopt;
    if (c % g != 0) return std::nullopt;
    Int step = m / g;
    Int n0 = ((x % step) * ((c / g) % step)) % step;
    if (n0 < 0) n0 += step;
    return std::make_pair(n0, step);
}

struct HnfResult {
    IntMat h;  // r x c, M * U = H, column echelon
    IntMat u;  // c x c unimodular
    int rank;
};

/// Column-style Hermite normal form with recorded column transform.
/// H's first `rank` columns are the echelon basis of the column space;
/// the trailing columns of U span the integer kernel of M.
inline HnfResult hnf_columns(IntMat m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    IntMat u(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;

    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (int i = 0; i < cols; ++i) u[i][dst] += f * u[i][src];
    };
    auto swap_col = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(u[i][a], u[i][b]);
    };
    auto neg_col = [&](int j) {
        for (int i = 0; i < rows; ++i) m[i][j] = -m[i][j];
        for (int i = 0; i < cols; ++i) u[i][j] = -u[i][j];
    };

    int col = 0;
    for (int row = 0; row < rows && col < cols; ++row) {
        // Euclid across columns >= col until one nonzero entry remains in row.
        while (true) {
            int pivot = -1;
            for (int j = col; j < cols; ++j) {
                if (m[row][j] != 0 &&
                    (pivot < 0 || boost::multiprecision::abs(m[row][j]) <
                                      boost::multiprecision::abs(m[row][pivot])))
                    pivot = j;
            }
            if (pivot < 0) break;
            if (pivot != col) swap_col(col, pivot);
            bool cleared = true;
            for (int j = col + 1; j < cols; ++j) {
                if (m[row][j] == 0) continue;
                Int q = m[row][j] / m[row][col];
                add_col(j, col, -q);
                if (m[row][j] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[row][col] == 0) continue;
        if (m[row][col] < 0) neg_col(col);
        // Reduce earlier columns in this row for a canonical form.
        for (int j = 0; j < col; ++j) {
            if (m[row][j] == 0) continue;
            Int q = m[row][j] / m[row][col];
            if (m[row][j] - q * m[row][col] < 0) q -= 1;
            if (q != 0) add_col(j, col, -q);
        }
        ++col;
    }
    return {std::move(m), std::move(u), col};
}

/// Integer kernel basis of M (as column vectors, one inner vector per
/// kernel generator).
inline IntMat integer_kernel(const IntMat& m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    HnfResult res = hnf_columns(m);
    IntMat kernel;
    for (int j = res.rank; j < cols; ++j) {
        std::vector<Int> v(cols);
        for (int i = 0; i < cols; ++i) v[i] = res.u[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace kfold

#endif  // KFOLD_INTLIN_HPP_
