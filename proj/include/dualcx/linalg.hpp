#ifndef DUALCX_LINALG_HPP
#define DUALCX_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dualcx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

struct SmithResult {
    std::vector<Int> divisors;  // nonzero diagonal entries d1 | d2 | ..., all positive
    int rank = 0;
};

/// Smith normal form by row/column operations. Pivot choice: smallest nonzero
/// magnitude, ties broken by lowest row then lowest column, which keeps the
/// result deterministic and the coefficients small.
inline SmithResult smith_normal_form(IntMat m) {
    SmithResult res;
    int t = 0;
    const int n = std::min(m.rows, m.cols);
    while (t < n) {
        // locate pivot
        int pr = -1, pc = -1;
        Int best = 0;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                const Int& v = m.at(r, c);
                if (v == 0) continue;
                Int av = abs(v);
                if (pr == -1 || av < best) {
                    best = av;
                    pr = r;
                    pc = c;
                }
            }
        if (pr == -1) break;  // submatrix zero
        if (pr != t)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
        if (pc != t)
            for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

        bool again = true;
        while (again) {
            again = false;
            // clear column t
            for (int r = t + 1; r < m.rows; ++r) {
                while (m.at(r, t) != 0) {
                    Int q = m.at(r, t) / m.at(t, t);
                    if (q != 0)
                        for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
                    if (m.at(r, t) != 0) {  // remainder smaller than pivot: swap up
                        for (int c = t; c < m.cols; ++c) std::swap(m.at(t, c), m.at(r, c));
                        again = true;
                    }
                }
            }
            // clear row t
            for (int c = t + 1; c < m.cols; ++c) {
                while (m.at(t, c) != 0) {
                    Int q = m.at(t, c) / m.at(t, t);
                    if (q != 0)
                        for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
                    if (m.at(t, c) != 0) {
                        for (int r = t; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, c));
                        again = true;
                    }
                }
            }
        }
        // divisibility: every remaining entry must be divisible by the pivot
        bool fixed = false;
        for (int r = t + 1; r < m.rows && !fixed; ++r)
            for (int c = t + 1; c < m.cols && !fixed; ++c)
                if (m.at(r, c) % m.at(t, t) != 0) {
                    for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
                    fixed = true;
                }
        if (fixed) continue;  // redo elimination at the same t
        if (m.at(t, t) < 0) m.at(t, t) = -m.at(t, t);
        res.divisors.push_back(m.at(t, t));
        ++t;
    }
    res.rank = static_cast<int>(res.divisors.size());
    return res;
}

/// Exact rank over Q by fraction-free (Bareiss) elimination.
inline int rank_over_q(IntMat m) {
    int rank = 0;
    Int prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot == -1) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        for (int r = rank + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c)
                m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

/// Dense rational matrix, only used for homology cycle bases and induced maps.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the pivot column list.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p == -1) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(p, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of the null space of m, as columns.
inline RatMat kernel_basis(RatMat m) {
    int cols = m.cols;
    auto pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat k(cols, static_cast<int>(free_cols.size()));
    for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
        int fc = free_cols[j];
        k.at(fc, j) = 1;
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            k.at(pivots[r], j) = -m.at(r, fc);
    }
    return k;
}

}  // namespace dualcx

#endif
