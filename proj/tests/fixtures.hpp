#ifndef DUALCX_TESTS_FIXTURES_HPP
#define DUALCX_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "dualcx/builders.hpp"
#include "dualcx/delta_complex.hpp"
#include "dualcx/linalg.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace fixtures {

inline dualcx::SimplicialComplex from_facets(int nv, std::vector<std::vector<int>> facets) {
    dualcx::SimplicialComplex sc;
    for (int v = 0; v < nv; ++v) sc.vertex_labels.push_back("v" + std::to_string(v));
    sc.facets = std::move(facets);
    sc.normalize();
    return sc;
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline dualcx::DeltaComplex rp2_6() {
    return dualcx::to_delta(from_facets(
        6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
            {1, 2, 4}, {1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}}));
}

/// 7-vertex triangulation of the torus: triangles {i,i+1,i+3} and
/// {i,i+2,i+3} mod 7.
inline dualcx::DeltaComplex torus_7() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return dualcx::to_delta(from_facets(7, std::move(facets)));
}

/// Cycle with n vertices and n edges.
inline dualcx::DeltaComplex cycle(int n) {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
    return dualcx::to_delta(from_facets(n, std::move(facets)));
}

/// Deterministic xorshift generator, independent of std::mt19937.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 2654435761u + 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

/// Random connected simplicial complex realized as a Delta-complex, at most
/// `max_cells` cells. Facets are built as a chain so the complex stays
/// connected.
inline dualcx::DeltaComplex random_complex(std::uint64_t seed, int max_cells = 50) {
    Rng rng(seed);
    int nv = 4 + rng.below(4);
    int nf = 2 + rng.below(5);
    std::vector<std::vector<int>> facets;
    int anchor = 0;
    for (int f = 0; f < nf; ++f) {
        int size = 2 + rng.below(3);
        std::vector<int> facet{anchor};
        while (static_cast<int>(facet.size()) < size) {
            int v = rng.below(nv);
            bool dup = false;
            for (int u : facet) dup = dup || u == v;
            if (!dup) facet.push_back(v);
        }
        anchor = facet[rng.below(size)];
        facets.push_back(std::move(facet));
    }
    // drop unused vertex numbers so the complex stays connected
    std::vector<int> remap(nv, -1);
    int used = 0;
    for (auto& facet : facets)
        for (int& v : facet) {
            if (remap[v] == -1) remap[v] = used++;
            v = remap[v];
        }
    nv = used;
    auto kx = dualcx::to_delta(from_facets(nv, std::move(facets)));
    while (static_cast<int>(kx.cell_count()) > max_cells) {
        // drop the last top cell and rebuild
        facets.clear();
        auto vt = dualcx::vertex_table(kx);
        for (int i = 0; i + 1 < static_cast<int>(kx.cells[kx.top_dim()].size()); ++i)
            facets.push_back(vt[kx.top_dim()][i]);
        for (int i = 0; i < static_cast<int>(kx.cells[kx.top_dim() - 1].size()); ++i)
            facets.push_back(vt[kx.top_dim() - 1][i]);
        kx = dualcx::to_delta(from_facets(nv, std::move(facets)));
    }
    return kx;
}

/// Independent rank oracle: Gaussian elimination over the prime field
/// F_32003. Ranks mod p can only undercount the rational rank, and 32003
/// never divides the small minors these tests produce.
inline int rank_mod_p(const dualcx::IntMat& m, long p = 32003) {
    std::vector<std::vector<long>> a(m.rows, std::vector<long>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            long v = static_cast<long>(m.at(r, c) % p);
            a[r][c] = (v % p + p) % p;
        }
    auto inv_mod = [p](long x) {
        long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot == -1) continue;
        std::swap(a[rank], a[pivot]);
        long inv = inv_mod(a[rank][col]);
        for (int c = col; c < m.cols; ++c) a[rank][c] = a[rank][c] * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            long f = a[r][col];
            for (int c = col; c < m.cols; ++c)
                a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Antipodal action on crosspolytope_boundary(n), via its vertex labels.
inline std::vector<int> antipodal_vperm(const dualcx::DeltaComplex& kx) {
    std::vector<int> vperm(kx.cell_count(0));
    for (int i = 0; i < static_cast<int>(kx.cell_count(0)); ++i) {
        auto l = kx.cells[0][i].label;
        l.back() = l.back() == '+' ? '-' : '+';
        for (int j = 0; j < static_cast<int>(kx.cell_count(0)); ++j)
            if (kx.cells[0][j].label == l) vperm[i] = j;
    }
    return vperm;
}

/// Cyclic rotation i -> i+1 on the vertices of simplex_boundary(m).
inline std::vector<int> rotation_vperm(const dualcx::DeltaComplex& kx) {
    int nv = static_cast<int>(kx.cell_count(0));
    std::vector<int> vperm(nv);
    for (int i = 0; i < nv; ++i) vperm[i] = (i + 1) % nv;
    return vperm;
}

}  // namespace fixtures

#endif
