#ifndef DUALCX_DELTA_COMPLEX_HPP
#define DUALCX_DELTA_COMPLEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualcx {

/// Identifies a cell by dimension and dense per-dimension index.
struct CellId {
    int dim = 0;
    int index = 0;
    auto operator<=>(const CellId&) const = default;
};

inline std::string to_string(CellId c) {
    return "(" + std::to_string(c.dim) + "," + std::to_string(c.index) + ")";
}

/// One cell: ordered face list (entry i = "drop the i-th vertex") plus an
/// optional display label. A k-cell has k+1 faces of dimension k-1.
struct Cell {
    std::vector<int> faces;
    std::string label;
};

/// Regular Delta-complex: graded cell tables with ordered face maps.
/// Immutable by convention; all operations build new complexes.
struct DeltaComplex {
    std::vector<std::vector<Cell>> cells;  // cells[k][i]

    bool empty() const { return cells.empty(); }
    int top_dim() const { return static_cast<int>(cells.size()) - 1; }

    std::size_t cell_count() const {
        std::size_t n = 0;
        for (const auto& layer : cells) n += layer.size();
        return n;
    }
    std::size_t cell_count(int dim) const {
        if (dim < 0 || dim > top_dim()) return 0;
        return cells[dim].size();
    }

    bool has_cell(CellId c) const {
        return c.dim >= 0 && c.dim <= top_dim() &&
               c.index >= 0 && c.index < static_cast<int>(cells[c.dim].size());
    }
    const Cell& cell(CellId c) const {
        if (!has_cell(c)) throw std::out_of_range("unknown cell " + to_string(c));
        return cells[c.dim][c.index];
    }

    /// Drop trailing empty dimension layers so top_dim is meaningful.
    void trim() {
        while (!cells.empty() && cells.back().empty()) cells.pop_back();
    }
};

inline DeltaComplex point_complex(const std::string& label = "pt") {
    DeltaComplex k;
    k.cells.push_back({Cell{{}, label}});
    return k;
}

struct Violation {
    std::string rule;
    std::vector<CellId> cells;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Vertex lists (in the cell's own label order) for every cell, computed
/// bottom-up. Requires structurally sound face references; callers that are
/// unsure should run validate() first.
inline std::vector<std::vector<std::vector<int>>> vertex_table(const DeltaComplex& kx) {
    std::vector<std::vector<std::vector<int>>> vt(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        vt[d].resize(kx.cells[d].size());
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            if (d == 0) {
                vt[d][i] = {i};
                continue;
            }
            const auto& faces = kx.cells[d][i].faces;
            // vertices 0..d-1 come from the last face, vertex d from face 0
            auto v = vt[d - 1][faces[d]];
            v.push_back(vt[d - 1][faces[0]].back());
            vt[d][i] = std::move(v);
        }
    }
    return vt;
}

inline std::vector<int> vertices_of(const DeltaComplex& kx, CellId c) {
    if (!kx.has_cell(c)) throw std::out_of_range("unknown cell " + to_string(c));
    if (c.dim == 0) return {c.index};
    const auto& faces = kx.cell(c).faces;
    auto v = vertices_of(kx, {c.dim - 1, faces[c.dim]});
    v.push_back(vertices_of(kx, {c.dim - 1, faces[0]}).back());
    return v;
}

/// Checks every invariant; reports all violations, never throws.
inline ValidationReport validate(const DeltaComplex& kx) {
    ValidationReport rep;
    auto add = [&](std::string rule, std::vector<CellId> cs, std::string msg) {
        rep.ok = false;
        rep.violations.push_back({std::move(rule), std::move(cs), std::move(msg)});
    };

    bool structural_ok = true;
    for (int d = 0; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            const auto& faces = kx.cells[d][i].faces;
            if (static_cast<int>(faces.size()) != (d == 0 ? 0 : d + 1)) {
                add("face-count", {{d, i}},
                    "cell has " + std::to_string(faces.size()) + " faces, expected " +
                        std::to_string(d == 0 ? 0 : d + 1));
                structural_ok = false;
                continue;
            }
            for (int f : faces) {
                if (d == 0) break;
                if (f < 0 || f >= static_cast<int>(kx.cell_count(d - 1))) {
                    add("face-reference", {{d, i}},
                        "face index " + std::to_string(f) + " out of range in dimension " +
                            std::to_string(d - 1));
                    structural_ok = false;
                }
            }
        }
    }
    if (!structural_ok) return rep;

    // simplicial identities: face_i(face_j(s)) == face_{j-1}(face_i(s)) for i<j
    for (int d = 2; d <= kx.top_dim(); ++d) {
        for (int s = 0; s < static_cast<int>(kx.cells[d].size()); ++s) {
            const auto& faces = kx.cells[d][s].faces;
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    int lhs = kx.cells[d - 1][faces[j]].faces[i];
                    int rhs = kx.cells[d - 1][faces[i]].faces[j - 1];
                    if (lhs != rhs)
                        add("simplicial-identity", {{d, s}},
                            "face_" + std::to_string(i) + "(face_" + std::to_string(j) +
                                ") != face_" + std::to_string(j - 1) + "(face_" +
                                std::to_string(i) + ")");
                }
            }
        }
    }
    if (!rep.ok) return rep;

    auto vt = vertex_table(kx);
    for (int d = 1; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            auto v = vt[d][i];
            std::sort(v.begin(), v.end());
            if (std::adjacent_find(v.begin(), v.end()) != v.end())
                add("regularity", {{d, i}}, "cell has repeated vertices");
        }
    }
    return rep;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::vector<int> dim_offsets(const DeltaComplex& kx) {
    std::vector<int> off(kx.cells.size() + 1, 0);
    for (int d = 0; d <= kx.top_dim(); ++d)
        off[d + 1] = off[d] + static_cast<int>(kx.cells[d].size());
    return off;
}

/// Component label per cell (flat numbering), labels densified in order of
/// first appearance by (dim, index).
inline std::pair<std::vector<int>, int> component_labels(const DeltaComplex& kx) {
    auto off = dim_offsets(kx);
    UnionFind uf(off.back());
    for (int d = 1; d <= kx.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i)
            for (int f : kx.cells[d][i].faces)
                uf.unite(off[d] + i, off[d - 1] + f);
    std::vector<int> label(off.back(), -1);
    int ncomp = 0;
    for (int x = 0; x < off.back(); ++x) {
        int r = uf.find(x);
        if (label[r] == -1) label[r] = ncomp++;
        label[x] = label[r];
    }
    return {label, ncomp};
}

}  // namespace detail

/// Connected components under shared-face adjacency, cell indices re-densified.
inline std::vector<DeltaComplex> components(const DeltaComplex& kx) {
    auto [label, ncomp] = detail::component_labels(kx);
    auto off = detail::dim_offsets(kx);
    std::vector<DeltaComplex> out(ncomp);
    // new index per cell within its component
    std::vector<int> newidx(off.back(), -1);
    for (int d = 0; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            int comp = label[off[d] + i];
            auto& target = out[comp];
            if (static_cast<int>(target.cells.size()) <= d) target.cells.resize(d + 1);
            newidx[off[d] + i] = static_cast<int>(target.cells[d].size());
            Cell c = kx.cells[d][i];
            for (int& f : c.faces) f = newidx[off[d - 1] + f];
            target.cells[d].push_back(std::move(c));
        }
    }
    for (auto& k : out) k.trim();
    return out;
}

struct DimensionProfile {
    int max_dim = 0;
    bool equidimensional = true;
};

/// Per-component (max cell dimension, equidimensionality). Empty complex
/// yields an empty list.
inline std::vector<DimensionProfile> dimension_profile(const DeltaComplex& kx) {
    std::vector<DimensionProfile> out;
    for (const auto& comp : components(kx)) {
        DimensionProfile p;
        p.max_dim = comp.top_dim();
        // mark cells reachable downward from top-dimensional cells
        std::vector<std::vector<char>> hit(comp.cells.size());
        for (int d = 0; d <= comp.top_dim(); ++d)
            hit[d].assign(comp.cells[d].size(), 0);
        for (std::size_t i = 0; i < comp.cells[comp.top_dim()].size(); ++i)
            hit[comp.top_dim()][i] = 1;
        for (int d = comp.top_dim(); d >= 1; --d)
            for (int i = 0; i < static_cast<int>(comp.cells[d].size()); ++i)
                if (hit[d][i])
                    for (int f : comp.cells[d][i].faces) hit[d - 1][f] = 1;
        for (int d = 0; d <= comp.top_dim() && p.equidimensional; ++d)
            for (char h : hit[d])
                if (!h) { p.equidimensional = false; break; }
        out.push_back(p);
    }
    return out;
}

inline int euler_characteristic(const DeltaComplex& kx) {
    int chi = 0;
    for (int d = 0; d <= kx.top_dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<int>(kx.cells[d].size());
    return chi;
}

}  // namespace dualcx

#endif
