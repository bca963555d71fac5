#ifndef DUALCX_SUBDIVISION_HPP
#define DUALCX_SUBDIVISION_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

/// Maps cells of the source complex to vertices of its subdivision.
struct SubdivisionMap {
    std::vector<std::vector<int>> cell_to_vertex;  // [dim][index] -> vertex

    int vertex_for(CellId c) const { return cell_to_vertex[c.dim][c.index]; }
};

/// Barycentric subdivision as the order complex of the face poset: one vertex
/// per cell, simplices are chains under iterated-face incidence (multiple
/// incidences collapse to one poset relation). Facets are the saturated
/// chains from a vertex up to a maximal cell.
inline std::pair<SimplicialComplex, SubdivisionMap> barycentric(const DeltaComplex& kx) {
    SimplicialComplex sc;
    SubdivisionMap sm;
    sm.cell_to_vertex.resize(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        sm.cell_to_vertex[d].resize(kx.cells[d].size());
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            sm.cell_to_vertex[d][i] = static_cast<int>(sc.vertex_labels.size());
            const std::string& lbl = kx.cells[d][i].label;
            sc.vertex_labels.push_back(lbl.empty() ? "b" + to_string(CellId{d, i}) : lbl);
            sc.vertex_origins.push_back({d, i});
        }
    }

    // direct coface counts to find maximal cells
    std::vector<std::vector<int>> cofaces(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) cofaces[d].assign(kx.cells[d].size(), 0);
    for (int d = 1; d <= kx.top_dim(); ++d)
        for (const auto& cell : kx.cells[d]) {
            std::set<int> fs(cell.faces.begin(), cell.faces.end());
            for (int f : fs) ++cofaces[d - 1][f];
        }

    std::vector<int> chain;
    auto descend = [&](auto&& self, CellId c) -> void {
        chain.push_back(sm.vertex_for(c));
        if (c.dim == 0) {
            auto facet = chain;
            std::sort(facet.begin(), facet.end());
            sc.facets.push_back(std::move(facet));
        } else {
            std::set<int> fs(kx.cell(c).faces.begin(), kx.cell(c).faces.end());
            for (int f : fs) self(self, {c.dim - 1, f});
        }
        chain.pop_back();
    };
    for (int d = 0; d <= kx.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i)
            if (cofaces[d][i] == 0) descend(descend, {d, i});
    sc.normalize();
    return {std::move(sc), std::move(sm)};
}

/// Convenience: subdivision realized back as a Delta-complex.
inline DeltaComplex barycentric_delta(const DeltaComplex& kx) {
    return to_delta(barycentric(kx).first);
}

}  // namespace dualcx

#endif
