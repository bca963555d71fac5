#ifndef DUALCX_SIMPLICIAL_COMPLEX_HPP
#define DUALCX_SIMPLICIAL_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"

namespace dualcx {

/// Abstract simplicial complex on labeled vertices. Facets are maximal
/// simplices as sorted vertex-index lists; faces are implied downward-closed
/// and never stored. When the complex came from barycentric subdivision each
/// vertex carries the cell of the source complex it stands for.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<CellId> vertex_origins;  // empty when vertices have no provenance
    std::vector<std::vector<int>> facets;

    std::size_t vertex_count() const { return vertex_labels.size(); }

    void normalize() {
        for (auto& f : facets) std::sort(f.begin(), f.end());
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    }
};

/// Realizes a simplicial complex as a regular Delta-complex. Vertex order
/// inside each simplex is the global vertex index order, which fixes all face
/// orderings and boundary signs.
inline DeltaComplex to_delta(const SimplicialComplex& sc) {
    // enumerate all faces, graded, deduplicated
    std::vector<std::set<std::vector<int>>> grades;
    for (const auto& f : sc.facets) {
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("facet has repeated vertices");
        // all non-empty subsets
        int n = static_cast<int>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) sub.push_back(s[b]);
            int d = static_cast<int>(sub.size()) - 1;
            if (static_cast<int>(grades.size()) <= d) grades.resize(d + 1);
            grades[d].insert(std::move(sub));
        }
    }
    // include isolated vertices not on any facet
    if (sc.vertex_count() > 0 && grades.empty()) grades.resize(1);
    for (int v = 0; v < static_cast<int>(sc.vertex_count()); ++v)
        grades[0].insert({v});

    std::vector<std::map<std::vector<int>, int>> index(grades.size());
    DeltaComplex kx;
    kx.cells.resize(grades.size());
    for (int d = 0; d < static_cast<int>(grades.size()); ++d) {
        for (const auto& s : grades[d]) {
            int idx = static_cast<int>(kx.cells[d].size());
            index[d][s] = idx;
            Cell c;
            if (d == 0) {
                c.label = sc.vertex_labels.empty() ? "v" + std::to_string(s[0])
                                                   : sc.vertex_labels[s[0]];
            } else {
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> face = s;
                    face.erase(face.begin() + i);
                    c.faces.push_back(index[d - 1].at(face));
                }
            }
            kx.cells[d].push_back(std::move(c));
        }
    }
    kx.trim();
    return kx;
}

/// Link of a vertex in the order complex of the face poset: one link vertex
/// per cell strictly containing v, simplices are chains of such cells.
inline SimplicialComplex link(const DeltaComplex& kx, CellId vertex) {
    if (vertex.dim != 0) throw std::invalid_argument("link requires a vertex");
    if (!kx.has_cell(vertex)) throw std::out_of_range("unknown cell " + to_string(vertex));

    auto vt = vertex_table(kx);
    // star cells: all cells of dim >= 1 whose vertex list contains v
    std::map<CellId, int> star;  // cell -> link vertex index
    SimplicialComplex out;
    for (int d = 1; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            const auto& vs = vt[d][i];
            if (std::find(vs.begin(), vs.end(), vertex.index) != vs.end()) {
                star[{d, i}] = static_cast<int>(out.vertex_labels.size());
                const std::string& lbl = kx.cells[d][i].label;
                out.vertex_labels.push_back(lbl.empty() ? to_string(CellId{d, i}) : lbl);
                out.vertex_origins.push_back({d, i});
            }
        }
    }
    // direct coface counts within the star, to find maximal star cells
    std::map<CellId, int> coface_count;
    for (const auto& [c, idx] : star) coface_count[c] = 0;
    for (const auto& [c, idx] : star) {
        if (c.dim < 2) continue;
        std::set<int> fs(kx.cell(c).faces.begin(), kx.cell(c).faces.end());
        for (int f : fs) {
            auto it = star.find({c.dim - 1, f});
            if (it != star.end()) ++coface_count[it->first];
        }
    }
    // maximal chains: DFS down from maximal star cells through faces in star
    std::vector<int> chain;
    auto descend = [&](auto&& self, CellId c) -> void {
        chain.push_back(star.at(c));
        bool extended = false;
        if (c.dim >= 2) {
            std::set<int> fs(kx.cell(c).faces.begin(), kx.cell(c).faces.end());
            for (int f : fs) {
                CellId face{c.dim - 1, f};
                if (star.count(face)) {
                    extended = true;
                    self(self, face);
                }
            }
        }
        if (!extended) {
            auto facet = chain;
            std::sort(facet.begin(), facet.end());
            out.facets.push_back(std::move(facet));
        }
        chain.pop_back();
    };
    for (const auto& [c, idx] : star)
        if (coface_count[c] == 0) descend(descend, c);
    out.normalize();
    return out;
}

}  // namespace dualcx

#endif
