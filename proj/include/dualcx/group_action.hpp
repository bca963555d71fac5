#ifndef DUALCX_GROUP_ACTION_HPP
#define DUALCX_GROUP_ACTION_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/linalg.hpp"
#include "dualcx/simplicial_complex.hpp"
#include "dualcx/subdivision.hpp"

namespace dualcx {

class ActionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dimension-preserving cell bijection compatible with the face maps: the
/// image of the face multiset of a cell is the face multiset of its image.
struct Automorphism {
    std::vector<std::vector<int>> perm;  // perm[dim][index] -> image index

    bool operator==(const Automorphism&) const = default;
    bool operator<(const Automorphism& o) const { return perm < o.perm; }

    int apply(int dim, int index) const { return perm[dim][index]; }
    CellId apply(CellId c) const { return {c.dim, perm[c.dim][c.index]}; }
};

inline Automorphism identity_automorphism(const DeltaComplex& kx) {
    Automorphism a;
    a.perm.resize(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        a.perm[d].resize(kx.cells[d].size());
        std::iota(a.perm[d].begin(), a.perm[d].end(), 0);
    }
    return a;
}

inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
    // (f*g)(x) = f(g(x))
    Automorphism h;
    h.perm.resize(f.perm.size());
    for (std::size_t d = 0; d < f.perm.size(); ++d) {
        h.perm[d].resize(f.perm[d].size());
        for (std::size_t i = 0; i < f.perm[d].size(); ++i)
            h.perm[d][i] = f.perm[d][g.perm[d][i]];
    }
    return h;
}

inline Automorphism inverse(const Automorphism& f) {
    Automorphism h;
    h.perm.resize(f.perm.size());
    for (std::size_t d = 0; d < f.perm.size(); ++d) {
        h.perm[d].resize(f.perm[d].size());
        for (std::size_t i = 0; i < f.perm[d].size(); ++i)
            h.perm[d][f.perm[d][i]] = static_cast<int>(i);
    }
    return h;
}

/// Throws ActionError if g is not a bijection or does not commute with the
/// face maps (as multisets).
inline void check_automorphism(const DeltaComplex& kx, const Automorphism& g) {
    if (g.perm.size() != kx.cells.size())
        throw ActionError("automorphism dimension count mismatch");
    for (int d = 0; d <= kx.top_dim(); ++d) {
        if (g.perm[d].size() != kx.cells[d].size())
            throw ActionError("automorphism size mismatch in dimension " + std::to_string(d));
        std::vector<char> seen(kx.cells[d].size(), 0);
        for (int img : g.perm[d]) {
            if (img < 0 || img >= static_cast<int>(kx.cells[d].size()) || seen[img])
                throw ActionError("automorphism not a bijection in dimension " +
                                  std::to_string(d));
            seen[img] = 1;
        }
    }
    for (int d = 1; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            std::vector<int> img_faces;
            for (int f : kx.cells[d][i].faces) img_faces.push_back(g.perm[d - 1][f]);
            std::vector<int> target = kx.cells[d][g.perm[d][i]].faces;
            std::sort(img_faces.begin(), img_faces.end());
            std::sort(target.begin(), target.end());
            if (img_faces != target)
                throw ActionError("automorphism does not commute with face maps at cell " +
                                  to_string(CellId{d, i}));
        }
    }
}

/// Finite group of automorphisms of one complex, given by generators.
struct GroupAction {
    DeltaComplex complex;
    std::vector<Automorphism> generators;
    std::size_t cap = 10000;
};

/// Closure of the generators under composition, breadth-first, deterministic.
/// Throws ActionError when the cap is exceeded.
inline std::vector<Automorphism> enumerate_elements(const GroupAction& action) {
    for (const auto& g : action.generators) check_automorphism(action.complex, g);
    std::set<Automorphism> seen;
    std::vector<Automorphism> elements;
    auto id = identity_automorphism(action.complex);
    seen.insert(id);
    elements.push_back(id);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        auto current = elements[head];  // copy: elements may reallocate
        for (const auto& g : action.generators) {
            auto next = compose(g, current);
            if (seen.insert(next).second) {
                if (elements.size() + 1 > action.cap)
                    throw ActionError("group too large: cap " + std::to_string(action.cap) +
                                      " exceeded");
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

struct Orbits {
    // per dimension: orbit id per cell, orbit member lists, stabilizer orders
    std::vector<std::vector<int>> orbit_id;
    std::vector<std::vector<std::vector<int>>> members;  // members[d][orbit] sorted
    std::vector<std::vector<int>> stabilizer_order;      // per cell
};

inline Orbits orbits_and_stabilizers(const GroupAction& action,
                                     const std::vector<Automorphism>& elements) {
    const auto& kx = action.complex;
    Orbits o;
    o.orbit_id.resize(kx.cells.size());
    o.members.resize(kx.cells.size());
    o.stabilizer_order.resize(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        int n = static_cast<int>(kx.cells[d].size());
        o.orbit_id[d].assign(n, -1);
        o.stabilizer_order[d].assign(n, 0);
        for (int i = 0; i < n; ++i) {
            if (o.orbit_id[d][i] != -1) continue;
            int oid = static_cast<int>(o.members[d].size());
            std::set<int> orbit;
            for (const auto& g : elements) orbit.insert(g.perm[d][i]);
            std::vector<int> mem(orbit.begin(), orbit.end());
            for (int m : mem) o.orbit_id[d][m] = oid;
            o.members[d].push_back(mem);
        }
        for (int i = 0; i < n; ++i) {
            int stab = 0;
            for (const auto& g : elements)
                if (g.perm[d][i] == i) ++stab;
            o.stabilizer_order[d][i] = stab;
        }
    }
    return o;
}

/// True iff every element that maps a cell to itself fixes each of its
/// vertices.
inline bool fixed_cell_fixes_vertices(const GroupAction& action,
                                      const std::vector<Automorphism>& elements,
                                      std::string* witness = nullptr) {
    const auto& kx = action.complex;
    auto vt = vertex_table(kx);
    for (const auto& g : elements) {
        for (int d = 1; d <= kx.top_dim(); ++d) {
            for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
                if (g.perm[d][i] != i) continue;
                for (int v : vt[d][i]) {
                    if (g.perm[0][v] != v) {
                        if (witness)
                            *witness = "element stabilizes cell " + to_string(CellId{d, i}) +
                                       " but moves its vertex " + std::to_string(v);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Transports an action along barycentric subdivision: cells of the source
/// become vertices of the subdivision, chains map to chains. The returned
/// action is bound to to_delta(barycentric(source)).
inline GroupAction induced_action(const GroupAction& action) {
    auto [sc, sm] = barycentric(action.complex);
    DeltaComplex bd = to_delta(sc);
    auto vt = vertex_table(bd);

    // vertex set -> cell, for lifting the vertex permutation cell by cell
    std::vector<std::map<std::vector<int>, int>> by_vertices(bd.cells.size());
    for (int d = 0; d <= bd.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(bd.cells[d].size()); ++i) {
            auto key = vt[d][i];
            std::sort(key.begin(), key.end());
            by_vertices[d][key] = i;
        }

    GroupAction out;
    out.cap = action.cap;
    for (const auto& g : action.generators) {
        // permutation on subdivision vertices = permutation of source cells
        std::vector<int> vperm(sc.vertex_count());
        for (int d = 0; d < static_cast<int>(sm.cell_to_vertex.size()); ++d)
            for (int i = 0; i < static_cast<int>(sm.cell_to_vertex[d].size()); ++i)
                vperm[sm.cell_to_vertex[d][i]] = sm.cell_to_vertex[d][g.perm[d][i]];
        Automorphism h;
        h.perm.resize(bd.cells.size());
        for (int d = 0; d <= bd.top_dim(); ++d) {
            h.perm[d].resize(bd.cells[d].size());
            for (int i = 0; i < static_cast<int>(bd.cells[d].size()); ++i) {
                std::vector<int> image;
                for (int v : vt[d][i]) image.push_back(vperm[v]);
                std::sort(image.begin(), image.end());
                auto it = by_vertices[d].find(image);
                if (it == by_vertices[d].end())
                    throw ActionError("induced action does not map simplices to simplices");
                h.perm[d][i] = it->second;
            }
        }
        out.generators.push_back(std::move(h));
    }
    out.complex = std::move(bd);

    // the paper's property is automatic for order complexes; assert anyway
    auto elements = enumerate_elements(out);
    std::string witness;
    if (!fixed_cell_fixes_vertices(out, elements, &witness))
        throw ActionError("induced action violates fixed-simplex property: " + witness);
    return out;
}

struct QuotientResult {
    DeltaComplex quotient;
    DeltaComplex source_used;  // the (possibly subdivided) complex actually quotiented
    std::vector<std::vector<int>> projection;  // [dim][cell of source_used] -> quotient index
    bool regular = false;
    int subdivisions_applied = 0;
};

namespace detail {

inline DeltaComplex orbit_complex(const DeltaComplex& kx, const Orbits& o,
                                  std::vector<std::vector<int>>* projection) {
    DeltaComplex q;
    q.cells.resize(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        for (const auto& mem : o.members[d]) {
            int rep = mem.front();
            Cell c;
            c.label = kx.cells[d][rep].label;
            if (mem.size() > 1) c.label += "~";
            for (int f : kx.cells[d][rep].faces) c.faces.push_back(o.orbit_id[d - 1][f]);
            q.cells[d].push_back(std::move(c));
        }
    }
    if (projection) *projection = o.orbit_id;
    q.trim();
    return q;
}

}  // namespace detail

/// Orbit complex. If the fixed-cell property fails or the orbit complex is
/// not a valid regular Delta-complex, the source is barycentrically
/// subdivided (at most twice) and the quotient retried.
inline QuotientResult quotient(const GroupAction& action) {
    GroupAction current = action;
    std::string witness;
    for (int subs = 0; subs <= 2; ++subs) {
        auto elements = enumerate_elements(current);
        if (fixed_cell_fixes_vertices(current, elements, &witness)) {
            auto orbits = orbits_and_stabilizers(current, elements);
            QuotientResult res;
            res.quotient = detail::orbit_complex(current.complex, orbits, &res.projection);
            auto rep = validate(res.quotient);
            if (rep.ok) {
                res.source_used = current.complex;
                res.regular = true;
                res.subdivisions_applied = subs;
                return res;
            }
            witness = rep.violations.front().rule + " at cell " +
                      to_string(rep.violations.front().cells.empty()
                                    ? CellId{}
                                    : rep.violations.front().cells.front());
        }
        if (subs == 2) break;
        current = induced_action(current);
    }
    throw ActionError("quotient failed after 2 subdivisions: " + witness);
}

namespace detail {

/// Chain map of an automorphism in degree d as a signed permutation matrix.
/// The sign is the parity of the induced permutation of vertex ranks.
inline RatMat chain_map(const DeltaComplex& kx,
                        const std::vector<std::vector<std::vector<int>>>& vt,
                        const Automorphism& g, int d) {
    int n = static_cast<int>(kx.cells[d].size());
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) {
        int img = g.perm[d][i];
        int sign = 1;
        if (d > 0) {
            // position of g(v_k) within the image cell's vertex order
            const auto& src = vt[d][i];
            const auto& dst = vt[d][img];
            std::vector<int> pos;
            for (int v : src) {
                int gv = g.perm[0][v];
                auto it = std::find(dst.begin(), dst.end(), gv);
                pos.push_back(static_cast<int>(it - dst.begin()));
            }
            for (std::size_t a = 0; a < pos.size(); ++a)
                for (std::size_t b = a + 1; b < pos.size(); ++b)
                    if (pos[a] > pos[b]) sign = -sign;
        }
        m.at(img, i) = sign;
    }
    return m;
}

}  // namespace detail

/// Rank of the G-invariant subspace of H^i(|T|; Q), computed as the average
/// over the group of the trace of the induced map on homology.
inline int invariant_rank(const GroupAction& action, int degree) {
    auto elements = enumerate_elements(action);
    const auto& kx = action.complex;
    if (kx.empty() || degree < 0 || degree > kx.top_dim()) return 0;
    auto vt = vertex_table(kx);
    auto cc = chain_complex(kx);

    int n = cc.cell_counts[degree];
    // cycle space Z = ker boundary[degree]; boundary space B = im boundary[degree+1]
    RatMat cycles;
    if (degree == 0) {
        cycles = RatMat(n, n);
        for (int i = 0; i < n; ++i) cycles.at(i, i) = 1;
    } else {
        RatMat bd(cc.boundary[degree].rows, cc.boundary[degree].cols);
        for (int r = 0; r < bd.rows; ++r)
            for (int c = 0; c < bd.cols; ++c) bd.at(r, c) = Rat(cc.boundary[degree].at(r, c));
        cycles = kernel_basis(bd);
    }
    RatMat bnd;  // columns spanning the boundary space
    if (degree + 1 <= cc.top_dim()) {
        const auto& m = cc.boundary[degree + 1];
        bnd = RatMat(m.rows, m.cols);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) bnd.at(r, c) = Rat(m.at(r, c));
    } else {
        bnd = RatMat(n, 0);
    }

    // homology representatives: columns of `cycles` whose pivots survive after
    // the boundary columns in [bnd | cycles]
    RatMat combined(n, bnd.cols + cycles.cols);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < bnd.cols; ++c) combined.at(r, c) = bnd.at(r, c);
        for (int c = 0; c < cycles.cols; ++c) combined.at(r, bnd.cols + c) = cycles.at(r, c);
    }
    auto pivots = rref(combined);
    std::vector<int> hom_cols;  // columns of `cycles` chosen as H representatives
    int bnd_rank = 0;
    for (int p : pivots) {
        if (p < bnd.cols) ++bnd_rank;
        else hom_cols.push_back(p - bnd.cols);
    }
    int h = static_cast<int>(hom_cols.size());
    if (h == 0) return 0;

    // basis matrix M = [bnd-basis | chosen cycles]; express each image in it
    RatMat basis(n, bnd_rank + h);
    {
        int col = 0;
        auto pv = pivots;  // pivot columns of combined give independent columns
        for (int p : pv) {
            for (int r = 0; r < n; ++r)
                basis.at(r, col) = p < bnd.cols ? bnd.at(r, p) : cycles.at(r, p - bnd.cols);
            ++col;
        }
    }

    Rat total = 0;
    for (const auto& g : elements) {
        auto gm = detail::chain_map(kx, vt, g, degree);
        // rhs: images of the chosen homology cycles
        RatMat aug(n, basis.cols + h);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < basis.cols; ++c) aug.at(r, c) = basis.at(r, c);
        for (int j = 0; j < h; ++j) {
            for (int r = 0; r < n; ++r) {
                Rat v = 0;
                for (int s = 0; s < n; ++s)
                    if (gm.at(r, s) != 0) v += gm.at(r, s) * cycles.at(s, hom_cols[j]);
                aug.at(r, basis.cols + j) = v;
            }
        }
        rref(aug);
        // coefficient of the j-th homology basis vector in the j-th image:
        // basis columns are in rref order, homology ones occupy rows bnd_rank..
        for (int j = 0; j < h; ++j) total += aug.at(bnd_rank + j, basis.cols + j);
    }
    Rat avg = total / Rat(static_cast<int>(elements.size()));
    if (denominator(avg) != 1)
        throw std::logic_error("invariant_rank: non-integral character average");
    return static_cast<int>(numerator(avg));
}

}  // namespace dualcx

#endif
