#ifndef DUALCX_RECOGNIZER_HPP
#define DUALCX_RECOGNIZER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/fundamental_group.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

struct CollapseStep {
    CellId free_face;
    CellId coface;
};

struct CollapseReport {
    std::vector<CollapseStep> steps;
    DeltaComplex residual;
    bool collapsed_to_point = false;
    unsigned seed = 0;
};

/// Greedy elementary collapse. A free face is a cell with exactly one direct
/// coface whose coface is maximal; both are removed. Candidate order: lowest
/// dimension, then lowest index; a nonzero seed permutes tie-breaks. A false
/// result is not a proof of non-collapsibility.
inline CollapseReport greedy_collapse(const DeltaComplex& kx, unsigned seed = 0) {
    CollapseReport rep;
    rep.seed = seed;
    std::vector<std::vector<char>> alive(kx.cells.size());
    std::vector<std::vector<int>> ncofaces(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        alive[d].assign(kx.cells[d].size(), 1);
        ncofaces[d].assign(kx.cells[d].size(), 0);
    }
    for (int d = 1; d <= kx.top_dim(); ++d)
        for (const auto& cell : kx.cells[d])
            for (int f : cell.faces) ++ncofaces[d - 1][f];
    // coface lists for locating the unique coface
    std::vector<std::vector<std::vector<int>>> cofaces(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) cofaces[d].resize(kx.cells[d].size());
    for (int d = 1; d <= kx.top_dim(); ++d)
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i)
            for (int f : kx.cells[d][i].faces) cofaces[d - 1][f].push_back(i);

    std::mt19937 rng(seed);
    while (true) {
        // candidates at the lowest dimension that has any
        std::vector<CollapseStep> candidates;
        for (int d = 0; d < kx.top_dim() && candidates.empty(); ++d) {
            for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
                if (!alive[d][i] || ncofaces[d][i] != 1) continue;
                int cf = -1;
                for (int c : cofaces[d][i])
                    if (alive[d + 1][c]) { cf = c; break; }
                if (cf == -1) continue;
                if (ncofaces[d + 1][cf] != 0) continue;  // coface must be maximal
                candidates.push_back({{d, i}, {d + 1, cf}});
            }
        }
        if (candidates.empty()) break;
        std::size_t pick = 0;
        if (seed != 0 && candidates.size() > 1)
            pick = rng() % candidates.size();
        auto step = candidates[pick];
        alive[step.free_face.dim][step.free_face.index] = 0;
        alive[step.coface.dim][step.coface.index] = 0;
        for (int f : kx.cell(step.coface).faces)
            if (alive[step.coface.dim - 1][f]) --ncofaces[step.coface.dim - 1][f];
        if (step.free_face.dim > 0)
            for (int f : kx.cell(step.free_face).faces)
                if (alive[step.free_face.dim - 1][f]) --ncofaces[step.free_face.dim - 1][f];
        rep.steps.push_back(step);
    }
    // residual: surviving cells, re-densified
    std::vector<std::vector<int>> newidx(kx.cells.size());
    for (int d = 0; d <= kx.top_dim(); ++d) {
        newidx[d].assign(kx.cells[d].size(), -1);
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            if (!alive[d][i]) continue;
            if (static_cast<int>(rep.residual.cells.size()) <= d)
                rep.residual.cells.resize(d + 1);
            newidx[d][i] = static_cast<int>(rep.residual.cells[d].size());
            Cell c = kx.cells[d][i];
            for (int& f : c.faces) f = newidx[d - 1][f];
            rep.residual.cells[d].push_back(std::move(c));
        }
    }
    rep.residual.trim();
    rep.collapsed_to_point = rep.residual.cell_count() == 1 &&
                             rep.residual.cell_count(0) == 1;
    return rep;
}

/// Up to `retries` seeded greedy attempts; returns the first success, else
/// the last report.
inline CollapseReport collapses_to_point(const DeltaComplex& kx, unsigned seed = 0,
                                         int retries = 8) {
    CollapseReport last;
    for (int r = 0; r < retries; ++r) {
        last = greedy_collapse(kx, seed + static_cast<unsigned>(r));
        if (last.collapsed_to_point) return last;
    }
    return last;
}

enum class SurfaceClass { S2, RP2, Torus, Klein, Other, NotClosedSurface };

inline std::string to_string(SurfaceClass s) {
    switch (s) {
        case SurfaceClass::S2: return "S2";
        case SurfaceClass::RP2: return "RP2";
        case SurfaceClass::Torus: return "T2";
        case SurfaceClass::Klein: return "Klein";
        case SurfaceClass::Other: return "other";
        default: return "not-a-closed-surface";
    }
}

struct SurfaceReport {
    SurfaceClass cls = SurfaceClass::NotClosedSurface;
    int euler = 0;
    bool orientable = false;
    std::string witness;
};

/// Closed-surface check (every edge in exactly two triangle corners, vertex
/// links single cycles), then classification by Euler characteristic and a
/// coherent-orientation search.
inline SurfaceReport classify_surface(const DeltaComplex& kx) {
    SurfaceReport rep;
    if (kx.top_dim() != 2) {
        rep.witness = "dimension is " + std::to_string(kx.top_dim()) + ", not 2";
        return rep;
    }
    int ne = static_cast<int>(kx.cell_count(1));
    int nt = static_cast<int>(kx.cell_count(2));
    std::vector<int> edge_use(ne, 0);
    for (int t = 0; t < nt; ++t)
        for (int f : kx.cells[2][t].faces) ++edge_use[f];
    for (int e = 0; e < ne; ++e)
        if (edge_use[e] != 2) {
            rep.witness = "edge " + to_string(CellId{1, e}) + " lies in " +
                          std::to_string(edge_use[e]) + " triangles";
            return rep;
        }
    // vertex links: graph on incident edges, two edges joined per triangle corner
    int nv = static_cast<int>(kx.cell_count(0));
    auto vt = vertex_table(kx);
    std::vector<std::map<int, int>> degree(nv);  // edge -> link degree
    std::vector<std::vector<std::pair<int, int>>> link_edges(nv);
    for (int t = 0; t < nt; ++t) {
        const auto& f = kx.cells[2][t].faces;
        // corner at vertex i uses the two edges keeping vertex i:
        // vertex 0: faces 1,2; vertex 1: faces 0,2; vertex 2: faces 0,1
        const int corners[3][2] = {{1, 2}, {0, 2}, {0, 1}};
        for (int i = 0; i < 3; ++i) {
            int v = vt[2][t][i];
            int e1 = f[corners[i][0]], e2 = f[corners[i][1]];
            link_edges[v].push_back({e1, e2});
            ++degree[v][e1];
            ++degree[v][e2];
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (link_edges[v].empty()) {
            rep.witness = "isolated vertex " + to_string(CellId{0, v});
            return rep;
        }
        for (const auto& [e, d] : degree[v])
            if (d != 2) {
                rep.witness = "vertex " + to_string(CellId{0, v}) + " link is not a cycle";
                return rep;
            }
        // connected: walk the link graph
        std::map<int, std::vector<int>> adj;
        for (auto [a, b] : link_edges[v]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::set<int> seen;
        std::vector<int> stack{adj.begin()->first};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (!seen.insert(x).second) continue;
            for (int y : adj[x]) stack.push_back(y);
        }
        if (seen.size() != adj.size()) {
            rep.witness = "vertex " + to_string(CellId{0, v}) + " link is disconnected";
            return rep;
        }
    }
    if (detail::component_labels(kx).second != 1) {
        rep.witness = "disconnected";
        return rep;
    }

    rep.euler = euler_characteristic(kx);
    // orientability: propagate orientations across shared edges
    std::vector<int> orient(nt, 0);
    std::vector<std::vector<std::pair<int, int>>> edge_cofaces(ne);  // (tri, face pos)
    for (int t = 0; t < nt; ++t) {
        const auto& f = kx.cells[2][t].faces;
        for (int i = 0; i < 3; ++i) edge_cofaces[f[i]].push_back({t, i});
    }
    rep.orientable = true;
    for (int t0 = 0; t0 < nt && rep.orientable; ++t0) {
        if (orient[t0] != 0) continue;
        orient[t0] = 1;
        std::vector<int> stack{t0};
        while (!stack.empty() && rep.orientable) {
            int t = stack.back();
            stack.pop_back();
            const auto& f = kx.cells[2][t].faces;
            for (int i = 0; i < 3; ++i) {
                for (auto [t2, j] : edge_cofaces[f[i]]) {
                    if (t2 == t && j == i) continue;
                    // induced orientations on the shared edge must be opposite
                    int si = i % 2 == 0 ? 1 : -1;
                    int sj = j % 2 == 0 ? 1 : -1;
                    int needed = -orient[t] * si * sj;
                    if (orient[t2] == 0) {
                        orient[t2] = needed;
                        stack.push_back(t2);
                    } else if (orient[t2] != needed) {
                        rep.orientable = false;
                        break;
                    }
                }
            }
        }
    }

    if (rep.orientable && rep.euler == 2) rep.cls = SurfaceClass::S2;
    else if (!rep.orientable && rep.euler == 1) rep.cls = SurfaceClass::RP2;
    else if (rep.orientable && rep.euler == 0) rep.cls = SurfaceClass::Torus;
    else if (!rep.orientable && rep.euler == 0) rep.cls = SurfaceClass::Klein;
    else rep.cls = SurfaceClass::Other;
    return rep;
}

/// Connected 1-complex in which every vertex lies on exactly two edge ends.
inline bool is_circle(const DeltaComplex& kx) {
    if (kx.top_dim() != 1) return false;
    if (detail::component_labels(kx).second != 1) return false;
    std::vector<int> deg(kx.cell_count(0), 0);
    for (const auto& e : kx.cells[1])
        for (int f : e.faces) ++deg[f];
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

struct ThreeManifoldReport {
    bool is_closed_3_manifold = false;
    std::vector<std::pair<CellId, std::string>> vertex_links;  // per-vertex class
    std::string witness;
};

/// True iff every 2-cell has exactly two cofaces and every vertex link
/// classifies as S2.
inline ThreeManifoldReport closed_3_manifold_check(const DeltaComplex& kx) {
    ThreeManifoldReport rep;
    if (kx.top_dim() != 3) {
        rep.witness = "dimension is " + std::to_string(kx.top_dim()) + ", not 3";
        return rep;
    }
    std::vector<int> use(kx.cell_count(2), 0);
    for (const auto& c : kx.cells[3])
        for (int f : c.faces) ++use[f];
    for (int i = 0; i < static_cast<int>(use.size()); ++i)
        if (use[i] != 2) {
            rep.witness = "2-cell " + to_string(CellId{2, i}) + " lies in " +
                          std::to_string(use[i]) + " 3-cells";
            return rep;
        }
    rep.is_closed_3_manifold = true;
    for (int v = 0; v < static_cast<int>(kx.cell_count(0)); ++v) {
        auto lk = to_delta(link(kx, {0, v}));
        auto sr = classify_surface(lk);
        rep.vertex_links.push_back({{0, v}, to_string(sr.cls)});
        if (sr.cls != SurfaceClass::S2) {
            rep.is_closed_3_manifold = false;
            if (rep.witness.empty())
                rep.witness = "link of vertex " + to_string(CellId{0, v}) + " is " +
                              to_string(sr.cls);
        }
    }
    return rep;
}

enum class VerdictLevel {
    ConfirmedSphere,
    CandidateSphere,
    SphereQuotientCandidate,
    ConsistentWithConjecture,
    Inconsistent,
    Unknown
};

inline std::string to_string(VerdictLevel v) {
    switch (v) {
        case VerdictLevel::ConfirmedSphere: return "ConfirmedSphere";
        case VerdictLevel::CandidateSphere: return "CandidateSphere";
        case VerdictLevel::SphereQuotientCandidate: return "SphereQuotientCandidate";
        case VerdictLevel::ConsistentWithConjecture: return "ConsistentWithConjecture";
        case VerdictLevel::Inconsistent: return "Inconsistent";
        default: return "Unknown";
    }
}

struct Verdict {
    VerdictLevel level = VerdictLevel::Unknown;
    std::vector<std::pair<std::string, std::string>> evidence;
    int dimension = -1;
};

struct ProbeOptions {
    int max_index = 5;
    std::size_t coset_table_cap = 1000000;
};

namespace detail {

struct CommonChecks {
    int dim = -1;
    bool connected = false;
    bool equidimensional = false;
    bool middle_vanishing = false;  // b_i = 0 for 0 < i < dim
    bool pseudomanifold = false;    // every codim-1 cell has exactly two cofaces
    std::vector<int> betti;
    HomologyResult homology;
    FinitenessProbe pi1;
    std::string middle_witness;
};

inline CommonChecks run_common_checks(const DeltaComplex& kx, const ProbeOptions& opt) {
    CommonChecks c;
    c.dim = kx.top_dim();
    c.connected = component_labels(kx).second == 1;
    auto profiles = dimension_profile(kx);
    c.equidimensional = std::all_of(profiles.begin(), profiles.end(),
                                    [](const auto& p) { return p.equidimensional; });
    c.betti = betti(kx);
    c.homology = integral_homology(kx);
    c.middle_vanishing = true;
    for (int i = 1; i < c.dim; ++i)
        if (i < static_cast<int>(c.betti.size()) && c.betti[i] != 0) {
            c.middle_vanishing = false;
            c.middle_witness = "b_" + std::to_string(i) + " = " + std::to_string(c.betti[i]);
        }
    c.pseudomanifold = true;
    if (c.dim >= 1) {
        std::vector<int> use(kx.cell_count(c.dim - 1), 0);
        for (const auto& cell : kx.cells[c.dim])
            for (int f : cell.faces) ++use[f];
        for (int u : use)
            if (u != 2) { c.pseudomanifold = false; break; }
    }
    if (c.connected && !kx.empty())
        c.pi1 = low_index_probe(tietze_simplify(presentation(kx)), opt.max_index,
                                opt.coset_table_cap);
    return c;
}

inline void record_common(Verdict& v, const CommonChecks& c) {
    std::string bs = "(";
    for (std::size_t i = 0; i < c.betti.size(); ++i)
        bs += (i ? "," : "") + std::to_string(c.betti[i]);
    bs += ")";
    v.evidence.push_back({"dimension", std::to_string(c.dim)});
    v.evidence.push_back({"connected", c.connected ? "true" : "false"});
    v.evidence.push_back({"equidimensional", c.equidimensional ? "true" : "false"});
    v.evidence.push_back({"betti", bs});
    v.evidence.push_back({"middle_vanishing",
                          c.middle_vanishing ? "true" : "false: " + c.middle_witness});
    v.evidence.push_back({"pseudomanifold", c.pseudomanifold ? "true" : "false"});
    if (c.dim >= 1 && static_cast<int>(c.homology.degrees.size()) > 1)
        v.evidence.push_back({"H1", to_string(c.homology.degrees[1])});
    v.evidence.push_back({"pi1_verdict", to_string(c.pi1.verdict)});
    if (c.pi1.order)
        v.evidence.push_back({"pi1_order", std::to_string(*c.pi1.order)});
}

}  // namespace detail

/// Necessary-condition battery for "is this complex a finite quotient of a
/// sphere". Exact recognition only in dimensions <= 2; dimension 3 caps at
/// CandidateSphere.
inline Verdict sphere_quotient_report(const DeltaComplex& kx,
                                      const ProbeOptions& opt = {}) {
    Verdict v;
    v.dimension = kx.top_dim();
    auto c = detail::run_common_checks(kx, opt);
    detail::record_common(v, c);

    if (c.dim == 0) {
        // S^0 itself (disconnected by nature) or its point quotient
        if (kx.cell_count(0) == 2) v.level = VerdictLevel::ConfirmedSphere;
        else if (kx.cell_count(0) == 1) v.level = VerdictLevel::SphereQuotientCandidate;
        else {
            v.level = VerdictLevel::Inconsistent;
            v.evidence.push_back({"failure", "more than two components in dimension 0"});
        }
        return v;
    }
    if (!c.connected) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "disconnected"});
        return v;
    }
    if (!c.equidimensional) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "not equidimensional"});
        return v;
    }
    if (!c.middle_vanishing) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "rational cohomology does not vanish in middle degrees: " +
                                             c.middle_witness});
        return v;
    }
    // the vanishing and finiteness statements only apply in dimension >= 2
    if (c.dim >= 2 && c.pi1.verdict == FinitenessVerdict::ProvablyInfinite) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "fundamental group provably infinite"});
        return v;
    }

    if (c.dim == 1) {
        if (is_circle(kx)) {
            // S^1 is a quotient of itself but pi1 is infinite; caught above
            v.level = VerdictLevel::ConfirmedSphere;
            return v;
        }
        v.level = VerdictLevel::ConsistentWithConjecture;
        return v;
    }
    if (c.dim == 2) {
        auto sr = classify_surface(kx);
        v.evidence.push_back({"surface", to_string(sr.cls)});
        if (sr.cls == SurfaceClass::S2) v.level = VerdictLevel::ConfirmedSphere;
        else if (sr.cls == SurfaceClass::RP2) {
            v.level = VerdictLevel::SphereQuotientCandidate;
            v.evidence.push_back({"quotient_group_order", "2"});
        } else if (sr.cls == SurfaceClass::NotClosedSurface) {
            v.level = VerdictLevel::ConsistentWithConjecture;
        } else {
            // closed surface other than S2/RP2 cannot be a sphere quotient
            v.level = VerdictLevel::Inconsistent;
            v.evidence.push_back({"failure", "closed surface of class " + to_string(sr.cls)});
        }
        return v;
    }

    bool q_sphere = is_rational_homology_sphere(kx, c.dim).is_sphere;
    v.evidence.push_back({"rational_homology_sphere", q_sphere ? "true" : "false"});
    bool manifold3 = false;
    if (c.dim == 3) {
        auto mr = closed_3_manifold_check(kx);
        manifold3 = mr.is_closed_3_manifold;
        v.evidence.push_back({"closed_3_manifold", manifold3 ? "true" : "false"});
    }
    if (c.pi1.verdict == FinitenessVerdict::ProvablyFinite) {
        if (*c.pi1.order == 1 && q_sphere && c.pseudomanifold &&
            (c.dim != 3 || manifold3)) {
            v.level = VerdictLevel::CandidateSphere;  // Poincare caveat in dim 3
        } else {
            v.level = VerdictLevel::SphereQuotientCandidate;
            v.evidence.push_back({"quotient_group_order", std::to_string(*c.pi1.order)});
        }
    } else {
        v.level = VerdictLevel::ConsistentWithConjecture;
    }
    return v;
}

/// Checks for the expected sphere structure of a maximally degenerate limit:
/// declared dimension, rational homology sphere, simply connected.
inline Verdict cy_degeneration_report(const DeltaComplex& kx, int expected_dim,
                                      const ProbeOptions& opt = {}) {
    Verdict v;
    v.dimension = kx.top_dim();
    auto c = detail::run_common_checks(kx, opt);
    detail::record_common(v, c);
    v.evidence.push_back({"expected_dimension", std::to_string(expected_dim)});

    if (expected_dim == 0) {
        // S^0 is disconnected; recognize it before the connectivity gate
        v.level = c.dim == 0 && kx.cell_count(0) == 2 &&
                          is_rational_homology_sphere(kx, 0).is_sphere
                      ? VerdictLevel::ConfirmedSphere
                      : VerdictLevel::Inconsistent;
        if (v.level == VerdictLevel::Inconsistent)
            v.evidence.push_back({"failure", "not two points"});
        return v;
    }
    if (!c.connected) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "disconnected"});
        return v;
    }
    if (c.dim != expected_dim) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "dimension " + std::to_string(c.dim) +
                                             " != expected " + std::to_string(expected_dim)});
        return v;
    }
    auto cert = is_rational_homology_sphere(kx, expected_dim);
    v.evidence.push_back({"rational_homology_sphere", cert.is_sphere ? "true" : "false"});
    if (!cert.is_sphere) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "not a rational homology sphere"});
        return v;
    }
    if (expected_dim == 1) {
        // S^1 is not simply connected; recognize it directly
        v.level = is_circle(kx) ? VerdictLevel::ConfirmedSphere
                                : VerdictLevel::ConsistentWithConjecture;
        return v;
    }
    if (c.pi1.verdict == FinitenessVerdict::ProvablyInfinite ||
        (c.pi1.verdict == FinitenessVerdict::ProvablyFinite && *c.pi1.order != 1)) {
        v.level = VerdictLevel::Inconsistent;
        v.evidence.push_back({"failure", "not simply connected"});
        return v;
    }
    if (c.pi1.verdict != FinitenessVerdict::ProvablyFinite) {
        v.level = VerdictLevel::Unknown;
        return v;
    }
    if (expected_dim == 2) {
        auto sr = classify_surface(kx);
        v.evidence.push_back({"surface", to_string(sr.cls)});
        if (sr.cls == SurfaceClass::S2) v.level = VerdictLevel::ConfirmedSphere;
        else if (sr.cls == SurfaceClass::NotClosedSurface)
            v.level = VerdictLevel::ConsistentWithConjecture;
        else {
            v.level = VerdictLevel::Inconsistent;
            v.evidence.push_back({"failure", "closed surface of class " + to_string(sr.cls)});
        }
        return v;
    }
    bool manifold3 = expected_dim != 3 || closed_3_manifold_check(kx).is_closed_3_manifold;
    v.level = manifold3 && c.pseudomanifold ? VerdictLevel::CandidateSphere
                                            : VerdictLevel::ConsistentWithConjecture;
    return v;
}

}  // namespace dualcx

#endif
