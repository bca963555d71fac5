#ifndef DUALCX_FUNDAMENTAL_GROUP_HPP
#define DUALCX_FUNDAMENTAL_GROUP_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/linalg.hpp"
#include "dualcx/todd_coxeter.hpp"

namespace dualcx {

/// Finitely presented group: generator names plus relators as words of
/// signed 1-based generator indices.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

/// Edge-path presentation of pi1 of a connected regular Delta-complex.
/// Spanning tree by breadth-first search from the lowest vertex in
/// deterministic edge order; generators are the non-tree edges, one relator
/// per 2-cell.
inline Presentation presentation(const DeltaComplex& kx) {
    if (kx.empty()) throw std::invalid_argument("presentation: empty complex");
    {
        auto [label, ncomp] = detail::component_labels(kx);
        if (ncomp != 1) throw std::invalid_argument("presentation: disconnected complex");
    }
    int nv = static_cast<int>(kx.cell_count(0));
    int ne = static_cast<int>(kx.cell_count(1));

    // edge e: tail = face_1 (keeps vertex 0), head = face_0
    auto tail = [&](int e) { return kx.cells[1][e].faces[1]; };
    auto head = [&](int e) { return kx.cells[1][e].faces[0]; };

    // BFS spanning tree
    std::vector<char> in_tree(ne, 0), visited(nv, 0);
    std::vector<std::vector<int>> incident(nv);
    for (int e = 0; e < ne; ++e) {
        incident[tail(e)].push_back(e);
        incident[head(e)].push_back(e);
    }
    std::deque<int> frontier{0};
    visited[0] = 1;
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        for (int e : incident[v]) {
            int w = tail(e) == v ? head(e) : tail(e);
            if (!visited[w]) {
                visited[w] = 1;
                in_tree[e] = 1;
                frontier.push_back(w);
            }
        }
    }

    Presentation p;
    std::vector<int> gen_of_edge(ne, 0);  // 1-based generator index, 0 for tree edges
    for (int e = 0; e < ne; ++e) {
        if (in_tree[e]) continue;
        gen_of_edge[e] = static_cast<int>(p.generators.size()) + 1;
        const std::string& lbl = kx.cells[1][e].label;
        p.generators.push_back(lbl.empty() ? "e" + std::to_string(e) : lbl);
    }
    // one relator per 2-cell: boundary word face_2 * face_0 * face_1^{-1}
    for (int t = 0; t < static_cast<int>(kx.cell_count(2)); ++t) {
        const auto& f = kx.cells[2][t].faces;
        std::vector<int> word;
        auto push = [&](int e, int sign) {
            if (gen_of_edge[e] == 0) return;
            int x = sign * gen_of_edge[e];
            if (!word.empty() && word.back() == -x) word.pop_back();
            else word.push_back(x);
        };
        push(f[2], +1);
        push(f[0], +1);
        push(f[1], -1);
        while (word.size() >= 2 && word.front() == -word.back()) {
            word.erase(word.begin());
            word.pop_back();
        }
        if (!word.empty()) p.relators.push_back(std::move(word));
    }
    return p;
}

namespace detail {

inline std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    return out;
}

inline std::vector<int> invert_word(const std::vector<int>& w) {
    std::vector<int> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

/// Least cyclic rotation among the word and its inverse, for deduplication.
inline std::vector<int> canonical_relator(const std::vector<int>& w) {
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& v) {
        for (std::size_t s = 0; s < v.size(); ++s) {
            std::vector<int> rot(v.begin() + s, v.end());
            rot.insert(rot.end(), v.begin(), v.begin() + s);
            if (best.empty() || rot < best) best = rot;
        }
    };
    if (w.empty()) return w;
    consider(w);
    consider(invert_word(w));
    return best;
}

/// Substitute generator g := replacement (word), in-place over all relators.
inline void substitute(std::vector<std::vector<int>>& relators, int g,
                       const std::vector<int>& replacement) {
    auto inv = invert_word(replacement);
    for (auto& r : relators) {
        std::vector<int> out;
        for (int x : r) {
            const std::vector<int>* ins = nullptr;
            if (x == g) ins = &replacement;
            else if (x == -g) ins = &inv;
            if (ins) {
                for (int y : *ins) {
                    if (!out.empty() && out.back() == -y) out.pop_back();
                    else out.push_back(y);
                }
            } else {
                if (!out.empty() && out.back() == -x) out.pop_back();
                else out.push_back(x);
            }
        }
        r = std::move(out);
    }
}

/// Drop generator g (assumed absent from every relator), renumbering.
inline Presentation drop_generator(const Presentation& p, int g) {
    Presentation q;
    for (int i = 1; i <= static_cast<int>(p.generators.size()); ++i)
        if (i != g) q.generators.push_back(p.generators[i - 1]);
    for (const auto& r : p.relators) {
        std::vector<int> w;
        for (int x : r) {
            int a = std::abs(x);
            int shifted = a > g ? a - 1 : a;
            w.push_back(x > 0 ? shifted : -shifted);
        }
        q.relators.push_back(std::move(w));
    }
    return q;
}

}  // namespace detail

/// Tietze simplification: removes redundant relators, eliminates generators
/// defined by length-1/length-2 relators and generators occurring exactly
/// once overall. Never adds generators; preserves the group.
inline Presentation tietze_simplify(Presentation p, int budget = 1000) {
    for (int round = 0; round < budget; ++round) {
        bool changed = false;
        // reduce + dedupe relators
        std::vector<std::vector<int>> rel;
        std::map<std::vector<int>, char> seen;
        for (auto& r : p.relators) {
            auto w = detail::free_reduce(r);
            if (w.empty()) { changed = true; continue; }
            auto key = detail::canonical_relator(w);
            if (seen.count(key)) { changed = true; continue; }
            seen[key] = 1;
            rel.push_back(std::move(w));
        }
        p.relators = std::move(rel);

        int ngen = static_cast<int>(p.generators.size());
        // occurrence counts
        std::vector<int> occ(ngen + 1, 0);
        for (const auto& r : p.relators)
            for (int x : r) ++occ[std::abs(x)];

        int eliminate = 0;                  // generator index to remove
        std::vector<int> replacement;       // its defining word
        int defining_relator = -1;

        // length-1 relator: g = 1
        for (std::size_t i = 0; i < p.relators.size() && !eliminate; ++i)
            if (p.relators[i].size() == 1) {
                eliminate = std::abs(p.relators[i][0]);
                replacement = {};
                defining_relator = static_cast<int>(i);
            }
        // length-2 relator on two distinct generators: a = b^{+-1}
        for (std::size_t i = 0; i < p.relators.size() && !eliminate; ++i) {
            const auto& r = p.relators[i];
            if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
                eliminate = std::abs(r[0]);
                int other = r[0] > 0 ? -r[1] : r[1];
                replacement = {other};
                defining_relator = static_cast<int>(i);
            }
        }
        // generator occurring exactly once in exactly one relator
        for (int g = 1; g <= ngen && !eliminate; ++g) {
            if (occ[g] != 1) continue;
            for (std::size_t i = 0; i < p.relators.size(); ++i) {
                const auto& r = p.relators[i];
                auto it = std::find_if(r.begin(), r.end(),
                                       [g](int x) { return std::abs(x) == g; });
                if (it == r.end()) continue;
                // r = u g^s v  =>  g^s = u^{-1} v^{-1}
                std::vector<int> rest(it + 1, r.end());
                rest.insert(rest.end(), r.begin(), it);
                auto w = detail::invert_word(rest);
                if (*it < 0) w = detail::invert_word(w);
                replacement = detail::free_reduce(w);
                eliminate = g;
                defining_relator = static_cast<int>(i);
                break;
            }
        }

        if (eliminate) {
            p.relators.erase(p.relators.begin() + defining_relator);
            detail::substitute(p.relators, eliminate, replacement);
            p = detail::drop_generator(p, eliminate);
            changed = true;
        }
        if (!changed) break;
    }
    return p;
}

/// Degree-1 homology record of the abelianized group, via SNF of the relator
/// exponent matrix.
inline HomologyResult::Degree abelianization(const Presentation& p) {
    int ngen = static_cast<int>(p.generators.size());
    IntMat m(static_cast<int>(p.relators.size()), ngen);
    for (int r = 0; r < m.rows; ++r)
        for (int x : p.relators[r]) m.at(r, std::abs(x) - 1) += x > 0 ? 1 : -1;
    auto snf = smith_normal_form(m);
    HomologyResult::Degree deg;
    deg.rank = ngen - snf.rank;
    for (const auto& d : snf.divisors)
        if (d > 1) deg.torsion.push_back(d);
    return deg;
}

enum class FinitenessVerdict { ProvablyFinite, ProvablyInfinite, Unknown };

inline std::string to_string(FinitenessVerdict v) {
    switch (v) {
        case FinitenessVerdict::ProvablyFinite: return "ProvablyFinite";
        case FinitenessVerdict::ProvablyInfinite: return "ProvablyInfinite";
        default: return "Unknown";
    }
}

struct FinitenessProbe {
    int max_index = 0;
    std::map<int, int> subgroup_counts;  // index -> count, zero counts omitted
    HomologyResult::Degree abelianization;
    FinitenessVerdict verdict = FinitenessVerdict::Unknown;
    std::optional<std::size_t> order;  // set when ProvablyFinite
    std::string note;
};

/// Coset enumeration plus low-index subgroup counting. The only positive
/// verdicts are a completed enumeration (finite, with order) or an infinite
/// abelianization.
inline FinitenessProbe low_index_probe(const Presentation& p, int max_index,
                                       std::size_t coset_table_cap = 1000000) {
    FinitenessProbe probe;
    probe.max_index = max_index;
    probe.abelianization = abelianization(p);

    bool counts_complete = true;
    auto counts = low_index_subgroup_counts(static_cast<int>(p.generators.size()),
                                            p.relators, max_index, 2000000,
                                            &counts_complete);
    for (int i = 1; i <= max_index; ++i)
        if (counts[i] > 0) probe.subgroup_counts[i] = counts[i];
    if (!counts_complete) probe.note = "low-index search budget exhausted; counts partial";

    if (probe.abelianization.rank > 0) {
        probe.verdict = FinitenessVerdict::ProvablyInfinite;
        probe.note = "abelianization has free rank " + std::to_string(probe.abelianization.rank);
        return probe;
    }
    auto order = coset_enumerate(static_cast<int>(p.generators.size()), p.relators,
                                 coset_table_cap);
    if (order) {
        probe.verdict = FinitenessVerdict::ProvablyFinite;
        probe.order = order;
    } else {
        probe.verdict = FinitenessVerdict::Unknown;
        probe.note = "coset table cap " + std::to_string(coset_table_cap) +
                     " reached without closing";
    }
    return probe;
}

}  // namespace dualcx

#endif
