#ifndef DUALCX_BUILDERS_HPP
#define DUALCX_BUILDERS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"

namespace dualcx {

/// User-supplied description of divisor components, strata and containments.
struct Stratum {
    std::vector<std::string> labels;          // subset J of the divisor labels
    std::string id;                           // unique among strata
    std::map<std::string, std::string> facets;  // j in J -> id of stratum on J\{j}
};

struct StratificationData {
    std::vector<std::string> divisors;
    std::vector<Stratum> strata;
};

class StratificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One k-cell per stratum with |J| = k+1; face i drops the i-th smallest
/// label. Output is validated; invalid attaching data raises.
inline DeltaComplex from_stratification(const StratificationData& data) {
    std::map<std::string, int> divisor_rank;
    for (const auto& d : data.divisors) {
        if (divisor_rank.count(d))
            throw StratificationError("duplicate divisor label '" + d + "'");
        divisor_rank[d] = static_cast<int>(divisor_rank.size());
    }

    std::map<std::string, CellId> cell_of;       // stratum id -> cell
    std::map<std::string, const Stratum*> by_id;
    DeltaComplex kx;
    std::map<std::string, int> vertex_seen;  // divisor label -> count of |J|=1 strata
    for (const auto& s : data.strata) {
        if (by_id.count(s.id))
            throw StratificationError("duplicate stratum id '" + s.id + "'");
        by_id[s.id] = &s;
        if (s.labels.empty())
            throw StratificationError("stratum '" + s.id + "' has empty label set");
        for (const auto& l : s.labels)
            if (!divisor_rank.count(l))
                throw StratificationError("stratum '" + s.id + "' uses unknown divisor '" +
                                          l + "'");
        auto sorted = s.labels;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const auto& a, const auto& b) { return divisor_rank[a] < divisor_rank[b]; });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw StratificationError("stratum '" + s.id + "' repeats a divisor label");
        int dim = static_cast<int>(s.labels.size()) - 1;
        if (dim == 0) ++vertex_seen[s.labels[0]];
        if (static_cast<int>(kx.cells.size()) <= dim) kx.cells.resize(dim + 1);
        cell_of[s.id] = {dim, static_cast<int>(kx.cells[dim].size())};
        kx.cells[dim].push_back(Cell{{}, s.id});
    }
    for (const auto& [label, rank] : divisor_rank)
        if (vertex_seen[label] != 1)
            throw StratificationError("divisor '" + label + "' must have exactly one |J|=1 stratum, found " +
                                      std::to_string(vertex_seen[label]));

    for (const auto& s : data.strata) {
        int dim = static_cast<int>(s.labels.size()) - 1;
        if (dim == 0) continue;
        auto sorted = s.labels;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const auto& a, const auto& b) { return divisor_rank[a] < divisor_rank[b]; });
        auto& cell = kx.cells[dim][cell_of[s.id].index];
        for (const auto& drop : sorted) {
            auto it = s.facets.find(drop);
            if (it == s.facets.end())
                throw StratificationError("stratum '" + s.id + "' missing facet for label '" +
                                          drop + "'");
            auto target = cell_of.find(it->second);
            if (target == cell_of.end())
                throw StratificationError("stratum '" + s.id + "' references unknown facet '" +
                                          it->second + "'");
            if (target->second.dim != dim - 1)
                throw StratificationError("facet '" + it->second + "' of stratum '" + s.id +
                                          "' has wrong dimension");
            // label-set check: facet labels must be J minus the dropped label
            auto expect = sorted;
            expect.erase(std::find(expect.begin(), expect.end(), drop));
            auto got = by_id[it->second]->labels;
            std::sort(got.begin(), got.end(),
                      [&](const auto& a, const auto& b) { return divisor_rank[a] < divisor_rank[b]; });
            if (got != expect)
                throw StratificationError("facet '" + it->second + "' of stratum '" + s.id +
                                          "' has mismatched label set");
            cell.faces.push_back(target->second.index);
        }
        for (const auto& [k, v] : s.facets)
            if (std::find(sorted.begin(), sorted.end(), k) == sorted.end())
                throw StratificationError("stratum '" + s.id + "' names facet for label '" + k +
                                          "' outside its label set");
    }
    kx.trim();
    return kx;
}

/// Entry p = number of strata with |J| = p+1.
inline std::vector<int> strata_cochain_dims(const StratificationData& data) {
    std::vector<int> dims;
    for (const auto& s : data.strata) {
        int p = static_cast<int>(s.labels.size()) - 1;
        if (static_cast<int>(dims.size()) <= p) dims.resize(p + 1, 0);
        ++dims[p];
    }
    return dims;
}

/// Boundary of the (m-1)-simplex: C(m,k+1) k-cells, a PL sphere S^{m-2}.
inline DeltaComplex simplex_boundary(int m) {
    if (m < 2) throw std::invalid_argument("simplex_boundary requires m >= 2");
    DeltaComplex kx;
    kx.cells.resize(m - 1);
    // cells of dim k = (k+1)-subsets of {0..m-1}, in lexicographic order
    std::vector<std::map<std::vector<int>, int>> index(m - 1);
    std::vector<std::vector<std::vector<int>>> subsets(m - 1);
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start, int need) -> void {
        if (need == 0) {
            subsets[cur.size() - 1].push_back(cur);
            return;
        }
        for (int v = start; v <= m - need; ++v) {
            cur.push_back(v);
            self(self, v + 1, need - 1);
            cur.pop_back();
        }
    };
    for (int sz = 1; sz <= m - 1; ++sz) gen(gen, 0, sz);
    for (int d = 0; d <= m - 2; ++d) {
        for (const auto& s : subsets[d]) {
            int idx = static_cast<int>(kx.cells[d].size());
            index[d][s] = idx;
            Cell c;
            std::string lbl;
            for (int v : s) lbl += std::to_string(v);
            c.label = lbl;
            if (d > 0)
                for (int i = 0; i <= d; ++i) {
                    auto face = s;
                    face.erase(face.begin() + i);
                    c.faces.push_back(index[d - 1].at(face));
                }
            kx.cells[d].push_back(std::move(c));
        }
    }
    return kx;
}

/// S^0 on two labeled vertices.
inline DeltaComplex sphere0(const std::string& plus = "+", const std::string& minus = "-") {
    DeltaComplex k;
    k.cells.push_back({Cell{{}, plus}, Cell{{}, minus}});
    return k;
}

/// Join of two complexes. Vertex labels of a precede those of b; the empty
/// complex is a two-sided unit.
inline DeltaComplex join(const DeltaComplex& a, const DeltaComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int da_max = a.top_dim(), db_max = b.top_dim();
    int top = da_max + db_max + 1;
    DeltaComplex kx;
    kx.cells.resize(top + 1);

    // cell index map: (da, ia, db, ib), da or db may be -1 for the empty part
    auto key = [&](int da, int ia, int db, int ib) {
        return std::tuple(da, ia, db, ib);
    };
    std::map<std::tuple<int, int, int, int>, int> index;

    for (int k = 0; k <= top; ++k) {
        // a-part-only cells first, then mixed, then b-part-only
        for (int da = std::min(k, da_max); da >= -1; --da) {
            int db = k - 1 - da;
            if (db < -1 || db > db_max) continue;
            if (da == -1 && db == -1) continue;
            int na = da == -1 ? 1 : static_cast<int>(a.cells[da].size());
            int nb = db == -1 ? 1 : static_cast<int>(b.cells[db].size());
            for (int ia = 0; ia < na; ++ia) {
                for (int ib = 0; ib < nb; ++ib) {
                    int ja = da == -1 ? -1 : ia;
                    int jb = db == -1 ? -1 : ib;
                    index[key(da, ja, db, jb)] = static_cast<int>(kx.cells[k].size());
                    Cell c;
                    const std::string la = da == -1 ? "" : a.cells[da][ia].label;
                    const std::string lb = db == -1 ? "" : b.cells[db][ib].label;
                    c.label = da == -1 ? lb : (db == -1 ? la : la + "*" + lb);
                    int p = da + 1;  // number of a-part vertices
                    for (int i = 0; i <= k && k > 0; ++i) {
                        if (i < p) {
                            // drop i-th vertex of the a-part
                            if (da == 0)
                                c.faces.push_back(index.at(key(-1, -1, db, jb)));
                            else
                                c.faces.push_back(
                                    index.at(key(da - 1, a.cells[da][ia].faces[i], db, jb)));
                        } else {
                            int bi = i - p;
                            if (db == 0)
                                c.faces.push_back(index.at(key(da, ja, -1, -1)));
                            else
                                c.faces.push_back(
                                    index.at(key(da, ja, db - 1, b.cells[db][ib].faces[bi])));
                        }
                    }
                    kx.cells[k].push_back(std::move(c));
                }
            }
        }
    }
    kx.trim();
    return kx;
}

/// Cone: join with a single new apex vertex (apex labels sort last).
inline DeltaComplex cone(const DeltaComplex& base, const std::string& apex = "apex") {
    return join(base, point_complex(apex));
}

/// Boundary of the n-dimensional cross-polytope, realized as the n-fold join
/// of S^0. PL-homeomorphic (combinatorially dual) to the cube boundary.
inline DeltaComplex crosspolytope_boundary(int n) {
    if (n < 1) throw std::invalid_argument("crosspolytope_boundary requires n >= 1");
    DeltaComplex kx = sphere0("x0+", "x0-");
    for (int i = 1; i < n; ++i)
        kx = join(kx, sphere0("x" + std::to_string(i) + "+", "x" + std::to_string(i) + "-"));
    return kx;
}

inline DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b) {
    DeltaComplex kx = a;
    if (static_cast<int>(kx.cells.size()) < static_cast<int>(b.cells.size()))
        kx.cells.resize(b.cells.size());
    std::vector<int> offset(kx.cells.size(), 0);
    for (int d = 0; d < static_cast<int>(kx.cells.size()); ++d)
        offset[d] = static_cast<int>(kx.cells[d].size());
    for (int d = 0; d <= b.top_dim(); ++d) {
        for (const auto& cell : b.cells[d]) {
            Cell c = cell;
            for (int& f : c.faces) f += offset[d - 1];
            kx.cells[d].push_back(std::move(c));
        }
    }
    kx.trim();
    return kx;
}

/// Exports a complex back to stratification form (inverse of
/// from_stratification up to relabeling). Only valid for complexes whose
/// cells are determined by their divisor sets, i.e. at most one cell per
/// vertex set; general Delta-complexes may repeat vertex sets.
inline StratificationData to_stratification(const DeltaComplex& kx) {
    StratificationData data;
    for (int i = 0; i < static_cast<int>(kx.cell_count(0)); ++i) {
        const auto& l = kx.cells[0][i].label;
        data.divisors.push_back(l.empty() ? "D" + std::to_string(i) : l);
    }
    auto vt = vertex_table(kx);
    auto id_of = [&](CellId c) {
        return "s" + std::to_string(c.dim) + "_" + std::to_string(c.index);
    };
    for (int d = 0; d <= kx.top_dim(); ++d) {
        for (int i = 0; i < static_cast<int>(kx.cells[d].size()); ++i) {
            Stratum s;
            s.id = id_of({d, i});
            auto vs = vt[d][i];
            std::vector<std::pair<int, int>> order;  // (vertex, position)
            for (int p = 0; p <= d; ++p) order.push_back({vs[p], p});
            std::sort(order.begin(), order.end());
            for (int p = 0; p <= d; ++p) s.labels.push_back(data.divisors[vs[p]]);
            if (d > 0)
                for (const auto& [v, pos] : order)
                    s.facets[data.divisors[v]] = id_of({d - 1, kx.cells[d][i].faces[pos]});
            data.strata.push_back(std::move(s));
        }
    }
    return data;
}

}  // namespace dualcx

#endif
