#ifndef DUALCX_TODD_COXETER_HPP
#define DUALCX_TODD_COXETER_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace dualcx {

/// Coset enumeration over the trivial subgroup. Words are sequences of signed
/// 1-based generator indices. Returns the group order when the table closes
/// within `max_cosets` rows, otherwise nullopt. HLT-style relator scanning
/// with coincidence merging; fully deterministic.
class CosetTable {
  public:
    CosetTable(int ngens, const std::vector<std::vector<int>>& relators,
               std::size_t max_cosets)
        : ngens_(ngens), relators_(relators), max_(max_cosets) {
        new_coset();
    }

    std::optional<std::size_t> enumerate() {
        while (true) {
            bool progress = false;
            for (std::size_t c = 0; c < table_.size(); ++c) {
                if (dead(c)) continue;
                for (const auto& rel : relators_)
                    if (!scan_and_fill(c, rel)) return std::nullopt;
                if (dead(c)) continue;
                for (int col = 0; col < 2 * ngens_; ++col) {
                    if (entry(c, col) == -1) {
                        if (!define(c, col)) return std::nullopt;
                        progress = true;
                    }
                }
            }
            if (!progress) break;
        }
        std::size_t live = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (!dead(c)) ++live;
        return live;
    }

    std::size_t rows_used() const { return table_.size(); }

  private:
    int ngens_;
    std::vector<std::vector<int>> relators_;
    std::size_t max_;
    std::vector<std::vector<int>> table_;  // table_[coset][col], -1 undefined
    std::vector<int> rep_;                 // union-find for coincidences

    static int col_of(int g) { return g > 0 ? 2 * (g - 1) : 2 * (-g - 1) + 1; }
    static int inv_col(int col) { return col ^ 1; }

    int find(int c) {
        while (rep_[c] != c) c = rep_[c] = rep_[rep_[c]];
        return c;
    }
    bool dead(std::size_t c) { return find(static_cast<int>(c)) != static_cast<int>(c); }

    int& entry(std::size_t c, int col) { return table_[c][col]; }

    bool new_coset() {
        if (table_.size() >= max_) return false;
        table_.emplace_back(2 * ngens_, -1);
        rep_.push_back(static_cast<int>(rep_.size()));
        return true;
    }

    bool define(std::size_t c, int col) {
        if (!new_coset()) return false;
        int d = static_cast<int>(table_.size()) - 1;
        set(static_cast<int>(c), col, d);
        return true;
    }

    void set(int c, int col, int d) {
        c = find(c);
        d = find(d);
        int existing = entry(c, col);
        if (existing != -1 && find(existing) != d) {
            merge(find(existing), d);
            d = find(d);
        }
        entry(c, col) = d;
        int back = entry(d, inv_col(col));
        if (back != -1 && find(back) != c) merge(find(back), c);
        entry(d, inv_col(col)) = find(c);
    }

    void merge(int a, int b) {
        // queue-based coincidence processing
        std::vector<std::pair<int, int>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            rep_[y] = x;
            for (int col = 0; col < 2 * ngens_; ++col) {
                int t = entry(y, col);
                if (t == -1) continue;
                int s = entry(x, col);
                if (s == -1) {
                    entry(x, col) = find(t);
                    entry(find(t), inv_col(col)) = x;
                } else if (find(s) != find(t)) {
                    queue.push_back({find(s), find(t)});
                }
            }
        }
    }

    /// Scan relator from coset c both ways; fill the single gap if any.
    /// Returns false only on table overflow.
    bool scan_and_fill(std::size_t start, const std::vector<int>& rel) {
        int c = find(static_cast<int>(start));
        if (c != static_cast<int>(start)) return true;
        int f = c;
        std::size_t i = 0;
        while (i < rel.size()) {
            int nxt = entry(f, col_of(rel[i]));
            if (nxt == -1) break;
            f = find(nxt);
            ++i;
        }
        if (i == rel.size()) {
            if (f != c) merge(f, c);
            return true;
        }
        int b = c;
        std::size_t j = rel.size();
        while (j > i) {
            int nxt = entry(b, col_of(-rel[j - 1]));
            if (nxt == -1) break;
            b = find(nxt);
            --j;
        }
        if (j == i + 1) {
            // single gap: deduction
            set(f, col_of(rel[i]), b);
        } else if (j == i) {
            if (f != b) merge(f, b);
        } else {
            // fill forward one step and retry later
            if (!define(f, col_of(rel[i]))) return false;
        }
        return true;
    }
};

inline std::optional<std::size_t> coset_enumerate(int ngens,
                                                  const std::vector<std::vector<int>>& relators,
                                                  std::size_t max_cosets) {
    if (ngens == 0) return 1;
    CosetTable t(ngens, relators, max_cosets);
    return t.enumerate();
}

/// Counts subgroups of each index <= max_index by backtracking over
/// standardized coset tables (each complete transitive table in canonical
/// first-appearance numbering corresponds to exactly one subgroup).
inline std::vector<int> low_index_subgroup_counts(int ngens,
                                                  const std::vector<std::vector<int>>& relators,
                                                  int max_index,
                                                  std::size_t node_budget = 2000000,
                                                  bool* search_complete = nullptr) {
    std::vector<int> counts(max_index + 1, 0);  // counts[i] = subgroups of index i
    if (search_complete) *search_complete = true;
    if (ngens == 0) {
        if (max_index >= 1) counts[1] = 1;
        return counts;
    }
    auto col_of = [](int g) { return g > 0 ? 2 * (g - 1) : 2 * (-g - 1) + 1; };

    std::vector<std::vector<int>> table(1, std::vector<int>(2 * ngens, -1));
    std::size_t nodes = 0;

    // checks every relator trace that is fully defined; returns false on clash
    auto relators_ok = [&](bool require_complete) {
        for (std::size_t c = 0; c < table.size(); ++c) {
            for (const auto& rel : relators) {
                int cur = static_cast<int>(c);
                bool complete = true;
                for (int g : rel) {
                    int nxt = table[cur][col_of(g)];
                    if (nxt == -1) { complete = false; break; }
                    cur = nxt;
                }
                if (complete && cur != static_cast<int>(c)) return false;
                if (!complete && require_complete) return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self) -> void {
        if (++nodes > node_budget) {
            if (search_complete) *search_complete = false;
            return;
        }
        // first undefined entry in scanning order
        int fc = -1, fcol = -1;
        for (std::size_t c = 0; c < table.size() && fc == -1; ++c)
            for (int col = 0; col < 2 * ngens; ++col)
                if (table[c][col] == -1) { fc = static_cast<int>(c); fcol = col; break; }
        if (fc == -1) {
            if (relators_ok(true)) {
                int idx = static_cast<int>(table.size());
                if (idx <= max_index) ++counts[idx];
            }
            return;
        }
        int icol = fcol ^ 1;
        int n = static_cast<int>(table.size());
        for (int d = 0; d <= n; ++d) {
            bool fresh = d == n;
            if (fresh) {
                if (n >= max_index) break;  // would exceed index bound
                table.emplace_back(2 * ngens, -1);
            } else if (table[d][icol] != -1) {
                continue;
            }
            table[fc][fcol] = d;
            table[d][icol] = fc;
            if (relators_ok(false)) self(self);
            table[d][icol] = -1;
            table[fc][fcol] = -1;
            if (fresh) table.pop_back();
        }
    };
    search(search);
    return counts;
}

}  // namespace dualcx

#endif
