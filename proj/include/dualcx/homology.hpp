#ifndef DUALCX_HOMOLOGY_HPP
#define DUALCX_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/linalg.hpp"

namespace dualcx {

/// Integer boundary matrices, boundary of a k-cell = sum_i (-1)^i face_i.
struct ChainComplex {
    std::vector<int> cell_counts;          // per dimension
    std::vector<IntMat> boundary;          // boundary[k]: C_k -> C_{k-1}, k >= 1

    int top_dim() const { return static_cast<int>(cell_counts.size()) - 1; }
};

inline ChainComplex chain_complex(const DeltaComplex& kx) {
    ChainComplex cc;
    for (int d = 0; d <= kx.top_dim(); ++d)
        cc.cell_counts.push_back(static_cast<int>(kx.cells[d].size()));
    cc.boundary.resize(kx.cells.size());
    for (int d = 1; d <= kx.top_dim(); ++d) {
        IntMat m(cc.cell_counts[d - 1], cc.cell_counts[d]);
        for (int i = 0; i < cc.cell_counts[d]; ++i) {
            const auto& faces = kx.cells[d][i].faces;
            for (int j = 0; j <= d; ++j)
                m.at(faces[j], i) += (j % 2 == 0 ? 1 : -1);
        }
        cc.boundary[d] = std::move(m);
    }
    return cc;
}

/// Per-degree free rank and torsion coefficients (each dividing the next).
struct HomologyResult {
    struct Degree {
        int rank = 0;
        std::vector<Int> torsion;  // entries >= 2, divisibility chain

        bool operator==(const Degree&) const = default;
    };
    std::vector<Degree> degrees;

    bool operator==(const HomologyResult&) const = default;
};

inline std::vector<int> betti(const DeltaComplex& kx) {
    if (kx.empty()) return {};
    auto cc = chain_complex(kx);
    std::vector<int> ranks(cc.cell_counts.size() + 1, 0);  // rank of boundary[k]
    for (int d = 1; d <= cc.top_dim(); ++d) ranks[d] = rank_over_q(cc.boundary[d]);
    std::vector<int> b(cc.cell_counts.size());
    for (int d = 0; d <= cc.top_dim(); ++d)
        b[d] = cc.cell_counts[d] - ranks[d] - ranks[d + 1];
    return b;
}

inline HomologyResult integral_homology(const DeltaComplex& kx) {
    HomologyResult res;
    if (kx.empty()) return res;
    auto cc = chain_complex(kx);
    std::vector<SmithResult> snf(cc.cell_counts.size() + 1);
    for (int d = 1; d <= cc.top_dim(); ++d) snf[d] = smith_normal_form(cc.boundary[d]);
    res.degrees.resize(cc.cell_counts.size());
    for (int d = 0; d <= cc.top_dim(); ++d) {
        auto& deg = res.degrees[d];
        deg.rank = cc.cell_counts[d] - snf[d].rank - snf[d + 1].rank;
        for (const auto& div : snf[d + 1].divisors)
            if (div > 1) deg.torsion.push_back(div);
    }
    return res;
}

struct SphereCertificate {
    bool is_sphere = false;
    int expected_dim = 0;
    std::vector<int> betti;
};

/// True iff the rational Betti numbers are those of S^n (for n = 0: two
/// components, nothing above).
inline SphereCertificate is_rational_homology_sphere(const DeltaComplex& kx, int n) {
    SphereCertificate cert;
    cert.expected_dim = n;
    cert.betti = betti(kx);
    const auto& b = cert.betti;
    if (n == 0) {
        cert.is_sphere = !b.empty() && b[0] == 2;
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i] != 0) cert.is_sphere = false;
        return cert;
    }
    if (static_cast<int>(b.size()) <= n) return cert;
    cert.is_sphere = b[0] == 1 && b[n] == 1;
    for (int i = 1; i < static_cast<int>(b.size()); ++i)
        if (i != n && b[i] != 0) cert.is_sphere = false;
    return cert;
}

inline std::string to_string(const HomologyResult::Degree& d) {
    std::string s;
    if (d.rank > 0) s = "Z^" + std::to_string(d.rank);
    for (const auto& t : d.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
}

}  // namespace dualcx

#endif
