#pragma once

#include <optional>
#include <vector>

#include "madlat/certified.hpp"

namespace madlat {

// Square nonsingular basis; columns generate the lattice B Z^d.
// Entries are certified reals; the all-rational case gets exact fast paths.
struct LatticeBasis {
    int dim = 0;
    std::vector<CertifiedReal> cols;  // column-major: entry(i,j) = cols[j*dim+i]

    LatticeBasis() = default;
    LatticeBasis(int d, std::vector<CertifiedReal> entries) : dim(d), cols(std::move(entries)) {
        if (d < 1 || cols.size() != static_cast<size_t>(d) * static_cast<size_t>(d))
            throw std::domain_error("LatticeBasis: shape mismatch");
    }

    static LatticeBasis identity(int d);
    static LatticeBasis diagonal(const std::vector<CertifiedReal>& diag);

    const CertifiedReal& entry(int i, int j) const { return cols[static_cast<size_t>(j) * dim + i]; }
    CertifiedReal& entry(int i, int j) { return cols[static_cast<size_t>(j) * dim + i]; }

    bool all_rational() const;

    // B * c for an integer coefficient vector
    std::vector<CertifiedReal> apply(const std::vector<Int>& c) const;

    // B * U for an integer matrix U (column-major d x d)
    LatticeBasis transformed(const std::vector<Int>& U) const;

    CertifiedReal det() const;

    std::string describe() const;
};

// (B^{-1})^T; generates the dual lattice
LatticeBasis dual_basis(const LatticeBasis& L);

// matrix inverse over certified reals (certified pivoting)
std::vector<CertifiedReal> inverse_matrix(const LatticeBasis& L);

// closed box prod [-b_i, b_i]
struct Box {
    std::vector<CertifiedReal> half_widths;

    explicit Box(std::vector<CertifiedReal> hw) : half_widths(std::move(hw)) {
        for (const auto& b : half_widths)
            if (b.sign() <= 0) throw std::domain_error("Box: half-widths must be positive");
    }
    int dim() const { return static_cast<int>(half_widths.size()); }
    CertifiedReal volume() const;
};

// exact integer matrix rank over Q (fraction-free elimination)
int int_rank(const std::vector<std::vector<Int>>& rows);

// LLL reduction (delta = 3/4).  Exact over rationals; a double-precision pass
// with an exact unimodular transform otherwise.  Returns U with B' = B U.
std::vector<Int> lll_transform(const LatticeBasis& L);

}  // namespace madlat
