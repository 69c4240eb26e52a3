#pragma once

#include <iosfwd>
#include <vector>

#include "madlat/certified.hpp"

namespace madlat {

// The approximation target: an m x n matrix of exact reals, row-major.
// Vectors for the Mad scans use shape (d, 1) or (1, d).
struct TargetVector {
    int m = 1, n = 1;
    std::vector<CertifiedReal> entries;

    TargetVector() = default;
    TargetVector(int m_, int n_, std::vector<CertifiedReal> e) : m(m_), n(n_), entries(std::move(e)) {
        if (m < 1 || n < 1 || entries.size() != static_cast<size_t>(m) * static_cast<size_t>(n))
            throw std::domain_error("TargetVector: shape/entry mismatch");
    }

    static TargetVector column(std::vector<CertifiedReal> e) {
        int d = static_cast<int>(e.size());
        return TargetVector(d, 1, std::move(e));
    }
    static TargetVector row(std::vector<CertifiedReal> e) {
        int d = static_cast<int>(e.size());
        return TargetVector(1, d, std::move(e));
    }

    int dim() const { return m * n; }
    const CertifiedReal& at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }

    // Y_i . q for integer q of length n
    CertifiedReal row_dot(int i, const std::vector<Int>& q) const;

    bool all_exact() const;
    TargetVector transposed() const;
};

// Entry grammar (one entry per line):
//   rational a/b
//   quad a b c D        meaning (a + b*sqrt(D)) / c
//   dec <digits>        exact decimal, e.g. dec -0.6180339887
CertifiedReal parse_entry(const std::string& line);
std::vector<CertifiedReal> parse_entries(std::istream& in);
TargetVector parse_target_file(const std::string& path, int m, int n);

std::string entry_to_string(const CertifiedReal& x);

}  // namespace madlat
