#pragma once

#include "madlat/lattice.hpp"
#include "madlat/parallel.hpp"

namespace madlat {

struct MinimaReport {
    std::vector<CertifiedReal> deltas;          // non-decreasing successive minima
    std::vector<std::vector<Int>> witnesses;    // coefficient vectors in the input basis
    std::vector<CertifiedReal> lambdas;         // optional exterior-power first minima
};

// shortest nonzero sup-norm vector; witness is the coefficient vector
std::pair<CertifiedReal, std::vector<Int>> first_minimum(const LatticeBasis& L);
std::pair<CertifiedReal, std::vector<Int>> first_minimum_serial(const LatticeBasis& L);

MinimaReport successive_minima(const LatticeBasis& L);

// first minimum of the i-th exterior power (Plucker embedding)
CertifiedReal wedge_minimum(const LatticeBasis& L, int i);

// i-th compound matrix: the basis of wedge^i(Lambda)
LatticeBasis compound_basis(const LatticeBasis& L, int i);

struct CountResult {
    long closed_count = 0;    // lattice points in the closed box
    long open_count = 0;      // strict interior
    long boundary = 0;        // closed - open
    int rank = 0;             // dimension of the span of the closed-box points
};

CountResult count_points(const LatticeBasis& L, const Box& B);
CountResult count_points_serial(const LatticeBasis& L, const Box& B);

struct BlichfeldtReport {
    CountResult counts;
    CertifiedReal vol_over_det;   // Vol(K)/det
    bool paper_bound_closed = false;   // closed <= vol/det + d
    bool paper_bound_open = false;     // open <= vol/det + d
    bool classical_bound = false;      // closed <= d! vol/det + d
    bool boundary_case = false;
    bool ok = false;  // the asserted verdict: paper bound on the open count
};

// Throws RankDeficient when rk(Lambda cap K) < d.
BlichfeldtReport check_blichfeldt(const LatticeBasis& L, const Box& B);

struct CountingBoundReport {
    int r = 0;                // rank of Lambda cap B
    long count = 0;
    CertifiedReal lambda_r;   // first minimum of wedge^r
    CertifiedReal bound;      // C(d) (1 + prod b_sigma(i) / lambda_r)
    Rat constant;             // the calibrated C(d)
    bool ok = false;
};

Rat counting_constant(int d);  // calibrated default C(d) = d * 4^d
CountingBoundReport counting_bound(const LatticeBasis& L, const Box& B,
                                   std::optional<Rat> constant = std::nullopt);

struct MinkowskiReport {
    CertifiedReal minima_product, det_abs;
    bool lower_ok = false;  // det/d! <= prod
    bool upper_ok = false;  // prod <= det
    bool ok = false;
};

MinkowskiReport check_minkowski(const LatticeBasis& L);

struct MahlerReport {
    std::vector<CertifiedReal> products;  // delta_i * delta*_{d+1-i}
    // sup-norm window [1/d, d!] (provable); the self-dual-norm window [1, d!]
    // is reported for reference but can genuinely fail in the sup norm
    bool provable_window_ok = false;
    bool self_dual_window_ok = false;
    bool ok = false;  // asserted verdict: the provable window
};

MahlerReport check_mahler(const LatticeBasis& L);

}  // namespace madlat
