#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "madlat/height.hpp"
#include "madlat/parallel.hpp"
#include "madlat/target.hpp"

namespace madlat {

// Result of a finite-range defect scan.  q_star is the argmin (a single
// integer for the simultaneous scan, a vector for the dual scan); ties are
// broken toward the lexicographically smallest canonical representative.
struct DefectRecord {
    std::vector<Int> q_star;
    CertifiedReal value;
    std::vector<std::pair<std::vector<Int>, CertifiedReal>> trace;
};

// product of |v_i| over the nonzero entries; empty product = 1
CertifiedReal pi_plus(const std::vector<CertifiedReal>& v);
Int pi_plus_int(const std::vector<Int>& v);

// min over 1 <= q <= Q of q * h(q) * prod_i ||q alpha_i||
DefectRecord mad_defect(const TargetVector& alpha, const HeightSpec& h, const Int& Q,
                        bool keep_trace = false);
DefectRecord mad_defect_serial(const TargetVector& alpha, const HeightSpec& h, const Int& Q,
                               bool keep_trace = false);

// min over q in Z^d \ {0}, Pi+(q) <= Qcap, |q|_inf <= Qcap of
// Pi+(q) * h(Pi+(q)) * ||q . alpha||   (canonical sign: first nonzero > 0)
DefectRecord mad_star_defect(const TargetVector& alpha, const HeightSpec& h, const Int& Qcap,
                             bool keep_trace = false);
DefectRecord mad_star_defect_serial(const TargetVector& alpha, const HeightSpec& h, const Int& Qcap,
                                    bool keep_trace = false);

// S_Y(Q) = sum over q in X(Q) cap Z^n \ {0} of prod_i ||Y_i q||^{-1}
// Throws DegenerateTarget when some ||Y_i q|| is exactly zero in range.
CertifiedReal recip_sum(const TargetVector& Y, const std::vector<Rat>& Qvec);
CertifiedReal recip_sum_serial(const TargetVector& Y, const std::vector<Rat>& Qvec);

// least-squares fit of log(value) against a declared one-parameter model basis
enum class GrowthModel { Power, QLogQ };

struct GrowthFit {
    double slope = 0, intercept = 0, residual = 0;
};

GrowthFit growth_exponent(const std::vector<std::pair<double, double>>& series,
                          GrowthModel model = GrowthModel::Power);

// membership in S^x_{m,n}(psi, T): exists q != 0 with Pi+(q) < T, |q|_inf < T
// and prod_i |Y_i q - p_i| < psi(T) at the nearest-integer p
struct MultApproxResult {
    bool member = false;
    std::vector<Int> p, q;
};

MultApproxResult is_mult_approximable(const TargetVector& Y, const PsiSpec& psi, const Rat& T);
MultApproxResult is_mult_approximable_serial(const TargetVector& Y, const PsiSpec& psi, const Rat& T);

}  // namespace madlat
