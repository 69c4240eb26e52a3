#pragma once

#include <vector>

#include "madlat/certified.hpp"

namespace madlat {

// log^+(x) = log(max(x, e)),  so  log^+ >= 1 everywhere
CertifiedReal log_plus(const CertifiedReal& x);

// h_l(x) = (log^+ x)^(l-1) * log^+ log^+ x
// h_{l,beta}(x) = h_l(max(x, e^beta))
//
// The height family of the Mad sets: kind selects between the paper's h_l,
// its beta-padded variant, a plain constant, and a generic power of log^+.
struct HeightSpec {
    enum class Kind { Constant, HL, HLBeta, PowerLog };

    Kind kind = Kind::Constant;
    int l = 1;                   // HL / HLBeta
    CertifiedReal beta{0L};      // HLBeta; beta >= e is the paper's regime
    Rat c{1};                    // Constant / PowerLog scale
    int p = 1;                   // PowerLog exponent

    static HeightSpec constant(Rat c = Rat(1));
    static HeightSpec h_l(int l);
    static HeightSpec h_l_beta(int l, CertifiedReal beta);
    static HeightSpec power_log(Rat c, int p);

    CertifiedReal eval(const CertifiedReal& x) const;

    // sub-homogeneity exponent: h(cx) <= c^lambda h(x) for c >= 1
    long lambda() const;

    bool is_one() const { return kind == Kind::Constant && c == 1; }

    std::string describe() const;
};

// psi(x): non-increasing into (0, 1].  Either kappa / (x h(x)), a power law
// c x^{-s}, or a user step table (piecewise constant, right-continuous).
struct PsiSpec {
    enum class Kind { FromHeight, Power, Table };

    Kind kind = Kind::Power;
    // FromHeight
    Rat kappa{1};
    HeightSpec height;
    // Power: c * x^{-s} with rational c and s > 0 (s = s_num/s_den)
    Rat c{1};
    Rat s{1};
    // Table: sorted breakpoints (x_i, v_i), v_i non-increasing; value before the
    // first breakpoint is v_0
    std::vector<std::pair<Rat, Rat>> table;

    static PsiSpec from_height(Rat kappa, HeightSpec h);
    static PsiSpec power(Rat c, Rat s);
    static PsiSpec step_table(std::vector<std::pair<Rat, Rat>> table);

    CertifiedReal eval(const CertifiedReal& x) const;
    CertifiedReal log_eval(const CertifiedReal& log_x) const;  // log psi(e^{log_x})

    // sub-homogeneity exponent of the induced height 1/(x psi(x)) when known
    long lambda() const;

    // true when psi is c x^{-s} with rational parameters (enables the exact
    // log-rational flow path)
    bool is_rational_power() const { return kind == Kind::Power; }

    std::string describe() const;
};

}  // namespace madlat
