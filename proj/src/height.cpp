#include "madlat/height.hpp"

namespace madlat {

namespace {

const CertifiedReal& euler_e() {
    static const CertifiedReal e = exp(CertifiedReal(1L));
    return e;
}

}  // namespace

CertifiedReal log_plus(const CertifiedReal& x) {
    if (x.is_exact()) {
        // exact inputs compare against e with certainty (e is irrational)
        if (x.sign() <= 0 || CertifiedReal::compare(x, euler_e()) <= 0) return CertifiedReal(1L);
        return log(x);
    }
    return log(max(x, euler_e()));
}

HeightSpec HeightSpec::constant(Rat c) {
    if (c <= 0) throw std::domain_error("HeightSpec: constant must be positive");
    HeightSpec h;
    h.kind = Kind::Constant;
    h.c = std::move(c);
    return h;
}

HeightSpec HeightSpec::h_l(int l) {
    if (l < 1) throw std::domain_error("HeightSpec: l must be >= 1");
    HeightSpec h;
    h.kind = Kind::HL;
    h.l = l;
    return h;
}

HeightSpec HeightSpec::h_l_beta(int l, CertifiedReal beta) {
    if (l < 1) throw std::domain_error("HeightSpec: l must be >= 1");
    if (beta.sign() < 0) throw std::domain_error("HeightSpec: beta must be >= 0");
    HeightSpec h;
    h.kind = Kind::HLBeta;
    h.l = l;
    h.beta = std::move(beta);
    return h;
}

HeightSpec HeightSpec::power_log(Rat c, int p) {
    if (c <= 0) throw std::domain_error("HeightSpec: scale must be positive");
    if (p < 0) throw std::domain_error("HeightSpec: exponent must be >= 0");
    HeightSpec h;
    h.kind = Kind::PowerLog;
    h.c = std::move(c);
    h.p = p;
    return h;
}

CertifiedReal HeightSpec::eval(const CertifiedReal& x) const {
    switch (kind) {
        case Kind::Constant: return CertifiedReal(c);
        case Kind::HL: {
            CertifiedReal lp = log_plus(x);
            return pow_int(lp, l - 1) * log_plus(lp);
        }
        case Kind::HLBeta: {
            CertifiedReal xx = max(x, exp(beta));
            CertifiedReal lp = log_plus(xx);
            return pow_int(lp, l - 1) * log_plus(lp);
        }
        case Kind::PowerLog: return CertifiedReal(c) * pow_int(log_plus(x), p);
    }
    throw std::logic_error("unreachable");
}

long HeightSpec::lambda() const {
    switch (kind) {
        case Kind::Constant: return 0;
        case Kind::HL:
        case Kind::HLBeta: return l;
        case Kind::PowerLog: return p + 1;
    }
    throw std::logic_error("unreachable");
}

std::string HeightSpec::describe() const {
    switch (kind) {
        case Kind::Constant: return "const " + rat_to_string(c);
        case Kind::HL: return "h_" + std::to_string(l);
        case Kind::HLBeta: return "h_{" + std::to_string(l) + ",beta=" + beta.decimal(6) + "}";
        case Kind::PowerLog:
            return rat_to_string(c) + "*(log+ x)^" + std::to_string(p);
    }
    return "?";
}

PsiSpec PsiSpec::from_height(Rat kappa, HeightSpec h) {
    if (kappa <= 0) throw std::domain_error("PsiSpec: kappa must be positive");
    PsiSpec p;
    p.kind = Kind::FromHeight;
    p.kappa = std::move(kappa);
    p.height = std::move(h);
    return p;
}

PsiSpec PsiSpec::power(Rat c, Rat s) {
    if (c <= 0 || c > 1) throw std::domain_error("PsiSpec: power scale must be in (0, 1]");
    if (s <= 0) throw std::domain_error("PsiSpec: power exponent must be positive");
    PsiSpec p;
    p.kind = Kind::Power;
    p.c = std::move(c);
    p.s = std::move(s);
    return p;
}

PsiSpec PsiSpec::step_table(std::vector<std::pair<Rat, Rat>> table) {
    if (table.empty()) throw std::domain_error("PsiSpec: empty table");
    for (size_t i = 0; i < table.size(); ++i) {
        if (table[i].second <= 0 || table[i].second > 1)
            throw std::domain_error("PsiSpec: table values must be in (0, 1]");
        if (i && (table[i].first <= table[i - 1].first || table[i].second > table[i - 1].second))
            throw std::domain_error("PsiSpec: table must be increasing in x, non-increasing in value");
    }
    PsiSpec p;
    p.kind = Kind::Table;
    p.table = std::move(table);
    return p;
}

CertifiedReal PsiSpec::eval(const CertifiedReal& x) const {
    switch (kind) {
        case Kind::FromHeight: return CertifiedReal(kappa) / (x * height.eval(x));
        case Kind::Power: {
            if (s.get_den() == 1) return CertifiedReal(c) * pow_int(x, -s.get_num().get_si());
            return CertifiedReal(c) * exp(CertifiedReal(Rat(-s)) * log(x));
        }
        case Kind::Table: {
            Rat v = table.front().second;
            for (const auto& [xi, vi] : table) {
                if (CertifiedReal::compare(x, CertifiedReal(xi)) >= 0)
                    v = vi;
                else
                    break;
            }
            return CertifiedReal(v);
        }
    }
    throw std::logic_error("unreachable");
}

CertifiedReal PsiSpec::log_eval(const CertifiedReal& log_x) const {
    switch (kind) {
        case Kind::FromHeight: {
            // log psi = log kappa - y - log h(e^y)
            const CertifiedReal& y = log_x;
            CertifiedReal log_h(0L);
            switch (height.kind) {
                case HeightSpec::Kind::Constant: log_h = log(CertifiedReal(height.c)); break;
                case HeightSpec::Kind::HL:
                case HeightSpec::Kind::HLBeta: {
                    CertifiedReal z = (height.kind == HeightSpec::Kind::HLBeta) ? max(y, height.beta) : y;
                    // log^+(e^z) = max(z, 1) =: Z; h = Z^(l-1) * log^+(Z)
                    CertifiedReal Z = max(z, CertifiedReal(1L));
                    log_h = CertifiedReal(static_cast<long>(height.l - 1)) * log(Z) + log(log_plus(Z));
                    break;
                }
                case HeightSpec::Kind::PowerLog: {
                    CertifiedReal Z = max(y, CertifiedReal(1L));
                    log_h = log(CertifiedReal(height.c)) + CertifiedReal(static_cast<long>(height.p)) * log(Z);
                    break;
                }
            }
            return log(CertifiedReal(kappa)) - y - log_h;
        }
        case Kind::Power: return log(CertifiedReal(c)) - CertifiedReal(s) * log_x;
        case Kind::Table: return log(eval(exp(log_x)));
    }
    throw std::logic_error("unreachable");
}

long PsiSpec::lambda() const {
    switch (kind) {
        case Kind::FromHeight: return height.lambda();
        case Kind::Power: {
            // 1/(x psi(x)) = x^{s-1}/c : sub-homogeneous with exponent ceil(s-1)+... s
            Rat sm = s;
            Int up = rat_ceil(sm);
            long v = up.get_si();
            return v < 1 ? 1 : v;
        }
        case Kind::Table: return 1;
    }
    throw std::logic_error("unreachable");
}

std::string PsiSpec::describe() const {
    switch (kind) {
        case Kind::FromHeight: return rat_to_string(kappa) + "/(x*" + height.describe() + ")";
        case Kind::Power: return rat_to_string(c) + "*x^-" + rat_to_string(s);
        case Kind::Table: return "table[" + std::to_string(table.size()) + "]";
    }
    return "?";
}

}  // namespace madlat
