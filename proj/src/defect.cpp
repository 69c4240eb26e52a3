#include "madlat/defect.hpp"

#include <cmath>

namespace madlat {

namespace {

// (value, q) ordering used to merge scan candidates: smaller value wins,
// ties go to the lexicographically smaller q vector
bool beats(const CertifiedReal& val, const std::vector<Int>& q, const CertifiedReal& best_val,
           const std::vector<Int>& best_q) {
    int c = CertifiedReal::compare(val, best_val);
    if (c != 0) return c < 0;
    return std::lexicographical_compare(q.begin(), q.end(), best_q.begin(), best_q.end());
}

struct ScanBest {
    bool has = false;
    CertifiedReal value;
    std::vector<Int> q;

    void offer(const CertifiedReal& val, std::vector<Int> qv) {
        if (!has || beats(val, qv, value, q)) {
            value = val;
            q = std::move(qv);
            has = true;
        }
    }
    void merge(const ScanBest& o) {
        if (o.has) offer(o.value, o.q);
    }
};

CertifiedReal mad_term(const TargetVector& alpha, const HeightSpec& h, const Int& q) {
    CertifiedReal qv{q};
    CertifiedReal val = qv * h.eval(qv);
    for (int i = 0; i < alpha.dim(); ++i) {
        val = val * dist_to_Z(alpha.entries[i] * qv);
        if (val.is_zero()) return CertifiedReal(0L);
    }
    return val;
}

DefectRecord mad_defect_impl(const TargetVector& alpha, const HeightSpec& h, const Int& Q,
                             bool keep_trace, bool parallel) {
    if (Q < 1) throw std::domain_error("mad_defect: Q must be >= 1");
    if (alpha.n != 1 && alpha.m != 1)
        throw std::domain_error("mad_defect: alpha must be a vector");
    if (Q > Int(1) << 40) throw std::domain_error("mad_defect: Q out of supported range");
    long Qn = Q.get_si();

    DefectRecord rec;
    ScanBest best;
    if (!parallel) {
        for (long q = 1; q <= Qn; ++q) {
            CertifiedReal val = mad_term(alpha, h, Int(q));
            if (keep_trace) rec.trace.push_back({{Int(q)}, val});
            best.offer(val, {Int(q)});
            if (!keep_trace && best.value.is_zero()) break;  // nothing beats an exact zero
        }
    } else {
#pragma omp parallel
        {
            ScanBest local;
            std::vector<std::pair<std::vector<Int>, CertifiedReal>> local_trace;
#pragma omp for schedule(static)
            for (long q = 1; q <= Qn; ++q) {
                CertifiedReal val = mad_term(alpha, h, Int(q));
                if (keep_trace) local_trace.push_back({{Int(q)}, val});
                local.offer(val, {Int(q)});
            }
#pragma omp critical(madlat_mad_defect_merge)
            {
                best.merge(local);
                if (keep_trace)
                    rec.trace.insert(rec.trace.end(), local_trace.begin(), local_trace.end());
            }
        }
        if (keep_trace)
            std::sort(rec.trace.begin(), rec.trace.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    rec.q_star = best.q;
    rec.value = best.value;
    return rec;
}

}  // namespace

CertifiedReal pi_plus(const std::vector<CertifiedReal>& v) {
    CertifiedReal out(1L);
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        out = out * abs(x);
    }
    return out;
}

Int pi_plus_int(const std::vector<Int>& v) {
    Int out(1);
    for (const auto& x : v)
        if (x != 0) out *= abs(x);
    return out;
}

DefectRecord mad_defect(const TargetVector& alpha, const HeightSpec& h, const Int& Q, bool keep_trace) {
    return mad_defect_impl(alpha, h, Q, keep_trace, exec_mode() == ExecMode::OpenMP);
}

DefectRecord mad_defect_serial(const TargetVector& alpha, const HeightSpec& h, const Int& Q,
                               bool keep_trace) {
    return mad_defect_impl(alpha, h, Q, keep_trace, false);
}

namespace {

// odometer over the canonical half-box: first nonzero coordinate positive
bool next_canonical(std::vector<long>& q, long B) {
    int d = static_cast<int>(q.size());
    for (int i = d - 1; i >= 0; --i) {
        if (q[i] < B) {
            ++q[i];
            for (int j = i + 1; j < d; ++j) q[j] = -B;
            return true;
        }
    }
    return false;
}

DefectRecord mad_star_impl(const TargetVector& alpha, const HeightSpec& h, const Int& Qcap,
                           bool keep_trace, bool parallel) {
    if (Qcap < 1) throw std::domain_error("mad_star_defect: Qcap must be >= 1");
    int d = alpha.dim();
    if (Qcap > Int(1) << 30) throw std::domain_error("mad_star_defect: Qcap out of supported range");
    long B = Qcap.get_si();

    auto value_of = [&](const std::vector<Int>& q) -> std::optional<CertifiedReal> {
        Int pp = pi_plus_int(q);
        if (pp > Qcap) return std::nullopt;
        CertifiedReal dotv(0L);
        for (int i = 0; i < d; ++i)
            if (q[i] != 0) dotv += alpha.entries[i] * CertifiedReal(q[i]);
        CertifiedReal ppr{pp};
        return ppr * h.eval(ppr) * dist_to_Z(dotv);
    };

    DefectRecord rec;
    ScanBest best;

    // first coordinate q_1 > 0, or q_1 = 0 and the remaining block canonical
    auto scan_tail = [&](long q1, ScanBest& into,
                         std::vector<std::pair<std::vector<Int>, CertifiedReal>>* trace) {
        std::vector<long> tail(static_cast<size_t>(d - 1), 0);
        bool tail_canonical = (q1 == 0);
        // iterate the full sub-box for q1 > 0; canonical half for q1 = 0
        if (d == 1) {
            if (q1 == 0) return;
            std::vector<Int> q{Int(q1)};
            if (auto v = value_of(q)) {
                if (trace) trace->push_back({q, *v});
                into.offer(*v, q);
            }
            return;
        }
        for (auto& t : tail) t = tail_canonical ? 0 : -B;
        if (tail_canonical) {
            // skip the all-zero tail; start from the first canonical vector
            std::vector<long> probe = tail;
            if (!next_canonical(probe, B)) return;
            tail = probe;
        }
        while (true) {
            std::vector<Int> q;
            q.reserve(static_cast<size_t>(d));
            q.push_back(Int(q1));
            for (long t : tail) q.push_back(Int(t));
            if (auto v = value_of(q)) {
                if (trace) trace->push_back({q, *v});
                into.offer(*v, q);
            }
            bool more = tail_canonical ? next_canonical(tail, B) : [&] {
                for (int i = d - 2; i >= 0; --i) {
                    if (tail[i] < B) {
                        ++tail[i];
                        for (int j = i + 1; j < d - 1; ++j) tail[j] = -B;
                        return true;
                    }
                }
                return false;
            }();
            if (!more) break;
        }
    };

    if (!parallel) {
        for (long q1 = 0; q1 <= B; ++q1) scan_tail(q1, best, keep_trace ? &rec.trace : nullptr);
    } else {
#pragma omp parallel
        {
            ScanBest local;
            std::vector<std::pair<std::vector<Int>, CertifiedReal>> local_trace;
#pragma omp for schedule(dynamic)
            for (long q1 = 0; q1 <= B; ++q1)
                scan_tail(q1, local, keep_trace ? &local_trace : nullptr);
#pragma omp critical(madlat_mad_star_merge)
            {
                best.merge(local);
                if (keep_trace)
                    rec.trace.insert(rec.trace.end(), local_trace.begin(), local_trace.end());
            }
        }
        if (keep_trace)
            std::sort(rec.trace.begin(), rec.trace.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    if (!best.has) throw std::domain_error("mad_star_defect: empty search range");
    rec.q_star = best.q;
    rec.value = best.value;
    return rec;
}

}  // namespace

DefectRecord mad_star_defect(const TargetVector& alpha, const HeightSpec& h, const Int& Qcap,
                             bool keep_trace) {
    return mad_star_impl(alpha, h, Qcap, keep_trace, exec_mode() == ExecMode::OpenMP);
}

DefectRecord mad_star_defect_serial(const TargetVector& alpha, const HeightSpec& h, const Int& Qcap,
                                    bool keep_trace) {
    return mad_star_impl(alpha, h, Qcap, keep_trace, false);
}

namespace {

struct RecipTermError {
    std::vector<Int> q;
    int row;
};

// enclosure of one summand, or throws DegenerateTarget
Interval recip_term(const TargetVector& Y, const std::vector<Int>& q, mpfr_prec_t prec) {
    Interval acc = Interval::point(1, prec);
    for (int i = 0; i < Y.m; ++i) {
        CertifiedReal d = dist_to_Z(Y.row_dot(i, q));
        if (d.is_zero()) {
            std::string qs;
            for (const auto& x : q) qs += (qs.empty() ? "" : ",") + x.get_str();
            throw DegenerateTarget("recip_sum: ||Y_" + std::to_string(i + 1) + " q|| = 0 at q=(" + qs + ")");
        }
        Interval di = d.approx(prec);
        mpfr_prec_t p = prec;
        while (di.contains_zero()) {
            if (p >= precision_cap())
                throw PrecisionExhausted("recip_sum term denominator not separated from zero");
            p *= 2;
            di = d.approx(p);
        }
        acc = acc / di;
    }
    return acc;
}

Interval recip_sum_eval(const TargetVector& Y, const std::vector<Rat>& Qvec, mpfr_prec_t prec,
                        bool parallel) {
    int n = Y.n;
    if (static_cast<int>(Qvec.size()) != n) throw std::domain_error("recip_sum: Q vector length != n");
    std::vector<long> B(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        if (Qvec[j] < 1) throw std::domain_error("recip_sum: Q_j must be >= 1");
        B[j] = rat_floor(Qvec[j]).get_si();
    }
    // canonical half-box plus factor 2: X(Q) is symmetric and the summand is even
    std::vector<Interval> partials;
    long B0 = B[0];

    auto tail_sum = [&](long q1, mpfr_prec_t p) {
        Interval acc = Interval::point(0, p);
        std::vector<long> tail(static_cast<size_t>(n - 1));
        bool canonical = (q1 == 0);
        if (n == 1) {
            if (q1 == 0) return acc;
            std::vector<Int> q{Int(q1)};
            return recip_term(Y, q, p);
        }
        for (int j = 0; j < n - 1; ++j) tail[static_cast<size_t>(j)] = canonical ? 0 : -B[j + 1];
        if (canonical) {
            std::vector<long> probe = tail;
            bool any = false;
            for (int i = n - 2; i >= 0; --i)
                if (probe[i] < B[i + 1]) {
                    any = true;
                    break;
                }
            if (!any) return acc;
        }
        auto advance = [&](std::vector<long>& t) {
            for (int i = n - 2; i >= 0; --i) {
                if (t[i] < B[i + 1]) {
                    ++t[i];
                    for (int j = i + 1; j < n - 1; ++j) t[j] = -B[j + 1];
                    return true;
                }
            }
            return false;
        };
        if (canonical) {
            // start from the first nonzero canonical tail
            if (!advance(tail)) return acc;
            // canonical: first nonzero of tail positive; enumerate and filter
        }
        while (true) {
            bool use = true;
            if (canonical) {
                int fn = 0;
                while (fn < n - 1 && tail[fn] == 0) ++fn;
                use = fn < n - 1 && tail[fn] > 0;
            }
            if (use) {
                std::vector<Int> q;
                q.reserve(static_cast<size_t>(n));
                q.push_back(Int(q1));
                for (long t : tail) q.push_back(Int(t));
                acc = acc + recip_term(Y, q, p);
            }
            if (!advance(tail)) break;
        }
        return acc;
    };

    Interval total = Interval::point(0, prec);
    if (!parallel) {
        for (long q1 = 0; q1 <= B0; ++q1) total = total + tail_sum(q1, prec);
    } else {
        std::vector<Interval> chunk(static_cast<size_t>(B0 + 1), Interval(prec));
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long q1 = 0; q1 <= B0; ++q1) {
            try {
                chunk[static_cast<size_t>(q1)] = tail_sum(q1, prec);
            } catch (...) {
#pragma omp critical(madlat_recip_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (const auto& cI : chunk) total = total + cI;
    }
    return total * Interval::point(2, prec);
}

}  // namespace

CertifiedReal recip_sum(const TargetVector& Y, const std::vector<Rat>& Qvec) {
    bool parallel = exec_mode() == ExecMode::OpenMP;
    // force one evaluation now so DegenerateTarget surfaces eagerly
    Interval probe = recip_sum_eval(Y, Qvec, precision_start(), parallel);
    (void)probe;
    TargetVector Yc = Y;
    std::vector<Rat> Qc = Qvec;
    return CertifiedReal::from_fn(
        [Yc, Qc, parallel](mpfr_prec_t p) { return recip_sum_eval(Yc, Qc, p, parallel); });
}

CertifiedReal recip_sum_serial(const TargetVector& Y, const std::vector<Rat>& Qvec) {
    Interval probe = recip_sum_eval(Y, Qvec, precision_start(), false);
    (void)probe;
    TargetVector Yc = Y;
    std::vector<Rat> Qc = Qvec;
    return CertifiedReal::from_fn([Yc, Qc](mpfr_prec_t p) { return recip_sum_eval(Yc, Qc, p, false); });
}

GrowthFit growth_exponent(const std::vector<std::pair<double, double>>& series, GrowthModel model) {
    if (series.size() < 3) throw InsufficientData("growth_exponent: need at least 3 points");
    for (size_t i = 1; i < series.size(); ++i)
        if (series[i].first <= series[i - 1].first)
            throw InsufficientData("growth_exponent: Q must be strictly increasing");
    auto basis = [&](double Q) {
        switch (model) {
            case GrowthModel::Power: return std::log(Q);
            case GrowthModel::QLogQ: return std::log(Q * std::log(Q));
        }
        return 0.0;
    };
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t N = series.size();
    for (auto& [Q, v] : series) {
        if (v <= 0) throw InsufficientData("growth_exponent: values must be positive");
        double x = basis(Q), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = N * sxx - sx * sx;
    GrowthFit fit;
    if (std::abs(denom) < 1e-12) {
        fit.slope = 0;
        fit.intercept = sy / N;
    } else {
        fit.slope = (N * sxy - sx * sy) / denom;
        fit.intercept = (sy - fit.slope * sx) / N;
    }
    double ss = 0;
    for (auto& [Q, v] : series) {
        double r = std::log(v) - (fit.slope * basis(Q) + fit.intercept);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / N);
    return fit;
}

namespace {

MultApproxResult mult_approx_impl(const TargetVector& Y, const PsiSpec& psi, const Rat& T,
                                  bool parallel) {
    if (T < 1) throw std::domain_error("is_mult_approximable: T must be >= 1");
    int n = Y.n, m = Y.m;
    long B = Int(rat_ceil(T) - 1).get_si();  // |q_j| <= B  <=>  |q_j| < T for integer q
    CertifiedReal psiT = psi.eval(CertifiedReal(T));

    auto check_q = [&](const std::vector<Int>& q) -> std::optional<MultApproxResult> {
        Int pp = pi_plus_int(q);
        if (!(Rat(pp) < T)) return std::nullopt;
        CertifiedReal prod(1L);
        for (int i = 0; i < m; ++i) {
            prod = prod * dist_to_Z(Y.row_dot(i, q));
            if (prod.is_zero()) break;
        }
        if (CertifiedReal::compare(prod, psiT) < 0) {
            MultApproxResult res;
            res.member = true;
            res.q = q;
            for (int i = 0; i < m; ++i) {
                CertifiedReal v = Y.row_dot(i, q);
                Int p;
                try {
                    p = nearest_certified(v);
                } catch (const PrecisionExhausted&) {
                    p = floor_certified(v);  // half-integer tie: both neighbors optimal
                }
                res.p.push_back(p);
            }
            return res;
        }
        return std::nullopt;
    };

    // enumerate the canonical half box (first nonzero positive) in lex order
    std::vector<long> qv(static_cast<size_t>(n), 0);
    std::vector<std::vector<Int>> all;
    while (next_canonical(qv, B)) {
        std::vector<Int> q;
        q.reserve(static_cast<size_t>(n));
        for (long x : qv) q.push_back(Int(x));
        all.push_back(std::move(q));
    }

    MultApproxResult out;
    if (!parallel) {
        for (const auto& q : all)
            if (auto r = check_q(q)) return *r;
        return out;
    }
    size_t found = all.size();
    MultApproxResult found_res;
#pragma omp parallel
    {
        size_t local_idx = all.size();
        MultApproxResult local_res;
#pragma omp for schedule(dynamic, 64)
        for (size_t i = 0; i < all.size(); ++i) {
            if (i < local_idx) {
                if (auto r = check_q(all[i])) {
                    local_idx = i;
                    local_res = *r;
                }
            }
        }
#pragma omp critical(madlat_mult_approx_merge)
        if (local_idx < found) {
            found = local_idx;
            found_res = local_res;
        }
    }
    if (found < all.size()) return found_res;
    return out;
}

}  // namespace

MultApproxResult is_mult_approximable(const TargetVector& Y, const PsiSpec& psi, const Rat& T) {
    return mult_approx_impl(Y, psi, T, exec_mode() == ExecMode::OpenMP);
}

MultApproxResult is_mult_approximable_serial(const TargetVector& Y, const PsiSpec& psi, const Rat& T) {
    return mult_approx_impl(Y, psi, T, false);
}

}  // namespace madlat
