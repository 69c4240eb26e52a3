#include "madlat/minima.hpp"

#include <algorithm>
#include <cmath>

namespace madlat {

namespace {

auto S = [](int x) { return static_cast<size_t>(x); };

CertifiedReal sup_norm(const std::vector<CertifiedReal>& v) {
    CertifiedReal out(0L);
    bool first = true;
    for (const auto& x : v) {
        CertifiedReal a = abs(x);
        out = first ? a : max(out, a);
        first = false;
    }
    return out;
}

// three-way compare that treats values indistinguishable at a deep working
// precision as equal; exact operands still compare exactly
int cmp_tolerant(const CertifiedReal& a, const CertifiedReal& b) {
    if (a.is_exact() && b.is_exact()) return CertifiedReal::compare(a, b);
    for (mpfr_prec_t p = precision_start(); p <= 4096; p *= 2) {
        Interval ia = a.approx(p), ib = b.approx(p);
        if (ia.certainly_less(ib)) return -1;
        if (ib.certainly_less(ia)) return 1;
    }
    return 0;
}

// upper integer bounds for coefficients of any lattice vector with sup norm
// <= bound: |c_i| <= sum_j |Binv_ij| * bound
std::vector<long> coeff_box(const std::vector<CertifiedReal>& inv, int d, const CertifiedReal& bound) {
    std::vector<long> M(S(d), 0);
    for (int i = 0; i < d; ++i) {
        CertifiedReal rs(0L);
        for (int j = 0; j < d; ++j) rs += abs(inv[S(j) * S(d) + S(i)]);
        Rat hi = (rs * bound).approx(precision_start()).hi_rat();
        Int fl = rat_floor(hi);
        if (fl > 1000000) throw BudgetExceeded("coefficient box too large for enumeration");
        M[S(i)] = std::max(0L, fl.get_si());
    }
    return M;
}

bool next_canonical_vec(std::vector<long>& q, const std::vector<long>& M) {
    int d = static_cast<int>(q.size());
    for (int i = d - 1; i >= 0; --i) {
        if (q[S(i)] < M[S(i)]) {
            ++q[S(i)];
            for (int j = i + 1; j < d; ++j) q[S(j)] = -M[S(j)];
            return true;
        }
    }
    return false;
}

void check_box_budget(const std::vector<long>& M) {
    double nodes = 1;
    for (long m : M) nodes *= 2.0 * static_cast<double>(m) + 1.0;
    if (nodes > 2e8) throw BudgetExceeded("enumeration box exceeds the node budget");
}

struct Candidate {
    CertifiedReal norm;
    std::vector<Int> coeff;  // in the reduced basis
};

// all canonical nonzero coefficient vectors whose lattice vector could have
// sup norm <= bound (coarse interval prefilter keeps the exact work small)
std::vector<Candidate> enumerate_below(const LatticeBasis& R, const CertifiedReal& bound,
                                       const std::vector<long>& M, bool parallel) {
    int d = R.dim;
    check_box_budget(M);
    Rat cutoff = bound.approx(precision_start()).hi_rat();
    long M0 = M[0];

    auto scan_first = [&](long c0, std::vector<Candidate>& out) {
        std::vector<long> c(S(d), 0);
        c[0] = c0;
        bool canonical_tail = (c0 == 0);
        for (int i = 1; i < d; ++i) c[S(i)] = canonical_tail ? 0 : -M[S(i)];
        auto advance = [&]() {
            for (int i = d - 1; i >= 1; --i) {
                if (c[S(i)] < M[S(i)]) {
                    ++c[S(i)];
                    for (int j = i + 1; j < d; ++j) c[S(j)] = canonical_tail ? -M[S(j)] : -M[S(j)];
                    return true;
                }
            }
            return false;
        };
        if (canonical_tail) {
            // first nonzero coordinate must be positive; odometer from zero
            std::vector<long> sub(c.begin() + 1, c.end());
            std::vector<long> Msub(M.begin() + 1, M.end());
            if (d == 1) return;
            while (next_canonical_vec(sub, Msub)) {
                for (int i = 1; i < d; ++i) c[S(i)] = sub[S(i - 1)];
                std::vector<Int> ci;
                ci.reserve(S(d));
                for (long x : c) ci.push_back(Int(x));
                auto v = R.apply(ci);
                CertifiedReal nv = sup_norm(v);
                if (!(nv.approx(precision_start()).lo_rat() > cutoff)) out.push_back({nv, ci});
            }
            return;
        }
        while (true) {
            std::vector<Int> ci;
            ci.reserve(S(d));
            for (long x : c) ci.push_back(Int(x));
            auto v = R.apply(ci);
            CertifiedReal nv = sup_norm(v);
            if (!(nv.approx(precision_start()).lo_rat() > cutoff)) out.push_back({nv, ci});
            if (!advance()) break;
        }
    };

    std::vector<Candidate> all;
    if (!parallel) {
        for (long c0 = 0; c0 <= M0; ++c0) scan_first(c0, all);
    } else {
        std::vector<std::vector<Candidate>> buckets(S(static_cast<int>(M0 + 1)));
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long c0 = 0; c0 <= M0; ++c0) {
            try {
                scan_first(c0, buckets[static_cast<size_t>(c0)]);
            } catch (...) {
#pragma omp critical(madlat_enum_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    }
    return all;
}

std::vector<Int> mat_vec_int(const std::vector<Int>& U, int d, const std::vector<Int>& c) {
    std::vector<Int> out(S(d), Int(0));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) out[S(i)] += U[S(j) * S(d) + S(i)] * c[S(j)];
    return out;
}

std::pair<CertifiedReal, std::vector<Int>> first_minimum_impl(const LatticeBasis& L, bool parallel) {
    auto U = lll_transform(L);
    LatticeBasis R = L.transformed(U);
    int d = L.dim;

    // initial upper bound: the reduced column with the smallest norm enclosure
    CertifiedReal bound;
    Rat bound_hi;
    bool first = true;
    for (int j = 0; j < d; ++j) {
        std::vector<CertifiedReal> col(S(d));
        for (int i = 0; i < d; ++i) col[S(i)] = R.entry(i, j);
        CertifiedReal nv = sup_norm(col);
        Rat hi = nv.approx(precision_start()).hi_rat();
        if (first || hi < bound_hi) {
            bound = nv;
            bound_hi = hi;
            first = false;
        }
    }
    auto inv = inverse_matrix(R);
    auto M = coeff_box(inv, d, bound);
    auto cands = enumerate_below(R, bound, M, parallel);

    // exact compares for exact bases; interval bases resolve ties below the
    // tolerance lexicographically
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        if (!best) {
            best = &c;
            continue;
        }
        int cc = cmp_tolerant(c.norm, best->norm);
        if (cc < 0 || (cc == 0 && std::lexicographical_compare(c.coeff.begin(), c.coeff.end(),
                                                               best->coeff.begin(), best->coeff.end())))
            best = &c;
    }
    if (!best) throw std::logic_error("first_minimum: empty enumeration");
    return {best->norm, mat_vec_int(U, d, best->coeff)};
}

}  // namespace

std::pair<CertifiedReal, std::vector<Int>> first_minimum(const LatticeBasis& L) {
    return first_minimum_impl(L, exec_mode() == ExecMode::OpenMP);
}

std::pair<CertifiedReal, std::vector<Int>> first_minimum_serial(const LatticeBasis& L) {
    return first_minimum_impl(L, false);
}

MinimaReport successive_minima(const LatticeBasis& L) {
    auto U = lll_transform(L);
    LatticeBasis R = L.transformed(U);
    int d = L.dim;

    // the largest reduced column norm bounds delta_d
    CertifiedReal bound;
    Rat bound_hi;
    bool first = true;
    for (int j = 0; j < d; ++j) {
        std::vector<CertifiedReal> col(S(d));
        for (int i = 0; i < d; ++i) col[S(i)] = R.entry(i, j);
        CertifiedReal nv = sup_norm(col);
        Rat hi = nv.approx(precision_start()).hi_rat();
        if (first || hi > bound_hi) {
            bound = nv;
            bound_hi = hi;
            first = false;
        }
    }
    auto inv = inverse_matrix(R);
    auto M = coeff_box(inv, d, bound);
    auto cands = enumerate_below(R, bound, M, exec_mode() == ExecMode::OpenMP);

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        int c = cmp_tolerant(a.norm, b.norm);
        if (c != 0) return c < 0;
        return std::lexicographical_compare(a.coeff.begin(), a.coeff.end(), b.coeff.begin(), b.coeff.end());
    });

    MinimaReport rep;
    std::vector<std::vector<Int>> picked;
    for (const auto& c : cands) {
        if (static_cast<int>(picked.size()) == d) break;
        auto probe = picked;
        probe.push_back(c.coeff);
        if (int_rank(probe) == static_cast<int>(probe.size())) {
            picked.push_back(c.coeff);
            rep.deltas.push_back(c.norm);
            rep.witnesses.push_back(mat_vec_int(U, d, c.coeff));
        }
    }
    if (static_cast<int>(picked.size()) < d)
        throw PrecisionExhausted("successive_minima: enumeration bound missed independent vectors");
    return rep;
}

namespace {

void subsets_of_size(int d, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(S(k));
    for (int i = 0; i < k; ++i) cur[S(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[S(i)] == d - k + i) --i;
        if (i < 0) break;
        ++cur[S(i)];
        for (int j = i + 1; j < k; ++j) cur[S(j)] = cur[S(j - 1)] + 1;
    }
}

CertifiedReal minor_det(const LatticeBasis& L, const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = static_cast<int>(rows.size());
    if (k == 1) return L.entry(rows[0], cols[0]);
    // build the submatrix and reuse the basis determinant
    std::vector<CertifiedReal> sub(S(k) * S(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            sub[S(j) * S(k) + S(i)] = L.entry(rows[S(i)], cols[S(j)]);
    return LatticeBasis(k, std::move(sub)).det();
}

}  // namespace

LatticeBasis compound_basis(const LatticeBasis& L, int k) {
    int d = L.dim;
    if (k < 1 || k > d) throw std::domain_error("compound_basis: index out of range");
    std::vector<std::vector<int>> subs;
    subsets_of_size(d, k, subs);
    int n = static_cast<int>(subs.size());
    LatticeBasis out(n, std::vector<CertifiedReal>(S(n) * S(n), CertifiedReal(0L)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.entry(i, j) = minor_det(L, subs[S(i)], subs[S(j)]);
    return out;
}

CertifiedReal wedge_minimum(const LatticeBasis& L, int i) {
    if (i == L.dim) return abs(L.det());
    if (i == 1) return first_minimum(L).first;
    return first_minimum(compound_basis(L, i)).first;
}

namespace {

CountResult count_points_impl(const LatticeBasis& L, const Box& B, bool parallel) {
    int d = L.dim;
    if (B.dim() != d) throw std::domain_error("count_points: dimension mismatch");
    auto inv = inverse_matrix(L);
    std::vector<long> M(S(d), 0);
    for (int i = 0; i < d; ++i) {
        CertifiedReal rs(0L);
        for (int j = 0; j < d; ++j) rs += abs(inv[S(j) * S(d) + S(i)]) * B.half_widths[S(j)];
        Int fl = rat_floor(rs.approx(precision_start()).hi_rat());
        if (fl > 10000000) throw BudgetExceeded("count_points: coefficient box too large");
        M[S(i)] = std::max(0L, fl.get_si());
    }
    check_box_budget(M);

    auto inside = [&](const std::vector<Int>& c, bool& closed, bool& open) {
        auto v = L.apply(c);
        closed = true;
        open = true;
        for (int i = 0; i < d; ++i) {
            int cc = CertifiedReal::compare(abs(v[S(i)]), B.half_widths[S(i)]);
            if (cc > 0) {
                closed = open = false;
                return;
            }
            if (cc == 0) open = false;
        }
    };

    long closed_cnt = 1, open_cnt = 1;  // the origin
    std::vector<std::vector<Int>> closed_pts;

    long M0 = M[0];
    auto scan_first = [&](long c0, long& ccnt, long& ocnt, std::vector<std::vector<Int>>& pts) {
        // canonical half (first nonzero positive); each member counts twice
        std::vector<long> c(S(d), 0);
        c[0] = c0;
        if (c0 == 0) {
            if (d == 1) return;
            std::vector<long> sub(S(d - 1), 0);
            std::vector<long> Msub(M.begin() + 1, M.end());
            while (next_canonical_vec(sub, Msub)) {
                std::vector<Int> ci{Int(0)};
                for (long x : sub) ci.push_back(Int(x));
                bool cl, op;
                inside(ci, cl, op);
                if (cl) {
                    ccnt += 2;
                    if (op) ocnt += 2;
                    pts.push_back(ci);
                }
            }
            return;
        }
        for (int i = 1; i < d; ++i) c[S(i)] = -M[S(i)];
        while (true) {
            std::vector<Int> ci;
            for (long x : c) ci.push_back(Int(x));
            bool cl, op;
            inside(ci, cl, op);
            if (cl) {
                ccnt += 2;
                if (op) ocnt += 2;
                pts.push_back(ci);
            }
            bool more = false;
            for (int i = d - 1; i >= 1; --i) {
                if (c[S(i)] < M[S(i)]) {
                    ++c[S(i)];
                    for (int j = i + 1; j < d; ++j) c[S(j)] = -M[S(j)];
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
    };

    if (!parallel) {
        for (long c0 = 0; c0 <= M0; ++c0) scan_first(c0, closed_cnt, open_cnt, closed_pts);
    } else {
        std::vector<long> ccnt(S(static_cast<int>(M0 + 1)), 0), ocnt(S(static_cast<int>(M0 + 1)), 0);
        std::vector<std::vector<std::vector<Int>>> pts(S(static_cast<int>(M0 + 1)));
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long c0 = 0; c0 <= M0; ++c0) {
            try {
                scan_first(c0, ccnt[static_cast<size_t>(c0)], ocnt[static_cast<size_t>(c0)],
                           pts[static_cast<size_t>(c0)]);
            } catch (...) {
#pragma omp critical(madlat_count_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        for (long c0 = 0; c0 <= M0; ++c0) {
            closed_cnt += ccnt[static_cast<size_t>(c0)];
            open_cnt += ocnt[static_cast<size_t>(c0)];
            closed_pts.insert(closed_pts.end(), pts[static_cast<size_t>(c0)].begin(),
                              pts[static_cast<size_t>(c0)].end());
        }
    }

    CountResult out;
    out.closed_count = closed_cnt;
    out.open_count = open_cnt;
    out.boundary = closed_cnt - open_cnt;
    out.rank = int_rank(closed_pts);
    return out;
}

}  // namespace

CountResult count_points(const LatticeBasis& L, const Box& B) {
    return count_points_impl(L, B, exec_mode() == ExecMode::OpenMP);
}

CountResult count_points_serial(const LatticeBasis& L, const Box& B) {
    return count_points_impl(L, B, false);
}

BlichfeldtReport check_blichfeldt(const LatticeBasis& L, const Box& B) {
    int d = L.dim;
    BlichfeldtReport rep;
    rep.counts = count_points(L, B);
    if (rep.counts.rank < d)
        throw RankDeficient("check_blichfeldt: lattice points in the box span rank " +
                            std::to_string(rep.counts.rank) + " < " + std::to_string(d));
    CertifiedReal det_abs = abs(L.det());
    rep.vol_over_det = B.volume() / det_abs;
    Rat dfac(1);
    for (int i = 2; i <= d; ++i) dfac *= i;

    auto le_bound = [&](long count, const CertifiedReal& rhs) {
        return CertifiedReal::compare(CertifiedReal(static_cast<long>(count)), rhs) <= 0;
    };
    CertifiedReal paper_rhs = rep.vol_over_det + CertifiedReal(static_cast<long>(d));
    rep.paper_bound_closed = le_bound(rep.counts.closed_count, paper_rhs);
    rep.paper_bound_open = le_bound(rep.counts.open_count, paper_rhs);
    rep.classical_bound =
        le_bound(rep.counts.closed_count, CertifiedReal(dfac) * rep.vol_over_det + CertifiedReal(static_cast<long>(d)));
    rep.boundary_case = rep.counts.boundary > 0;
    rep.ok = rep.paper_bound_open;
    return rep;
}

Rat counting_constant(int d) { return Rat(d) * rat_pow(Rat(4), d); }

CountingBoundReport counting_bound(const LatticeBasis& L, const Box& B, std::optional<Rat> constant) {
    int d = L.dim;
    CountingBoundReport rep;
    rep.constant = constant.value_or(counting_constant(d));
    auto counts = count_points(L, B);
    rep.count = counts.closed_count;
    rep.r = counts.rank;
    if (rep.r == 0) {
        rep.lambda_r = CertifiedReal(0L);
        rep.bound = CertifiedReal(rep.constant);
        rep.ok = rep.count <= 1;
        return rep;
    }
    rep.lambda_r = wedge_minimum(L, rep.r);
    // sort half-widths descending by certified enclosure midpoints (exact for
    // exact boxes); only the product of the top r enters the bound
    std::vector<CertifiedReal> hw = B.half_widths;
    std::sort(hw.begin(), hw.end(),
              [](const CertifiedReal& a, const CertifiedReal& b) { return cmp_tolerant(a, b) > 0; });
    CertifiedReal prod(1L);
    for (int i = 0; i < rep.r; ++i) prod = prod * hw[S(i)];
    rep.bound = CertifiedReal(rep.constant) * (CertifiedReal(1L) + prod / rep.lambda_r);
    rep.ok = CertifiedReal::compare(CertifiedReal(rep.count), rep.bound) <= 0;
    return rep;
}

MinkowskiReport check_minkowski(const LatticeBasis& L) {
    int d = L.dim;
    auto rep_min = successive_minima(L);
    MinkowskiReport rep;
    CertifiedReal prod(1L);
    for (const auto& x : rep_min.deltas) prod = prod * x;
    rep.minima_product = prod;
    rep.det_abs = abs(L.det());
    Rat dfac(1);
    for (int i = 2; i <= d; ++i) dfac *= i;
    rep.lower_ok = CertifiedReal::compare(rep.det_abs / CertifiedReal(dfac), prod) <= 0;
    rep.upper_ok = CertifiedReal::compare(prod, rep.det_abs) <= 0;
    rep.ok = rep.lower_ok && rep.upper_ok;
    return rep;
}

MahlerReport check_mahler(const LatticeBasis& L) {
    int d = L.dim;
    auto mins = successive_minima(L);
    auto dual_mins = successive_minima(dual_basis(L));
    MahlerReport rep;
    Rat dfac(1);
    for (int i = 2; i <= d; ++i) dfac *= i;
    rep.provable_window_ok = true;
    rep.self_dual_window_ok = true;
    for (int i = 0; i < d; ++i) {
        CertifiedReal p = mins.deltas[S(i)] * dual_mins.deltas[S(d - 1 - i)];
        if (CertifiedReal::compare(p, CertifiedReal(Rat(1, d))) < 0 ||
            CertifiedReal::compare(p, CertifiedReal(dfac)) > 0)
            rep.provable_window_ok = false;
        if (CertifiedReal::compare(p, CertifiedReal(1L)) < 0 ||
            CertifiedReal::compare(p, CertifiedReal(dfac)) > 0)
            rep.self_dual_window_ok = false;
        rep.products.push_back(p);
    }
    rep.ok = rep.provable_window_ok;
    return rep;
}

}  // namespace madlat
