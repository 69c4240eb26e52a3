#include "madlat/lattice.hpp"

#include <cmath>

namespace madlat {

LatticeBasis LatticeBasis::identity(int d) {
    std::vector<CertifiedReal> e(static_cast<size_t>(d) * d, CertifiedReal(0L));
    for (int i = 0; i < d; ++i) e[static_cast<size_t>(i) * d + i] = CertifiedReal(1L);
    return LatticeBasis(d, std::move(e));
}

LatticeBasis LatticeBasis::diagonal(const std::vector<CertifiedReal>& diag) {
    int d = static_cast<int>(diag.size());
    LatticeBasis L = identity(d);
    for (int i = 0; i < d; ++i) L.entry(i, i) = diag[static_cast<size_t>(i)];
    return L;
}

bool LatticeBasis::all_rational() const {
    for (const auto& e : cols)
        if (!e.rat()) return false;
    return true;
}

std::vector<CertifiedReal> LatticeBasis::apply(const std::vector<Int>& c) const {
    if (static_cast<int>(c.size()) != dim) throw std::domain_error("apply: length mismatch");
    std::vector<CertifiedReal> v(static_cast<size_t>(dim), CertifiedReal(0L));
    for (int j = 0; j < dim; ++j) {
        if (c[static_cast<size_t>(j)] == 0) continue;
        CertifiedReal cj{c[static_cast<size_t>(j)]};
        for (int i = 0; i < dim; ++i) v[static_cast<size_t>(i)] += entry(i, j) * cj;
    }
    return v;
}

LatticeBasis LatticeBasis::transformed(const std::vector<Int>& U) const {
    LatticeBasis out(dim, std::vector<CertifiedReal>(cols.size(), CertifiedReal(0L)));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            CertifiedReal acc(0L);
            for (int k = 0; k < dim; ++k) {
                const Int& u = U[static_cast<size_t>(j) * dim + k];
                if (u == 0) continue;
                acc += entry(i, k) * CertifiedReal(u);
            }
            out.entry(i, j) = acc;
        }
    return out;
}

namespace {

Rat rat_det(const LatticeBasis& L) {
    int d = L.dim;
    std::vector<Rat> a(static_cast<size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) a[static_cast<size_t>(i) * d + j] = *L.entry(i, j).rat();
    Rat det(1);
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        for (int i = k; i < d; ++i)
            if (a[static_cast<size_t>(i) * d + k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < d; ++j)
                std::swap(a[static_cast<size_t>(piv) * d + j], a[static_cast<size_t>(k) * d + j]);
            det = -det;
        }
        Rat pv = a[static_cast<size_t>(k) * d + k];
        det *= pv;
        for (int i = k + 1; i < d; ++i) {
            if (a[static_cast<size_t>(i) * d + k] == 0) continue;
            Rat f = a[static_cast<size_t>(i) * d + k] / pv;
            for (int j = k; j < d; ++j)
                a[static_cast<size_t>(i) * d + j] -= f * a[static_cast<size_t>(k) * d + j];
        }
    }
    return det;
}

// cofactor expansion over certified reals; used only at desk-scale dims
CertifiedReal cert_det_rec(const LatticeBasis& L, std::vector<int>& live_cols, int row) {
    int d = L.dim;
    if (row == d) return CertifiedReal(1L);
    CertifiedReal acc(0L);
    int pos = 0;
    for (size_t idx = 0; idx < live_cols.size(); ++idx) {
        int j = live_cols[idx];
        if (j < 0) continue;
        const CertifiedReal& e = L.entry(row, j);
        ++pos;
        if (e.is_zero()) continue;
        live_cols[idx] = -1;
        CertifiedReal sub = cert_det_rec(L, live_cols, row + 1);
        live_cols[idx] = j;
        CertifiedReal term = e * sub;
        acc += (pos % 2 == 1) ? term : -term;
    }
    return acc;
}

}  // namespace

CertifiedReal LatticeBasis::det() const {
    if (all_rational()) return CertifiedReal(rat_det(*this));
    std::vector<int> live(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) live[static_cast<size_t>(j)] = j;
    return cert_det_rec(*this, live, 0);
}

std::string LatticeBasis::describe() const {
    std::string out = "[";
    for (int i = 0; i < dim; ++i) {
        out += "[";
        for (int j = 0; j < dim; ++j) out += entry(i, j).decimal(8) + (j + 1 < dim ? ", " : "");
        out += std::string("]") + (i + 1 < dim ? ", " : "");
    }
    return out + "]";
}

std::vector<CertifiedReal> inverse_matrix(const LatticeBasis& L) {
    int d = L.dim;
    if (L.all_rational()) {
        std::vector<Rat> a(static_cast<size_t>(d) * 2 * d);
        auto at = [&](int i, int j) -> Rat& { return a[static_cast<size_t>(i) * 2 * d + j]; };
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                at(i, j) = *L.entry(i, j).rat();
                at(i, d + j) = (i == j) ? Rat(1) : Rat(0);
            }
        for (int k = 0; k < d; ++k) {
            int piv = -1;
            for (int i = k; i < d; ++i)
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::domain_error("inverse_matrix: singular basis");
            if (piv != k)
                for (int j = 0; j < 2 * d; ++j) std::swap(at(piv, j), at(k, j));
            Rat pv = at(k, k);
            for (int j = 0; j < 2 * d; ++j) at(k, j) /= pv;
            for (int i = 0; i < d; ++i) {
                if (i == k || at(i, k) == 0) continue;
                Rat f = at(i, k);
                for (int j = 0; j < 2 * d; ++j) at(i, j) -= f * at(k, j);
            }
        }
        std::vector<CertifiedReal> inv(static_cast<size_t>(d) * d);
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i)
                inv[static_cast<size_t>(j) * d + i] = CertifiedReal(at(i, d + j));
        return inv;  // column-major
    }
    std::vector<CertifiedReal> a(static_cast<size_t>(d) * 2 * d, CertifiedReal(0L));
    auto at = [&](int i, int j) -> CertifiedReal& { return a[static_cast<size_t>(i) * 2 * d + j]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            at(i, j) = L.entry(i, j);
            at(i, d + j) = (i == j) ? CertifiedReal(1L) : CertifiedReal(0L);
        }
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        double best = -1;
        for (int i = k; i < d; ++i) {
            double m = std::abs(at(i, k).mid());
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (piv < 0 || at(piv, k).sign() == 0) throw std::domain_error("inverse_matrix: singular basis");
        if (piv != k)
            for (int j = 0; j < 2 * d; ++j) std::swap(at(piv, j), at(k, j));
        CertifiedReal pv = at(k, k);
        for (int j = 0; j < 2 * d; ++j) at(k, j) = at(k, j) / pv;
        for (int i = 0; i < d; ++i) {
            if (i == k) continue;
            CertifiedReal f = at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < 2 * d; ++j) at(i, j) = at(i, j) - f * at(k, j);
        }
    }
    std::vector<CertifiedReal> inv(static_cast<size_t>(d) * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) inv[static_cast<size_t>(j) * d + i] = at(i, d + j);
    return inv;
}

LatticeBasis dual_basis(const LatticeBasis& L) {
    auto inv = inverse_matrix(L);  // column-major: inv[j*d+i] = (B^{-1})(i,j)
    int d = L.dim;
    LatticeBasis out(d, std::vector<CertifiedReal>(inv.size(), CertifiedReal(0L)));
    // (B^{-1})^T (i,j) = (B^{-1})(j,i) = inv[i*d+j]
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) out.entry(i, j) = inv[static_cast<size_t>(i) * d + j];
    return out;
}

CertifiedReal Box::volume() const {
    CertifiedReal v(1L);
    for (const auto& b : half_widths) v = v * (CertifiedReal(2L) * b);
    return v;
}

int int_rank(const std::vector<std::vector<Int>>& rows_in) {
    if (rows_in.empty()) return 0;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(rows_in.size());
    for (const auto& r : rows_in) {
        std::vector<Rat> rr;
        rr.reserve(r.size());
        for (const auto& x : r) rr.emplace_back(x);
        rows.push_back(std::move(rr));
    }
    size_t n = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < n && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[r][col];
            for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

namespace {

// exact LLL over rationals, delta = 3/4; returns U column-major with B' = B U
std::vector<Int> lll_rational(const LatticeBasis& L) {
    int d = L.dim;
    auto S = [](int x) { return static_cast<size_t>(x); };
    std::vector<std::vector<Rat>> b(S(d), std::vector<Rat>(S(d)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) b[S(j)][S(i)] = *L.entry(i, j).rat();
    std::vector<std::vector<Int>> U(S(d), std::vector<Int>(S(d), Int(0)));
    for (int j = 0; j < d; ++j) U[S(j)][S(j)] = 1;

    auto dot = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat s(0);
        for (int i = 0; i < d; ++i) s += x[S(i)] * y[S(i)];
        return s;
    };

    std::vector<std::vector<Rat>> bstar = b;
    std::vector<std::vector<Rat>> mu(S(d), std::vector<Rat>(S(d), Rat(0)));
    std::vector<Rat> Bn(S(d), Rat(0));
    auto gso = [&]() {
        for (int i = 0; i < d; ++i) {
            bstar[S(i)] = b[S(i)];
            for (int j = 0; j < i; ++j) {
                mu[S(i)][S(j)] = Bn[S(j)] == 0 ? Rat(0) : dot(b[S(i)], bstar[S(j)]) / Bn[S(j)];
                if (mu[S(i)][S(j)] == 0) continue;
                for (int t = 0; t < d; ++t) bstar[S(i)][S(t)] -= mu[S(i)][S(j)] * bstar[S(j)][S(t)];
            }
            Bn[S(i)] = dot(bstar[S(i)], bstar[S(i)]);
        }
    };
    gso();

    int k = 1, guard = 0;
    const int guard_max = 20000;
    while (k < d && ++guard < guard_max) {
        for (int j = k - 1; j >= 0; --j) {
            Rat m = mu[S(k)][S(j)];
            if (m > Rat(1, 2) || m < Rat(-1, 2)) {
                Int r = rat_round(m);
                for (int t = 0; t < d; ++t) {
                    b[S(k)][S(t)] -= Rat(r) * b[S(j)][S(t)];
                    U[S(k)][S(t)] -= r * U[S(j)][S(t)];
                }
                gso();
            }
        }
        if (Bn[S(k)] >= (Rat(3, 4) - mu[S(k)][S(k - 1)] * mu[S(k)][S(k - 1)]) * Bn[S(k - 1)]) {
            ++k;
        } else {
            std::swap(b[S(k)], b[S(k - 1)]);
            std::swap(U[S(k)], U[S(k - 1)]);
            gso();
            k = std::max(k - 1, 1);
        }
    }
    std::vector<Int> out(S(d) * S(d));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) out[S(j) * S(d) + S(i)] = U[S(j)][S(i)];
    return out;
}

// double-precision pass for non-rational bases; the transform is exactly
// unimodular by construction, only its reduction quality is approximate
std::vector<Int> lll_double(const LatticeBasis& L) {
    int d = L.dim;
    auto S = [](int x) { return static_cast<size_t>(x); };
    std::vector<std::vector<double>> b(S(d), std::vector<double>(S(d)));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) b[S(j)][S(i)] = L.entry(i, j).mid();
    std::vector<std::vector<long>> U(S(d), std::vector<long>(S(d), 0));
    for (int j = 0; j < d; ++j) U[S(j)][S(j)] = 1;

    auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (int i = 0; i < d; ++i) s += x[S(i)] * y[S(i)];
        return s;
    };
    std::vector<std::vector<double>> bstar = b;
    std::vector<std::vector<double>> mu(S(d), std::vector<double>(S(d), 0));
    std::vector<double> Bn(S(d), 0);
    auto gso = [&]() {
        for (int i = 0; i < d; ++i) {
            bstar[S(i)] = b[S(i)];
            for (int j = 0; j < i; ++j) {
                mu[S(i)][S(j)] = Bn[S(j)] > 1e-300 ? dot(b[S(i)], bstar[S(j)]) / Bn[S(j)] : 0;
                for (int t = 0; t < d; ++t) bstar[S(i)][S(t)] -= mu[S(i)][S(j)] * bstar[S(j)][S(t)];
            }
            Bn[S(i)] = dot(bstar[S(i)], bstar[S(i)]);
        }
    };
    gso();
    int k = 1, guard = 0;
    while (k < d && ++guard < 4000) {
        for (int j = k - 1; j >= 0; --j) {
            double m = mu[S(k)][S(j)];
            if (std::abs(m) > 0.5) {
                long r = std::lround(m);
                for (int t = 0; t < d; ++t) b[S(k)][S(t)] -= static_cast<double>(r) * b[S(j)][S(t)];
                for (int t = 0; t < d; ++t) U[S(k)][S(t)] -= r * U[S(j)][S(t)];
                gso();
            }
        }
        if (Bn[S(k)] >= (0.75 - mu[S(k)][S(k - 1)] * mu[S(k)][S(k - 1)]) * Bn[S(k - 1)]) {
            ++k;
        } else {
            std::swap(b[S(k)], b[S(k - 1)]);
            std::swap(U[S(k)], U[S(k - 1)]);
            gso();
            k = std::max(k - 1, 1);
        }
    }
    std::vector<Int> out(S(d) * S(d));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) out[S(j) * S(d) + S(i)] = Int(U[S(j)][S(i)]);
    return out;
}

}  // namespace

std::vector<Int> lll_transform(const LatticeBasis& L) {
    return L.all_rational() ? lll_rational(L) : lll_double(L);
}

}  // namespace madlat
