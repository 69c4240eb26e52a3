#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "madlat/minima.hpp"
#include "test_util.hpp"

using namespace madlat;
using testutil::random_basis;
using testutil::SplitMix64;

namespace {

// independent double-precision oracle: enumerate a coefficient box derived
// from a double inverse, directly on the input basis; no reduction, no
// certified arithmetic
std::vector<double> oracle_minima(const LatticeBasis& L, long range_cap = 60) {
    int d = L.dim;
    std::vector<std::vector<double>> B(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) B[i][j] = L.entry(i, j).mid();
    // inverse by Gauss-Jordan on doubles
    std::vector<std::vector<double>> A(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(2 * d), 0.0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) A[i][j] = B[i][j];
        A[i][static_cast<size_t>(d + i)] = 1.0;
    }
    for (int k = 0; k < d; ++k) {
        int piv = k;
        for (int i = k; i < d; ++i)
            if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
        std::swap(A[k], A[piv]);
        double pv = A[k][k];
        for (int j = 0; j < 2 * d; ++j) A[k][j] /= pv;
        for (int i = 0; i < d; ++i) {
            if (i == k) continue;
            double f = A[i][k];
            for (int j = 0; j < 2 * d; ++j) A[i][j] -= f * A[k][j];
        }
    }
    double max_col_norm = 0;
    for (int j = 0; j < d; ++j) {
        double n = 0;
        for (int i = 0; i < d; ++i) n = std::max(n, std::abs(B[i][j]));
        max_col_norm = std::max(max_col_norm, n);
    }
    long range = 1;
    for (int i = 0; i < d; ++i) {
        double rs = 0;
        for (int j = 0; j < d; ++j) rs += std::abs(A[i][static_cast<size_t>(d + j)]);
        range = std::max(range, static_cast<long>(std::ceil(rs * max_col_norm)) + 1);
    }
    range = std::min(range, range_cap);
    std::vector<std::pair<double, std::vector<double>>> cand;
    std::vector<long> c(static_cast<size_t>(d), -range);
    while (true) {
        bool zero = true;
        for (long x : c) zero = zero && x == 0;
        if (!zero) {
            std::vector<double> v(static_cast<size_t>(d), 0.0);
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < d; ++i) v[i] += B[i][j] * static_cast<double>(c[j]);
            double n = 0;
            std::vector<double> cf;
            for (long x : c) cf.push_back(static_cast<double>(x));
            for (double x : v) n = std::max(n, std::abs(x));
            cand.push_back({n, cf});
        }
        int i = d - 1;
        while (i >= 0 && c[i] == range) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < d; ++j) c[j] = -range;
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // greedy independent picks, rank via Gaussian elimination on coefficients
    std::vector<std::vector<double>> picked;
    std::vector<double> mins;
    auto rank_of = [&](std::vector<std::vector<double>> rows) {
        size_t r = 0;
        size_t n = rows.empty() ? 0 : rows[0].size();
        for (size_t col = 0; col < n && r < rows.size(); ++col) {
            size_t piv = r;
            double best = 1e-9;
            for (size_t i = r; i < rows.size(); ++i)
                if (std::abs(rows[i][col]) > best) {
                    best = std::abs(rows[i][col]);
                    piv = i;
                }
            if (std::abs(rows[piv][col]) < 1e-9) continue;
            std::swap(rows[r], rows[piv]);
            for (size_t i = r + 1; i < rows.size(); ++i) {
                double f = rows[i][col] / rows[r][col];
                for (size_t j = col; j < n; ++j) rows[i][j] -= f * rows[r][j];
            }
            ++r;
        }
        return r;
    };
    for (const auto& [n, cf] : cand) {
        if (static_cast<int>(mins.size()) == d) break;
        auto probe = picked;
        probe.push_back(cf);
        if (rank_of(probe) == probe.size()) {
            picked.push_back(cf);
            mins.push_back(n);
        }
    }
    return mins;
}

}  // namespace

TEST_CASE("first_minimum basics") {
    auto [d1, w1] = first_minimum(LatticeBasis::identity(3));
    CHECK(CertifiedReal::compare(d1, CertifiedReal(1L)) == 0);

    auto L = LatticeBasis::diagonal({CertifiedReal(2L), CertifiedReal(Rat(1, 2))});
    auto [d2, w2] = first_minimum(L);
    CHECK(CertifiedReal::compare(d2, CertifiedReal(Rat(1, 2))) == 0);
    CHECK(w2[0] == 0);
    CHECK((w2[1] == 1 || w2[1] == -1));

    // Lambda_Y for Y = (1/2): columns [[1,0],[1/2,1]]
    LatticeBasis LY(2, {CertifiedReal(1L), CertifiedReal(0L), CertifiedReal(Rat(1, 2)), CertifiedReal(1L)});
    auto [d3, w3] = first_minimum(LY);
    CHECK(CertifiedReal::compare(d3, CertifiedReal(1L)) == 0);
}

TEST_CASE("successive minima on diagonal lattices") {
    auto rep = successive_minima(LatticeBasis::identity(4));
    for (const auto& dl : rep.deltas) CHECK(CertifiedReal::compare(dl, CertifiedReal(1L)) == 0);

    auto L = LatticeBasis::diagonal({CertifiedReal(3L), CertifiedReal(Rat(1, 3))});
    auto rep2 = successive_minima(L);
    CHECK(CertifiedReal::compare(rep2.deltas[0], CertifiedReal(Rat(1, 3))) == 0);
    CHECK(CertifiedReal::compare(rep2.deltas[1], CertifiedReal(3L)) == 0);
}

TEST_CASE("successive minima against the brute-force oracle, d = 3") {
    SplitMix64 rng(411);
    for (int trial = 0; trial < 25; ++trial) {
        auto L = random_basis(rng, 3);
        auto rep = successive_minima(L);
        auto oracle = oracle_minima(L);
        REQUIRE(oracle.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(rep.deltas[i].mid() == doctest::Approx(oracle[i]).epsilon(1e-9));
        // agreement between the two entry points
        auto [d1, w1] = first_minimum(L);
        CHECK(CertifiedReal::compare(d1, rep.deltas[0]) == 0);
    }
}

TEST_CASE("wedge minima") {
    auto Z3 = LatticeBasis::identity(3);
    for (int i = 1; i <= 3; ++i)
        CHECK(CertifiedReal::compare(wedge_minimum(Z3, i), CertifiedReal(1L)) == 0);

    SplitMix64 rng(97);
    auto L = random_basis(rng, 3);
    CHECK(CertifiedReal::compare(wedge_minimum(L, 1), first_minimum(L).first) == 0);
    CHECK(CertifiedReal::compare(wedge_minimum(L, 3), abs(L.det())) == 0);
}

TEST_CASE("wedge vs minima window (random, d <= 4)") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        int d = static_cast<int>(rng.range(2, 4));
        auto L = random_basis(rng, d);
        auto rep = successive_minima(L);
        Rat dfac(1);
        for (int i = 2; i <= d; ++i) dfac *= i;
        for (int i = 1; i <= d; ++i) {
            CertifiedReal lam = wedge_minimum(L, i);
            CertifiedReal prod(1L);
            for (int j = 0; j < i; ++j) prod = prod * rep.deltas[j];
            // lambda_i <= i^{i/2} prod (Hadamard on the witness wedge)
            double bound = std::pow(static_cast<double>(i), i / 2.0);
            CHECK(lam.mid() <= bound * prod.mid() * (1 + 1e-9));
            // conservative reverse window (d!^2)
            CHECK(prod.mid() <= dfac.get_d() * dfac.get_d() * lam.mid() * (1 + 1e-9));
        }
    }
}

TEST_CASE("dual basis identities") {
    auto Z2 = LatticeBasis::identity(2);
    auto D = dual_basis(Z2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(CertifiedReal::compare(D.entry(i, j), Z2.entry(i, j)) == 0);

    auto L = LatticeBasis::diagonal({CertifiedReal(2L), CertifiedReal(Rat(1, 2))});
    auto DL = dual_basis(L);
    CHECK(CertifiedReal::compare(DL.entry(0, 0), CertifiedReal(Rat(1, 2))) == 0);
    CHECK(CertifiedReal::compare(DL.entry(1, 1), CertifiedReal(2L)) == 0);

    SplitMix64 rng(808);
    auto R = random_basis(rng, 3);
    auto DD = dual_basis(dual_basis(R));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(CertifiedReal::compare(DD.entry(i, j), R.entry(i, j)) == 0);
}

TEST_CASE("count_points on Z^2") {
    auto Z2 = LatticeBasis::identity(2);
    auto r1 = count_points(Z2, Box({CertifiedReal(Rat(3, 2)), CertifiedReal(Rat(3, 2))}));
    CHECK(r1.closed_count == 9);
    CHECK(r1.rank == 2);

    // closed box [-1/2,1/2]^2 holds only the origin (rank 0)
    auto r2 = count_points(Z2, Box({CertifiedReal(Rat(1, 2)), CertifiedReal(Rat(1, 2))}));
    CHECK(r2.closed_count == 1);
    CHECK(r2.rank == 0);

    // boundary semantics: box [-1,1]^2 closed 9, open 1
    auto r3 = count_points(Z2, Box({CertifiedReal(1L), CertifiedReal(1L)}));
    CHECK(r3.closed_count == 9);
    CHECK(r3.open_count == 1);
    CHECK(r3.boundary == 8);
}

TEST_CASE("count_points against brute force on random lattices") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        int d = static_cast<int>(rng.range(1, 3));
        auto L = random_basis(rng, d);
        std::vector<CertifiedReal> hw;
        for (int i = 0; i < d; ++i) hw.push_back(CertifiedReal(Rat(rng.range(1, 24), 8)));
        auto res = count_points(L, Box(hw));

        // independent double enumeration with a wide coefficient range
        long cnt = 0;
        std::vector<long> c(static_cast<size_t>(d), -30);
        while (true) {
            bool zero = true;
            for (long x : c) zero = zero && x == 0;
            (void)zero;
            double vmax_ok = true;
            std::vector<double> v(static_cast<size_t>(d), 0.0);
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < d; ++i) v[i] += L.entry(i, j).mid() * static_cast<double>(c[j]);
            for (int i = 0; i < d; ++i)
                if (std::abs(v[i]) > hw[i].mid() + 1e-9) vmax_ok = false;
            if (vmax_ok) ++cnt;
            int i = d - 1;
            while (i >= 0 && c[i] == 30) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < d; ++j) c[j] = -30;
        }
        CHECK(res.closed_count == cnt);
    }
}

TEST_CASE("check_blichfeldt") {
    auto Z2 = LatticeBasis::identity(2);
    auto rep = check_blichfeldt(Z2, Box({CertifiedReal(Rat(3, 2)), CertifiedReal(Rat(3, 2))}));
    CHECK(rep.counts.closed_count == 9);
    CHECK(rep.paper_bound_closed);  // 9 <= 9 + 2
    CHECK(rep.ok);

    // near-critical box: the bound without the d! factor genuinely fails even
    // for the open count, while the classical form holds
    auto rep2 = check_blichfeldt(Z2, Box({CertifiedReal(Rat(6, 5)), CertifiedReal(Rat(6, 5))}));
    CHECK(rep2.counts.open_count == 9);
    CHECK(!rep2.paper_bound_open);
    CHECK(rep2.classical_bound);

    CHECK_THROWS_AS((void)check_blichfeldt(Z2, Box({CertifiedReal(Rat(5)), CertifiedReal(Rat(1, 2))})),
                    RankDeficient);
}

TEST_CASE("blichfeldt randomized: classical bound always, guarded paper form") {
    SplitMix64 rng(31415);
    int checked = 0;
    while (checked < 30) {
        int d = static_cast<int>(rng.range(2, 3));
        auto L = random_basis(rng, d);
        std::vector<CertifiedReal> hw;
        for (int i = 0; i < d; ++i) hw.push_back(CertifiedReal(Rat(rng.range(4, 20), 8)));
        try {
            auto rep = check_blichfeldt(L, Box(hw));
            CHECK(rep.classical_bound);
            ++checked;
        } catch (const RankDeficient&) {
            continue;
        }
    }
}

TEST_CASE("counting_bound") {
    auto Z3 = LatticeBasis::identity(3);
    auto rep = counting_bound(Z3, Box({CertifiedReal(Rat(2, 5)), CertifiedReal(Rat(2, 5)), CertifiedReal(Rat(2, 5))}));
    CHECK(rep.r == 0);
    CHECK(rep.count == 1);
    CHECK(rep.ok);

    // long thin box along e1: rank-1 intersection
    auto Z2 = LatticeBasis::identity(2);
    auto rep2 = counting_bound(Z2, Box({CertifiedReal(Rat(21, 2)), CertifiedReal(Rat(2, 5))}));
    CHECK(rep2.r == 1);
    CHECK(rep2.count == 21);
    CHECK(rep2.ok);

    SplitMix64 rng(999);
    for (int trial = 0; trial < 15; ++trial) {
        int d = static_cast<int>(rng.range(2, 4));
        auto L = random_basis(rng, d);
        std::vector<CertifiedReal> hw;
        for (int i = 0; i < d; ++i) hw.push_back(CertifiedReal(Rat(rng.range(2, 20), 8)));
        auto rep3 = counting_bound(L, Box(hw));
        CHECK(rep3.ok);
    }
}

TEST_CASE("check_minkowski") {
    auto rep = check_minkowski(LatticeBasis::identity(3));
    CHECK(rep.ok);
    CHECK(CertifiedReal::compare(rep.minima_product, CertifiedReal(1L)) == 0);

    auto L = LatticeBasis::diagonal({CertifiedReal(Rat(5, 2)), CertifiedReal(Rat(7, 3)), CertifiedReal(Rat(1, 6))});
    auto rep2 = check_minkowski(L);
    CHECK(rep2.ok);
    CHECK(CertifiedReal::compare(rep2.minima_product, rep2.det_abs) == 0);  // diagonal case

    SplitMix64 rng(246);
    for (int trial = 0; trial < 12; ++trial) {
        auto R = random_basis(rng, 3);
        CHECK(check_minkowski(R).ok);
    }
}

TEST_CASE("check_mahler windows") {
    auto rep = check_mahler(LatticeBasis::identity(3));
    CHECK(rep.ok);
    for (const auto& p : rep.products) CHECK(CertifiedReal::compare(p, CertifiedReal(1L)) == 0);

    auto L = LatticeBasis::diagonal({CertifiedReal(2L), CertifiedReal(Rat(1, 2))});
    auto rep2 = check_mahler(L);
    CHECK(rep2.ok);
    for (const auto& p : rep2.products) CHECK(CertifiedReal::compare(p, CertifiedReal(1L)) == 0);

    // the 45-degree lattice: sup-norm products drop to 1/2, which sits inside
    // the provable window [1/d, d!] but outside the self-dual window [1, d!]
    LatticeBasis rot(2, {CertifiedReal(1L), CertifiedReal(1L), CertifiedReal(-1L), CertifiedReal(1L)});
    auto rep3 = check_mahler(rot);
    CHECK(rep3.ok);
    CHECK(rep3.provable_window_ok);
    CHECK(!rep3.self_dual_window_ok);
    CHECK(rep3.products[0].mid() == doctest::Approx(0.5));

    SplitMix64 rng(1357);
    for (int trial = 0; trial < 12; ++trial) {
        int d = static_cast<int>(rng.range(2, 4));
        CHECK(check_mahler(random_basis(rng, d)).ok);
    }
}

TEST_CASE("parallel geometry kernels match serial") {
    SplitMix64 rng(606);
    auto L = random_basis(rng, 3);
    auto a = first_minimum(L);
    auto b = first_minimum_serial(L);
    CHECK(CertifiedReal::compare(a.first, b.first) == 0);
    CHECK(a.second == b.second);

    std::vector<CertifiedReal> hw{CertifiedReal(2L), CertifiedReal(Rat(3, 2)), CertifiedReal(1L)};
    auto c1 = count_points(L, Box(hw));
    auto c2 = count_points_serial(L, Box(hw));
    CHECK(c1.closed_count == c2.closed_count);
    CHECK(c1.open_count == c2.open_count);
    CHECK(c1.rank == c2.rank);
}
