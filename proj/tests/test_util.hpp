#pragma once

#include <cstdint>

#include "madlat/certified.hpp"

namespace madlat::testutil {

// deterministic 64-bit generator for the randomized suites
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline Rat random_rat(SplitMix64& rng, long num_mag, long den_max) {
    long num = rng.range(-num_mag, num_mag);
    long den = rng.range(1, den_max);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline CertifiedReal golden_ratio() { return CertifiedReal(Quad(1, 1, 2, 5)); }
inline CertifiedReal sqrt2() { return CertifiedReal(Quad(0, 1, 1, 2)); }

}  // namespace madlat::testutil

#include "madlat/lattice.hpp"

namespace madlat::testutil {

// random rational basis, nonsingular and condition-bounded so the certified
// enumerations stay desk-scale
inline LatticeBasis random_basis(SplitMix64& rng, int d) {
    while (true) {
        std::vector<CertifiedReal> e;
        e.reserve(static_cast<size_t>(d) * d);
        for (int i = 0; i < d * d; ++i) e.push_back(CertifiedReal(random_rat(rng, 24, 8)));
        LatticeBasis L(d, std::move(e));
        CertifiedReal det = L.det();
        if (det.is_zero()) continue;
        Rat da = *det.rat();
        if (da < 0) da = -da;
        if (da < Rat(1, 4)) continue;
        bool ok = true;
        try {
            auto inv = inverse_matrix(L);
            for (const auto& x : inv) {
                Rat m = *x.rat();
                if (m < 0) m = -m;
                if (m > 40) {
                    ok = false;
                    break;
                }
            }
        } catch (const std::exception&) {
            ok = false;
        }
        if (ok) return L;
    }
}

}  // namespace madlat::testutil
