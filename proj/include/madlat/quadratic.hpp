#pragma once

#include <optional>

#include "madlat/rational.hpp"

namespace madlat {

// Exact quadratic irrational (a + b*sqrt(D)) / c with integer a, b, c and D > 1.
//
// Canonical form: c > 0, gcd(a, b, c) = 1, D squarefree.  Square factors of D
// are folded into b by trial division (primes up to 10^4) plus a perfect-square
// test on the remaining cofactor; inputs whose D hides a square of two primes
// above 10^4 are kept as given, which only weakens cross-D equality detection,
// never the correctness of ordering.
struct Quad {
    Int a, b, c, D;

    Quad(Int a_, Int b_, Int c_, Int D_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), D(std::move(D_)) {
        if (c == 0) throw std::domain_error("Quad: zero denominator");
        if (D <= 0) throw std::domain_error("Quad: D must be positive");
        normalize();
    }

    // sign of a + b*sqrt(D); exact, valid for any D > 0
    static int sign_triple(const Int& a, const Int& b, const Int& D) {
        int sa = mpz_sgn(a.get_mpz_t());
        int sb = mpz_sgn(b.get_mpz_t());
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Int lhs = a * a, rhs = b * b * D;
        int c2 = cmp(lhs, rhs);
        if (c2 == 0) return 0;
        return c2 > 0 ? sa : sb;
    }

    // nullopt when the value is irrational; otherwise the exact rational value
    std::optional<Rat> as_rational() const {
        if (b != 0) return std::nullopt;
        Rat r(a, c);
        r.canonicalize();
        return r;
    }

    bool is_irrational() const { return b != 0; }

    int sign() const { return sign_triple(a, b, D); }

    Quad negated() const { return Quad(-a, -b, c, D); }

    friend Quad operator+(const Quad& x, const Rat& r) {
        return Quad(x.a * r.get_den() + r.get_num() * x.c, x.b * r.get_den(), x.c * r.get_den(), x.D);
    }
    friend Quad operator*(const Quad& x, const Rat& r) {
        if (r == 0) return Quad(0, 0, 1, x.D);
        return Quad(x.a * r.get_num(), x.b * r.get_num(), x.c * r.get_den(), x.D);
    }

    // same-D arithmetic; callers ensure D matches (after normalization)
    friend Quad add_same(const Quad& x, const Quad& y) {
        return Quad(x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c, x.D);
    }
    friend Quad mul_same(const Quad& x, const Quad& y) {
        return Quad(x.a * y.a + x.b * y.b * x.D, x.a * y.b + x.b * y.a, x.c * y.c, x.D);
    }
    Quad inverse() const {
        // c / (a + b sqrt D) = c (a - b sqrt D) / (a^2 - b^2 D)
        Int den = a * a - b * b * D;
        if (den == 0 && b == 0 && a == 0) throw std::domain_error("Quad: inverse of zero");
        return Quad(a * c, -b * c, den, D);
    }

    // exact three-way compares: sign of (x - other)
    int cmp_with_int(const Int& n) const { return sign_triple(a - n * c, b, D); }
    int cmp_with_rat(const Rat& r) const {
        return sign_triple(a * r.get_den() - r.get_num() * c, b * r.get_den(), D);
    }
    int cmp_same(const Quad& y) const {
        return sign_triple(a * y.c - y.a * c, b * y.c - y.b * c, D);
    }

    // exact floor of the value
    Int floor_exact() const {
        Int s;
        if (b >= 0) {
            s = int_isqrt(b * b * D);  // floor(b sqrt D)
        } else {
            Int t = int_isqrt(b * b * D);
            Int sq = b * b * D;
            s = (t * t == sq) ? Int(-t) : Int(-t - 1);  // floor of a negative irrational multiple
        }
        Int k;
        mpz_fdiv_q(k.get_mpz_t(), Int(a + s).get_mpz_t(), c.get_mpz_t());
        while (cmp_with_int(k + 1) >= 0) k += 1;
        while (cmp_with_int(k) < 0) k -= 1;
        return k;
    }

    bool identical(const Quad& y) const { return a == y.a && b == y.b && c == y.c && D == y.D; }

    std::string to_string() const {
        return "(" + a.get_str() + (b >= 0 ? "+" : "") + b.get_str() + "*sqrt(" + D.get_str() + "))/" +
               c.get_str();
    }

  private:
    void normalize() {
        if (c < 0) {
            a = -a;
            b = -b;
            c = -c;
        }
        if (b != 0) {
            Int root = int_isqrt(D);
            if (root * root == D) {
                a += b * root;
                b = 0;
            } else {
                for (unsigned long p = 2; p <= 10000; p = (p == 2 ? 3 : p + 2)) {
                    Int pp = Int(static_cast<long>(p)) * static_cast<long>(p);
                    if (pp > D) break;
                    while (mpz_divisible_p(D.get_mpz_t(), pp.get_mpz_t())) {
                        D /= pp;
                        b *= static_cast<long>(p);
                    }
                }
                Int r2 = int_isqrt(D);
                if (r2 * r2 == D) {
                    a += b * r2;
                    b = 0;
                }
            }
        }
        if (b == 0) D = 1;
        Int g = gcd(gcd(a, b), c);
        if (g > 1) {
            a /= g;
            b /= g;
            c /= g;
        }
    }
};

}  // namespace madlat
