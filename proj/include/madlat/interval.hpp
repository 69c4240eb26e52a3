#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "madlat/quadratic.hpp"
#include "madlat/rational.hpp"

namespace madlat {

// Closed interval [lo, hi] over MPFR floats with outward (directed) rounding.
// All operations produce enclosures of the exact result.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128) : prec_(prec) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Interval& operator=(Interval o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    static Interval point(long v, mpfr_prec_t prec) {
        Interval out(prec);
        mpfr_set_si(out.lo_, v, MPFR_RNDD);
        mpfr_set_si(out.hi_, v, MPFR_RNDU);
        return out;
    }
    static Interval from_rat(const Rat& r, mpfr_prec_t prec) {
        Interval out(prec);
        mpfr_set_q(out.lo_, r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi_, r.get_mpq_t(), MPFR_RNDU);
        return out;
    }
    static Interval from_quad(const Quad& q, mpfr_prec_t prec) {
        // (a + b sqrt D) / c, c > 0
        Interval s(prec);
        mpfr_set_z(s.lo_, q.D.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(s.hi_, q.D.get_mpz_t(), MPFR_RNDU);
        mpfr_sqrt(s.lo_, s.lo_, MPFR_RNDD);
        mpfr_sqrt(s.hi_, s.hi_, MPFR_RNDU);
        Interval out = s * from_rat(Rat(q.b), prec) + from_rat(Rat(q.a), prec);
        return out * from_rat(Rat(1, q.c), prec);
    }
    static Interval from_double(double v, mpfr_prec_t prec) {
        Interval out(prec);
        mpfr_set_d(out.lo_, v, MPFR_RNDD);
        mpfr_set_d(out.hi_, v, MPFR_RNDU);
        return out;
    }
    static Interval hull(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return out;
    }

    mpfr_prec_t prec() const { return prec_; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return out;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return out;
    }
    friend Interval operator-(const Interval& a) {
        Interval out(a.prec_);
        mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
        mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
        return out;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, out.prec_);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            mpfr_srcptr x = (i & 1) ? a.hi_ : a.lo_;
            mpfr_srcptr y = (i & 2) ? b.hi_ : b.lo_;
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return out;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw std::domain_error("Interval: division by interval containing zero");
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, out.prec_);
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            mpfr_srcptr x = (i & 1) ? a.hi_ : a.lo_;
            mpfr_srcptr y = (i & 2) ? b.hi_ : b.lo_;
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
        mpfr_clear(t);
        return out;
    }

    Interval abs() const {
        Interval out(prec_);
        if (sign_lower() >= 0) return *this;
        if (sign_upper() <= 0) return -*this;
        mpfr_set_zero(out.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_neg(t, lo_, MPFR_RNDU);
        mpfr_max(out.hi_, t, hi_, MPFR_RNDU);
        mpfr_clear(t);
        return out;
    }
    Interval exp() const {
        Interval out(prec_);
        mpfr_exp(out.lo_, lo_, MPFR_RNDD);
        mpfr_exp(out.hi_, hi_, MPFR_RNDU);
        return out;
    }
    Interval log() const {
        if (sign_lower() <= 0) throw std::domain_error("Interval: log of non-positive interval");
        Interval out(prec_);
        mpfr_log(out.lo_, lo_, MPFR_RNDD);
        mpfr_log(out.hi_, hi_, MPFR_RNDU);
        return out;
    }
    Interval sqrt() const {
        if (sign_lower() < 0) throw std::domain_error("Interval: sqrt of negative interval");
        Interval out(prec_);
        mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
        return out;
    }
    Interval pow_int(long e) const {
        Interval out = point(1, prec_);
        Interval base = *this;
        long n = e < 0 ? -e : e;
        while (n > 0) {
            if (n & 1) out = out * base;
            base = base * base;
            n >>= 1;
        }
        if (e < 0) out = point(1, prec_) / out;
        return out;
    }
    friend Interval max(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return out;
    }
    friend Interval min(const Interval& a, const Interval& b) {
        Interval out(std::max(a.prec_, b.prec_));
        mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return out;
    }

    bool contains_zero() const { return sign_lower() <= 0 && sign_upper() >= 0; }
    int sign_lower() const { return mpfr_sgn(lo_); }
    int sign_upper() const { return mpfr_sgn(hi_); }

    // certain sign of the enclosed value: -1, +1, or 0 when undecided
    int certain_sign() const {
        if (sign_lower() > 0) return 1;
        if (sign_upper() < 0) return -1;
        return 0;
    }

    // true when every point of *this is strictly below every point of o
    bool certainly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

    bool is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

    double mid() const {
        double a = mpfr_get_d(lo_, MPFR_RNDN), b = mpfr_get_d(hi_, MPFR_RNDN);
        return 0.5 * (a + b);
    }
    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double width() const {
        mpfr_t t;
        mpfr_init2(t, 64);
        mpfr_sub(t, hi_, lo_, MPFR_RNDU);
        double w = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return w;
    }

    // outward rational bounds (exact conversions of the mpfr endpoints)
    Rat lo_rat() const { return rat_of(lo_, false); }
    Rat hi_rat() const { return rat_of(hi_, true); }

    std::string str() const {
        char* a = nullptr;
        char* b = nullptr;
        mpfr_asprintf(&a, "%.20Rg", lo_);
        mpfr_asprintf(&b, "%.20Rg", hi_);
        std::string out = std::string("[") + a + ", " + b + "]";
        mpfr_free_str(a);
        mpfr_free_str(b);
        return out;
    }

    std::string mid_decimal(int digits) const {
        mpfr_t m;
        mpfr_init2(m, prec_);
        mpfr_add(m, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(m, m, 1, MPFR_RNDN);
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, m);
        std::string out = s;
        mpfr_free_str(s);
        mpfr_clear(m);
        return out;
    }

  private:
    static Rat rat_of(mpfr_srcptr x, bool up) {
        if (!mpfr_number_p(x)) throw std::domain_error("Interval: non-finite endpoint");
        mpq_t q;
        mpq_init(q);
        mpfr_get_q(q, x);
        Rat out{mpq_class(q)};
        mpq_clear(q);
        (void)up;  // mpfr_get_q is exact, no extra rounding needed
        return out;
    }

    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

}  // namespace madlat
