#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "madlat/errors.hpp"
#include "madlat/interval.hpp"
#include "madlat/quadratic.hpp"
#include "madlat/rational.hpp"

namespace madlat {

// Comparison precision policy: start small, double on indeterminacy, give up
// at the cap (configurable through MADLAT_PREC_CAP).
mpfr_prec_t precision_start();
mpfr_prec_t precision_cap();
void set_precision_cap(mpfr_prec_t cap);

// A real number that is either exact (rational or quadratic irrational) or a
// lazily evaluated expression over exact leaves, re-evaluable at any working
// precision.  Comparisons are certified: they return only once the order is
// proven, refining precision as needed, and throw PrecisionExhausted past the
// cap.  Arithmetic stays exact whenever the operands live in a common field.
class CertifiedReal {
  public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    CertifiedReal() : v_(Rat(0)) {}
    CertifiedReal(long x) : v_(Rat(x)) {}
    CertifiedReal(const Int& x) : v_(Rat(x)) {}
    CertifiedReal(Rat x) { set_rat(std::move(x)); }
    CertifiedReal(Quad q) { set_quad(std::move(q)); }
    explicit CertifiedReal(NodePtr n) : v_(std::move(n)) {}

    // leaf with a caller-supplied refiner (must return enclosures that shrink
    // as precision grows)
    static CertifiedReal from_fn(std::function<Interval(mpfr_prec_t)> fn);

    bool is_exact() const { return !std::holds_alternative<NodePtr>(v_); }
    const Rat* rat() const { return std::get_if<Rat>(&v_); }
    const Quad* quad() const { return std::get_if<Quad>(&v_); }

    Interval approx(mpfr_prec_t prec) const;
    double mid() const { return approx(64).mid(); }

    friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a);

    CertifiedReal& operator+=(const CertifiedReal& o) { return *this = *this + o; }
    CertifiedReal& operator-=(const CertifiedReal& o) { return *this = *this - o; }
    CertifiedReal& operator*=(const CertifiedReal& o) { return *this = *this * o; }
    CertifiedReal& operator/=(const CertifiedReal& o) { return *this = *this / o; }

    friend CertifiedReal abs(const CertifiedReal& a);
    friend CertifiedReal exp(const CertifiedReal& a);
    friend CertifiedReal log(const CertifiedReal& a);
    friend CertifiedReal sqrt(const CertifiedReal& a);
    friend CertifiedReal pow_int(const CertifiedReal& a, long e);
    friend CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);

    // certified three-way comparison; equality is reported only when provable
    static int compare(const CertifiedReal& a, const CertifiedReal& b);

    int sign() const;
    bool is_zero() const;  // provably zero (exact path only)

    friend bool operator<(const CertifiedReal& a, const CertifiedReal& b) { return compare(a, b) < 0; }
    friend bool operator>(const CertifiedReal& a, const CertifiedReal& b) { return compare(a, b) > 0; }
    friend bool operator<=(const CertifiedReal& a, const CertifiedReal& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const CertifiedReal& a, const CertifiedReal& b) { return compare(a, b) >= 0; }

    // distance to the nearest integer, in [0, 1/2]; exact for exact inputs
    friend CertifiedReal dist_to_Z(const CertifiedReal& x);

    // certified floor; throws PrecisionExhausted when the input sits on an
    // integer that the lazy path cannot resolve
    friend Int floor_certified(const CertifiedReal& x);
    friend Int nearest_certified(const CertifiedReal& x);

    std::string str() const;  // exact form when available, else enclosure
    std::string decimal(int digits = 17) const;

  private:
    void set_rat(Rat r) {
        r.canonicalize();
        v_ = std::move(r);
    }
    void set_quad(Quad q) {
        if (auto r = q.as_rational())
            set_rat(*r);
        else
            v_ = std::move(q);
    }

    std::variant<Rat, Quad, NodePtr> v_;
};

}  // namespace madlat
