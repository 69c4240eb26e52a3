#include "madlat/certified.hpp"

#include <atomic>
#include <cstdlib>

namespace madlat {

namespace {

std::atomic<mpfr_prec_t> g_prec_cap{0};

mpfr_prec_t env_prec_cap() {
    if (const char* s = std::getenv("MADLAT_PREC_CAP")) {
        long v = std::atol(s);
        if (v >= 256) return static_cast<mpfr_prec_t>(v);
    }
    return 16384;
}

}  // namespace

mpfr_prec_t precision_start() { return 128; }

mpfr_prec_t precision_cap() {
    mpfr_prec_t c = g_prec_cap.load(std::memory_order_relaxed);
    if (c == 0) {
        c = env_prec_cap();
        g_prec_cap.store(c, std::memory_order_relaxed);
    }
    return c;
}

void set_precision_cap(mpfr_prec_t cap) { g_prec_cap.store(cap, std::memory_order_relaxed); }

struct CertifiedReal::Node {
    enum class Op { Add, Sub, Mul, Div, Neg, Abs, Exp, Log, Sqrt, PowInt, Max, Min, LeafFn };
    Op op;
    long k = 0;
    CertifiedReal a, b;
    std::function<Interval(mpfr_prec_t)> fn;

    Interval eval(mpfr_prec_t prec) const {
        switch (op) {
            case Op::Add: return a.approx(prec) + b.approx(prec);
            case Op::Sub: return a.approx(prec) - b.approx(prec);
            case Op::Mul: return a.approx(prec) * b.approx(prec);
            case Op::Div: {
                Interval d = b.approx(prec);
                mpfr_prec_t p = prec;
                while (d.contains_zero()) {
                    if (p >= precision_cap()) throw PrecisionExhausted("division denominator near zero");
                    p *= 2;
                    d = b.approx(p);
                }
                return a.approx(prec) / d;
            }
            case Op::Neg: return -a.approx(prec);
            case Op::Abs: return a.approx(prec).abs();
            case Op::Exp: return a.approx(prec).exp();
            case Op::Log: {
                Interval x = a.approx(prec);
                mpfr_prec_t p = prec;
                while (x.sign_lower() <= 0) {
                    if (p >= precision_cap()) throw PrecisionExhausted("log argument near zero");
                    p *= 2;
                    x = a.approx(p);
                }
                return x.log();
            }
            case Op::Sqrt: return a.approx(prec).sqrt();
            case Op::PowInt: return a.approx(prec).pow_int(k);
            case Op::Max: return max(a.approx(prec), b.approx(prec));
            case Op::Min: return min(a.approx(prec), b.approx(prec));
            case Op::LeafFn: return fn(prec);
        }
        throw std::logic_error("unreachable");
    }
};

namespace {

using Node = CertifiedReal::Node;
using Op = Node::Op;

CertifiedReal make_node(Op op, CertifiedReal a, CertifiedReal b = CertifiedReal(), long k = 0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    n->k = k;
    return CertifiedReal(CertifiedReal::NodePtr(std::move(n)));
}

}  // namespace

CertifiedReal CertifiedReal::from_fn(std::function<Interval(mpfr_prec_t)> fn) {
    auto n = std::make_shared<Node>();
    n->op = Node::Op::LeafFn;
    n->fn = std::move(fn);
    return CertifiedReal(NodePtr(std::move(n)));
}

Interval CertifiedReal::approx(mpfr_prec_t prec) const {
    if (const Rat* r = rat()) return Interval::from_rat(*r, prec);
    if (const Quad* q = quad()) return Interval::from_quad(*q, prec);
    return std::get<NodePtr>(v_)->eval(prec);
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    if (const Rat* ra = a.rat()) {
        if (const Rat* rb = b.rat()) return CertifiedReal(Rat(*ra + *rb));
        if (const Quad* qb = b.quad()) return CertifiedReal(*qb + *ra);
    } else if (const Quad* qa = a.quad()) {
        if (const Rat* rb = b.rat()) return CertifiedReal(*qa + *rb);
        if (const Quad* qb = b.quad())
            if (qa->D == qb->D) return CertifiedReal(add_same(*qa, *qb));
    }
    return make_node(Op::Add, a, b);
}

CertifiedReal operator-(const CertifiedReal& a) {
    if (const Rat* r = a.rat()) return CertifiedReal(Rat(-*r));
    if (const Quad* q = a.quad()) return CertifiedReal(q->negated());
    return make_node(Op::Neg, a);
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    if (b.is_exact() || a.is_exact()) return a + (-b);
    return make_node(Op::Sub, a, b);
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    if (const Rat* ra = a.rat()) {
        if (*ra == 0) return CertifiedReal(0L);
        if (const Rat* rb = b.rat()) return CertifiedReal(Rat(*ra * *rb));
        if (const Quad* qb = b.quad()) return CertifiedReal(*qb * *ra);
    } else if (const Quad* qa = a.quad()) {
        if (const Rat* rb = b.rat()) return CertifiedReal(*qa * *rb);
        if (const Quad* qb = b.quad())
            if (qa->D == qb->D) return CertifiedReal(mul_same(*qa, *qb));
    }
    if (const Rat* rb = b.rat())
        if (*rb == 0) return CertifiedReal(0L);
    return make_node(Op::Mul, a, b);
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
    if (const Rat* rb = b.rat()) {
        if (*rb == 0) throw std::domain_error("CertifiedReal: division by zero");
        return a * CertifiedReal(Rat(1 / *rb));
    }
    if (const Quad* qb = b.quad()) return a * CertifiedReal(qb->inverse());
    return make_node(Op::Div, a, b);
}

CertifiedReal abs(const CertifiedReal& a) {
    if (a.is_exact()) return a.sign() < 0 ? -a : a;
    return make_node(Op::Abs, a);
}

CertifiedReal exp(const CertifiedReal& a) {
    if (const Rat* r = a.rat())
        if (*r == 0) return CertifiedReal(1L);
    return make_node(Op::Exp, a);
}

CertifiedReal log(const CertifiedReal& a) {
    if (const Rat* r = a.rat()) {
        if (*r <= 0) throw std::domain_error("CertifiedReal: log of non-positive exact value");
        if (*r == 1) return CertifiedReal(0L);
    }
    if (const Quad* q = a.quad())
        if (q->sign() <= 0) throw std::domain_error("CertifiedReal: log of non-positive exact value");
    return make_node(Op::Log, a);
}

CertifiedReal sqrt(const CertifiedReal& a) {
    if (const Rat* r = a.rat()) {
        if (*r < 0) throw std::domain_error("CertifiedReal: sqrt of negative exact value");
        if (*r == 0) return CertifiedReal(0L);
        // sqrt(p/q) = sqrt(p q) / q, exact in the quadratic tower
        return CertifiedReal(Quad(0, 1, r->get_den(), r->get_num() * r->get_den()));
    }
    return make_node(Op::Sqrt, a);
}

CertifiedReal pow_int(const CertifiedReal& a, long e) {
    if (e == 0) return CertifiedReal(1L);
    if (const Rat* r = a.rat()) return CertifiedReal(rat_pow(*r, e));
    if (const Quad* q = a.quad()) {
        Quad acc(1, 0, 1, q->D);
        Quad base = *q;
        long n = e < 0 ? -e : e;
        while (n > 0) {
            if (n & 1) acc = mul_same(acc, base);
            base = mul_same(base, base);
            n >>= 1;
        }
        CertifiedReal out{acc};
        if (e < 0) out = CertifiedReal(1L) / out;
        return out;
    }
    return make_node(Op::PowInt, a, CertifiedReal(), e);
}

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
    if (a.is_exact() && b.is_exact()) return CertifiedReal::compare(a, b) >= 0 ? a : b;
    return make_node(Op::Max, a, b);
}

CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b) {
    if (a.is_exact() && b.is_exact()) return CertifiedReal::compare(a, b) <= 0 ? a : b;
    return make_node(Op::Min, a, b);
}

int CertifiedReal::compare(const CertifiedReal& a, const CertifiedReal& b) {
    if (const Rat* ra = a.rat()) {
        if (const Rat* rb = b.rat()) return cmp(*ra, *rb);
        if (const Quad* qb = b.quad()) return -qb->cmp_with_rat(*ra);
    } else if (const Quad* qa = a.quad()) {
        if (const Rat* rb = b.rat()) return qa->cmp_with_rat(*rb);
        if (const Quad* qb = b.quad())
            if (qa->D == qb->D) return qa->cmp_same(*qb);
    }
    for (mpfr_prec_t p = precision_start(); p <= precision_cap(); p *= 2) {
        Interval ia = a.approx(p), ib = b.approx(p);
        if (ia.certainly_less(ib)) return -1;
        if (ib.certainly_less(ia)) return 1;
    }
    throw PrecisionExhausted("compare undecided at cap " + std::to_string(precision_cap()));
}

int CertifiedReal::sign() const {
    if (const Rat* r = rat()) return sgn(*r);
    if (const Quad* q = quad()) return q->sign();
    return compare(*this, CertifiedReal(0L));
}

bool CertifiedReal::is_zero() const {
    if (const Rat* r = rat()) return *r == 0;
    if (const Quad* q = quad()) return q->sign() == 0;
    return false;
}

CertifiedReal dist_to_Z(const CertifiedReal& x) {
    if (const Rat* r = x.rat()) {
        Rat d = *r - Rat(rat_round(*r));
        if (d < 0) d = -d;
        return CertifiedReal(d);
    }
    if (const Quad* q = x.quad()) {
        // nearest integer via the exact floor of x + 1/2 (never a tie: irrational)
        Quad shifted = *q + Rat(1, 2);
        Int k = shifted.floor_exact();
        CertifiedReal d = x - CertifiedReal(k);
        return d.sign() < 0 ? -d : d;
    }
    for (mpfr_prec_t p = precision_start(); p <= precision_cap(); p *= 2) {
        Interval ix = x.approx(p);
        if (ix.width() >= 0.125) continue;
        Rat lo = ix.lo_rat(), hi = ix.hi_rat();
        Int k = rat_round(Rat((lo + hi) / 2));
        if (lo >= Rat(k) - Rat(1, 2) && hi <= Rat(k) + Rat(1, 2)) {
            return abs(x - CertifiedReal(k));  // valid identity on [k-1/2, k+1/2]
        }
        // the enclosure straddles a half-integer h; on [h-1/2, h+1/2] the
        // distance equals 1/2 - |x - h|
        Rat h = (lo < Rat(k) - Rat(1, 2)) ? Rat(Rat(k) - Rat(1, 2)) : Rat(Rat(k) + Rat(1, 2));
        return CertifiedReal(Rat(1, 2)) - abs(x - CertifiedReal(h));
    }
    throw PrecisionExhausted("dist_to_Z: could not localize the fractional part");
}

Int floor_certified(const CertifiedReal& x) {
    if (const Rat* r = x.rat()) return rat_floor(*r);
    if (const Quad* q = x.quad()) return q->floor_exact();
    for (mpfr_prec_t p = precision_start(); p <= precision_cap(); p *= 2) {
        Interval ix = x.approx(p);
        Int fl = rat_floor(ix.lo_rat()), fh = rat_floor(ix.hi_rat());
        if (fl == fh) return fl;
    }
    throw PrecisionExhausted("floor undecided (value may be an integer)");
}

Int nearest_certified(const CertifiedReal& x) { return floor_certified(x + CertifiedReal(Rat(1, 2))); }

std::string CertifiedReal::str() const {
    if (const Rat* r = rat()) return rat_to_string(*r);
    if (const Quad* q = quad()) return q->to_string();
    return approx(precision_start()).str();
}

std::string CertifiedReal::decimal(int digits) const {
    mpfr_prec_t p = std::max<mpfr_prec_t>(precision_start(), static_cast<mpfr_prec_t>(digits * 4));
    return approx(p).mid_decimal(digits);
}

}  // namespace madlat
