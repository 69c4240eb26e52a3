#pragma once

#include <gmpxx.h>

#include <string>

#include "madlat/errors.hpp"

namespace madlat {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(Int base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat out;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    out.canonicalize();
    if (e < 0) {
        if (out == 0) throw std::domain_error("rat_pow: zero to negative power");
        out = 1 / out;
    }
    return out;
}

// floor(num/den) for exact rationals
inline Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// nearest integer, ties toward -inf (callers that care about ties handle them
// explicitly; distances are symmetric across the tie)
inline Int rat_round(const Rat& x) { return rat_floor(x + Rat(1, 2)); }

// exact rational from a decimal string like "-12.345" or "0.5e-3"-free plain form
inline Rat rat_from_decimal(const std::string& s) {
    std::string t;
    long frac_digits = -1;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    bool any = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac_digits >= 0) throw ParseError("decimal: repeated '.' in " + s);
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            t.push_back(c);
            any = true;
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw ParseError("decimal: bad character in " + s);
        }
    }
    if (!any) throw ParseError("decimal: no digits in " + s);
    Int num;
    if (mpz_set_str(num.get_mpz_t(), t.empty() ? "0" : t.c_str(), 10) != 0)
        throw ParseError("decimal: bad digits in " + s);
    Rat out(num, frac_digits > 0 ? int_pow(Int(10), static_cast<unsigned long>(frac_digits)) : Int(1));
    out.canonicalize();
    return neg ? Rat(-out) : out;
}

inline std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (s.find('.') != std::string::npos) return rat_from_decimal(s);
        try {
            Rat out(s);
            out.canonicalize();
            return out;
        } catch (const std::invalid_argument&) {
            throw ParseError("rational: " + s);
        }
    }
    try {
        Rat out(s);
        if (out.get_den() == 0) throw ParseError("rational: zero denominator in " + s);
        out.canonicalize();
        return out;
    } catch (const std::invalid_argument&) {
        throw ParseError("rational: " + s);
    }
}

// floor(sqrt(n)) for n >= 0
inline Int int_isqrt(const Int& n) {
    Int out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

}  // namespace madlat
