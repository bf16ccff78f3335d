#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flagk {

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// mpq_class has no long long constructor; go through long (LP64).
inline Rat to_rat(long long v) {
    return Rat(static_cast<long>(v));
}

// Canonical "p" / "p/q" rendering (q > 0, gcd(p,q) = 1).
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    long k = e;
    if (k < 0) {
        if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
        b = 1 / b;
        k = -k;
    }
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(k));
    out.canonicalize();
    return out;
}

}  // namespace flagk
