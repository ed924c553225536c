#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace foamcat {

// Arbitrary-precision integer. Smith normal form blows up 64-bit
// intermediates even on small inputs, so everything integral runs on GMP.
using Zint = mpz_class;

inline Zint zgcd(const Zint& a, const Zint& b) {
    Zint r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Zint zabs(const Zint& a) { return a < 0 ? Zint(-a) : a; }

// Floor division helpers; mpz division truncates toward zero.
inline Zint zdiv_exact(const Zint& a, const Zint& b) {
    Zint q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_string(const Zint& a) { return a.get_str(); }

}  // namespace foamcat
