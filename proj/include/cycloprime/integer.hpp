#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cycloprime {

// Arbitrary-precision signed integer. All arithmetic in this library is
// exact; nothing ever wraps or rounds.
using Integer = mpz_class;

// Semantic alias: values that are nonnegative by contract (moduli,
// residues, counts). Preconditions are checked at API boundaries.
using Natural = Integer;

inline Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

inline Integer pow2(unsigned long bits) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    return r;
}

inline Natural gcd(const Natural& a, const Natural& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Number of bits in |x|; 0 for x = 0.
inline std::size_t bit_length(const Integer& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline bool fits_ulong(const Integer& x) {
    return x >= 0 && mpz_fits_ulong_p(x.get_mpz_t());
}

inline unsigned long to_ulong(const Integer& x) {
    if (!fits_ulong(x))
        throw std::overflow_error("integer does not fit in unsigned long: " + x.get_str());
    return mpz_get_ui(x.get_mpz_t());
}

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

// Strict decimal parse: optional leading '-', digits only.
inline Integer parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed integer literal: " + s);
    return Integer(s, 10);
}

}  // namespace cycloprime
