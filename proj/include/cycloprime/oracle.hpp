#pragma once

// Independent ground truth. Nothing here shares code with the optimized
// paths it is used to validate: modular products are evaluated with plain
// division, powers are recomputed from scratch, and the primality test is
// a self-contained trial-division / strong-pseudoprime routine.

#include <stdexcept>

#include "cycloprime/integer.hpp"

namespace cycloprime {

class OracleRangeError : public std::runtime_error {
public:
    explicit OracleRangeError(const Natural& n)
        : std::runtime_error("out of oracle range: " + to_decimal(n)) {}
};

namespace detail {

// Square-and-multiply, deliberately separate from core_arith::mod_pow.
inline Natural oracle_powmod(Natural base, Natural e, const Natural& mod) {
    Natural r = 1 % mod;
    base %= mod;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return r;
}

inline bool strong_probable_prime(const Natural& n, const Natural& a) {
    if (a % n == 0) return true;
    Natural d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Natural x = oracle_powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

// Exact primality verdict. Trial division for small n; for larger n a
// strong-pseudoprime test over the witness set {2,...,41}, deterministic
// for n < 3317044064679887385961981. Beyond that bound the oracle refuses
// rather than guess.
inline bool is_prime_oracle(const Natural& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;

    const unsigned long trial_cutoff = 10000;
    if (n <= trial_cutoff) {
        unsigned long v = to_ulong(n);
        for (unsigned long p = 3; p * p <= v; p += 2)
            if (v % p == 0) return false;
        return true;
    }

    static const Natural deterministic_bound("3317044064679887385961981");
    if (n >= deterministic_bound) throw OracleRangeError(n);

    static const unsigned long witnesses[] = {2,  3,  5,  7,  11, 13, 17,
                                              19, 23, 29, 31, 37, 41};
    for (unsigned long a : witnesses)
        if (!detail::strong_probable_prime(n, Natural(a))) return false;
    return true;
}

// The product of Eq-style factors (M^j + 1), j = 1..m-1, modulo `modulus`,
// computed with no fast paths: each power of M is rebuilt by repeated
// multiplication and the running product is reduced by plain division.
// Exists solely as a cross-check for the optimized engines.
inline Natural naive_product_mod(unsigned long m, const Natural& M, const Natural& modulus) {
    if (m <= 2) throw std::domain_error("naive_product_mod: m must exceed 2");
    if (M <= 1) throw std::domain_error("naive_product_mod: base must exceed 1");
    if (modulus < 2) throw std::domain_error("naive_product_mod: modulus must be >= 2");
    Natural product = 1 % modulus;
    for (unsigned long j = 1; j < m; ++j) {
        Natural power = 1;
        for (unsigned long i = 0; i < j; ++i) power *= M;
        product = product * (power + 1) % modulus;
    }
    return product;
}

}  // namespace cycloprime
