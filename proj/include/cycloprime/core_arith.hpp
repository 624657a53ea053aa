#pragma once

// Exact integer primitives: modular exponentiation, Mersenne-modulus
// reduction, totient, multiplicative order, and desk-scale factorization.
// Everything is arbitrary precision; failure modes are explicit errors,
// never wrong answers.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycloprime/integer.hpp"
#include "cycloprime/oracle.hpp"

namespace cycloprime {

class UnfactoredRemainder : public std::runtime_error {
public:
    explicit UnfactoredRemainder(const Natural& r)
        : std::runtime_error("factorization effort budget exhausted, unfactored remainder " +
                             to_decimal(r)),
          remainder_(r) {}
    const Natural& remainder() const { return remainder_; }

private:
    Natural remainder_;
};

inline Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    if (base < 0 || exponent < 0) throw std::domain_error("mod_pow: negative argument");
    Natural r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

// x mod (2^m - 1) by folding the bits above position m back onto the low
// m bits until the value fits, then one conditional subtraction.
inline Natural mersenne_reduce(const Natural& x, unsigned long m) {
    if (m < 2) throw std::domain_error("mersenne_reduce: m must be >= 2");
    if (x < 0) throw std::domain_error("mersenne_reduce: negative input");
    Natural r = x;
    Natural low;
    while (bit_length(r) > m) {
        mpz_fdiv_r_2exp(low.get_mpz_t(), r.get_mpz_t(), m);
        mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), m);
        r += low;
    }
    const Natural modulus = pow2(m) - 1;
    while (r >= modulus) r -= modulus;
    return r;
}

struct Factorization {
    // (prime, exponent) pairs, ascending by prime.
    std::vector<std::pair<Natural, unsigned long>> factors;

    Natural reassemble() const {
        Natural n = 1;
        for (const auto& [p, e] : factors) n *= ipow(p, e);
        return n;
    }
};

namespace detail {

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// divisor of n (not necessarily prime), or 0 if the iteration budget runs
// out. n must be odd, composite, > 1.
inline Natural rho_divisor(const Natural& n) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eed);
    for (int attempt = 0; attempt < 24; ++attempt) {
        Natural y = rng.get_z_range(n - 3) + 2;
        Natural c = rng.get_z_range(n - 2) + 1;
        Natural x = y, q = 1, g = 1, ys = y;
        const unsigned long budget = 1u << 19;
        unsigned long r = 1;
        while (g == 1 && r <= budget) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(128, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Natural diff = x > y ? x - y : y - x;
                    q = q * diff % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Natural diff = x > ys ? x - ys : ys - x;
                g = gcd(diff, n);
            }
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline void factor_into(Natural n, std::vector<std::pair<Natural, unsigned long>>& out) {
    if (n == 1) return;
    if (is_prime_oracle(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Natural d = rho_divisor(n);
    if (d == 0) throw UnfactoredRemainder(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Complete prime factorization: trial division up to 10^6, then rho with
// a bounded effort budget. Runs out of budget -> UnfactoredRemainder;
// cofactor too large for the oracle to certify -> OracleRangeError.
inline Factorization factorize(const Natural& n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    std::vector<std::pair<Natural, unsigned long>> fac;
    Natural rest = n;
    auto strip = [&](unsigned long p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) fac.emplace_back(Natural(p), e);
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= 1000000; p += 6) {
        if (rest == 1) break;
        Natural bound = Natural(p + 1) * (p + 1);
        if (bound > rest) break;
        strip(p);
        strip(p + 2);
    }
    if (rest > 1) {
        if (rest <= Natural(1000000) * 1000000 || is_prime_oracle(rest)) {
            // below the trial bound squared the remainder must be prime
            fac.emplace_back(rest, 1);
        } else {
            std::vector<std::pair<Natural, unsigned long>> large;
            detail::factor_into(rest, large);
            std::sort(large.begin(), large.end());
            for (std::size_t i = 0; i < large.size();) {
                std::size_t j = i;
                unsigned long e = 0;
                while (j < large.size() && large[j].first == large[i].first) e += large[j++].second;
                fac.emplace_back(large[i].first, e);
                i = j;
            }
        }
    }
    Factorization result{std::move(fac)};
    if (result.reassemble() != n)
        throw std::logic_error("factorize: reassembly mismatch for " + to_decimal(n));
    return result;
}

inline Natural least_prime_divisor(const Natural& m) {
    if (m < 2) throw std::domain_error("least_prime_divisor: m must be >= 2");
    if (mpz_even_p(m.get_mpz_t())) return 2;
    for (unsigned long p = 3; p <= 1000000 && Natural(p) * p <= m; p += 2)
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return Natural(p);
    if (m <= Natural(1000000) * 1000000 || is_prime_oracle(m)) return m;
    return factorize(m).factors.front().first;
}

// Euler's totient via the prime factorization.
inline Natural totient(const Natural& d) {
    if (d < 1) throw std::domain_error("totient: argument must be positive");
    if (d == 1) return 1;
    Natural t = 1;
    for (const auto& [p, e] : factorize(d).factors) t *= ipow(p, e - 1) * (p - 1);
    return t;
}

namespace detail {

// Shrink a known exponent e with a^e = 1 (mod b) down to the exact order
// by stripping prime factors of e while the congruence keeps holding.
inline Natural order_from_multiple(const Natural& a, const Natural& b, const Natural& e) {
    Natural u = e;
    for (const auto& [p, _] : factorize(e).factors) {
        while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t()) && mod_pow(a, u / p, b) == 1)
            u /= p;
    }
    return u;
}

}  // namespace detail

// Least u >= 1 with a^u = 1 (mod b). Requires gcd(a, b) = 1. Factors
// phi(b) when the factorization budget allows, otherwise falls back to a
// capped incremental search.
inline Natural multiplicative_order(const Natural& a, const Natural& b) {
    if (b < 2) throw std::domain_error("multiplicative_order: modulus must be >= 2");
    if (a < 0) throw std::domain_error("multiplicative_order: negative base");
    if (gcd(a, b) != 1)
        throw std::domain_error("multiplicative_order: arguments are not coprime");
    Natural r = a % b;
    if (r == 1) return 1;
    try {
        Natural phi = totient(b);
        if (mod_pow(r, phi, b) != 1)
            throw std::logic_error("multiplicative_order: Euler identity failed");
        return detail::order_from_multiple(r, b, phi);
    } catch (const UnfactoredRemainder&) {
        // fall through to incremental search
    } catch (const OracleRangeError&) {
    }
    Natural x = r, u = 1;
    const Natural cap = std::min(b, Natural(10000000));
    while (x != 1) {
        x = x * r % b;
        ++u;
        if (u > cap)
            throw std::runtime_error("multiplicative_order: search cap exceeded");
    }
    return u;
}

// Variant for callers that already know a multiple e of the order
// (i.e. a^e = 1 (mod b) has been established).
inline Natural multiplicative_order_dividing(const Natural& a, const Natural& b, const Natural& e) {
    if (b < 2) throw std::domain_error("multiplicative_order: modulus must be >= 2");
    if (e < 1) throw std::domain_error("multiplicative_order: exponent multiple must be positive");
    Natural r = a % b;
    if (mod_pow(r, e, b) != 1)
        throw std::domain_error("multiplicative_order: supplied exponent is not a multiple of the order");
    return detail::order_from_multiple(r, b, e);
}

}  // namespace cycloprime
