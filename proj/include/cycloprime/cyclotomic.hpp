#pragma once

// Cyclotomic polynomials Phi_n, built by exact division: Phi_n is the
// quotient of Y^n - 1 by the product of Phi_d over proper divisors d of n.
// Divisors are always monic, so everything stays in integer coefficients
// and the remainder of the defining division is asserted to vanish.

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "cycloprime/core_arith.hpp"
#include "cycloprime/integer.hpp"
#include "cycloprime/unipoly.hpp"

namespace cycloprime {

inline std::vector<unsigned long> divisors_of(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail {

// Cache size knob: CYCLOPRIME_CACHE_SIZE caps the number of memoized
// polynomials (0 disables the shared cache). Fills are idempotent, so
// concurrent computations of the same n agree.
inline std::size_t phi_cache_limit() {
    static const std::size_t limit = [] {
        const char* env = std::getenv("CYCLOPRIME_CACHE_SIZE");
        if (!env) return std::size_t{4096};
        return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }();
    return limit;
}

inline UniPoly phi_compute(unsigned long n, std::map<unsigned long, UniPoly>& local);

inline UniPoly phi_cached(unsigned long n, std::map<unsigned long, UniPoly>& local) {
    if (auto it = local.find(n); it != local.end()) return it->second;

    static std::mutex mu;
    static std::map<unsigned long, UniPoly> shared;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = shared.find(n); it != shared.end()) return local[n] = it->second;
    }
    UniPoly phi = phi_compute(n, local);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (shared.size() < phi_cache_limit()) shared.emplace(n, phi);
    }
    return local[n] = phi;
}

inline UniPoly phi_compute(unsigned long n, std::map<unsigned long, UniPoly>& local) {
    if (n == 1) return UniPoly({Integer(-1), Integer(1)});
    UniPoly divisor = UniPoly::one();
    for (unsigned long d : divisors_of(n))
        if (d != n) divisor = divisor * phi_cached(d, local);
    auto [quotient, remainder] =
        UniPoly::divmod(UniPoly::power_minus_one(n), divisor);
    if (!remainder.is_zero())
        throw std::logic_error("cyclotomic_poly: nonzero remainder at n = " + std::to_string(n));
    return quotient;
}

}  // namespace detail

// Phi_n with integer coefficients; monic of degree totient(n).
inline UniPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic_poly: n must be positive");
    std::map<unsigned long, UniPoly> local;
    return detail::phi_cached(n, local);
}

// Phi_n(M), exact Horner evaluation.
inline Integer cyclotomic_eval(unsigned long n, const Integer& M) {
    return cyclotomic_poly(n).eval(M);
}

// Checks Y^n - 1 = prod over divisors d of n of Phi_d, coefficient by
// coefficient.
inline bool verify_factorization_identity(unsigned long n) {
    if (n == 0) throw std::domain_error("verify_factorization_identity: n must be positive");
    std::map<unsigned long, UniPoly> local;
    UniPoly product = UniPoly::one();
    for (unsigned long d : divisors_of(n)) product = product * detail::phi_cached(d, local);
    return product == UniPoly::power_minus_one(n);
}

// Exact comparison Phi_d(M) > (M - 1)^totient(d). Hypotheses d > 2, M > 2.
inline bool lemma2_bound_holds(long d, const Integer& M) {
    if (d <= 2) throw std::domain_error("lemma2_bound_holds: requires d > 2");
    if (M <= 2) throw std::domain_error("lemma2_bound_holds: requires M > 2");
    const unsigned long du = static_cast<unsigned long>(d);
    Integer lhs = cyclotomic_eval(du, M);
    Integer rhs = ipow(M - 1, to_ulong(totient(Natural(du))));
    return lhs > rhs;
}

}  // namespace cycloprime
