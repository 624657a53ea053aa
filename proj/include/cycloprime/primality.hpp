#pragma once

// The two product congruences as executable tests, plus a diagnostics
// engine that replays, for a given odd composite m, the block-grouping
// argument explaining why the congruence must fail.
//
// Base-2 test: prod_{j=1}^{m-1} (2^j + 1) = 1 (mod 2^m - 1) iff m prime,
// evaluated with the Mersenne bit-folding fast path. General base M > 1:
// the same product in base M modulo (M^m - 1)/(M - 1).

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cycloprime/core_arith.hpp"
#include "cycloprime/cyclotomic.hpp"
#include "cycloprime/integer.hpp"
#include "cycloprime/oracle.hpp"

namespace cycloprime {

enum class Verdict { Prime, Composite };

// Which branch of the composite-case argument certifies the failure:
// for base 2 the multiplicative-order contradiction, for larger bases the
// size bound Phi_d(M) > 2^(c-1).
enum class ProofPath { OrderArgument, Lemma2Bound };

struct Diagnostics {
    Natural c;                   // least prime divisor of m (or the chosen split)
    Natural d;                   // m / c
    Natural phi_d_M;             // Phi_d(M)
    Natural base_block_residue;  // prod_{j=0}^{d-1} (M^j + 1) mod Phi_d(M)
    std::vector<Natural> block_residues;  // one per block k in [0, c)
    bool base_pow_d_is_one;      // M^d = 1 (mod Phi_d(M)), checked before
                                 // block equality is trusted
    std::optional<Natural> order_t;  // multiplicative order of the base M
                                     // modulo Phi_d(M); empty if the base is
                                     // not invertible there
    Natural gcd_d_cminus1;       // gcd(d, c - 1)
    ProofPath proof_path;
    std::optional<bool> bound_exceeds;  // Lemma2Bound path: Phi_d(M) > 2^(c-1)
};

struct TestReport {
    Natural m;
    Natural base_M;
    Natural modulus;   // (M^m - 1)/(M - 1); equals 2^m - 1 for M = 2
    Natural residue;   // the product reduced modulo `modulus`
    Verdict verdict;   // Prime iff residue == 1
    std::chrono::duration<double> elapsed{0};
    std::optional<Diagnostics> diagnostics;
};

// Base-2 criterion, Mersenne fast path: every reduction is a bit fold.
inline TestReport vantieghem_test(const Natural& m) {
    if (m <= 2) throw std::domain_error("vantieghem_test: outside theorem hypothesis (m > 2)");
    const unsigned long mu = to_ulong(m);
    const auto start = std::chrono::steady_clock::now();

    Natural product = 1;
    Natural factor;
    for (unsigned long j = 1; j < mu; ++j) {
        factor = pow2(j) + 1;
        product = mersenne_reduce(product * factor, mu);
    }

    TestReport r;
    r.m = m;
    r.base_M = 2;
    r.modulus = pow2(mu) - 1;
    r.residue = product;
    r.verdict = product == 1 ? Verdict::Prime : Verdict::Composite;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

// Base-M criterion. Powers of M are tracked incrementally and the running
// product is reduced after every multiplication, so operands never exceed
// twice the modulus width.
inline TestReport generalized_test(const Natural& m, const Natural& M) {
    if (m <= 2) throw std::domain_error("generalized_test: outside theorem hypothesis (m > 2)");
    if (M <= 1) throw std::domain_error("generalized_test: base must exceed 1");
    const unsigned long mu = to_ulong(m);
    const auto start = std::chrono::steady_clock::now();

    const Natural modulus = (ipow(M, mu) - 1) / (M - 1);
    Natural product = 1 % modulus;
    Natural power = 1 % modulus;
    for (unsigned long j = 1; j < mu; ++j) {
        power = power * M % modulus;
        product = product * (power + 1) % modulus;
    }

    TestReport r;
    r.m = m;
    r.base_M = M;
    r.modulus = modulus;
    r.residue = product;
    r.verdict = product == 1 ? Verdict::Prime : Verdict::Composite;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

namespace detail {

inline Diagnostics diagnostics_for_split(const Natural& m, const Natural& M, const Natural& c) {
    const Natural d = m / c;
    const unsigned long du = to_ulong(d);
    Diagnostics g;
    g.c = c;
    g.d = d;
    g.phi_d_M = cyclotomic_eval(du, M);
    if (g.phi_d_M < 2)
        throw std::logic_error("composite_diagnostics: degenerate modulus Phi_d(M)");

    g.base_pow_d_is_one = mod_pow(M, d, g.phi_d_M) == 1;
    if (!g.base_pow_d_is_one)
        throw std::logic_error("composite_diagnostics: M^d != 1 mod Phi_d(M)");

    // The c blocks of d consecutive factors of prod_{i=0}^{m-1} (M^i + 1),
    // each reduced modulo Phi_d(M). The power of M runs on across block
    // boundaries, exactly as the exponents k*d + j do.
    const unsigned long cu = to_ulong(c);
    Natural power = 1 % g.phi_d_M;
    g.block_residues.reserve(cu);
    for (unsigned long k = 0; k < cu; ++k) {
        Natural acc = 1 % g.phi_d_M;
        for (unsigned long j = 0; j < du; ++j) {
            acc = acc * (power + 1) % g.phi_d_M;
            power = power * M % g.phi_d_M;
        }
        g.block_residues.push_back(acc);
    }
    g.base_block_residue = g.block_residues.front();

    if (gcd(M, g.phi_d_M) == 1)
        g.order_t = multiplicative_order_dividing(M, g.phi_d_M, d);
    g.gcd_d_cminus1 = gcd(d, c - 1);

    if (M == 2) {
        g.proof_path = ProofPath::OrderArgument;
    } else {
        g.proof_path = ProofPath::Lemma2Bound;
        if (d > 2) g.bound_exceeds = g.phi_d_M > pow2(to_ulong(c - 1));
    }
    return g;
}

}  // namespace detail

// Replays the proof chain for an odd composite m with c chosen as the
// least prime divisor, the split the argument itself uses.
inline Diagnostics composite_diagnostics(const Natural& m, const Natural& M) {
    if (M <= 1) throw std::domain_error("composite_diagnostics: base must exceed 1");
    if (m <= 2 || mpz_even_p(m.get_mpz_t()))
        throw std::domain_error("composite_diagnostics: m must be odd and > 2");
    if (is_prime_oracle(m)) throw std::domain_error("composite_diagnostics: m is prime");
    return detail::diagnostics_for_split(m, M, least_prime_divisor(m));
}

// Exploration variant: any nontrivial divisor c of m (1 < c < m) may be
// used as the block count. Invariants tied to the least-prime choice,
// gcd(d, c-1) = 1 in particular, need not hold here.
inline Diagnostics composite_diagnostics_split(const Natural& m, const Natural& M,
                                               const Natural& c) {
    if (M <= 1) throw std::domain_error("composite_diagnostics: base must exceed 1");
    if (m <= 2 || mpz_even_p(m.get_mpz_t()))
        throw std::domain_error("composite_diagnostics: m must be odd and > 2");
    if (c <= 1 || c >= m || m % c != 0)
        throw std::domain_error("composite_diagnostics: c must be a nontrivial divisor of m");
    return detail::diagnostics_for_split(m, M, c);
}

// For even m = 2w the criterion fails for a one-line reason: M^w + 1
// divides both the modulus (M^m - 1)/(M - 1) and the product, and being
// greater than 2 it cannot divide product - 1. Returns the witness after
// checking both divisibilities.
inline Natural even_case_witness(const Natural& m, const Natural& M) {
    if (M <= 1) throw std::domain_error("even_case_witness: base must exceed 1");
    if (m <= 2 || mpz_odd_p(m.get_mpz_t()))
        throw std::domain_error("even_case_witness: m must be even and > 2");
    const unsigned long mu = to_ulong(m);
    const unsigned long w = mu / 2;
    const Natural witness = ipow(M, w) + 1;

    const Natural modulus = (ipow(M, mu) - 1) / (M - 1);
    if (modulus % witness != 0)
        throw std::logic_error("even_case_witness: witness does not divide the modulus");

    Natural product = 1, power = 1;
    for (unsigned long j = 1; j < mu; ++j) {
        power = power * M % witness;
        product = product * (power + 1) % witness;
    }
    if (product != 0)
        throw std::logic_error("even_case_witness: witness does not divide the product");
    return witness;
}

}  // namespace cycloprime
