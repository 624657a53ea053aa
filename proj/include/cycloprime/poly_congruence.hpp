#pragma once

// Bivariate polynomials in Z[X, Y], dense in both variables: the outer
// index is the X-degree, each entry a UniPoly in Y. Just enough algebra
// to expand prod_j (X - Y^j) and reduce its coefficients modulo the monic
// Phi_n(Y), which turns the library's two symbolic congruences into
// zero-remainder checks.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloprime/cyclotomic.hpp"
#include "cycloprime/integer.hpp"
#include "cycloprime/unipoly.hpp"

namespace cycloprime {

class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> x_coeffs) : xc_(std::move(x_coeffs)) { normalize(); }

    // X^n - 1
    static BiPoly x_power_minus_one(std::size_t n) {
        std::vector<UniPoly> c(n + 1);
        c[0] = UniPoly::constant(-1);
        c[n] = UniPoly::one();
        return BiPoly(std::move(c));
    }

    bool is_zero() const { return xc_.empty(); }
    long x_degree() const { return static_cast<long>(xc_.size()) - 1; }

    const std::vector<UniPoly>& x_coefficients() const { return xc_; }

    const UniPoly& coeff(std::size_t k) const {
        static const UniPoly zero;
        return k < xc_.size() ? xc_[k] : zero;
    }

    // Multiply by the factor (X - t) where t is a polynomial in Y.
    BiPoly times_x_minus(const UniPoly& t) const {
        std::vector<UniPoly> c(xc_.size() + 1);
        for (std::size_t i = 0; i < xc_.size(); ++i) {
            c[i + 1] = c[i + 1] + xc_[i];
            c[i] = c[i] - xc_[i] * t;
        }
        return BiPoly(std::move(c));
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        std::vector<UniPoly> c(std::max(a.xc_.size(), b.xc_.size()));
        for (std::size_t i = 0; i < a.xc_.size(); ++i) c[i] = a.xc_[i];
        for (std::size_t i = 0; i < b.xc_.size(); ++i) c[i] = c[i] - b.xc_[i];
        return BiPoly(std::move(c));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.xc_ == b.xc_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // Exact substitution X = x, Y = y.
    Integer eval(const Integer& x, const Integer& y) const {
        Integer acc = 0;
        for (std::size_t i = xc_.size(); i-- > 0;) acc = acc * x + xc_[i].eval(y);
        return acc;
    }

    std::string to_string() const {
        if (xc_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < xc_.size(); ++i) {
            if (i) s += " + ";
            s += "X^" + std::to_string(i) + "*" + xc_[i].to_string();
        }
        return s;
    }

private:
    void normalize() {
        while (!xc_.empty() && xc_.back().is_zero()) xc_.pop_back();
    }

    std::vector<UniPoly> xc_;
};

namespace detail {

// prod_{j = j_begin}^{j_end - 1} (X - Y^j), expanded exactly.
inline BiPoly product_x_minus_ypow(unsigned long j_begin, unsigned long j_end) {
    BiPoly p({UniPoly::one()});
    for (unsigned long j = j_begin; j < j_end; ++j)
        p = p.times_x_minus(UniPoly::monomial(j));
    return p;
}

}  // namespace detail

// prod_{j=0}^{n-1} (X - Y^j); X-degree exactly n.
inline BiPoly product_poly(unsigned long n) {
    if (n == 0) throw std::domain_error("product_poly: n must be positive");
    return detail::product_x_minus_ypow(0, n);
}

// Replace every X-coefficient by its remainder modulo the monic Phi_n(Y).
inline BiPoly reduce_mod_phi(const BiPoly& p, unsigned long n) {
    if (n == 0) throw std::domain_error("reduce_mod_phi: n must be positive");
    const UniPoly phi = cyclotomic_poly(n);
    std::vector<UniPoly> out;
    out.reserve(p.x_coefficients().size());
    for (const UniPoly& f : p.x_coefficients())
        out.push_back(UniPoly::divmod(f, phi).second);
    return BiPoly(std::move(out));
}

// prod_{j=0}^{n-1} (X - Y^j) = X^n - 1  (mod Phi_n(Y)): every coefficient
// of the difference must reduce to zero.
inline bool verify_lemma1(unsigned long n) {
    if (n == 0) throw std::domain_error("verify_lemma1: n must be positive");
    BiPoly diff = product_poly(n) - BiPoly::x_power_minus_one(n);
    return reduce_mod_phi(diff, n).is_zero();
}

// prod_{j=1}^{n-1} (X - Y^j) = 1 + X + ... + X^{n-1}  (mod Phi_n(Y)).
inline bool verify_corollary(unsigned long n) {
    if (n < 2) throw std::domain_error("verify_corollary: requires n > 1");
    BiPoly reduced = reduce_mod_phi(detail::product_x_minus_ypow(1, n), n);
    std::vector<UniPoly> ones(n, UniPoly::one());
    return reduced == BiPoly(std::move(ones));
}

}  // namespace cycloprime
