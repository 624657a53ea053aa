#pragma once

// Dense univariate polynomial over arbitrary-precision integers.
// Normal form: coefficients stored low degree first, highest stored
// coefficient nonzero; the zero polynomial is the empty list.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycloprime/integer.hpp"

namespace cycloprime {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UniPoly constant(Integer c) {
        UniPoly p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }
    static UniPoly one() { return constant(1); }

    // c * Y^k
    static UniPoly monomial(std::size_t k, Integer c = Integer(1)) {
        UniPoly p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, Integer(0));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }

    // Y^n - 1
    static UniPoly power_minus_one(std::size_t n) {
        UniPoly p = monomial(n);
        p.coeffs_[0] = -1;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    const Integer& coeff(std::size_t k) const {
        static const Integer zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const Integer& leading() const {
        if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Integer eval(const Integer& x) const {
        Integer acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return UniPoly(std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const UniPoly& a, const Integer& s) {
        UniPoly r = a;
        for (auto& c : r.coeffs_) c *= s;
        r.normalize();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division by a monic divisor; quotient and remainder stay
    // in integer coefficients, deg(remainder) < deg(divisor).
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
        if (!divisor.is_monic())
            throw std::invalid_argument("divmod: divisor must be monic");
        const long dd = divisor.degree();
        UniPoly r = dividend;
        if (r.degree() < dd) return {UniPoly(), r};
        std::vector<Integer> q(static_cast<std::size_t>(r.degree() - dd) + 1, Integer(0));
        while (r.degree() >= dd) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
            Integer lead = r.coeffs_.back();
            q[shift] = lead;
            for (long i = 0; i <= dd; ++i)
                r.coeffs_[shift + static_cast<std::size_t>(i)] -=
                    lead * divisor.coeffs_[static_cast<std::size_t>(i)];
            r.normalize();
        }
        return {UniPoly(std::move(q)), r};
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "[]";
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += coeffs_[i].get_str();
        }
        return s + "]";
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

}  // namespace cycloprime
