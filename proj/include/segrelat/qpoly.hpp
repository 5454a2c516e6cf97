#pragma once

#include "segrelat/arith.hpp"

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrelat {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// coeffs()[k] is the coefficient of q^k; the normal form has no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<long long> cs) {
        for (auto c : cs) c_.emplace_back(c);
        trim();
    }
    explicit QPoly(std::vector<Integer> cs) : c_(std::move(cs)) { trim(); }
    QPoly(const Integer& constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) c_.push_back(constant);
    }
    QPoly(int constant) : QPoly(Integer(constant)) {}  // NOLINT(google-explicit-constructor)

    static QPoly monomial(unsigned degree, Integer coeff = 1) {
        std::vector<Integer> cs(degree + 1);
        cs[degree] = std::move(coeff);
        return QPoly(std::move(cs));
    }

    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

    Integer eval(const Integer& q) const {
        Integer r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
        return r;
    }

    bool nonnegative() const {
        for (const auto& c : c_)
            if (c < 0) return false;
        return true;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(QPoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(r));
    }
    friend bool operator==(const QPoly&, const QPoly&) = default;

    QPoly pow(unsigned e) const {
        QPoly r = 1, b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Human-readable form such as "2q + q^2".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Integer& c = c_[k];
            if (c == 0) continue;
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (k == 0 || mag != 1) out += mag.str();
            if (k >= 1) out += "q";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/// prod_{i=lo}^{hi} (1 - q^i)^t; the empty product is 1.
inline QPoly one_minus_q_product(unsigned lo, unsigned hi, unsigned t) {
    QPoly r = 1;
    for (unsigned i = lo; i <= hi; ++i) r *= (QPoly(1) - QPoly::monomial(i)).pow(t);
    return r;
}

/// A rational function numerator / prod_{i=1}^{n} (1 - q^i)^t.
struct QRatNF {
    QPoly numerator;
    unsigned n = 0;
    unsigned t = 1;

    QPoly denominator() const { return one_minus_q_product(1, n, t); }

    /// Equality by cross-multiplication; no polynomial division is performed.
    friend bool operator==(const QRatNF& a, const QRatNF& b) {
        if (a.t == b.t) {
            if (a.n <= b.n) return a.numerator * one_minus_q_product(a.n + 1, b.n, a.t) == b.numerator;
            return b.numerator * one_minus_q_product(b.n + 1, a.n, a.t) == a.numerator;
        }
        return a.numerator * b.denominator() == b.numerator * a.denominator();
    }
};

}  // namespace segrelat
