#pragma once

// Symmetric functions in one alphabet, stored in the h-monomial basis.

#include "segrelat/arith.hpp"
#include "segrelat/perm_core.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrelat {

/// Homogeneous symmetric function of fixed degree as a rational combination
/// of h-monomials h_lambda. Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    SymFunc() = default;
    explicit SymFunc(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
    }

    static SymFunc one() {
        SymFunc f(0);
        f.add(Partition(), 1);
        return f;
    }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Partition& key, const Rational& c) {
        if (key.weight() != degree_)
            throw std::invalid_argument("SymFunc: key " + key.to_string() + " has wrong degree");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        check_degree(o);
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        check_degree(o);
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const Rational& s, const SymFunc& f) {
        SymFunc r(f.degree_);
        for (const auto& [k, c] : f.terms_) r.add(k, s * c);
        return r;
    }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r(a.degree_ + b.degree_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add(ka | kb, ca * cb);
        return r;
    }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    void check_degree(const SymFunc& o) const {
        if (o.degree_ != degree_) throw std::invalid_argument("SymFunc: degree mismatch");
    }
    int degree_ = 0;
    Terms terms_;
};

/// Coefficients in the Schur basis, keyed by partition.
using SchurExpansion = std::map<Partition, Rational>;

inline SymFunc h_monomial(const Partition& lambda) {
    SymFunc f(lambda.weight());
    f.add(lambda, 1);
    return f;
}

/// c_lambda = (-1)^{n-l} l! / prod_i m_i(lambda)!, the coefficient of h_lambda in e_n.
inline Integer e_coefficient(const Partition& lambda) {
    Integer c = factorial(static_cast<unsigned>(lambda.length()));
    for (int i = 1; i <= lambda.largest(); ++i) c /= factorial(static_cast<unsigned>(lambda.multiplicity(i)));
    return (lambda.weight() - lambda.length()) % 2 ? Integer(-c) : c;
}

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of cycle type lambda.
inline Integer z_lambda(const Partition& lambda) {
    Integer z = 1;
    for (int i = 1; i <= lambda.largest(); ++i) {
        const int m = lambda.multiplicity(i);
        z *= ipow(Integer(i), static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m));
    }
    return z;
}

/// e_n expanded in h-monomials through the closed c_lambda formula.
inline SymFunc e_to_h(int n) {
    SymFunc f(n);
    for (const auto& lambda : partitions_of(n)) f.add(lambda, e_coefficient(lambda));
    return f;
}

/// e_lambda = prod_i e_{lambda_i}.
inline SymFunc e_monomial(const Partition& lambda) {
    SymFunc f = SymFunc::one();
    for (int p : lambda.parts()) f = f * e_to_h(p);
    return f;
}

namespace detail {

struct JacobiTrudiMemo {
    std::shared_mutex mu;
    std::map<Partition, SymFunc> table;
};
inline JacobiTrudiMemo& jacobi_trudi_memo() {
    static JacobiTrudiMemo m;
    return m;
}

inline int permutation_sign(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace detail

/// s_lambda = det(h_{lambda_i - i + j}) expanded as a signed sum over S_{l(lambda)}.
inline SymFunc schur_to_h(const Partition& lambda) {
    auto& memo = detail::jacobi_trudi_memo();
    {
        std::shared_lock lock(memo.mu);
        if (auto it = memo.table.find(lambda); it != memo.table.end()) return it->second;
    }
    const int l = lambda.length();
    SymFunc f(lambda.weight());
    std::vector<int> sigma(static_cast<std::size_t>(l));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::vector<int> parts;
        bool vanishes = false;
        for (int i = 1; i <= l; ++i) {
            int idx = lambda.part(i) - i + sigma[static_cast<std::size_t>(i - 1)];
            if (idx < 0) {
                vanishes = true;
                break;
            }
            parts.push_back(idx);
        }
        if (!vanishes) f.add(Partition::from_parts(std::move(parts)), detail::permutation_sign(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::unique_lock lock(memo.mu);
    return memo.table.emplace(lambda, std::move(f)).first->second;
}

/// Schur coefficients via h_lambda = sum_mu K_{mu,lambda} s_mu.
inline SchurExpansion h_to_schur(const SymFunc& f) {
    SchurExpansion out;
    const auto shapes = partitions_of(f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& mu : shapes) {
            Integer k = kostka(mu, lambda);
            if (k == 0) continue;
            auto& slot = out[mu];
            slot += c * Rational(k);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// Inverse of h_to_schur.
inline SymFunc schur_to_h(const SchurExpansion& s, int degree) {
    SymFunc f(degree);
    for (const auto& [mu, c] : s) f += c * schur_to_h(mu);
    return f;
}

/// Hall inner product, computed through Schur orthonormality.
inline Rational inner_product(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("inner_product: degree mismatch");
    const auto sf = h_to_schur(f);
    const auto sg = h_to_schur(g);
    Rational total = 0;
    for (const auto& [mu, c] : sf)
        if (auto it = sg.find(mu); it != sg.end()) total += c * it->second;
    return total;
}

}  // namespace segrelat
