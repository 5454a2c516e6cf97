#pragma once

// Functions of t alphabets, symmetric in each alphabet separately.
//
// Storage is a rational combination of t-tuples of partitions, read either in
// the Z-basis (prod_j h_{lambda^j}(X^j)) or the S-basis (prod_j s_{mu^j}(X^j)).
// Multiplication and phi_t are computed in Z; multiplicity questions in S.

#include "segrelat/arith.hpp"
#include "segrelat/perm_core.hpp"
#include "segrelat/symfunc.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrelat {

enum class Basis { Z, S };

inline const char* basis_name(Basis b) { return b == Basis::Z ? "Z" : "S"; }

using PartitionTuple = std::vector<Partition>;

class MultiSymFunc {
public:
    using Terms = std::map<PartitionTuple, Rational>;

    MultiSymFunc(int t, std::vector<int> degrees, Basis basis = Basis::Z)
        : t_(t), degrees_(std::move(degrees)), basis_(basis) {
        if (t < 1) throw std::invalid_argument("MultiSymFunc: t must be at least 1");
        if (static_cast<int>(degrees_.size()) != t)
            throw std::invalid_argument("MultiSymFunc: degree vector length must equal t");
        for (int d : degrees_)
            if (d < 0) throw std::invalid_argument("MultiSymFunc: negative degree");
    }

    /// Zero function of degree (n, ..., n).
    static MultiSymFunc uniform(int t, int n, Basis basis = Basis::Z) {
        return MultiSymFunc(t, std::vector<int>(static_cast<std::size_t>(t), n), basis);
    }
    static MultiSymFunc one(int t) {
        auto f = uniform(t, 0);
        f.add(PartitionTuple(static_cast<std::size_t>(t)), 1);
        return f;
    }
    /// Z^{(t)}_lambda = prod_j h_lambda(X^j).
    static MultiSymFunc z_monomial(int t, const Partition& lambda) {
        auto f = uniform(t, lambda.weight());
        f.add(PartitionTuple(static_cast<std::size_t>(t), lambda), 1);
        return f;
    }
    /// A single basis element with coefficient 1; degrees are read off the key.
    static MultiSymFunc basis_element(const PartitionTuple& key, Basis basis) {
        std::vector<int> deg;
        for (const auto& p : key) deg.push_back(p.weight());
        MultiSymFunc f(static_cast<int>(key.size()), std::move(deg), basis);
        f.add(key, 1);
        return f;
    }

    int t() const { return t_; }
    const std::vector<int>& degrees() const { return degrees_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const PartitionTuple& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const PartitionTuple& key, const Rational& c) {
        if (static_cast<int>(key.size()) != t_) throw std::invalid_argument("MultiSymFunc: key length must equal t");
        for (std::size_t j = 0; j < key.size(); ++j)
            if (key[j].weight() != degrees_[j])
                throw std::invalid_argument("MultiSymFunc: key partition (" + key[j].to_string() +
                                            ") has wrong degree for alphabet " + std::to_string(j + 1));
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiSymFunc to_basis(Basis target) const;
    MultiSymFunc to_s() const { return to_basis(Basis::S); }
    MultiSymFunc to_z() const { return to_basis(Basis::Z); }

    bool all_nonnegative() const {
        for (const auto& [k, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    MultiSymFunc& operator+=(const MultiSymFunc& o) {
        check_compatible(o);
        if (o.basis_ == basis_) {
            for (const auto& [k, c] : o.terms_) add(k, c);
        } else {
            const MultiSymFunc same = o.to_basis(basis_);
            for (const auto& [k, c] : same.terms_) add(k, c);
        }
        return *this;
    }
    MultiSymFunc& operator-=(const MultiSymFunc& o) { return *this += Rational(-1) * o; }

    friend MultiSymFunc operator+(MultiSymFunc a, const MultiSymFunc& b) { return a += b; }
    friend MultiSymFunc operator-(MultiSymFunc a, const MultiSymFunc& b) { return a -= b; }
    friend MultiSymFunc operator*(const Rational& s, const MultiSymFunc& f) {
        MultiSymFunc r(f.t_, f.degrees_, f.basis_);
        for (const auto& [k, c] : f.terms_) r.add(k, s * c);
        return r;
    }

    /// Equal as functions, whatever the storage basis.
    friend bool operator==(const MultiSymFunc& a, const MultiSymFunc& b) {
        if (a.t_ != b.t_) return false;
        if (a.degrees_ != b.degrees_) return a.is_zero() && b.is_zero();
        if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
        return a.terms_ == b.to_basis(a.basis_).terms_;
    }

private:
    void check_compatible(const MultiSymFunc& o) const {
        if (o.t_ != t_) throw std::invalid_argument("MultiSymFunc: alphabet count mismatch");
        if (o.degrees_ != degrees_) throw std::invalid_argument("MultiSymFunc: degree vector mismatch");
    }

    int t_;
    std::vector<int> degrees_;
    Basis basis_;
    Terms terms_;
};

namespace detail {

// Per-alphabet conversion caches: h_lambda -> Schur and s_lambda -> h.
struct AlphabetConversionMemo {
    std::shared_mutex mu;
    std::map<Partition, std::vector<std::pair<Partition, Rational>>> h_to_s;
    std::map<Partition, std::vector<std::pair<Partition, Rational>>> s_to_h;
};
inline AlphabetConversionMemo& alphabet_memo() {
    static AlphabetConversionMemo m;
    return m;
}

inline const std::vector<std::pair<Partition, Rational>>& single_alphabet_image(const Partition& key, Basis from) {
    auto& memo = alphabet_memo();
    auto& table = from == Basis::Z ? memo.h_to_s : memo.s_to_h;
    {
        std::shared_lock lock(memo.mu);
        if (auto it = table.find(key); it != table.end()) return it->second;
    }
    std::vector<std::pair<Partition, Rational>> image;
    if (from == Basis::Z) {
        for (const auto& [mu, c] : h_to_schur(h_monomial(key))) image.emplace_back(mu, c);
    } else {
        const SymFunc s = schur_to_h(key);
        for (const auto& [lambda, c] : s.terms()) image.emplace_back(lambda, c);
    }
    std::unique_lock lock(memo.mu);
    return table.emplace(key, std::move(image)).first->second;
}

}  // namespace detail

inline MultiSymFunc MultiSymFunc::to_basis(Basis target) const {
    if (target == basis_) return *this;
    MultiSymFunc out(t_, degrees_, target);
    PartitionTuple key(static_cast<std::size_t>(t_));
    for (const auto& [src, c] : terms_) {
        std::vector<const std::vector<std::pair<Partition, Rational>>*> images;
        for (const auto& p : src) images.push_back(&detail::single_alphabet_image(p, basis_));
        // Tensor product of the per-alphabet images.
        auto rec = [&](auto&& self, std::size_t j, const Rational& acc) -> void {
            if (j == images.size()) {
                out.add(key, acc);
                return;
            }
            for (const auto& [p, cp] : *images[j]) {
                key[j] = p;
                self(self, j + 1, acc * cp);
            }
        };
        rec(rec, 0, c);
    }
    return out;
}

/// The algebra map sending h_n to Z^{(t)}_n; h_lambda maps to the diagonal key (lambda, ..., lambda).
inline MultiSymFunc phi_t(const SymFunc& f, int t) {
    auto out = MultiSymFunc::uniform(t, f.degree());
    for (const auto& [lambda, c] : f.terms()) out.add(PartitionTuple(static_cast<std::size_t>(t), lambda), c);
    return out;
}

/// Product in the Z-basis (per-alphabet concatenation of parts); on the
/// representation side this is the t-fold induction product.
inline MultiSymFunc multiply(const MultiSymFunc& F, const MultiSymFunc& G) {
    if (F.t() != G.t()) throw std::invalid_argument("multiply: alphabet count mismatch");
    const auto fz = F.to_z();
    const auto gz = G.to_z();
    std::vector<int> deg(F.degrees());
    for (std::size_t j = 0; j < deg.size(); ++j) deg[j] += G.degrees()[j];
    MultiSymFunc out(F.t(), std::move(deg), Basis::Z);
    PartitionTuple key(static_cast<std::size_t>(F.t()));
    for (const auto& [ka, ca] : fz.terms())
        for (const auto& [kb, cb] : gz.terms()) {
            for (std::size_t j = 0; j < key.size(); ++j) key[j] = ka[j] | kb[j];
            out.add(key, ca * cb);
        }
    return out;
}

inline MultiSymFunc operator*(const MultiSymFunc& F, const MultiSymFunc& G) { return multiply(F, G); }

/// prod_j <f_j, g_j> extended bilinearly; computed by matching S-basis keys.
inline Rational inner_product(const MultiSymFunc& F, const MultiSymFunc& G) {
    if (F.t() != G.t() || F.degrees() != G.degrees())
        throw std::invalid_argument("inner_product: alphabet count or degree vector mismatch");
    const auto fs = F.to_s();
    const auto gs = G.to_s();
    Rational total = 0;
    for (const auto& [k, c] : fs.terms())
        if (auto it = gs.terms().find(k); it != gs.terms().end()) total += c * it->second;
    return total;
}

/// Dimension of the (possibly virtual) module: sum of S-coefficients times prod_j f^{mu^j}.
inline Rational dimension(const MultiSymFunc& F) {
    Rational total = 0;
    const auto s = F.to_s();
    for (const auto& [k, c] : s.terms()) {
        Integer d = 1;
        for (const auto& mu : k) d *= syt_count(mu);
        total += c * Rational(d);
    }
    return total;
}

}  // namespace segrelat
