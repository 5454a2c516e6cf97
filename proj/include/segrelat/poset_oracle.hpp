#pragma once

// Explicit finite graded posets with edge labelings. This is the ground-truth
// engine: everything here is computed from the poset itself, never from the
// closed formulas in segre_invariants.hpp.

#include "segrelat/arith.hpp"
#include "segrelat/perm_core.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace segrelat {

/// Edge label: an integer tuple ordered componentwise.
using Label = std::vector<int>;
using LabelWord = std::vector<Label>;

/// Strict componentwise order: a <= b in every coordinate and a != b.
inline bool label_less(const Label& a, const Label& b) {
    if (a.size() != b.size()) throw std::invalid_argument("label_less: label widths differ");
    bool differ = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] != b[i]) differ = true;
    }
    return differ;
}

/// u lexicographically precedes v: at the first position where they differ, u_k < v_k.
/// Incomparable letters at that position mean neither word precedes the other.
inline bool lex_precedes(const LabelWord& u, const LabelWord& v) {
    const std::size_t len = std::min(u.size(), v.size());
    for (std::size_t k = 0; k < len; ++k) {
        if (u[k] == v[k]) continue;
        return label_less(u[k], v[k]);
    }
    return u.size() < v.size();
}

/// Descent positions i in [r-1] with w_i not strictly below w_{i+1}, as a mask (bit i-1).
inline std::uint64_t word_descent_mask(const LabelWord& w) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!label_less(w[i], w[i + 1])) m |= std::uint64_t{1} << i;
    return m;
}

inline std::string label_to_string(const Label& l) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(l[i]);
    }
    return s;
}

struct Cover {
    int lower;
    int upper;
    Label label;  // empty when the poset is unlabeled
};

/// Finite graded bounded poset given by its cover relations, optionally edge-labeled.
class LabeledPoset {
public:
    struct Element {
        std::string name;
        int rank;
    };

    /// Validates gradedness and boundedness; throws std::invalid_argument otherwise.
    LabeledPoset(std::vector<Element> elements, std::vector<Cover> covers)
        : elems_(std::move(elements)), covers_(std::move(covers)) {
        const int n = size();
        if (n == 0) throw std::invalid_argument("poset: no elements");
        up_.assign(static_cast<std::size_t>(n), {});
        down_.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < n; ++i) {
            if (elems_[static_cast<std::size_t>(i)].rank < 0) throw std::invalid_argument("poset: negative rank");
            if (!index_.emplace(elems_[static_cast<std::size_t>(i)].name, i).second)
                throw std::invalid_argument("poset: duplicate element id " + elems_[static_cast<std::size_t>(i)].name);
        }
        width_ = covers_.empty() ? 0 : static_cast<int>(covers_.front().label.size());
        std::map<std::pair<int, int>, int> seen;
        for (std::size_t c = 0; c < covers_.size(); ++c) {
            const auto& cv = covers_[c];
            if (cv.lower < 0 || cv.lower >= n || cv.upper < 0 || cv.upper >= n)
                throw std::invalid_argument("poset: cover endpoint out of range");
            if (rank(cv.upper) != rank(cv.lower) + 1)
                throw std::invalid_argument("poset: cover " + name(cv.lower) + " < " + name(cv.upper) +
                                            " does not raise rank by one");
            if (static_cast<int>(cv.label.size()) != width_)
                throw std::invalid_argument("poset: inconsistent label widths");
            if (!seen.emplace(std::make_pair(cv.lower, cv.upper), 0).second)
                throw std::invalid_argument("poset: duplicate cover " + name(cv.lower) + " < " + name(cv.upper));
            up_[static_cast<std::size_t>(cv.lower)].push_back(static_cast<int>(c));
            down_[static_cast<std::size_t>(cv.upper)].push_back(static_cast<int>(c));
        }
        int max_rank = 0;
        for (const auto& e : elems_) max_rank = std::max(max_rank, e.rank);
        bottom_ = top_ = -1;
        for (int i = 0; i < n; ++i) {
            if (rank(i) == 0) {
                if (bottom_ != -1) throw std::invalid_argument("poset: more than one element of rank 0");
                bottom_ = i;
            }
            if (rank(i) == max_rank) {
                if (top_ != -1) throw std::invalid_argument("poset: more than one element of maximal rank");
                top_ = i;
            }
        }
        if (bottom_ == -1) throw std::invalid_argument("poset: no element of rank 0");
        for (int i = 0; i < n; ++i) {
            if (i != top_ && up_[static_cast<std::size_t>(i)].empty())
                throw std::invalid_argument("poset: element " + name(i) + " is maximal but not the top");
            if (i != bottom_ && down_[static_cast<std::size_t>(i)].empty())
                throw std::invalid_argument("poset: element " + name(i) + " is minimal but not the bottom");
        }
    }

    int size() const { return static_cast<int>(elems_.size()); }
    const std::string& name(int i) const { return elems_[static_cast<std::size_t>(i)].name; }
    int rank(int i) const { return elems_[static_cast<std::size_t>(i)].rank; }
    int rank() const { return rank(top_); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    bool labeled() const { return width_ > 0; }
    int label_width() const { return width_; }
    const std::vector<Element>& elements() const { return elems_; }
    const std::vector<Cover>& covers() const { return covers_; }
    /// Cover indices leaving / entering element i.
    const std::vector<int>& up(int i) const { return up_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& down(int i) const { return down_[static_cast<std::size_t>(i)]; }

    std::optional<int> index_of(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<int> elements_at_rank(int r) const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (rank(i) == r) out.push_back(i);
        return out;
    }

    /// Number of maximal chains, by dynamic programming over ranks.
    Integer maximal_chain_count() const {
        std::vector<Integer> ways(static_cast<std::size_t>(size()), 0);
        ways[static_cast<std::size_t>(bottom_)] = 1;
        for (int r = 0; r < rank(); ++r)
            for (int x : elements_at_rank(r))
                for (int c : up(x)) ways[static_cast<std::size_t>(covers_[static_cast<std::size_t>(c)].upper)] += ways[static_cast<std::size_t>(x)];
        return ways[static_cast<std::size_t>(top_)];
    }

private:
    std::vector<Element> elems_;
    std::vector<Cover> covers_;
    std::vector<std::vector<int>> up_, down_;
    std::unordered_map<std::string, int> index_;
    int bottom_ = 0, top_ = 0, width_ = 0;
};

/// Reflexive down-sets as bitsets; answers x <= y in O(1).
class OrderIndex {
public:
    explicit OrderIndex(const LabeledPoset& P) : n_(P.size()), words_((P.size() + 63) / 64) {
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return P.rank(a) < P.rank(b); });
        for (int y : order) {
            set(y, y);
            for (int c : P.down(y)) {
                const int x = P.covers()[static_cast<std::size_t>(c)].lower;
                for (std::size_t w = 0; w < words_; ++w) row(y)[w] |= row(x)[w];
            }
        }
    }
    bool leq(int x, int y) const { return row(y)[static_cast<std::size_t>(x) / 64] >> (x % 64) & 1u; }

private:
    std::uint64_t* row(int y) { return bits_.data() + static_cast<std::size_t>(y) * words_; }
    const std::uint64_t* row(int y) const { return bits_.data() + static_cast<std::size_t>(y) * words_; }
    void set(int y, int x) { row(y)[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64); }
    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// Constructions

namespace detail {
inline void check_element_budget(const Integer& count, const Budget& budget, const std::string& what) {
    if (count > budget.elements)
        throw budget_exceeded(what + " would have " + count.str() + " elements (budget " +
                              std::to_string(budget.elements) + ")");
}
}  // namespace detail

/// Subsets of [n]; the cover A < A + {a} carries label a.
inline LabeledPoset boolean_lattice(int n, const Budget& budget = Budget::from_env()) {
    if (n < 0) throw std::invalid_argument("boolean_lattice: n must be nonnegative");
    if (n > 6) throw budget_exceeded("boolean_lattice: n = " + std::to_string(n) + " exceeds the size guard n <= 6");
    detail::check_element_budget(Integer(1) << n, budget, "B_" + std::to_string(n));
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    std::vector<int> index(masks.size());
    std::vector<LabeledPoset::Element> elems;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        index[masks[i]] = static_cast<int>(i);
        std::string name = "{";
        bool first = true;
        for (int a = 1; a <= n; ++a)
            if (masks[i] >> (a - 1) & 1u) {
                if (!first) name += ',';
                name += std::to_string(a);
                first = false;
            }
        name += '}';
        elems.push_back({std::move(name), std::popcount(masks[i])});
    }
    std::vector<Cover> covers;
    for (unsigned m : masks)
        for (int a = 1; a <= n; ++a)
            if (!(m >> (a - 1) & 1u)) covers.push_back({index[m], index[m | (1u << (a - 1))], {a}});
    return LabeledPoset(std::move(elems), std::move(covers));
}

namespace detail {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// Subspace of F_q^n in reduced echelon form with respect to the rightmost
// nonzero coordinate: each row has a distinct last nonzero position (its
// pivot, entry 1) and every other row is zero there.
struct Subspace {
    std::vector<std::vector<int>> rows;  // sorted by pivot
    std::vector<int> pivots;             // 0-based
    unsigned pivot_mask = 0;
};

inline bool contains_vector(const Subspace& Y, std::vector<int> v, int q) {
    const int n = static_cast<int>(v.size());
    for (int pos = n - 1; pos >= 0; --pos) {
        if (v[static_cast<std::size_t>(pos)] == 0) continue;
        auto it = std::find(Y.pivots.begin(), Y.pivots.end(), pos);
        if (it == Y.pivots.end()) return false;
        const auto& r = Y.rows[static_cast<std::size_t>(it - Y.pivots.begin())];
        const int c = v[static_cast<std::size_t>(pos)];
        for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(j)] = ((v[static_cast<std::size_t>(j)] - c * r[static_cast<std::size_t>(j)]) % q + q) % q;
    }
    return true;
}

inline std::vector<Subspace> subspaces_of_dimension(int n, int k, int q) {
    std::vector<Subspace> out;
    for (unsigned pm = 0; pm < (1u << n); ++pm) {
        if (std::popcount(pm) != k) continue;
        Subspace base;
        base.pivot_mask = pm;
        for (int p = 0; p < n; ++p)
            if (pm >> p & 1u) base.pivots.push_back(p);
        // Free cells: (row, col) with col < pivot(row) and col not a pivot.
        std::vector<std::pair<int, int>> free_cells;
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < base.pivots[static_cast<std::size_t>(r)]; ++c)
                if (!(pm >> c & 1u)) free_cells.emplace_back(r, c);
        std::vector<int> digits(free_cells.size(), 0);
        while (true) {
            Subspace s = base;
            s.rows.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < k; ++r) s.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(s.pivots[static_cast<std::size_t>(r)])] = 1;
            for (std::size_t f = 0; f < free_cells.size(); ++f)
                s.rows[static_cast<std::size_t>(free_cells[f].first)][static_cast<std::size_t>(free_cells[f].second)] = digits[f];
            out.push_back(std::move(s));
            std::size_t j = 0;
            while (j < digits.size() && ++digits[j] == q) digits[j++] = 0;
            if (j == digits.size()) break;
        }
    }
    return out;
}

inline std::string subspace_name(const Subspace& s) {
    std::string name = "<";
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
        if (r) name += ';';
        for (int x : s.rows[r]) name += std::to_string(x);
    }
    return name + ">";
}

}  // namespace detail

/// Subspaces of F_q^n (q prime), ranked by dimension. The cover X < Y is
/// labeled by the unique index that is the rightmost nonzero coordinate of
/// some vector in Y but of no vector in X.
inline LabeledPoset subspace_lattice(int n, int q, const Budget& budget = Budget::from_env()) {
    if (n < 0) throw std::invalid_argument("subspace_lattice: n must be nonnegative");
    if (!detail::is_prime(q)) throw std::invalid_argument("subspace_lattice: q = " + std::to_string(q) + " is not prime");
    if (n > 16) throw budget_exceeded("subspace_lattice: n too large");
    Integer total = 0;
    {
        // sum_k [n,k]_q, via the q-Pascal rule on integers
        std::vector<Integer> row{1};
        for (int m = 1; m <= n; ++m) {
            std::vector<Integer> next(static_cast<std::size_t>(m + 1), 1);
            for (int j = 1; j < m; ++j)
                next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + ipow(Integer(q), static_cast<unsigned>(j)) * row[static_cast<std::size_t>(j)];
            row = std::move(next);
        }
        for (const auto& v : row) total += v;
    }
    detail::check_element_budget(total, budget, "B_" + std::to_string(n) + "(" + std::to_string(q) + ")");

    std::vector<std::vector<detail::Subspace>> layers;
    for (int k = 0; k <= n; ++k) layers.push_back(detail::subspaces_of_dimension(n, k, q));
    std::vector<LabeledPoset::Element> elems;
    std::vector<int> offset;
    for (int k = 0; k <= n; ++k) {
        offset.push_back(static_cast<int>(elems.size()));
        for (const auto& s : layers[static_cast<std::size_t>(k)]) elems.push_back({detail::subspace_name(s), k});
    }
    std::vector<Cover> covers;
    for (int k = 0; k < n; ++k) {
        const auto& lower = layers[static_cast<std::size_t>(k)];
        const auto& upper = layers[static_cast<std::size_t>(k + 1)];
        for (std::size_t a = 0; a < lower.size(); ++a)
            for (std::size_t b = 0; b < upper.size(); ++b) {
                if ((lower[a].pivot_mask & ~upper[b].pivot_mask) != 0) continue;
                bool inside = true;
                for (const auto& v : lower[a].rows)
                    if (!detail::contains_vector(upper[b], v, q)) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                const unsigned fresh = upper[b].pivot_mask & ~lower[a].pivot_mask;
                covers.push_back({offset[static_cast<std::size_t>(k)] + static_cast<int>(a),
                                  offset[static_cast<std::size_t>(k + 1)] + static_cast<int>(b),
                                  {std::countr_zero(fresh) + 1}});
            }
    }
    return LabeledPoset(std::move(elems), std::move(covers));
}

/// t-fold Segre power: equal-rank t-tuples, componentwise covers, tuple labels.
inline LabeledPoset segre_power(const LabeledPoset& P, int t, const Budget& budget = Budget::from_env()) {
    if (t < 1) throw std::invalid_argument("segre_power: t must be at least 1");
    if (t == 1) return P;
    std::vector<std::vector<int>> layers;
    std::vector<int> pos_in_layer(static_cast<std::size_t>(P.size()));
    Integer total = 0;
    for (int r = 0; r <= P.rank(); ++r) {
        layers.push_back(P.elements_at_rank(r));
        for (std::size_t i = 0; i < layers.back().size(); ++i) pos_in_layer[static_cast<std::size_t>(layers.back()[i])] = static_cast<int>(i);
        total += ipow(Integer(layers.back().size()), static_cast<unsigned>(t));
    }
    detail::check_element_budget(total, budget, "Segre power");

    std::vector<LabeledPoset::Element> elems;
    std::vector<int> layer_offset;
    std::vector<std::vector<int>> tuples;  // component element ids per new element
    for (int r = 0; r <= P.rank(); ++r) {
        layer_offset.push_back(static_cast<int>(elems.size()));
        const auto& L = layers[static_cast<std::size_t>(r)];
        std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
        while (true) {
            std::vector<int> comp;
            std::string name = "(";
            for (int j = 0; j < t; ++j) {
                comp.push_back(L[idx[static_cast<std::size_t>(j)]]);
                if (j) name += '|';
                name += P.name(comp.back());
            }
            name += ')';
            elems.push_back({std::move(name), r});
            tuples.push_back(std::move(comp));
            // last component varies fastest, so tuples are in lexicographic order
            int j = t - 1;
            while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == L.size()) idx[static_cast<std::size_t>(j--)] = 0;
            if (j < 0) break;
        }
    }
    auto index_of_tuple = [&](int r, const std::vector<int>& comp) {
        const std::size_t base = layers[static_cast<std::size_t>(r)].size();
        std::size_t code = 0;
        for (int x : comp) code = code * base + static_cast<std::size_t>(pos_in_layer[static_cast<std::size_t>(x)]);
        return layer_offset[static_cast<std::size_t>(r)] + static_cast<int>(code);
    };
    std::vector<Cover> covers;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        const int r = elems[e].rank;
        if (r == P.rank()) continue;
        const auto& comp = tuples[e];
        std::vector<std::size_t> choice(static_cast<std::size_t>(t), 0);
        while (true) {
            std::vector<int> target;
            Label label;
            for (int j = 0; j < t; ++j) {
                const auto& cv = P.covers()[static_cast<std::size_t>(P.up(comp[static_cast<std::size_t>(j)])[choice[static_cast<std::size_t>(j)]])];
                target.push_back(cv.upper);
                label.insert(label.end(), cv.label.begin(), cv.label.end());
            }
            covers.push_back({static_cast<int>(e), index_of_tuple(r + 1, target), std::move(label)});
            int j = t - 1;
            while (j >= 0 && ++choice[static_cast<std::size_t>(j)] == P.up(comp[static_cast<std::size_t>(j)]).size()) choice[static_cast<std::size_t>(j--)] = 0;
            if (j < 0) break;
        }
    }
    return LabeledPoset(std::move(elems), std::move(covers));
}

/// Bounded subposet on ranks J plus bottom and top, re-ranked consecutively. Unlabeled.
inline LabeledPoset rank_select(const LabeledPoset& P, const RankSet& J) {
    if (J.ambient() != P.rank() && !(P.rank() <= 1 && J.empty()))
        throw std::invalid_argument("rank_select: rank set ambient does not match poset rank");
    std::vector<int> ranks{0};
    for (int j : J.elements()) ranks.push_back(j);
    if (P.rank() > 0) ranks.push_back(P.rank());
    std::vector<int> new_rank(static_cast<std::size_t>(P.rank() + 1), -1);
    for (std::size_t i = 0; i < ranks.size(); ++i) new_rank[static_cast<std::size_t>(ranks[i])] = static_cast<int>(i);

    const OrderIndex order(P);
    std::vector<int> new_index(static_cast<std::size_t>(P.size()), -1);
    std::vector<LabeledPoset::Element> elems;
    std::vector<std::vector<int>> by_new_rank(ranks.size());
    for (int i = 0; i < P.size(); ++i) {
        const int nr = new_rank[static_cast<std::size_t>(P.rank(i))];
        if (nr < 0) continue;
        new_index[static_cast<std::size_t>(i)] = static_cast<int>(elems.size());
        by_new_rank[static_cast<std::size_t>(nr)].push_back(i);
        elems.push_back({P.name(i), nr});
    }
    std::vector<Cover> covers;
    for (std::size_t r = 0; r + 1 < ranks.size(); ++r)
        for (int x : by_new_rank[r])
            for (int y : by_new_rank[r + 1])
                if (order.leq(x, y)) covers.push_back({new_index[static_cast<std::size_t>(x)], new_index[static_cast<std::size_t>(y)], {}});
    return LabeledPoset(std::move(elems), std::move(covers));
}

/// The closed interval [x, y] as a labeled poset, ranks shifted so x has rank 0.
inline LabeledPoset interval(const LabeledPoset& P, int x, int y) {
    const OrderIndex order(P);
    if (!order.leq(x, y)) throw std::invalid_argument("interval: x is not below y");
    std::vector<int> new_index(static_cast<std::size_t>(P.size()), -1);
    std::vector<LabeledPoset::Element> elems;
    for (int z = 0; z < P.size(); ++z)
        if (order.leq(x, z) && order.leq(z, y)) {
            new_index[static_cast<std::size_t>(z)] = static_cast<int>(elems.size());
            elems.push_back({P.name(z), P.rank(z) - P.rank(x)});
        }
    std::vector<Cover> covers;
    for (const auto& c : P.covers())
        if (new_index[static_cast<std::size_t>(c.lower)] >= 0 && new_index[static_cast<std::size_t>(c.upper)] >= 0)
            covers.push_back({new_index[static_cast<std::size_t>(c.lower)], new_index[static_cast<std::size_t>(c.upper)], c.label});
    return LabeledPoset(std::move(elems), std::move(covers));
}

// ---------------------------------------------------------------------------
// Mobius function

/// mu(x, y) by mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z).
inline Integer mobius(const LabeledPoset& P, int x, int y) {
    const OrderIndex order(P);
    if (!order.leq(x, y)) return 0;
    std::vector<int> interval;
    for (int z = 0; z < P.size(); ++z)
        if (order.leq(x, z) && order.leq(z, y)) interval.push_back(z);
    std::stable_sort(interval.begin(), interval.end(), [&](int a, int b) { return P.rank(a) < P.rank(b); });
    std::unordered_map<int, Integer> mu;
    for (int z : interval) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        Integer s = 0;
        for (int w : interval) {
            if (P.rank(w) >= P.rank(z)) break;
            if (order.leq(w, z)) s += mu[w];
        }
        mu[z] = -s;
    }
    return mu[y];
}

inline Integer mobius(const LabeledPoset& P) { return mobius(P, P.bottom(), P.top()); }

// ---------------------------------------------------------------------------
// Chain census

struct ChainCensus {
    int rank = 0;
    Integer total = 0;
    std::map<LabelWord, Integer> by_word;
    std::map<std::uint64_t, Integer> by_descent_mask;  // bit i-1 <=> descent at i
    Integer decreasing = 0;                              // no ascent anywhere

    Integer with_descents(const RankSet& J) const {
        auto it = by_descent_mask.find(J.mask());
        return it == by_descent_mask.end() ? Integer(0) : it->second;
    }
};

namespace detail {
inline void check_chain_budget(const LabeledPoset& P, const Budget& budget) {
    const Integer chains = P.maximal_chain_count();
    if (chains > budget.chains)
        throw budget_exceeded("poset has " + chains.str() + " maximal chains (budget " + std::to_string(budget.chains) + ")");
}
}  // namespace detail

/// Enumerates every maximal chain bottom -> top by depth-first search.
inline ChainCensus chain_census(const LabeledPoset& P, const Budget& budget = Budget::from_env()) {
    if (!P.labeled() && P.rank() > 0) throw std::invalid_argument("chain_census: poset is unlabeled");
    detail::check_chain_budget(P, budget);
    ChainCensus census;
    census.rank = P.rank();
    LabelWord word;
    const std::uint64_t full = RankSet::full_mask(P.rank());
    auto dfs = [&](auto&& self, int x) -> void {
        if (x == P.top()) {
            census.total += 1;
            census.by_word[word] += 1;
            const std::uint64_t des = word_descent_mask(word);
            census.by_descent_mask[des] += 1;
            if (des == full) census.decreasing += 1;
            return;
        }
        for (int c : P.up(x)) {
            const auto& cv = P.covers()[static_cast<std::size_t>(c)];
            word.push_back(cv.label);
            self(self, cv.upper);
            word.pop_back();
        }
    };
    dfs(dfs, P.bottom());
    return census;
}

// ---------------------------------------------------------------------------
// EL verification

struct ElReport {
    bool pass = true;
    std::size_t intervals_checked = 0;
    std::optional<std::pair<int, int>> witness;  // failing interval [x, y]
    std::string reason;
};

/// Checks every closed interval [x, y], x < y: exactly one strictly increasing
/// maximal chain, and its word lexicographically precedes every other chain's word.
inline ElReport verify_el(const LabeledPoset& P, const Budget& budget = Budget::from_env()) {
    ElReport report;
    if (!P.labeled()) {
        report.pass = P.rank() == 0;
        report.reason = report.pass ? "" : "poset is unlabeled";
        return report;
    }
    detail::check_chain_budget(P, budget);
    const OrderIndex order(P);
    for (int x = 0; x < P.size(); ++x) {
        // Saturated chains from x, bucketed by endpoint.
        std::map<int, std::vector<LabelWord>> words;
        LabelWord word;
        auto dfs = [&](auto&& self, int z) -> void {
            if (!word.empty()) words[z].push_back(word);
            for (int c : P.up(z)) {
                const auto& cv = P.covers()[static_cast<std::size_t>(c)];
                word.push_back(cv.label);
                self(self, cv.upper);
                word.pop_back();
            }
        };
        dfs(dfs, x);
        for (const auto& [y, ws] : words) {
            ++report.intervals_checked;
            std::optional<std::size_t> inc;
            std::size_t inc_count = 0;
            for (std::size_t i = 0; i < ws.size(); ++i)
                if (word_descent_mask(ws[i]) == 0) {
                    ++inc_count;
                    inc = i;
                }
            auto fail = [&](std::string why) {
                report.pass = false;
                report.witness = std::make_pair(x, y);
                report.reason = std::move(why);
            };
            if (inc_count != 1) {
                fail("interval [" + P.name(x) + ", " + P.name(y) + "] has " + std::to_string(inc_count) +
                     " increasing maximal chains");
                return report;
            }
            for (std::size_t i = 0; i < ws.size(); ++i) {
                if (i == *inc) continue;
                if (!lex_precedes(ws[*inc], ws[i])) {
                    fail("in interval [" + P.name(x) + ", " + P.name(y) +
                         "] the increasing chain does not lexicographically precede every other chain");
                    return report;
                }
            }
        }
    }
    (void)order;
    return report;
}

// ---------------------------------------------------------------------------
// Fixtures

/// The six-element poset with a repeated label on one maximal chain
/// (words 123, 132, 212).
inline LabeledPoset repeated_label_fixture() {
    std::vector<LabeledPoset::Element> e{{"0", 0}, {"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}, {"1", 3}};
    std::vector<Cover> c{{0, 1, {1}}, {0, 2, {2}}, {1, 3, {2}}, {1, 4, {3}}, {2, 4, {1}}, {3, 5, {3}}, {4, 5, {2}}};
    return LabeledPoset(std::move(e), std::move(c));
}

/// Named fixtures: "example-2-7", "example-2-7-square", "boolean-N",
/// "subspace-N-Q", with an optional "-tT" suffix for a Segre power.
inline LabeledPoset named_fixture(const std::string& spec, const Budget& budget = Budget::from_env()) {
    if (spec == "example-2-7") return repeated_label_fixture();
    if (spec == "example-2-7-square") return segre_power(repeated_label_fixture(), 2, budget);
    std::vector<std::string> parts;
    {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, '-')) parts.push_back(tok);
    }
    auto num = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad fixture name: " + spec);
        return std::stoi(s);
    };
    int t = 1;
    if (!parts.empty() && parts.back().size() > 1 && parts.back()[0] == 't') {
        t = num(parts.back().substr(1));
        parts.pop_back();
    }
    if (parts.size() == 2 && parts[0] == "boolean") return segre_power(boolean_lattice(num(parts[1]), budget), t, budget);
    if (parts.size() == 3 && parts[0] == "subspace")
        return segre_power(subspace_lattice(num(parts[1]), num(parts[2]), budget), t, budget);
    throw std::invalid_argument("unknown fixture: " + spec);
}

// ---------------------------------------------------------------------------
// Text exchange format
//
//   poset v1
//   element <id> <rank>
//   cover <lower-id> <upper-id> [l1,l2,...]

inline std::string write_poset(const LabeledPoset& P) {
    std::string out = "poset v1\n";
    for (const auto& e : P.elements()) out += "element " + e.name + " " + std::to_string(e.rank) + "\n";
    for (const auto& c : P.covers()) {
        out += "cover " + P.name(c.lower) + " " + P.name(c.upper);
        if (!c.label.empty()) out += " " + label_to_string(c.label);
        out += "\n";
    }
    return out;
}

inline LabeledPoset read_poset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto error = [&](const std::string& why) {
        return std::invalid_argument("poset file line " + std::to_string(lineno) + ": " + why);
    };
    bool header = false;
    std::vector<LabeledPoset::Element> elems;
    std::unordered_map<std::string, int> index;
    std::vector<std::tuple<std::string, std::string, Label>> raw_covers;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string s; ls >> s;) tok.push_back(s);
        if (!header) {
            if (tok != std::vector<std::string>{"poset", "v1"}) throw error("expected header 'poset v1'");
            header = true;
            continue;
        }
        if (tok[0] == "element") {
            if (tok.size() != 3) throw error("element line needs an id and a rank");
            if (tok[2].find_first_not_of("0123456789") != std::string::npos) throw error("bad rank");
            if (!index.emplace(tok[1], static_cast<int>(elems.size())).second) throw error("duplicate id " + tok[1]);
            elems.push_back({tok[1], std::stoi(tok[2])});
        } else if (tok[0] == "cover") {
            if (tok.size() != 3 && tok.size() != 4) throw error("cover line needs two ids and an optional label");
            Label label;
            if (tok.size() == 4) {
                std::stringstream ss(tok[3]);
                for (std::string v; std::getline(ss, v, ',');) {
                    if (v.empty() || v.find_first_not_of("-0123456789") != std::string::npos) throw error("bad label");
                    label.push_back(std::stoi(v));
                }
            }
            raw_covers.emplace_back(tok[1], tok[2], std::move(label));
        } else {
            throw error("unknown record '" + tok[0] + "'");
        }
    }
    if (!header) throw std::invalid_argument("poset file: missing header");
    std::vector<Cover> covers;
    for (auto& [lo, hi, label] : raw_covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end()) throw std::invalid_argument("poset file: cover references unknown id");
        covers.push_back({a->second, b->second, std::move(label)});
    }
    return LabeledPoset(std::move(elems), std::move(covers));
}

}  // namespace segrelat
