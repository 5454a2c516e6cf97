#pragma once

// Partitions, permutations, rank sets, tableau counting and the
// permutation-statistic layer shared by every other module.

#include "segrelat/arith.hpp"
#include "segrelat/qpoly.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrelat {

/// Integer partition: strictly positive, weakly decreasing parts.
///
/// Partitions compare in the canonical reverse-lexicographic order, so that
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). Every associative container
/// keyed by partitions iterates in this order.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    /// Sorts into decreasing order and drops zero parts.
    static Partition from_parts(std::vector<int> parts) {
        std::erase_if(parts, [](int p) { return p == 0; });
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// (1^n)
    static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    /// (n), or the empty partition for n = 0.
    static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// 1-based; 0 past the last part.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

    /// m_i(lambda): number of parts equal to i.
    int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

    Partition conjugate() const {
        std::vector<int> c(static_cast<std::size_t>(largest()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    /// Concatenate-and-sort; the multiplication of h-monomial keys.
    friend Partition operator|(const Partition& a, const Partition& b) {
        std::vector<int> p = a.parts_;
        p.insert(p.end(), b.parts_.begin(), b.parts_.end());
        return from_parts(std::move(p));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return b.parts_ <=> a.parts_;
    }

private:
    std::vector<int> parts_;
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in canonical (reverse-lexicographic) order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(n, n, cur, out);
    return out;
}

/// Subset J of [n-1] for a rank-n poset (or a length-n word).
class RankSet {
public:
    RankSet() = default;
    RankSet(int ambient, std::vector<int> elems) : n_(ambient), e_(std::move(elems)) {
        if (ambient < 0) throw std::invalid_argument("RankSet: ambient rank must be nonnegative");
        std::sort(e_.begin(), e_.end());
        if (std::adjacent_find(e_.begin(), e_.end()) != e_.end())
            throw std::invalid_argument("RankSet: repeated element");
        for (int j : e_)
            if (j < 1 || j > ambient - 1)
                throw std::invalid_argument("RankSet: element " + std::to_string(j) + " outside [1," +
                                            std::to_string(ambient - 1) + "]");
    }

    static RankSet none(int n) { return RankSet(n, {}); }
    static RankSet full(int n) {
        std::vector<int> e;
        for (int i = 1; i < n; ++i) e.push_back(i);
        return RankSet(n, std::move(e));
    }
    /// {1, ..., k}
    static RankSet initial(int n, int k) {
        std::vector<int> e;
        for (int i = 1; i <= k; ++i) e.push_back(i);
        return RankSet(n, std::move(e));
    }
    /// Bit i-1 set iff i is an element.
    static RankSet from_mask(int n, std::uint64_t mask) {
        std::vector<int> e;
        for (int i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1u) e.push_back(i);
        return RankSet(n, std::move(e));
    }

    int ambient() const { return n_; }
    const std::vector<int>& elements() const { return e_; }
    int size() const { return static_cast<int>(e_.size()); }
    bool empty() const { return e_.empty(); }
    bool contains(int j) const { return std::binary_search(e_.begin(), e_.end(), j); }
    int max() const { return e_.empty() ? 0 : e_.back(); }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (int j : e_) m |= std::uint64_t{1} << (j - 1);
        return m;
    }

    RankSet complement() const { return from_mask(n_, full_mask(n_) & ~mask()); }
    RankSet without_max() const {
        std::vector<int> e(e_.begin(), e_.empty() ? e_.end() : e_.end() - 1);
        return RankSet(n_, std::move(e));
    }
    /// The same set viewed inside a smaller ambient rank.
    RankSet restricted_to(int ambient) const { return RankSet(ambient, e_); }
    bool subset_of(const RankSet& o) const { return (mask() & ~o.mask()) == 0; }

    /// All subsets of this set, by increasing mask.
    std::vector<RankSet> subsets() const {
        std::vector<RankSet> out;
        std::uint64_t m = mask();
        for (std::uint64_t s = 0;; s = (s - m) & m) {
            out.push_back(from_mask(n_, s));
            if (s == m) break;
        }
        std::sort(out.begin(), out.end(), [](const RankSet& a, const RankSet& b) { return a.mask() < b.mask(); });
        return out;
    }

    /// Composition (j1, j2-j1, ..., n-jr) of the ambient rank.
    std::vector<int> composition() const {
        std::vector<int> c;
        int prev = 0;
        for (int j : e_) {
            c.push_back(j - prev);
            prev = j;
        }
        c.push_back(n_ - prev);
        return c;
    }

    static std::uint64_t full_mask(int n) { return n <= 1 ? 0 : (std::uint64_t{1} << (n - 1)) - 1; }

    /// "1,3" or "none".
    std::string to_string() const {
        if (e_.empty()) return "none";
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        return s;
    }

    friend bool operator==(const RankSet&, const RankSet&) = default;

private:
    int n_ = 0;
    std::vector<int> e_;
};

/// Permutation of [n] in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : w_(std::move(word)) {
        std::vector<bool> seen(w_.size() + 1, false);
        for (int x : w_) {
            if (x < 1 || x > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("not a permutation word");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& word() const { return w_; }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }

    bool next() { return std::next_permutation(w_.begin(), w_.end()); }

private:
    std::vector<int> w_;
};

struct PermStats {
    RankSet ascents;
    RankSet descents;
    int inversions = 0;
};

inline PermStats perm_stats(const Permutation& s) {
    const int n = s.size();
    std::vector<int> asc, des;
    for (int i = 1; i < n; ++i) (s(i) < s(i + 1) ? asc : des).push_back(i);
    int inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (s(i) > s(j)) ++inv;
    return {RankSet(n, std::move(asc)), RankSet(n, std::move(des)), inv};
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace detail {

struct KostkaMemo {
    std::shared_mutex mu;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> table;
};
inline KostkaMemo& kostka_memo() {
    static KostkaMemo m;
    return m;
}

// Number of SSYT of shape `shape` whose entries are 1..content.size() with
// content[k-1] copies of k. The largest value occupies a horizontal strip.
inline Integer kostka_rec(const std::vector<int>& shape, const std::vector<int>& content) {
    if (content.empty()) return shape.empty() ? Integer(1) : Integer(0);
    auto& memo = kostka_memo();
    auto key = std::make_pair(shape, content);
    {
        std::shared_lock lock(memo.mu);
        if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    }
    const int strip = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    Integer total = 0;
    // Choose inner shape kappa with shape[i+1] <= kappa[i] <= shape[i].
    std::vector<int> inner(shape.size());
    auto rec = [&](auto&& self, std::size_t row, int left) -> void {
        if (row == shape.size()) {
            if (left != 0) return;
            std::vector<int> k = inner;
            while (!k.empty() && k.back() == 0) k.pop_back();
            total += kostka_rec(k, rest);
            return;
        }
        int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int v = shape[row]; v >= lo; --v) {
            int used = shape[row] - v;
            if (used > left) break;
            inner[row] = v;
            self(self, row + 1, left - used);
        }
    };
    rec(rec, 0, strip);
    std::unique_lock lock(memo.mu);
    memo.table.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// K_{shape,content}: semistandard Young tableaux of the given shape and content.
inline Integer kostka(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight())
        throw std::invalid_argument("kostka: weight mismatch between " + shape.to_string() + " and " +
                                    content.to_string());
    return detail::kostka_rec(shape.parts(), content.parts());
}

/// f^lambda, the number of standard Young tableaux.
inline Integer syt_count(const Partition& shape) { return kostka(shape, Partition::column(shape.weight())); }

// ---------------------------------------------------------------------------
// SYT descent sets

namespace detail {

struct DescentMemo {
    std::shared_mutex mu;
    std::map<Partition, std::vector<Integer>> table;
};
inline DescentMemo& descent_memo() {
    static DescentMemo m;
    return m;
}

// Index = descent mask (bit i-1 <=> i is a descent); value = #SYT.
inline const std::vector<Integer>& syt_descent_table(const Partition& shape) {
    auto& memo = descent_memo();
    {
        std::shared_lock lock(memo.mu);
        if (auto it = memo.table.find(shape); it != memo.table.end()) return it->second;
    }
    const int n = shape.weight();
    std::vector<Integer> counts(std::size_t{1} << (n > 0 ? n - 1 : 0));
    const auto& target = shape.parts();
    std::vector<int> rows(target.size(), 0);
    // Place 1..n into successive addable cells; a descent at i means i+1 lands in a lower row.
    auto rec = [&](auto&& self, int placed, int prev_row, std::uint64_t mask) -> void {
        if (placed == n) {
            counts[mask] += 1;
            return;
        }
        for (std::size_t r = 0; r < target.size(); ++r) {
            if (rows[r] == target[r]) continue;
            if (r > 0 && rows[r] >= rows[r - 1]) continue;
            ++rows[r];
            std::uint64_t m = mask;
            if (placed > 0 && static_cast<int>(r) > prev_row) m |= std::uint64_t{1} << (placed - 1);
            self(self, placed + 1, static_cast<int>(r), m);
            --rows[r];
        }
    };
    rec(rec, 0, -1, 0);
    std::unique_lock lock(memo.mu);
    return memo.table.emplace(shape, std::move(counts)).first->second;
}

}  // namespace detail

enum class DescentMatch { exact, subset };

/// Standard Young tableaux of `shape` whose descent set equals J (or lies inside J).
inline Integer syt_count_with_descents(const Partition& shape, const RankSet& J,
                                       DescentMatch match = DescentMatch::exact) {
    if (shape.weight() != J.ambient() && !(shape.weight() == 0 && J.ambient() <= 1))
        throw std::invalid_argument("syt_count_with_descents: |lambda| must equal the ambient rank of J");
    const auto& table = detail::syt_descent_table(shape);
    const std::uint64_t m = J.mask();
    if (match == DescentMatch::exact) return m < table.size() ? table[m] : Integer(0);
    Integer total = 0;
    for (std::uint64_t s = 0; s < table.size(); ++s)
        if ((s & ~m) == 0) total += table[s];
    return total;
}

// ---------------------------------------------------------------------------
// Tuples of permutations and common ascents

/// For each common-ascent set A of a t-tuple in S_n^t, the generating
/// polynomial sum of q^{inv(s_1)+...+inv(s_t)} over tuples whose common ascent set is exactly A.
struct CommonAscentCensus {
    int n = 0;
    int t = 0;
    std::vector<QPoly> by_mask;  // index = common-ascent mask

    const QPoly& of(const RankSet& common_ascents) const { return by_mask[common_ascents.mask()]; }
};

inline Integer tuple_count(int n, int t) { return ipow(factorial(static_cast<unsigned>(n)), static_cast<unsigned>(t)); }

/// Brute-force scan of S_n^t. Refuses when n!^t exceeds budget.tuples.
inline CommonAscentCensus common_ascent_census(int n, int t, const Budget& budget = Budget::from_env()) {
    if (n < 0 || t < 1) throw std::invalid_argument("common_ascent_census: need n >= 0, t >= 1");
    if (tuple_count(n, t) > budget.tuples)
        throw budget_exceeded("brute-force scan of S_" + std::to_string(n) + "^" + std::to_string(t) + " needs " +
                              tuple_count(n, t).str() + " tuples (budget " + std::to_string(budget.tuples) +
                              "); use the recurrence route instead");
    struct Entry {
        std::uint64_t asc;
        int inv;
    };
    std::vector<Entry> perms;
    for (auto p = Permutation::identity(n);;) {
        auto st = perm_stats(p);
        perms.push_back({st.ascents.mask(), st.inversions});
        if (!p.next()) break;
    }
    const std::size_t masks = std::size_t{1} << (n > 0 ? n - 1 : 0);
    const int max_inv = t * n * (n - 1) / 2;
    std::vector<std::uint64_t> counts(masks * static_cast<std::size_t>(max_inv + 1), 0);
    const std::uint64_t all = RankSet::full_mask(n);
    auto rec = [&](auto&& self, int depth, std::uint64_t common, int inv) -> void {
        if (depth == t) {
            ++counts[common * static_cast<std::size_t>(max_inv + 1) + static_cast<std::size_t>(inv)];
            return;
        }
        for (const auto& e : perms) self(self, depth + 1, common & e.asc, inv + e.inv);
    };
    rec(rec, 0, all, 0);

    CommonAscentCensus c{n, t, {}};
    c.by_mask.reserve(masks);
    for (std::size_t m = 0; m < masks; ++m) {
        std::vector<Integer> cs(static_cast<std::size_t>(max_inv + 1));
        for (int k = 0; k <= max_inv; ++k) cs[static_cast<std::size_t>(k)] = counts[m * (max_inv + 1) + k];
        c.by_mask.emplace_back(std::move(cs));
    }
    return c;
}

enum class CommonAscentMode {
    none_common,       ///< tuples with no common ascent
    exact_complement,  ///< tuples whose common ascent set is [n-1] \ J
};

/// Sum over qualifying tuples of prod q^{inv(s_i)}.
inline QPoly count_tuples_common_ascent_q(int n, int t, const RankSet& target, CommonAscentMode mode,
                                          const Budget& budget = Budget::from_env()) {
    auto census = common_ascent_census(n, t, budget);
    if (mode == CommonAscentMode::none_common) return census.by_mask[0];
    if (target.ambient() != n && !(n <= 1 && target.empty()))
        throw std::invalid_argument("count_tuples_common_ascent: rank set ambient must equal n");
    return census.by_mask[RankSet::full_mask(n) & ~target.mask()];
}

/// Number of qualifying tuples; the q = 1 shadow of count_tuples_common_ascent_q.
inline Integer count_tuples_common_ascent(int n, int t, const RankSet& target, CommonAscentMode mode,
                                          const Budget& budget = Budget::from_env()) {
    return count_tuples_common_ascent_q(n, t, target, mode, budget).eval(1);
}

}  // namespace segrelat
