#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace segrelat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a brute-force enumeration would exceed its configured budget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a cross-check between two independent routes disagrees.
class verification_failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration limits shared by the brute-force routes and the poset oracle.
struct Budget {
    std::uint64_t tuples = 10'000'000;
    std::uint64_t elements = 20'000;
    std::uint64_t chains = 2'000'000;

    /// Parses "N" (tuple budget) or "tuples=N,elements=N,chains=N".
    static Budget parse(std::string_view text) {
        Budget b;
        auto to_u64 = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("empty budget value");
            std::uint64_t v = 0;
            for (char c : s) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad budget value: " + std::string(s));
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return v;
        };
        if (text.find('=') == std::string_view::npos) {
            b.tuples = to_u64(text);
            return b;
        }
        while (!text.empty()) {
            auto comma = text.find(',');
            auto item = text.substr(0, comma);
            auto eq = item.find('=');
            if (eq == std::string_view::npos) throw std::invalid_argument("bad budget item: " + std::string(item));
            auto key = item.substr(0, eq);
            auto val = to_u64(item.substr(eq + 1));
            if (key == "tuples") b.tuples = val;
            else if (key == "elements") b.elements = val;
            else if (key == "chains") b.chains = val;
            else throw std::invalid_argument("unknown budget key: " + std::string(key));
            if (comma == std::string_view::npos) break;
            text.remove_prefix(comma + 1);
        }
        return b;
    }

    /// Defaults, overridden by SEGRELAT_BUDGET when set.
    static Budget from_env() {
        if (const char* env = std::getenv("SEGRELAT_BUDGET"); env && *env) return parse(env);
        return Budget{};
    }
};

inline std::string to_decimal(const Integer& v) { return v.str(); }

/// "p" for integral values, "p/q" otherwise.
inline std::string to_decimal(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num(std::string(s.substr(0, slash)));
    Integer den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

inline bool is_integral(const Rational& v) { return denominator(v) == 1; }

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Integer ipow(Integer base, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace segrelat
