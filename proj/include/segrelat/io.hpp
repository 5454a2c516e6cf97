#pragma once

// JSON encodings and small text parsers shared by the CLI and the tests.
// Coefficients are decimal strings so arbitrary precision survives a round trip.

#include "segrelat/arith.hpp"
#include "segrelat/multisym.hpp"
#include "segrelat/perm_core.hpp"
#include "segrelat/qpoly.hpp"
#include "segrelat/symfunc.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace segrelat {

using Json = nlohmann::ordered_json;

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("expected comma-separated nonnegative integers, got '" + text + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

/// "3,2,2" -> (3,2,2). Parts must already be weakly decreasing and positive.
inline Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0") return Partition();
    return Partition(parse_int_list(text));
}

/// "none" or "1,3" inside ambient rank n.
inline RankSet parse_rank_set(int n, const std::string& text) {
    if (text == "none" || text.empty()) return RankSet::none(n);
    return RankSet(n, parse_int_list(text));
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const QPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_decimal(c));
    return a;
}

inline QPoly qpoly_from_json(const Json& j) {
    std::vector<Integer> c;
    for (const auto& v : j) c.emplace_back(v.get<std::string>());
    return QPoly(std::move(c));
}

inline Json to_json(const QRatNF& r) {
    Json j;
    j["numerator"] = to_json(r.numerator);
    j["n"] = r.n;
    j["t"] = r.t;
    return j;
}

inline Json to_json(const SymFunc& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms()) {
        Json term;
        term["partition"] = to_json(lambda);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    return terms;
}

inline Json to_json(const MultiSymFunc& f) {
    Json j;
    j["t"] = f.t();
    j["basis"] = basis_name(f.basis());
    j["degrees"] = f.degrees();
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json mus = Json::array();
        for (const auto& p : key) mus.push_back(to_json(p));
        Json term;
        term["mus"] = std::move(mus);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MultiSymFunc multisym_from_json(const Json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "Z" && b != "S") throw std::invalid_argument("basis must be Z or S");
    MultiSymFunc f(j.at("t").get<int>(), j.at("degrees").get<std::vector<int>>(), b == "Z" ? Basis::Z : Basis::S);
    for (const auto& term : j.at("terms")) {
        PartitionTuple key;
        for (const auto& p : term.at("mus")) key.emplace_back(p.get<std::vector<int>>());
        f.add(key, parse_rational(term.at("coeff").get<std::string>()));
    }
    return f;
}

/// "4,3|6,1": alphabets separated by '|', the empty partition written as "0".
inline std::string key_to_string(const PartitionTuple& key) {
    std::string s;
    for (std::size_t j = 0; j < key.size(); ++j) {
        if (j) s += '|';
        s += key[j].empty() ? "0" : key[j].to_string();
    }
    return s;
}

}  // namespace segrelat
