#pragma once

// The segrelat command line. run() never calls exit(), so tests can drive it
// with an argument vector and capture both streams.

#include "battery.hpp"

#include "segrelat/io.hpp"
#include "segrelat/multisym.hpp"
#include "segrelat/poset_oracle.hpp"
#include "segrelat/segre_invariants.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace segrelat::cli {

enum ExitCode { exit_ok = 0, exit_invalid = 1, exit_budget = 2, exit_verification = 3 };

enum class Format { json, csv, latex };

struct Options {
    Format format = Format::json;
    std::string output;
    std::string budget;
};

namespace detail {

inline std::string latex_key(const PartitionTuple& key, Basis basis) {
    std::string s;
    const char* letter = basis == Basis::S ? "s" : "h";
    for (std::size_t j = 0; j < key.size(); ++j)
        s += std::string(letter) + "_{" + (key[j].empty() ? std::string("\\emptyset") : "(" + key[j].to_string() + ")") +
             "}(X^{" + std::to_string(j + 1) + "})";
    return s;
}

inline std::string latex_sum(const MultiSymFunc& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        if (a != 1) s += (is_integral(a) ? to_decimal(a) : "\\tfrac{" + to_decimal(Integer(numerator(a))) + "}{" +
                                                           to_decimal(Integer(denominator(a))) + "}") + "\\,";
        s += latex_key(key, f.basis());
    }
    return s;
}

inline std::string latex_poly(const QPoly& p) {
    std::string s = p.to_string();
    // "q^12" needs braces in LaTeX
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out += "^{" + s.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
        } else {
            out += s[i];
        }
    }
    return out;
}

inline void csv_terms(std::ostream& out, const std::string& which, const MultiSymFunc& f) {
    for (const auto& [key, c] : f.terms()) out << which << "," << basis_name(f.basis()) << ",\"" << key_to_string(key) << "\"," << to_decimal(c) << "\n";
}

inline void csv_poly(std::ostream& out, const QPoly& p) {
    out << "power,coeff\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << k << "," << to_decimal(p.coeffs()[k]) << "\n";
}

/// Scalar fields of a JSON object as key,value lines.
inline void csv_scalars(std::ostream& out, const Json& j) {
    out << "key,value\n";
    for (const auto& [k, v] : j.items()) {
        if (v.is_structured()) continue;
        out << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

inline void latex_scalars(std::ostream& out, const Json& j) {
    out << "\\begin{tabular}{ll}\n";
    for (const auto& [k, v] : j.items()) {
        if (v.is_structured()) continue;
        std::string key = k;
        for (std::size_t p = 0; (p = key.find('_', p)) != std::string::npos; p += 2) key.replace(p, 1, "\\_");
        out << key << " & " << (v.is_string() ? v.get<std::string>() : v.dump()) << " \\\\\n";
    }
    out << "\\end{tabular}\n";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands. Each writes its artifact to `out` in the requested format.

inline void cmd_wtable(std::ostream& out, Format fmt, int nmax, int tmax, WRoute route, const Budget& budget) {
    if (nmax < 0 || tmax < 1) throw std::invalid_argument("wtable: need nmax >= 0 and tmax >= 1");
    std::vector<std::vector<Integer>> rows;
    for (int t = 1; t <= tmax; ++t) {
        rows.emplace_back();
        for (int n = 0; n <= nmax; ++n) rows.back().push_back(w_t(n, t, route, budget));
    }
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "wtable";
        j["route"] = route_name(route);
        j["nmax"] = nmax;
        j["tmax"] = tmax;
        Json arr = Json::array();
        for (int t = 1; t <= tmax; ++t) {
            Json row;
            row["t"] = t;
            Json w = Json::array();
            for (const auto& v : rows[static_cast<std::size_t>(t - 1)]) w.push_back(to_decimal(v));
            row["w"] = std::move(w);
            arr.push_back(std::move(row));
        }
        j["rows"] = std::move(arr);
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "t";
        for (int n = 0; n <= nmax; ++n) out << ",n=" << n;
        out << "\n";
        for (int t = 1; t <= tmax; ++t) {
            out << t;
            for (const auto& v : rows[static_cast<std::size_t>(t - 1)]) out << "," << v;
            out << "\n";
        }
        break;
    case Format::latex:
        out << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(nmax + 1), 'r') << "}\n";
        out << "$t \\backslash n$";
        for (int n = 0; n <= nmax; ++n) out << " & " << n;
        out << " \\\\\n\\hline\n";
        for (int t = 1; t <= tmax; ++t) {
            out << t;
            for (const auto& v : rows[static_cast<std::size_t>(t - 1)]) out << " & " << v;
            out << " \\\\\n";
        }
        out << "\\end{tabular}\n";
        break;
    }
}

inline void cmd_wq(std::ostream& out, Format fmt, int n, int t, const std::optional<std::string>& rank_set, QRoute route,
                   const Budget& budget) {
    if (n < 0 || t < 1) throw std::invalid_argument("wq: need n >= 0 and t >= 1");
    QPoly p;
    std::string J = "full";
    if (rank_set) {
        const RankSet rs = parse_rank_set(n, *rank_set);
        p = rank_W_t_q(n, t, rs, route, budget);
        J = rs.to_string();
    } else {
        p = W_t_q(n, t, route, budget);
    }
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "wq";
        j["n"] = n;
        j["t"] = t;
        j["rank_set"] = J;
        j["route"] = route_name(route);
        j["polynomial"] = to_json(p);
        j["text"] = p.to_string();
        j["at_q_equals_1"] = to_decimal(p.eval(1));
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        detail::csv_poly(out, p);
        break;
    case Format::latex:
        out << "\\[ " << (rank_set ? "\\tilde\\beta_{B_{" + std::to_string(n) + "}^{(" + std::to_string(t) + ")}(q)}(" +
                                         (J == "none" ? std::string("\\emptyset") : "\\{" + J + "\\}") + ")"
                                   : "W_{" + std::to_string(n) + "}^{(" + std::to_string(t) + ")}(q)")
            << " = " << detail::latex_poly(p) << " \\]\n";
        break;
    }
}

inline void cmd_beta(std::ostream& out, Format fmt, int n, int t, Basis basis, const std::optional<std::string>& rank_set,
                     RankRoute route) {
    if (n < 0 || t < 1) throw std::invalid_argument("beta: need n >= 0 and t >= 1");
    std::optional<MultiSymFunc> alpha;
    MultiSymFunc beta = MultiSymFunc::one(t);
    std::string J = "full";
    if (rank_set) {
        const RankSet rs = parse_rank_set(n, *rank_set);
        auto ab = rank_alpha_beta(n, t, rs, route);
        alpha = ab.alpha.to_basis(basis);
        beta = ab.beta.to_basis(basis);
        J = rs.to_string();
    } else {
        beta = beta_t(n, t).to_basis(basis);
    }
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "beta";
        j["n"] = n;
        j["t"] = t;
        j["rank_set"] = J;
        if (alpha) j["alpha"] = to_json(*alpha);
        j["beta"] = to_json(beta);
        j["dimension"] = to_decimal(dimension(beta));
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "function,basis,key,coeff\n";
        if (alpha) detail::csv_terms(out, "alpha", *alpha);
        detail::csv_terms(out, "beta", beta);
        break;
    case Format::latex:
        if (alpha) out << "\\[ \\alpha = " << detail::latex_sum(*alpha) << " \\]\n";
        out << "\\[ \\beta = " << detail::latex_sum(beta) << " \\]\n";
        break;
    }
}

inline void cmd_phi(std::ostream& out, Format fmt, const std::string& schur, int t, Basis basis) {
    if (t < 1) throw std::invalid_argument("phi: need t >= 1");
    const Partition lambda = parse_partition(schur);
    const auto image = phi_t(schur_to_h(lambda), t).to_basis(basis);
    const auto in_s = basis == Basis::S ? image : image.to_s();
    int negatives = 0;
    for (const auto& [k, c] : in_s.terms())
        if (c < 0) ++negatives;
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "phi";
        j["schur"] = to_json(lambda);
        j["t"] = t;
        j["image"] = to_json(image);
        j["not_all_nonnegative"] = negatives > 0;
        j["negative_s_terms"] = negatives;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "function,basis,key,coeff\n";
        detail::csv_terms(out, "phi", image);
        break;
    case Format::latex:
        out << "\\[ \\Phi_{" << t << "}(s_{(" << lambda.to_string() << ")}) = " << detail::latex_sum(image) << " \\]\n";
        break;
    }
}

/// Principal specialization certificate; returns false when the identity fails.
inline bool cmd_ps(std::ostream& out, Format fmt, int n, int t, const std::optional<std::string>& rank_set,
                   std::optional<int> whitney) {
    if (n < 0 || t < 1) throw std::invalid_argument("ps: need n >= 0 and t >= 1");
    MultiSymFunc F = MultiSymFunc::one(t);
    QPoly expected;
    std::string what;
    if (whitney) {
        if (rank_set) throw std::invalid_argument("ps: --whitney and --rank-set are exclusive");
        if (*whitney < 0 || *whitney > n) throw std::invalid_argument("ps: Whitney index must lie in [0, n]");
        F = whitney_char(n, t, *whitney);
        expected = whitney_q(n, t, *whitney);
        what = "whitney r=" + std::to_string(*whitney);
    } else if (rank_set) {
        const RankSet J = parse_rank_set(n, *rank_set);
        F = rank_alpha_beta(n, t, J).beta;
        expected = rank_W_t_q(n, t, J);
        what = "rank_set " + J.to_string();
    } else {
        F = beta_t(n, t);
        expected = W_t_q(n, t);
        what = "full";
    }
    const QRatNF lhs = principal_specialization(F);
    const QRatNF rhs{expected, static_cast<unsigned>(n), static_cast<unsigned>(t)};
    const bool equal = lhs == rhs;
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "ps";
        j["n"] = n;
        j["t"] = t;
        j["case"] = what;
        j["specialization"] = to_json(lhs);
        j["poset_side"] = to_json(rhs);
        j["equal"] = equal;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "side,power,coeff\n";
        for (std::size_t k = 0; k < lhs.numerator.coeffs().size(); ++k)
            out << "specialization," << k << "," << lhs.numerator.coeffs()[k] << "\n";
        for (std::size_t k = 0; k < rhs.numerator.coeffs().size(); ++k)
            out << "poset_side," << k << "," << rhs.numerator.coeffs()[k] << "\n";
        out << "equal," << (equal ? "true" : "false") << ",\n";
        break;
    case Format::latex:
        out << "\\[ \\frac{" << detail::latex_poly(lhs.numerator) << "}{\\prod_{i=1}^{" << lhs.n << "}(1-q^i)^{" << t
            << "}} " << (equal ? "=" : "\\neq") << " \\frac{" << detail::latex_poly(rhs.numerator)
            << "}{\\prod_{i=1}^{" << n << "}(1-q^i)^{" << t << "}} \\]\n";
        break;
    }
    return equal;
}

inline LabeledPoset load_poset(const std::string& fixture, const std::string& file, const Budget& budget) {
    if (fixture.empty() == file.empty()) throw std::invalid_argument("poset: give exactly one of --fixture or --file");
    if (!fixture.empty()) return named_fixture(fixture, budget);
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::invalid_argument("poset: cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_poset(ss.str());
}

inline Json poset_summary(const LabeledPoset& P, const std::string& source) {
    Json j;
    j["source"] = source;
    j["elements"] = P.size();
    j["covers"] = P.covers().size();
    j["rank"] = P.rank();
    j["maximal_chains"] = to_decimal(P.maximal_chain_count());
    return j;
}

inline void emit_poset_json(std::ostream& out, Format fmt, const Json& j) {
    switch (fmt) {
    case Format::json: out << j.dump(2) << "\n"; break;
    case Format::csv: detail::csv_scalars(out, j); break;
    case Format::latex: detail::latex_scalars(out, j); break;
    }
}

/// Returns false when EL verification fails.
inline bool cmd_poset(std::ostream& out, Format fmt, const std::string& action, const std::string& fixture,
                      const std::string& file, const std::optional<std::string>& rank_set, const Budget& budget) {
    const LabeledPoset P = load_poset(fixture, file, budget);
    const std::string source = fixture.empty() ? file : fixture;
    if (action == "build") {
        out << write_poset(P);
        return true;
    }
    if (action == "verify-el") {
        const auto report = verify_el(P, budget);
        Json j = poset_summary(P, source);
        j["el"] = report.pass ? "pass" : "fail";
        j["intervals_checked"] = report.intervals_checked;
        if (report.witness) {
            j["witness"] = Json::array({P.name(report.witness->first), P.name(report.witness->second)});
            j["reason"] = report.reason;
        } else {
            j["witness"] = nullptr;
        }
        if (P.labeled()) j["decreasing_chains"] = to_decimal(chain_census(P, budget).decreasing);
        j["mobius"] = to_decimal(mobius(P));
        emit_poset_json(out, fmt, j);
        return report.pass;
    }
    if (action == "mobius") {
        Json j = poset_summary(P, source);
        if (rank_set) {
            const RankSet J = parse_rank_set(P.rank(), *rank_set);
            const Integer mu = mobius(rank_select(P, J));
            j["rank_set"] = J.to_string();
            j["mobius"] = to_decimal(mu);
            // rank-selected Betti number: (-1)^{|J|-1} mu
            j["betti"] = to_decimal((J.size() + 1) % 2 ? Integer(-mu) : mu);
        } else {
            j["mobius"] = to_decimal(mobius(P));
        }
        emit_poset_json(out, fmt, j);
        return true;
    }
    if (action == "census") {
        const auto census = chain_census(P, budget);
        auto word_string = [](const LabelWord& w) {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += '|';
                s += label_to_string(w[i]);
            }
            return s;
        };
        if (fmt == Format::csv) {
            out << "kind,key,count\n";
            for (const auto& [w, c] : census.by_word) out << "word,\"" << word_string(w) << "\"," << c << "\n";
            for (const auto& [m, c] : census.by_descent_mask)
                out << "descent_set,\"" << RankSet::from_mask(census.rank, m).to_string() << "\"," << c << "\n";
            out << "decreasing,," << census.decreasing << "\n";
            return true;
        }
        Json j = poset_summary(P, source);
        j["decreasing_chains"] = to_decimal(census.decreasing);
        if (fmt == Format::latex) {
            detail::latex_scalars(out, j);
            return true;
        }
        Json words = Json::array();
        for (const auto& [w, c] : census.by_word) words.push_back(Json{{"word", word_string(w)}, {"count", to_decimal(c)}});
        Json des = Json::array();
        for (const auto& [m, c] : census.by_descent_mask)
            des.push_back(Json{{"descent_set", RankSet::from_mask(census.rank, m).to_string()}, {"count", to_decimal(c)}});
        j["words"] = std::move(words);
        j["descent_sets"] = std::move(des);
        out << j.dump(2) << "\n";
        return true;
    }
    throw std::invalid_argument("poset: unknown action '" + action + "'");
}

/// Returns false if any check failed.
inline bool cmd_verify(std::ostream& out, std::ostream& err, Format fmt, const std::string& suite) {
    const auto results = run_suite(build_suite(suite));
    bool all = true;
    for (const auto& r : results)
        if (!r.pass) {
            if (all) err << "verification failed: " << r.name << ": " << r.detail << "\n";
            all = false;
        }
    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "verify";
        j["suite"] = suite;
        Json arr = Json::array();
        for (const auto& r : results) {
            Json c;
            c["check"] = r.name;
            c["status"] = r.pass ? "pass" : "fail";
            if (!r.pass) c["detail"] = r.detail;
            arr.push_back(std::move(c));
        }
        j["checks"] = std::move(arr);
        j["all_pass"] = all;
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << "check,status\n";
        for (const auto& r : results) out << "\"" << r.name << "\"," << (r.pass ? "pass" : "fail") << "\n";
        break;
    case Format::latex:
        out << "\\begin{tabular}{ll}\n";
        for (const auto& r : results) out << r.name << " & " << (r.pass ? "pass" : "fail") << " \\\\\n";
        out << "\\end{tabular}\n";
        break;
    }
    return all;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of Segre powers of Boolean and subspace lattices"};
    app.require_subcommand(1);
    Options opt;
    std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"latex", Format::latex}};
    app.add_option("--format", opt.format, "json, csv or latex")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--output,-o", opt.output, "write the artifact to this file instead of stdout");
    app.add_option("--budget", opt.budget, "N (tuples) or tuples=N,elements=N,chains=N");

    std::map<std::string, WRoute> w_routes{{"recurrence", WRoute::recurrence}, {"brute", WRoute::brute},
                                           {"dimension", WRoute::dimension}, {"genfun", WRoute::genfun}};
    std::map<std::string, QRoute> q_routes{{"recurrence", QRoute::recurrence}, {"brute", QRoute::brute}};
    std::map<std::string, RankRoute> rank_routes{{"syt", RankRoute::syt}, {"recurrence", RankRoute::recurrence},
                                                 {"inclusion-exclusion", RankRoute::inclusion_exclusion}};
    std::map<std::string, Basis> bases{{"Z", Basis::Z}, {"S", Basis::S}};

    int nmax = 5, tmax = 6, n = 0, t = 2;
    WRoute wroute = WRoute::recurrence;
    QRoute qroute = QRoute::recurrence;
    RankRoute rroute = RankRoute::syt;
    Basis basis = Basis::S;
    std::optional<std::string> rank_set;
    std::optional<int> whitney;
    std::string schur, action, fixture, file, suite = "small";

    auto* wtable = app.add_subcommand("wtable", "table of w_n^(t), t rows by n columns");
    wtable->add_option("--nmax", nmax)->capture_default_str();
    wtable->add_option("--tmax", tmax)->capture_default_str();
    wtable->add_option("--route", wroute)->transform(CLI::CheckedTransformer(w_routes));

    auto* wq = app.add_subcommand("wq", "W_n^(t)(q), or the rank-selected Betti polynomial");
    wq->add_option("--n", n)->required();
    wq->add_option("--t", t)->required();
    wq->add_option("--rank-set", rank_set, "comma-separated ranks, or none");
    wq->add_option("--route", qroute)->transform(CLI::CheckedTransformer(q_routes));

    auto* beta = app.add_subcommand("beta", "top-homology characteristic, optionally rank-selected");
    beta->add_option("--n", n)->required();
    beta->add_option("--t", t)->required();
    beta->add_option("--basis", basis)->transform(CLI::CheckedTransformer(bases));
    beta->add_option("--rank-set", rank_set);
    beta->add_option("--route", rroute)->transform(CLI::CheckedTransformer(rank_routes));

    auto* phi = app.add_subcommand("phi", "image of a Schur function under Phi_t");
    phi->add_option("--schur", schur, "partition, e.g. 3,2,2")->required();
    phi->add_option("--t", t)->required();
    phi->add_option("--basis", basis)->transform(CLI::CheckedTransformer(bases));

    auto* ps = app.add_subcommand("ps", "principal specialization certificate");
    ps->add_option("--n", n)->required();
    ps->add_option("--t", t)->required();
    ps->add_option("--rank-set", rank_set);
    ps->add_option("--whitney", whitney, "Whitney homology index r");

    auto* poset = app.add_subcommand("poset", "explicit poset oracle");
    poset->add_option("action", action, "build, verify-el, mobius or census")
        ->required()
        ->check(CLI::IsMember({"build", "verify-el", "mobius", "census"}));
    poset->add_option("--fixture", fixture, "example-2-7, example-2-7-square, boolean-N, subspace-N-Q, optional -tT");
    poset->add_option("--file", file, "poset v1 text file");
    poset->add_option("--rank-set", rank_set, "rank selection before computing the Mobius number");

    auto* verify = app.add_subcommand("verify", "route-agreement battery");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"small", "full"}))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }

    std::ostringstream buffer;
    try {
        const Budget budget = opt.budget.empty() ? Budget::from_env() : Budget::parse(opt.budget);
        bool good = true;
        if (*wtable) cmd_wtable(buffer, opt.format, nmax, tmax, wroute, budget);
        else if (*wq) cmd_wq(buffer, opt.format, n, t, rank_set, qroute, budget);
        else if (*beta) cmd_beta(buffer, opt.format, n, t, basis, rank_set, rroute);
        else if (*phi) cmd_phi(buffer, opt.format, schur, t, basis);
        else if (*ps) good = cmd_ps(buffer, opt.format, n, t, rank_set, whitney);
        else if (*poset) good = cmd_poset(buffer, opt.format, action, fixture, file, rank_set, budget);
        else if (*verify) good = cmd_verify(buffer, err, opt.format, suite);

        if (opt.output.empty()) {
            out << buffer.str();
        } else {
            std::ofstream f(opt.output, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write " + opt.output);
            f << buffer.str();
        }
        if (!good) {
            if (!*verify) err << "verification failed\n";
            return exit_verification;
        }
        return exit_ok;
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const verification_failure& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verification;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}

}  // namespace segrelat::cli
