#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antisym/errors.hpp"
#include "antisym/identity.hpp"
#include "antisym/q_limit.hpp"
#include "antisym/simplex_integral.hpp"

#ifndef ANTISYM_VERSION
#define ANTISYM_VERSION "1.0.0"
#endif

namespace antisym::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "antisym";
inline constexpr const char* kToolVersion = ANTISYM_VERSION;
inline constexpr const char* kPointRng =
    "mt19937_64(seed); coordinates n/d with d uniform in 2..97, n uniform in 1..d-1";

/// Exit codes of run().
enum ExitCode : int { kOk = 0, kDisagreement = 1, kUsage = 2 };

/// Round-trips through 12 significant digits so the JSON text carries at most 12.
inline double round12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline Json header(const char* command) {
    return Json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}};
}

inline Json to_json(const VerificationReport& r, std::optional<unsigned> trials = {},
                    std::optional<std::uint64_t> seed = {}) {
    Json j = header("verify");
    j["k"] = r.k;
    j["mode"] = to_string(r.mode);
    if (r.mode == VerifyMode::numeric) {
        if (trials) j["trials"] = *trials;
        if (seed) j["seed"] = *seed;
        j["rng"] = kPointRng;
    }
    j["equal"] = r.equal;
    j["lhs_term_count"] = r.lhs_term_count;
    if (r.numerator_monomials) j["numerator_monomials"] = *r.numerator_monomials;
    if (r.points_tested) j["points_tested"] = *r.points_tested;
    if (r.witness) j["witness"] = *r.witness;
    j["elapsed_seconds"] = round12(r.elapsed_seconds);
    return j;
}

inline Json to_json(const LimitReport& r) {
    Json j = header("limit");
    j["a"] = r.a.entries();
    j["k"] = r.k();
    j["lhs_limit"] = to_string(r.lhs);
    j["rhs_limit"] = to_string(r.rhs);
    j["equal"] = r.equal;
    j["elapsed_seconds"] = round12(r.elapsed_seconds);
    return j;
}

inline Json to_json(const IntegralReport& r) {
    Json j = header("integral");
    Json a = Json::array();
    for (const auto& x : r.a.entries()) {
        a.push_back(to_string(x));
    }
    j["a"] = a;
    j["k"] = r.a.size();
    j["method"] = to_string(r.method);
    j["closed_form"] = to_string(r.closed_form);
    j["perm_sum"] = to_string(r.perm_sum);
    if (r.nested) j["nested"] = to_string(*r.nested);
    j["sign_factor"] = r.sign_factor;
    if (r.mc) {
        j["mc"] = Json{{"estimate", round12(r.mc->estimate)},
                       {"stderr", round12(r.mc->standard_error)},
                       {"samples", r.mc->samples},
                       {"seed", r.mc->seed},
                       {"rng", std::string(kMonteCarloRng)}};
    }
    j["agree"] = r.agree;
    if (!r.failures.empty()) j["failures"] = r.failures;
    j["elapsed_seconds"] = round12(r.elapsed_seconds);
    return j;
}

/// Single-line JSON object followed by a newline.
template <class Report>
std::string emit_json(const Report& report) {
    return to_json(report).dump() + "\n";
}

struct RunConfig {
    std::string command;
    unsigned k = 0;
    std::string mode;
    unsigned trials = 20;
    std::uint64_t seed = 0;
    std::string a;
    std::string method = "all";
    std::uint64_t samples = 100000;
    bool json = false;
    unsigned max_k = 0;
    unsigned max_symbolic_k = 5;
    unsigned max_numeric_k = 9;
    unsigned workers = 0;
};

namespace detail {

inline void human(std::ostream& out, const VerificationReport& r) {
    out << "verify k=" << r.k << " mode=" << to_string(r.mode) << ": equal=" << (r.equal ? "true" : "false")
        << " (lhs terms " << r.lhs_term_count;
    if (r.numerator_monomials) out << ", numerator monomials " << *r.numerator_monomials;
    if (r.points_tested) out << ", points " << *r.points_tested;
    out << ", " << r.elapsed_seconds << " s)\n";
    if (r.witness) out << "witness: " << *r.witness << "\n";
}

inline void human(std::ostream& out, const LimitReport& r) {
    out << "a = ";
    for (unsigned i = 1; i <= r.k(); ++i) out << (i > 1 ? "," : "") << r.a(i);
    out << "\nlhs limit = " << to_string(r.lhs) << "\nrhs limit = " << to_string(r.rhs)
        << "\nequal = " << (r.equal ? "true" : "false") << "\n";
}

inline void human(std::ostream& out, const IntegralReport& r) {
    out << "closed_form = " << to_string(r.closed_form) << "\nperm_sum    = " << to_string(r.perm_sum) << "\n";
    if (r.nested) {
        out << "nested      = " << to_string(*r.nested) << "  (sign factor " << r.sign_factor << ")\n";
    }
    if (r.mc) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "mc          = %.12g +- %.3g (%llu samples, seed %llu)\n", r.mc->estimate,
                      r.mc->standard_error, static_cast<unsigned long long>(r.mc->samples),
                      static_cast<unsigned long long>(r.mc->seed));
        out << buf;
    }
    for (const auto& f : r.failures) out << "FAILED: " << f << "\n";
    out << "agree = " << (r.agree ? "true" : "false") << "\n";
}

inline int bench(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options{cfg.max_symbolic_k, cfg.max_numeric_k, cfg.workers};
    bool ok = true;
    out << "k,mode,terms,monomials,seconds\n";
    char secs[32];
    for (unsigned k = 1; k <= cfg.max_k; ++k) {
        if (k <= cfg.max_symbolic_k) {
            const auto start = std::chrono::steady_clock::now();
            const auto lhs = build_lhs(k, cfg.workers);
            std::snprintf(secs, sizeof secs, "%.6f", antisym::detail::seconds_since(start));
            out << k << ",build_lhs," << Permutation::factorial(k) << "," << lhs.numerator().size() << "," << secs
                << "\n";
            const auto r = verify_symbolic(k, options);
            ok = ok && r.equal;
            std::snprintf(secs, sizeof secs, "%.6f", r.elapsed_seconds);
            out << k << ",symbolic," << r.lhs_term_count << "," << *r.numerator_monomials << "," << secs << "\n";
        }
        if (k <= cfg.max_numeric_k) {
            const auto r = verify_numeric(k, cfg.trials, cfg.seed, options);
            ok = ok && r.equal;
            std::snprintf(secs, sizeof secs, "%.6f", r.elapsed_seconds);
            out << k << ",numeric," << r.lhs_term_count << ",," << secs << "\n";
        }
    }
    return ok ? kOk : kDisagreement;
}

} // namespace detail

/// Parses and executes one command. Usage errors go to `err` with exit code 2.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact verification of an antisymmetrization identity, its q -> 1 limit and the "
                 "resulting simplex integral",
                 kToolName};
    app.require_subcommand(1, 1);

    auto* verify = app.add_subcommand("verify", "Check the rational-function identity for one k");
    verify->add_option("--k", cfg.k, "Number of variables")->required()->check(CLI::Range(1U, kMaxVariables));
    verify->add_option("--mode", cfg.mode, "symbolic|numeric (default: symbolic for k <= 4)")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    verify->add_option("--trials", cfg.trials, "Random points in numeric mode")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "Seed for numeric sampling");
    verify->add_option("--max-symbolic-k", cfg.max_symbolic_k, "Symbolic budget");
    verify->add_option("--max-numeric-k", cfg.max_numeric_k, "Numeric budget");

    auto* limit = app.add_subcommand("limit", "q -> 1 limit of both sides at x_i = q^a_i");
    limit->add_option("--a", cfg.a, "Comma-separated positive integers")->required();

    auto* integral = app.add_subcommand("integral", "Evaluate the simplex integral by several methods");
    integral->add_option("--a", cfg.a, "Comma-separated positive integers or p/q rationals")->required();
    integral->add_option("--method", cfg.method, "closed|perm-sum|nested|mc|all")
        ->check(CLI::IsMember({"closed", "perm-sum", "nested", "mc", "all"}));
    integral->add_option("--samples", cfg.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    integral->add_option("--seed", cfg.seed, "Monte Carlo seed");

    auto* bench = app.add_subcommand("bench", "CSV timings of every verification path");
    bench->add_option("--max-k", cfg.max_k, "Largest k")->required()->check(CLI::Range(1U, kMaxVariables));
    bench->add_option("--max-symbolic-k", cfg.max_symbolic_k, "Symbolic budget");
    bench->add_option("--max-numeric-k", cfg.max_numeric_k, "Numeric budget");
    bench->add_option("--trials", cfg.trials, "Random points per numeric row")->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "Seed for numeric sampling");

    for (auto* sub : {verify, limit, integral}) {
        sub->add_flag("--json", cfg.json, "Emit a JSON report");
    }
    for (auto* sub : {verify, limit, integral, bench}) {
        sub->add_option("--workers", cfg.workers, "Worker threads (0 = hardware)");
    }

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back(kToolName);
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) {
            cfg.command = "verify";
            const bool symbolic = cfg.mode.empty() ? cfg.k <= 4 : cfg.mode == "symbolic";
            VerifyOptions options{cfg.max_symbolic_k, cfg.max_numeric_k, cfg.workers};
            const auto r = symbolic ? verify_symbolic(cfg.k, options)
                                    : verify_numeric(cfg.k, cfg.trials, cfg.seed, options);
            if (cfg.json) {
                out << to_json(r, cfg.trials, cfg.seed).dump() << "\n";
            } else {
                detail::human(out, r);
            }
            return r.equal ? kOk : kDisagreement;
        }
        if (limit->parsed()) {
            cfg.command = "limit";
            const auto a = ExponentVector::parse(cfg.a);
            const auto r = check_limit_identity(a, cfg.workers);
            if (cfg.json) {
                out << emit_json(r);
            } else {
                detail::human(out, r);
            }
            return r.equal ? kOk : kDisagreement;
        }
        if (integral->parsed()) {
            cfg.command = "integral";
            const auto a = RationalExponentVector::parse(cfg.a);
            const auto method = parse_integral_method(cfg.method);
            if (method == IntegralMethod::nested || method == IntegralMethod::mc || method == IntegralMethod::all) {
                if (!a.all_integer()) {
                    throw NonIntegerExponent("--method " + cfg.method + " needs integer exponents");
                }
            }
            const auto r = cross_check(a, method, cfg.samples, cfg.seed, cfg.workers);
            if (cfg.json) {
                out << emit_json(r);
            } else {
                detail::human(out, r);
            }
            return r.agree ? kOk : kDisagreement;
        }
        cfg.command = "bench";
        return detail::bench(cfg, out);
    } catch (const Error& e) {
        err << kToolName << " " << cfg.command << ": " << e.what() << "\n";
        return kUsage;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace antisym::cli
