// Command line surface over the continued-fraction library and the
// factoring pipeline. Fractions are entered as "p/q" strings so values
// stay exact end to end; decimal input would silently re-approximate.
//
// Exit codes: 0 success, 2 usage or parse error, 3 precondition error,
// 4 retries exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shorcf/approx.hpp"
#include "shorcf/continued_fraction.hpp"
#include "shorcf/measure_sim.hpp"
#include "shorcf/modular.hpp"
#include "shorcf/shor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitRetriesExhausted = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

shorcf::Rational parse_fraction(const std::string& text) {
    try {
        return shorcf::Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
    if (seed_opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("SHOR_CF_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("SHOR_CF_SEED is not an unsigned integer: " + std::string(env));
        }
    }
    return flag_value;
}

std::string json_line(const nlohmann::ordered_json& j) {
    return j.dump() + "\n";
}

// Witnesses print with an explicit denominator: 0 is shown as 0/1.
std::string fraction_str(const shorcf::Rational& r) {
    return r.num().get_str() + "/" + r.den().get_str();
}

nlohmann::ordered_json integer_json(const shorcf::Integer& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();  // beyond 64 bits: decimal string
}

int cmd_cf(const std::string& fraction, std::optional<std::size_t> max_terms, bool as_json) {
    const auto x = parse_fraction(fraction);
    const auto cf = max_terms ? shorcf::cf_expand_real(x, *max_terms)
                              : shorcf::cf_from_rational(x);
    if (as_json) {
        nlohmann::ordered_json j;
        auto& coeffs = j["coeffs"] = nlohmann::ordered_json::array();
        for (const auto& a : cf.coefficients()) coeffs.push_back(integer_json(a));
        std::cout << json_line(j);
    } else {
        std::cout << cf.str() << "\n";
    }
    return kExitOk;
}

int cmd_convergents(const std::string& fraction, bool as_csv, bool as_json) {
    const auto x = parse_fraction(fraction);
    const shorcf::ConvergentTable table(shorcf::cf_from_rational(x));
    if (as_json) {
        nlohmann::ordered_json j;
        auto& rows = j["convergents"] = nlohmann::ordered_json::array();
        for (int n = 0; n <= table.order(); ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            row["a"] = integer_json(table.coefficient(n));
            row["p"] = integer_json(table.p(n));
            row["q"] = integer_json(table.q(n));
            rows.push_back(std::move(row));
        }
        std::cout << json_line(j);
    } else if (as_csv) {
        std::cout << "n,a,p,q\n";
        for (int n = 0; n <= table.order(); ++n) {
            std::cout << n << ',' << table.coefficient(n) << ',' << table.p(n) << ','
                      << table.q(n) << "\n";
        }
    } else {
        std::cout << "n a p q value\n";
        char value[64];
        for (int n = 0; n <= table.order(); ++n) {
            std::snprintf(value, sizeof(value), "%.12g", table.value(n).to_double());
            std::cout << n << ' ' << table.coefficient(n) << ' ' << table.p(n) << ' '
                      << table.q(n) << ' ' << value << "\n";
        }
    }
    return kExitOk;
}

int cmd_approx(const std::string& x_text, const std::string& cand_text, bool as_json) {
    const auto x = parse_fraction(x_text);
    const auto cand = parse_fraction(cand_text);
    const auto legendre = shorcf::legendre_is_convergent(x, cand);
    const auto verdict = shorcf::classify_approximation(x, cand);
    if (as_json) {
        nlohmann::ordered_json j;
        j["legendre"] = legendre.hypothesis_holds;
        if (legendre.convergent_index) {
            j["index"] = *legendre.convergent_index;
        } else {
            j["index"] = nullptr;
        }
        j["first"] = verdict.is_first_kind;
        j["second"] = verdict.is_second_kind;
        if (verdict.witness) {
            j["witness"] = fraction_str(*verdict.witness);
        } else {
            j["witness"] = nullptr;
        }
        std::cout << json_line(j);
    } else {
        std::cout << "legendre=" << (legendre.hypothesis_holds ? "true" : "false");
        if (legendre.convergent_index) {
            std::cout << " index=" << *legendre.convergent_index;
        }
        std::cout << " first=" << (verdict.is_first_kind ? "true" : "false")
                  << " second=" << (verdict.is_second_kind ? "true" : "false");
        if (verdict.witness) {
            std::cout << " witness=" << fraction_str(*verdict.witness);
        }
        std::cout << "\n";
    }
    return kExitOk;
}

shorcf::DistributionMode parse_mode(const std::string& mode) {
    if (mode == "conditional") return shorcf::DistributionMode::conditional;
    if (mode == "mixture") return shorcf::DistributionMode::mixture;
    throw UsageError("mode must be 'conditional' or 'mixture', got '" + mode + "'");
}

int cmd_dist(std::int64_t n, std::optional<std::int64_t> a, std::optional<std::int64_t> p,
             const std::string& mode_text, std::int64_t x0, const std::string& out_path,
             bool as_json) {
    const auto mode = parse_mode(mode_text);
    const auto reg = shorcf::choose_register_size(n);
    const std::int64_t period = p ? *p : shorcf::multiplicative_order(*a, n);
    const auto dist = shorcf::build_distribution(reg, period, mode, x0);
    const auto report = shorcf::window_mass(dist, period);

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return kExitPrecondition;
        }
        if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json") {
            shorcf::write_distribution_json(dist, out);
        } else {
            shorcf::write_distribution_csv(dist, out);
        }
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["N"] = reg.N;
        j["p"] = period;
        j["mode"] = mode_text;
        j["window_mass"] = report.total_mass;
        std::cout << json_line(j);
    } else {
        char mass[32];
        std::snprintf(mass, sizeof(mass), "%.6f", report.total_mass);
        std::cout << "N=" << reg.N << " p=" << period << " window_mass=" << mass << "\n";
    }
    return kExitOk;
}

int cmd_factor(std::int64_t n, std::uint64_t seed, int retries, std::int64_t k_max,
               const std::string& mode_text) {
    shorcf::ShorConfig config;
    config.n = n;
    config.seed = seed;
    config.max_a_retries = retries;
    config.max_k_search = k_max;
    config.mode = parse_mode(mode_text);
    const auto report = shorcf::shor_factor(config);
    std::cout << shorcf::to_json_string(report);
    return report.factors ? kExitOk : kExitRetriesExhausted;
}

int cmd_verify(std::int64_t a, std::int64_t p, std::int64_t n, bool as_json) {
    const bool ok = shorcf::verify_period(a, p, n);
    if (as_json) {
        nlohmann::ordered_json j;
        j["a"] = a;
        j["p"] = p;
        j["n"] = n;
        j["verified"] = ok;
        std::cout << json_line(j);
    } else {
        std::cout << "verified=" << (ok ? "true" : "false") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact continued fractions and classical Shor post-processing"};
    app.require_subcommand(1);

    // cf
    auto* cf = app.add_subcommand("cf", "Continued fraction of a rational p/q");
    std::string cf_fraction;
    std::size_t cf_max_terms = 0;
    bool cf_json = false;
    cf->add_option("fraction", cf_fraction, "Input as p/q or integer")->required();
    auto* cf_terms_opt = cf->add_option("--max-terms", cf_max_terms,
                                        "Truncate the expansion after this many coefficients");
    cf->add_flag("--json", cf_json, "Emit JSON");

    // convergents
    auto* conv = app.add_subcommand("convergents", "Convergent table of a rational p/q");
    std::string conv_fraction;
    bool conv_csv = false, conv_json = false;
    conv->add_option("fraction", conv_fraction, "Input as p/q or integer")->required();
    conv->add_flag("--csv", conv_csv, "Emit CSV (columns n,a,p,q)");
    conv->add_flag("--json", conv_json, "Emit JSON");

    // approx
    auto* approx = app.add_subcommand("approx",
                                      "Best-approximation kinds and the convergent criterion");
    std::string approx_x, approx_cand;
    bool approx_json = false;
    approx->add_option("x", approx_x, "Target value as p/q")->required();
    approx->add_option("candidate", approx_cand, "Candidate approximation as p/q")->required();
    approx->add_flag("--json", approx_json, "Emit JSON");

    // dist
    auto* dist = app.add_subcommand("dist", "Post-measurement distribution over y");
    std::int64_t dist_n = 0, dist_a = 0, dist_p = 0, dist_x0 = 0;
    std::string dist_mode = "mixture", dist_out;
    bool dist_json = false;
    dist->add_option("--n", dist_n, "Number to factor")->required();
    auto* dist_a_opt = dist->add_option("--a", dist_a, "Base; its order becomes the period");
    auto* dist_p_opt = dist->add_option("--p", dist_p, "Explicit period");
    dist->add_option("--mode", dist_mode, "conditional or mixture (default mixture)");
    dist->add_option("--x0", dist_x0, "Offset for conditional mode (default 0)");
    dist->add_option("--out", dist_out, "Write the table to this file (.json or CSV)");
    dist->add_flag("--json", dist_json, "Emit the summary as JSON");
    dist_a_opt->excludes(dist_p_opt);

    // factor
    auto* factor = app.add_subcommand("factor", "Run the full factoring pipeline");
    std::int64_t factor_n = 0, factor_kmax = 0;
    std::uint64_t factor_seed = 1;
    int factor_retries = 25;
    std::string factor_mode = "mixture";
    factor->add_option("--n", factor_n, "Number to factor")->required();
    auto* factor_seed_opt =
        factor->add_option("--seed", factor_seed, "Run seed (or env SHOR_CF_SEED; default 1)");
    factor->add_option("--retries", factor_retries, "Maximum bases to try (default 25)");
    factor->add_option("--k-max", factor_kmax, "Fallback search bound (default n)");
    factor->add_option("--mode", factor_mode, "conditional or mixture (default mixture)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check whether a^p = 1 (mod n)");
    std::int64_t verify_a = 0, verify_p = 0, verify_n = 0;
    bool verify_json = false;
    verify->add_option("--a", verify_a, "Base")->required();
    verify->add_option("--p", verify_p, "Candidate period")->required();
    verify->add_option("--n", verify_n, "Modulus")->required();
    verify->add_flag("--json", verify_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cf->parsed()) {
            std::optional<std::size_t> terms;
            if (cf_terms_opt->count() > 0) terms = cf_max_terms;
            return cmd_cf(cf_fraction, terms, cf_json);
        }
        if (conv->parsed()) return cmd_convergents(conv_fraction, conv_csv, conv_json);
        if (approx->parsed()) return cmd_approx(approx_x, approx_cand, approx_json);
        if (dist->parsed()) {
            if (dist_a_opt->count() == 0 && dist_p_opt->count() == 0) {
                throw UsageError("dist requires --a or --p");
            }
            std::optional<std::int64_t> a, p;
            if (dist_a_opt->count() > 0) a = dist_a;
            if (dist_p_opt->count() > 0) p = dist_p;
            return cmd_dist(dist_n, a, p, dist_mode, dist_x0, dist_out, dist_json);
        }
        if (factor->parsed()) {
            const std::uint64_t seed = resolve_seed(factor_seed_opt, factor_seed);
            return cmd_factor(factor_n, seed, factor_retries, factor_kmax, factor_mode);
        }
        if (verify->parsed()) return cmd_verify(verify_a, verify_p, verify_n, verify_json);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}
