#include "shorcf/shor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "shorcf/approx.hpp"
#include "shorcf/continued_fraction.hpp"
#include "shorcf/modular.hpp"

namespace shorcf {

namespace {

using i64 = std::int64_t;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Some b with b^k = m for a k >= 2, if any.
std::optional<i64> perfect_power_base(i64 m) {
    if (m < 4) return std::nullopt;
    for (int k = 2; k < 63 && (i64(1) << k) <= m; ++k) {
        const i64 guess = std::llround(std::pow(static_cast<double>(m), 1.0 / k));
        for (i64 b = std::max<i64>(2, guess - 1); b <= guess + 1; ++b) {
            i64 acc = 1;
            bool over = false;
            for (int i = 0; i < k; ++i) {
                if (acc > m / b) { over = true; break; }
                acc *= b;
            }
            if (!over && acc == m) return b;
        }
    }
    return std::nullopt;
}

struct RunState {
    int total_runs = 0;
};

std::optional<std::pair<i64, i64>> run_attempt_loop(const ShorConfig& config, i64 N,
                                                    std::vector<AttemptRecord>& attempts,
                                                    RunState& state);

// Splits m completely into primes, running further pipeline rounds for
// composite parts. Appends m itself if a sub-run comes up empty.
void decompose_into_primes(i64 m, const ShorConfig& config, int depth, RunState& state,
                           std::vector<i64>& primes) {
    if (m <= 1) return;
    if (is_prime(m)) {
        primes.push_back(m);
        return;
    }
    if (depth > 64) {
        primes.push_back(m);
        return;
    }
    if (m % 2 == 0) {
        primes.push_back(2);
        decompose_into_primes(m / 2, config, depth + 1, state, primes);
        return;
    }
    if (const auto base = perfect_power_base(m)) {
        std::vector<i64> base_primes;
        decompose_into_primes(*base, config, depth + 1, state, base_primes);
        i64 rest = m;
        while (rest % *base == 0 && rest > 1) {
            primes.insert(primes.end(), base_primes.begin(), base_primes.end());
            rest /= *base;
        }
        decompose_into_primes(rest, config, depth + 1, state, primes);
        return;
    }
    ShorConfig sub = config;
    sub.n = m;
    sub.seed = splitmix64(config.seed ^ static_cast<std::uint64_t>(m));
    sub.max_k_search = 0;
    std::vector<AttemptRecord> sub_attempts;
    const i64 sub_N = choose_register_size(m).N;
    const auto pair = run_attempt_loop(sub, sub_N, sub_attempts, state);
    if (!pair) {
        primes.push_back(m);  // retries exhausted; keep the composite visible
        return;
    }
    decompose_into_primes(pair->first, config, depth + 1, state, primes);
    decompose_into_primes(pair->second, config, depth + 1, state, primes);
}

std::optional<std::pair<i64, i64>> run_attempt_loop(const ShorConfig& config, i64 N,
                                                    std::vector<AttemptRecord>& attempts,
                                                    RunState& state) {
    const i64 n = config.n;
    const i64 k_max = config.max_k_search > 0 ? config.max_k_search : n;
    std::mt19937_64 rng(config.seed);

    // Bases drawn without replacement by a lazy Fisher-Yates over [2, n-1].
    std::vector<i64> pool(static_cast<std::size_t>(n - 2));
    std::iota(pool.begin(), pool.end(), i64{2});
    const std::size_t max_attempts =
        std::min<std::size_t>(pool.size(), static_cast<std::size_t>(std::max(config.max_a_retries, 0)));

    const RegisterConfig reg{n, N, 0};
    std::map<i64, MeasurementDistribution> dist_cache;  // keyed by period

    for (std::size_t i = 0; i < max_attempts; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
        const i64 a = pool[i];
        const std::uint64_t sample_seed = rng();
        ++state.total_runs;

        AttemptRecord rec;
        rec.a = a;

        const i64 g = std::gcd(a, n);
        if (g > 1) {
            rec.status = "lucky_gcd";
            attempts.push_back(std::move(rec));
            return std::make_pair(std::min(g, n / g), std::max(g, n / g));
        }

        // The order oracle feeds the simulator only; recovery below sees
        // nothing but (y, N, n).
        const i64 p_true = multiplicative_order(a, n);
        auto it = dist_cache.find(p_true);
        if (it == dist_cache.end()) {
            it = dist_cache.emplace(p_true, build_distribution(reg, p_true, config.mode, 0)).first;
        }
        const i64 y = sample_measurement(it->second, sample_seed);
        rec.y = y;

        if (y == 0) {
            rec.status = "y_zero";
            attempts.push_back(std::move(rec));
            continue;
        }

        rec.candidates = recover_period_cf(y, N, n);
        std::optional<i64> verified_any;
        std::optional<i64> verified_even;
        const auto scan = [&](const std::vector<i64>& cands) {
            for (i64 cand : cands) {
                if (!verify_period(a, cand, n)) continue;
                if (!verified_any) verified_any = cand;
                if (cand % 2 == 0) {
                    verified_even = cand;
                    return;
                }
            }
        };
        scan(rec.candidates);
        if (!verified_any) {
            auto fallback = recover_period_q1(y, N, n, k_max);
            for (i64 cand : fallback) {
                if (std::find(rec.candidates.begin(), rec.candidates.end(), cand) ==
                    rec.candidates.end()) {
                    rec.candidates.push_back(cand);
                }
            }
            scan(rec.candidates);
        }

        if (verified_even) {
            rec.period = verified_even;
            const auto split = factor_from_period(a, *verified_even, n);
            if (split) {
                rec.status = "factored";
                attempts.push_back(std::move(rec));
                return std::make_pair(std::min(split->first, split->second),
                                      std::max(split->first, split->second));
            }
            rec.status = "trivial_gcds";
        } else if (verified_any) {
            rec.period = verified_any;
            rec.status = "odd_period";
        } else {
            rec.status = "no_period_verified";
        }
        attempts.push_back(std::move(rec));
    }
    return std::nullopt;
}

}  // namespace

std::vector<i64> recover_period_cf(i64 y, i64 N, i64 n) {
    if (y == 0) return {};
    if (!(0 < y && y < N)) {
        throw std::domain_error("recover_period_cf: requires 0 <= y < N");
    }
    const ConvergentTable table(cf_from_rational(Rational(Integer(y), Integer(N))));
    std::vector<i64> denoms;
    for (int u = 0; u <= table.order(); ++u) {
        if (table.q(u) < n) {
            denoms.push_back(table.q(u).get_si());
        }
    }

    std::vector<i64> out;
    const auto push_unique = [&out](i64 v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    const i64 primary = denoms.back();  // denominators never decrease
    push_unique(primary);
    for (i64 c = 2; c <= 4; ++c) {
        if (c * primary < n) push_unique(c * primary);
    }
    for (auto it = denoms.rbegin(); it != denoms.rend(); ++it) {
        push_unique(*it);
    }
    return out;
}

std::vector<i64> recover_period_q1(i64 y, i64 N, i64 n, i64 k_max) {
    if (y <= 0 || N <= 0) {
        throw std::domain_error("recover_period_q1: requires y > 0 and N > 0");
    }
    std::vector<i64> out;
    for (i64 k = 1; k <= k_max; ++k) {
        const i64 v = k * N;
        if (v >= n * y) break;  // k N / y only grows from here
        if (v % y == 0) out.push_back(v / y);
    }
    return out;
}

bool verify_period(i64 a, i64 cand, i64 n) {
    if (cand < 1) {
        throw std::domain_error("verify_period: candidate must be >= 1");
    }
    return mod_exp(a, cand, n) == 1;
}

FactorReport shor_factor(const ShorConfig& config) {
    const i64 n = config.n;
    if (n < 4) {
        throw std::domain_error("shor_factor: n must be >= 4");
    }
    if (is_prime(n)) {
        throw std::domain_error("shor_factor: n is prime");
    }

    FactorReport report;
    report.n = n;
    report.seed = config.seed;
    RunState state;

    std::optional<std::pair<i64, i64>> pair;
    if (n % 2 == 0) {
        pair = std::make_pair(i64{2}, n / 2);
    } else if (const auto base = perfect_power_base(n)) {
        pair = std::make_pair(std::min(*base, n / *base), std::max(*base, n / *base));
    } else {
        report.N = choose_register_size(n).N;
        pair = run_attempt_loop(config, report.N, report.attempts, state);
    }

    if (pair) {
        report.factors = pair;
        decompose_into_primes(pair->first, config, 0, state, report.prime_factors);
        decompose_into_primes(pair->second, config, 0, state, report.prime_factors);
        std::sort(report.prime_factors.begin(), report.prime_factors.end());
    }
    report.total_runs = state.total_runs;
    return report;
}

nlohmann::ordered_json to_json(const FactorReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["N"] = report.N;
    j["seed"] = report.seed;
    j["attempts"] = nlohmann::ordered_json::array();
    for (const AttemptRecord& rec : report.attempts) {
        nlohmann::ordered_json a;
        a["a"] = rec.a;
        if (rec.y) a["y"] = *rec.y; else a["y"] = nullptr;
        a["candidates"] = rec.candidates;
        if (rec.period) a["period"] = *rec.period; else a["period"] = nullptr;
        a["status"] = rec.status;
        j["attempts"].push_back(std::move(a));
    }
    if (report.factors) {
        j["factors"] = {report.factors->first, report.factors->second};
    } else {
        j["factors"] = nullptr;
    }
    j["prime_factors"] = report.prime_factors;
    j["total_runs"] = report.total_runs;
    return j;
}

std::string to_json_string(const FactorReport& report) {
    return to_json(report).dump(2) + "\n";
}

}  // namespace shorcf
