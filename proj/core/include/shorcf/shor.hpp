#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shorcf/measure_sim.hpp"

namespace shorcf {

struct ShorConfig {
    std::int64_t n = 0;
    int max_a_retries = 25;
    std::int64_t max_k_search = 0;  // 0: defaults to n
    std::uint64_t seed = 1;
    DistributionMode mode = DistributionMode::mixture;
};

struct AttemptRecord {
    std::int64_t a = 0;
    std::optional<std::int64_t> y;           // absent when gcd(a, n) > 1
    std::vector<std::int64_t> candidates;    // candidate periods, in trial order
    std::optional<std::int64_t> period;      // verified period, if any
    std::string status;
};

struct FactorReport {
    std::int64_t n = 0;
    std::int64_t N = 0;  // 0 when the run never reached the simulator
    std::uint64_t seed = 0;
    std::vector<AttemptRecord> attempts;
    std::optional<std::pair<std::int64_t, std::int64_t>> factors;  // f1 <= f2
    std::vector<std::int64_t> prime_factors;  // full factorization, when found
    int total_runs = 0;
};

/// Candidate periods from the continued fraction of y/N: the convergent
/// denominator h < n with the largest value leads, followed by its small
/// multiples c h < n (c = 2..4, recovering the period when the convergent
/// only captured a divisor of it) and the remaining denominators < n in
/// decreasing order. y = 0 carries no information and yields an empty list.
std::vector<std::int64_t> recover_period_cf(std::int64_t y, std::int64_t N, std::int64_t n);

/// Fallback for the p y = 0 (mod N) case: periods of the form k N / y.
/// Emits every integer k N / y < n for k = 1..k_max.
std::vector<std::int64_t> recover_period_q1(std::int64_t y, std::int64_t N, std::int64_t n,
                                            std::int64_t k_max);

/// True iff a^cand = 1 (mod n). This certifies a multiple of the true
/// order, which is all the factoring step needs.
bool verify_period(std::int64_t a, std::int64_t cand, std::int64_t n);

/// Full classical loop: pick a, simulate the measurement, recover period
/// candidates from convergents, verify, extract factors; retries with
/// fresh a values drawn without replacement. Composite factors are
/// factored recursively until prime_factors holds only primes.
/// Rejects n < 4 and prime n.
FactorReport shor_factor(const ShorConfig& config);

nlohmann::ordered_json to_json(const FactorReport& report);
std::string to_json_string(const FactorReport& report);

}  // namespace shorcf
