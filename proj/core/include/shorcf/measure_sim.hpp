#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "shorcf/rational.hpp"

namespace shorcf {

/// Register sizing for factoring n: N = 2^m with n^2 < N < 2 n^2.
struct RegisterConfig {
    std::int64_t n = 0;
    std::int64_t N = 0;
    int m = 0;
};

/// Smallest m with 2^m > n^2; such an m satisfies 2^m < 2 n^2 exactly when
/// n^2 is not itself a power of two, so powers of two are rejected.
/// Requires n >= 4: below that no power of two fits strictly.
RegisterConfig choose_register_size(std::int64_t n);

/// A = floor((N - 1 - x0) / p) + 1, the number of arguments x0 + j p < N.
/// Requires 0 <= x0 < p < N. Satisfies (A-1) p < N < (A+1) p and A > 1.
std::int64_t preimage_count(std::int64_t N, std::int64_t p, std::int64_t x0);

/// |1 - e^{i phi}| = 2 sin(|phi|/2) for phi in [-pi, pi]; rejects |phi| > pi.
/// Satisfies 2|phi|/pi <= secant_length(phi) <= |phi|.
double secant_length(double phi);

/// Probability of measuring y after the Fourier transform, for register
/// size N, period p and preimage count A:
///   p y = 0 (mod N):  A / N
///   otherwise:        (1/(N A)) (sin(pi A p y / N) / sin(pi p y / N))^2
/// Phases are reduced exactly in integer arithmetic before evaluating the
/// sines; a numerator that is an exact multiple of pi yields exactly 0.
double prob_y(std::int64_t y, std::int64_t N, std::int64_t p, std::int64_t A);

enum class DistributionMode { conditional, mixture };

/// Exact-parameter table of P(y) over y in {0, ..., N-1}.
/// conditional: P(y) for a single measured offset x0 (through its A).
/// mixture: sum over x0 of (A_{x0}/N) P(y | A_{x0}), the distribution an
/// end-to-end run actually samples.
struct MeasurementDistribution {
    RegisterConfig config;
    std::int64_t period = 0;
    DistributionMode mode = DistributionMode::conditional;
    std::int64_t offset = 0;  // x0, meaningful in conditional mode
    std::vector<double> probs;

    double total() const;
};

MeasurementDistribution build_distribution(const RegisterConfig& config, std::int64_t p,
                                           DistributionMode mode, std::int64_t x0 = 0);

/// Inverse-CDF draw with a deterministic seeded generator; identical seeds
/// give identical results on every platform.
std::int64_t sample_measurement(const MeasurementDistribution& dist, std::uint64_t seed);

/// One window [k N/p - 1/2, k N/p + 1/2] around the k-th multiple of N/p.
struct Window {
    std::int64_t k = 0;
    Rational center;                      // k N / p, exact
    std::vector<std::int64_t> captured;   // integers y inside the window
    double mass = 0.0;
};

struct WindowReport {
    std::vector<Window> windows;
    double total_mass = 0.0;
};

/// Captures, for each k in {0, ..., p-1}, the integers y with
/// |y - k N/p| <= 1/2 (exact rational comparison; a boundary tie goes to
/// the lower window so windows partition) and sums their probabilities.
WindowReport window_mass(const MeasurementDistribution& dist, std::int64_t p);

/// CSV rows "y,prob", one per register value.
void write_distribution_csv(const MeasurementDistribution& dist, std::ostream& os);
/// JSON object {n, N, p, mode, probs: [...]}.
void write_distribution_json(const MeasurementDistribution& dist, std::ostream& os);

}  // namespace shorcf
