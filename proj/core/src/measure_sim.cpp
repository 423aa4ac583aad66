#include "shorcf/measure_sim.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace shorcf {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mod_reduce(i128 v, i64 m) {
    i64 r = static_cast<i64>(v % m);
    return r < 0 ? r + m : r;
}

}  // namespace

RegisterConfig choose_register_size(i64 n) {
    if (n < 4) {
        throw std::domain_error("choose_register_size: n must be >= 4");
    }
    if (n > 3037000499) {  // n^2 no longer fits 63 bits
        throw std::domain_error("choose_register_size: n too large for a 64-bit register bound");
    }
    if ((n & (n - 1)) == 0) {
        // n^2 a power of two leaves no power of two strictly between n^2
        // and 2 n^2. Even n is factored upstream by the gcd pre-check.
        throw std::domain_error("choose_register_size: no register fits, n = " +
                                std::to_string(n) + " is a power of two");
    }
    const i64 n_sq = n * n;
    int m = 1;
    i64 N = 2;
    while (N <= n_sq) {
        N <<= 1;
        ++m;
    }
    if (N >= 2 * n_sq) {
        throw std::logic_error("choose_register_size: 2^m < 2 n^2 violated");
    }
    return RegisterConfig{n, N, m};
}

i64 preimage_count(i64 N, i64 p, i64 x0) {
    if (!(0 <= x0 && x0 < p && p < N)) {
        throw std::domain_error("preimage_count: requires 0 <= x0 < p < N");
    }
    return (N - 1 - x0) / p + 1;
}

double secant_length(double phi) {
    if (std::abs(phi) > std::numbers::pi) {
        throw std::domain_error("secant_length: |phi| must be <= pi");
    }
    return 2.0 * std::sin(std::abs(phi) / 2.0);
}

double prob_y(i64 y, i64 N, i64 p, i64 A) {
    if (!(0 <= y && y < N)) {
        throw std::domain_error("prob_y: requires 0 <= y < N");
    }
    if (A <= 1 || (A - 1) * p >= N) {
        throw std::domain_error("prob_y: requires A > 1 and (A-1) p < N");
    }
    const i128 py = static_cast<i128>(p) * y;
    if (mod_reduce(py, N) == 0) {
        // q = 1: the geometric sum has A equal terms.
        return static_cast<double>(A) / static_cast<double>(N);
    }
    // sin(pi t / N) has period 2N in t; reduce exactly before evaluating.
    const i64 num_phase = mod_reduce(py * A, 2 * N);
    const i64 den_phase = mod_reduce(py, 2 * N);
    if (num_phase % N == 0) {
        return 0.0;  // q^A = 1 with q != 1: the sum vanishes exactly
    }
    const double pi = std::numbers::pi;
    const double s_num = std::sin(pi * static_cast<double>(num_phase) / static_cast<double>(N));
    const double s_den = std::sin(pi * static_cast<double>(den_phase) / static_cast<double>(N));
    const double ratio = s_num / s_den;
    return ratio * ratio / (static_cast<double>(N) * static_cast<double>(A));
}

double MeasurementDistribution::total() const {
    double sum = 0.0;
    for (double v : probs) sum += v;
    return sum;
}

MeasurementDistribution build_distribution(const RegisterConfig& config, i64 p,
                                           DistributionMode mode, i64 x0) {
    if (p < 1 || p >= config.n) {
        throw std::domain_error("build_distribution: requires 1 <= p < n");
    }
    if (config.N > (i64(1) << 27)) {
        throw std::domain_error("build_distribution: register of " + std::to_string(config.N) +
                                " values is too large to tabulate");
    }
    MeasurementDistribution dist;
    dist.config = config;
    dist.period = p;
    dist.mode = mode;
    dist.offset = (mode == DistributionMode::conditional) ? x0 : 0;

    const i64 N = config.N;
    dist.probs.assign(static_cast<std::size_t>(N), 0.0);
    if (mode == DistributionMode::conditional) {
        const i64 A = preimage_count(N, p, x0);
        for (i64 y = 0; y < N; ++y) {
            dist.probs[static_cast<std::size_t>(y)] = prob_y(y, N, p, A);
        }
    } else {
        for (i64 off = 0; off < p; ++off) {
            const i64 A = preimage_count(N, p, off);
            const double weight = static_cast<double>(A) / static_cast<double>(N);
            for (i64 y = 0; y < N; ++y) {
                dist.probs[static_cast<std::size_t>(y)] += weight * prob_y(y, N, p, A);
            }
        }
    }
    return dist;
}

i64 sample_measurement(const MeasurementDistribution& dist, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    // 53-bit uniform in [0, 1); avoids std::uniform_real_distribution, whose
    // output sequence is not pinned by the standard.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    double cum = 0.0;
    i64 last_positive = 0;
    for (i64 y = 0; y < dist.config.N; ++y) {
        const double py = dist.probs[static_cast<std::size_t>(y)];
        if (py > 0.0) last_positive = y;
        cum += py;
        if (u < cum) return y;
    }
    return last_positive;  // u beyond accumulated rounding tail
}

WindowReport window_mass(const MeasurementDistribution& dist, i64 p) {
    if (p < 1) {
        throw std::domain_error("window_mass: p must be >= 1");
    }
    const i64 N = dist.config.N;
    WindowReport report;
    report.windows.reserve(static_cast<std::size_t>(p));
    i64 highest_captured = -1;  // a y on a shared boundary stays in the lower window
    for (i64 k = 0; k < p; ++k) {
        Window w;
        w.k = k;
        w.center = Rational(Integer(k) * Integer(N), Integer(p));
        // Candidate integers next to the center; exact membership test
        // |y - kN/p| <= 1/2  <=>  |2 y p - 2 k N| <= p.
        const i64 base = (2 * k * N + p) / (2 * p);  // floor(kN/p + 1/2)
        for (i64 y = base - 1; y <= base + 1; ++y) {
            if (y < 0 || y >= N) continue;
            i128 two_dist = static_cast<i128>(2) * y * p - static_cast<i128>(2) * k * N;
            if (two_dist < 0) two_dist = -two_dist;
            if (two_dist > p) continue;
            if (y <= highest_captured) continue;
            highest_captured = y;
            w.captured.push_back(y);
            w.mass += dist.probs[static_cast<std::size_t>(y)];
        }
        report.total_mass += w.mass;
        report.windows.push_back(std::move(w));
    }
    return report;
}

void write_distribution_csv(const MeasurementDistribution& dist, std::ostream& os) {
    os << "y,prob\n";
    char buf[64];
    for (i64 y = 0; y < dist.config.N; ++y) {
        std::snprintf(buf, sizeof(buf), "%.17g", dist.probs[static_cast<std::size_t>(y)]);
        os << y << ',' << buf << '\n';
    }
}

void write_distribution_json(const MeasurementDistribution& dist, std::ostream& os) {
    nlohmann::ordered_json j;
    j["n"] = dist.config.n;
    j["N"] = dist.config.N;
    j["p"] = dist.period;
    j["mode"] = dist.mode == DistributionMode::conditional ? "conditional" : "mixture";
    j["probs"] = dist.probs;
    os << j.dump() << '\n';
}

}  // namespace shorcf
