#pragma once

// Exact-arithmetic checks of the classical convergent theorems, shared by
// the unit tests and the acceptance suite. Every check evaluates both
// sides with Rational/Integer arithmetic; nothing goes through floating
// point. Prefix values are cross-checked against cf_to_rational, which
// folds the fraction directly and is independent of the recursion.

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shorcf/continued_fraction.hpp"
#include "shorcf/rational.hpp"

namespace shorcf::testing {

inline ContinuedFraction random_canonical_cf(std::mt19937_64& rng, int max_len = 12,
                                             long max_coeff = 9) {
    const auto draw = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };
    const int len = static_cast<int>(draw(1, max_len));
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(len));
    coeffs.emplace_back(draw(-max_coeff, max_coeff));
    for (int i = 1; i < len; ++i) {
        const bool last = (i == len - 1);
        coeffs.emplace_back(draw(last ? 2 : 1, max_coeff));
    }
    return ContinuedFraction(std::move(coeffs));
}

// Returns a description of the first violated theorem, or nullopt.
inline std::optional<std::string> check_cf_theorems(const ContinuedFraction& cf) {
    const auto fail = [&cf](const std::string& what) {
        return "cf " + cf.str() + ": " + what;
    };

    const ConvergentTable table(cf);
    const int N = table.order();
    const Rational x = cf_to_rational(cf);

    // Recursion theorem against direct prefix evaluation.
    for (int n = 0; n <= N; ++n) {
        std::vector<Integer> prefix(cf.coefficients().begin(),
                                    cf.coefficients().begin() + n + 1);
        if (table.value(n) != cf_to_rational(ContinuedFraction(prefix))) {
            return fail("recursion != prefix evaluation at n=" + std::to_string(n));
        }
    }
    if (table.value(N) != x) return fail("last convergent != value");

    // Sign theorems.
    for (int n = 1; n <= N; ++n) {
        const Integer expected = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
        if (table.p(n) * table.q(n - 1) - table.p(n - 1) * table.q(n) != expected) {
            return fail("first sign theorem at n=" + std::to_string(n));
        }
    }
    for (int n = 2; n <= N; ++n) {
        const Integer sign = (n % 2 == 0) ? 1 : -1;  // (-1)^n
        if (table.p(n) * table.q(n - 2) - table.p(n - 2) * table.q(n) !=
            sign * table.coefficient(n)) {
            return fail("second sign theorem at n=" + std::to_string(n));
        }
    }

    // Coprimality of p_n and q_n.
    for (int n = 0; n <= N; ++n) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), table.p(n).get_mpz_t(), table.q(n).get_mpz_t());
        if (g != 1) return fail("gcd(p,q) != 1 at n=" + std::to_string(n));
    }

    // Alternating-sum representation.
    {
        Rational sum(table.coefficient(0));
        for (int k = 1; k <= N; ++k) {
            const Rational term(Integer(1), table.q(k) * table.q(k - 1));
            sum += (k % 2 == 1) ? term : -term;
            if (sum != table.value(k)) {
                return fail("sum representation at n=" + std::to_string(k));
            }
        }
    }

    // Monotony of even and odd convergents.
    for (int n = 0; n + 2 <= N; n += 2) {
        if (!(table.value(n) < table.value(n + 2))) {
            return fail("even monotony at n=" + std::to_string(n));
        }
    }
    for (int n = 1; n + 2 <= N; n += 2) {
        if (!(table.value(n) > table.value(n + 2))) {
            return fail("odd monotony at n=" + std::to_string(n));
        }
    }

    // Every even convergent below every odd convergent.
    for (int e = 0; e <= N; e += 2) {
        for (int o = 1; o <= N; o += 2) {
            if (!(table.value(e) < table.value(o))) {
                return fail("comparison x_" + std::to_string(e) + " < x_" + std::to_string(o));
            }
        }
    }

    // Nesting of the value, all indices strictly below N.
    for (int e = 0; e < N; e += 2) {
        if (!(table.value(e) < x)) return fail("nesting even at " + std::to_string(e));
    }
    for (int o = 1; o < N; o += 2) {
        if (!(x < table.value(o))) return fail("nesting odd at " + std::to_string(o));
    }

    // Distance |x - x_n| < |x_{n-1} - x_n|.
    for (int n = 1; n <= N; ++n) {
        const Rational lhs = (x - table.value(n)).abs();
        const Rational rhs = (table.value(n - 1) - table.value(n)).abs();
        if (!(lhs < rhs)) return fail("distance theorem at n=" + std::to_string(n));
    }

    // Difference |x_m - x_n| < |x_{n-1} - x_n| for m > n.
    for (int n = 1; n <= N; ++n) {
        const Rational bound = (table.value(n - 1) - table.value(n)).abs();
        for (int m = n + 1; m <= N; ++m) {
            if (!((table.value(m) - table.value(n)).abs() < bound)) {
                return fail("difference theorem at m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
            }
        }
    }

    // Denominator growth.
    for (int n = 1; n < N; ++n) {
        if (!(table.q(n + 1) > table.q(n))) {
            return fail("q not strictly increasing at n=" + std::to_string(n));
        }
    }
    for (int n = 0; n <= N; ++n) {
        if (table.q(n) < n) return fail("q_n >= n at n=" + std::to_string(n));
        if (n > 3 && table.q(n) <= n) return fail("q_n > n at n=" + std::to_string(n));
        if (n >= 2) {
            Integer pow2 = 1;
            mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
            if (table.q(n) * table.q(n) < pow2) {
                return fail("q_n^2 >= 2^(n-1) at n=" + std::to_string(n));
            }
        }
    }

    // Semiconvergent monotony inside each coefficient range.
    for (int n = 0; n + 2 <= N; ++n) {
        for (Integer t = 1; t + 1 <= table.coefficient(n + 2); ++t) {
            const Rational a = semiconvergent(table, n, t);
            const Rational b = semiconvergent(table, n, t + 1);
            if (n % 2 == 0 ? !(a < b) : !(a > b)) {
                return fail("semiconvergent monotony at n=" + std::to_string(n));
            }
        }
    }

    // The a0 + 1/t chain: x_{-1,1} = a0+1 descends to x_1 = a0 + 1/a1.
    if (N >= 1) {
        if (semiconvergent(table, -1, 1) != Rational(table.coefficient(0) + 1)) {
            return fail("x_{-1,1} != a0 + 1");
        }
        for (Integer t = 1; t + 1 <= table.coefficient(1); ++t) {
            if (!(semiconvergent(table, -1, t) > semiconvergent(table, -1, t + 1))) {
                return fail("x_{-1,t} chain not descending at t=" + t.get_str());
            }
        }
        if (semiconvergent(table, -1, table.coefficient(1)) != table.value(1)) {
            return fail("x_{-1,a1} != x_1");
        }
    }

    // Approximation bounds by denominators: for k < N,
    //   1/(2 q_k q_{k+1}) < 1/((q_k + q_{k+1}) q_k) < |x - x_k|,
    // and |x - x_k| < 1/(q_k q_{k+1}) strictly below k = N-1, with exact
    // equality at k = N-1 where x is the very next convergent.
    for (int k = 0; k < N; ++k) {
        const Rational dist = (x - table.value(k)).abs();
        const Rational lower(Integer(1), (table.q(k) + table.q(k + 1)) * table.q(k));
        const Rational half(Integer(1), 2 * table.q(k) * table.q(k + 1));
        const Rational upper(Integer(1), table.q(k) * table.q(k + 1));
        // q_0 = q_1 when a_1 = 1, so the first chain link can touch.
        if (!(half <= lower)) return fail("bound chain 1/(2qq') at k=" + std::to_string(k));
        if (!(half < dist)) return fail("half lower bound at k=" + std::to_string(k));
        if (!(lower < dist)) return fail("lower approximation bound at k=" + std::to_string(k));
        if (k < N - 1) {
            if (!(dist < upper)) return fail("upper approximation bound at k=" + std::to_string(k));
        } else {
            if (dist != upper) return fail("|x - x_{N-1}| != 1/(q_{N-1} q_N)");
        }
    }

    return std::nullopt;
}

}  // namespace shorcf::testing
