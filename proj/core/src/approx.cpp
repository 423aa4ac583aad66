#include "shorcf/approx.hpp"

#include <stdexcept>

namespace shorcf {

namespace {

// |X d - c Y| for the fraction c/d measured against x = X/Y. This is
// Y * |d x - c|, i.e. the second-kind measure scaled by the constant Y;
// the first-kind distance is the same quantity divided by Y d.
Integer cross_measure(const Integer& X, const Integer& Y, const Integer& c, const Integer& d) {
    return abs(X * d - c * Y);
}

}  // namespace

ApproxVerdict classify_approximation(const Rational& x, const Rational& cand) {
    const Integer X = x.num(), Y = x.den();
    const Integer P = cand.num(), Q = cand.den();
    const Integer cand_measure = cross_measure(X, Y, P, Q);  // = Y |Q x - P|

    ApproxVerdict verdict{true, true, std::nullopt};
    std::optional<Rational> first_witness, second_witness;

    for (Integer d = 1; d <= Q; ++d) {
        // Only integers adjacent to d x can compete; anything further is
        // strictly worse in both measures.
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), Integer(X * d).get_mpz_t(), Y.get_mpz_t());
        for (Integer c = fl - 1; c <= fl + 2; ++c) {
            if (c * Q == P * d) continue;  // same value as the candidate
            const Integer m = cross_measure(X, Y, c, d);
            // First kind: |x - c/d| > |x - P/Q|  <=>  m Q > cand_measure d.
            if (verdict.is_first_kind && m * Q <= cand_measure * d) {
                verdict.is_first_kind = false;
                first_witness = Rational(c, d);
            }
            // Second kind: |d x - c| > |Q x - P|  <=>  m > cand_measure.
            if (verdict.is_second_kind && m <= cand_measure) {
                verdict.is_second_kind = false;
                second_witness = Rational(c, d);
            }
        }
        if (!verdict.is_first_kind && !verdict.is_second_kind) break;
    }

    if (!verdict.is_first_kind) {
        verdict.witness = first_witness;
    } else if (!verdict.is_second_kind) {
        verdict.witness = second_witness;
    }
    return verdict;
}

std::vector<Rational> best_approx_oracle(const Rational& x, const Integer& d_max,
                                         ApproxKind kind) {
    if (d_max < 1) {
        throw std::invalid_argument("best_approx_oracle: d_max must be >= 1");
    }
    const Integer X = x.num(), Y = x.den();
    const bool first_kind = (kind == ApproxKind::first);

    std::vector<Rational> result;
    // Running minimum over every fraction with denominator < d. For the
    // first kind distances live on different denominators, so the minimum
    // is kept as a pair (m, d) standing for m / (Y d); the second-kind
    // measure m / Y compares directly.
    bool have_min = false;
    Integer min_m, min_d;

    const auto beats_running_min = [&](const Integer& m, const Integer& d) {
        if (!have_min) return true;
        if (first_kind) return m * min_d < min_m * d;
        return m < min_m;
    };
    const auto update_running_min = [&](const Integer& m, const Integer& d) {
        if (!have_min || (first_kind ? m * min_d < min_m * d : m < min_m)) {
            min_m = m;
            min_d = d;
            have_min = true;
        }
    };

    for (Integer d = 1; d <= d_max; ++d) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), Integer(X * d).get_mpz_t(), Y.get_mpz_t());

        Integer window_m[4];
        for (int i = 0; i < 4; ++i) {
            window_m[i] = cross_measure(X, Y, fl - 1 + i, d);
        }

        // Only the two integers straddling d x can be best for this d.
        for (int ci = 1; ci <= 2; ++ci) {
            const Integer c = fl - 1 + ci;
            Integer g;
            mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            if (g != 1) continue;  // value already handled at its reduced denominator
            const Integer& m = window_m[ci];
            if (!beats_running_min(m, d)) continue;
            bool best = true;
            for (int oi = 0; oi < 4 && best; ++oi) {
                if (oi == ci) continue;
                if (window_m[oi] <= m) best = false;  // a tie also disqualifies
            }
            if (best) result.emplace_back(c, d);
        }

        for (int i = 0; i < 4; ++i) {
            update_running_min(window_m[i], d);
        }
    }
    return result;
}

LegendreResult legendre_is_convergent(const Rational& x, const Rational& cand) {
    const Integer X = x.num(), Y = x.den();
    const Integer a = cand.num(), b = cand.den();

    LegendreResult res;
    // |x - a/b| < 1/(2 b^2)  <=>  2 b |X b - a Y| < Y.
    res.hypothesis_holds = 2 * b * cross_measure(X, Y, a, b) < Y;

    const ConvergentTable table(cf_from_rational(x));
    for (int n = 0; n <= table.order(); ++n) {
        if (table.p(n) == a && table.q(n) == b) {
            res.convergent_index = n;
            break;
        }
    }
    return res;
}

ConvergentRef best_denominator_below(const Rational& x, const Integer& bound) {
    if (bound < 2) {
        throw std::invalid_argument("best_denominator_below: bound must be >= 2");
    }
    const ConvergentTable table(cf_from_rational(x));
    for (int n = table.order(); n >= 0; --n) {
        if (table.q(n) < bound) {
            return ConvergentRef{table.p(n), table.q(n), n};
        }
    }
    throw std::logic_error("best_denominator_below: unreachable, q0 = 1 < bound");
}

}  // namespace shorcf
