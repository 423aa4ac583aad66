#pragma once

#include <optional>
#include <vector>

#include "shorcf/continued_fraction.hpp"
#include "shorcf/rational.hpp"

namespace shorcf {

enum class ApproxKind { first, second };

/// Outcome of the exhaustive best-approximation test. A second-kind best
/// approximation is always also first-kind, so the possible states are
/// (true,true), (true,false) and (false,false). When a kind fails, witness
/// holds a competitor c/d with d <= den(cand) that is at least as good.
struct ApproxVerdict {
    bool is_first_kind = false;
    bool is_second_kind = false;
    std::optional<Rational> witness;
};

/// Tests cand = p/q against every reduced fraction c/d with 1 <= d <= q and
/// c/d != p/q, using exact arithmetic. First kind demands
/// |x - c/d| > |x - p/q| for all competitors, second kind
/// |d x - c| > |q x - p|; a tie disqualifies the candidate.
ApproxVerdict classify_approximation(const Rational& x, const Rational& cand);

/// All best approximations of the requested kind with denominator <= d_max,
/// sorted by denominator. Exhaustive sweep over every denominator with
/// exact arithmetic; for each d only the integers adjacent to d*x can
/// compete, which bounds the numerator search losslessly.
std::vector<Rational> best_approx_oracle(const Rational& x, const Integer& d_max,
                                         ApproxKind kind);

struct LegendreResult {
    bool hypothesis_holds = false;            // |x - a/b| < 1/(2 b^2), exact
    std::optional<int> convergent_index;      // n with p_n/q_n = a/b, if any
};

/// |x - a/b| < 1/(2b^2) guarantees a/b is a convergent of x; the index is
/// located in the convergent table of x. When the hypothesis fails the
/// index is a plain membership lookup and may be absent.
LegendreResult legendre_is_convergent(const Rational& x, const Rational& cand);

struct ConvergentRef {
    Integer p;
    Integer q;
    int index = 0;
};

/// The convergent of x with the largest denominator strictly below bound.
/// Denominators of successive convergents never decrease, so this is the
/// last table entry with q < bound. Requires bound >= 2 (q0 = 1 always
/// qualifies).
ConvergentRef best_denominator_below(const Rational& x, const Integer& bound);

}  // namespace shorcf
