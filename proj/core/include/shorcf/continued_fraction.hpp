#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shorcf/rational.hpp"

namespace shorcf {

/// Finite regular continued fraction [a0; a1, ..., aN]: a0 may be any
/// integer, ai >= 1 for i >= 1. Canonical form additionally has aN >= 2
/// whenever N >= 1.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<Integer> coefficients);
    ContinuedFraction(std::initializer_list<long> coefficients);

    std::size_t size() const { return coeffs_.size(); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    bool is_canonical() const;
    /// "[a0; a1, ..., aN]", or "[a0]" for a bare integer.
    std::string str() const;

    friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Integer> coeffs_;
};

/// Euclidean expansion. Total on rationals, floor taken toward negative
/// infinity so negative inputs expand correctly. The result is canonical:
/// the last coefficient is >= 2 unless the expansion is a bare [a0].
ContinuedFraction cf_from_rational(const Rational& r);

/// Exact value, in lowest terms; equals pN/qN of the convergent table.
Rational cf_to_rational(const ContinuedFraction& cf);

/// Folds a trailing 1 into its predecessor: [..., a, 1] -> [..., a+1].
/// Value preserving. Throws if the coefficient list violates the ai >= 1
/// (i >= 1) requirement.
ContinuedFraction canonicalize(const ContinuedFraction& cf);

/// Expansion of an exact rational via complete quotients, truncated to at
/// most max_terms coefficients. Agrees with cf_from_rational when the full
/// expansion is shorter than max_terms.
ContinuedFraction cf_expand_real(const Rational& x, std::size_t max_terms);

/// Numerators and denominators of all convergents p0/q0, ..., pN/qN,
/// computed by the recursion p_n = a_n p_{n-1} + p_{n-2} (and likewise for
/// q) seeded with the virtual entry p_{-1} = 1, q_{-1} = 0. The virtual
/// entry is addressable as index -1.
class ConvergentTable {
public:
    explicit ConvergentTable(const ContinuedFraction& cf);

    int order() const { return static_cast<int>(p_.size()) - 2; }
    std::size_t size() const { return p_.size() - 1; }

    /// n in [-1, order()].
    const Integer& p(int n) const;
    const Integer& q(int n) const;
    const Integer& coefficient(int n) const;
    Rational value(int n) const;

private:
    std::vector<Integer> p_;  // p_[i] holds index i-1
    std::vector<Integer> q_;
    std::vector<Integer> a_;
};

ConvergentTable convergents(const ContinuedFraction& cf);

/// Semiconvergent (t p_{n+1} + p_n) / (t q_{n+1} + q_n) for t >= 1 and
/// -1 <= n <= order-1. At t = a_{n+2} this equals the convergent
/// p_{n+2}/q_{n+2}.
Rational semiconvergent(const ConvergentTable& table, int n, const Integer& t);

/// Every semiconvergent x_{n,t} of the fraction: n = -1..N-2 and
/// 1 <= t <= a_{n+2}. Includes the x_{-1,t} = a0 + 1/t family.
std::vector<Rational> enumerate_semiconvergents(const ContinuedFraction& cf);

}  // namespace shorcf
