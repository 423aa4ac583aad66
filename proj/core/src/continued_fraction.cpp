#include "shorcf/continued_fraction.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace shorcf {

namespace {

void validate_coefficients(const std::vector<Integer>& coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("ContinuedFraction: coefficient list must be non-empty");
    }
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (coeffs[i] < 1) {
            throw std::invalid_argument("ContinuedFraction: a" + std::to_string(i) +
                                        " = " + coeffs[i].get_str() + " violates a_i >= 1");
        }
    }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
    validate_coefficients(coeffs_);
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    validate_coefficients(coeffs_);
}

bool ContinuedFraction::is_canonical() const {
    return coeffs_.size() == 1 || coeffs_.back() >= 2;
}

std::string ContinuedFraction::str() const {
    std::ostringstream out;
    out << "[" << coeffs_[0].get_str();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out << (i == 1 ? "; " : ", ") << coeffs_[i].get_str();
    }
    out << "]";
    return out.str();
}

ContinuedFraction cf_from_rational(const Rational& r) {
    std::vector<Integer> coeffs;
    Integer num = r.num();
    Integer den = r.den();
    // a0 = floor(num/den); thereafter plain Euclid on positive remainders.
    Integer a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    coeffs.push_back(a);
    num = den;
    den = rem;
    while (den != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        coeffs.push_back(a);
        num = den;
        den = rem;
    }
    return ContinuedFraction(std::move(coeffs));
}

Rational cf_to_rational(const ContinuedFraction& cf) {
    const int n = cf.order();
    Rational value(cf[n]);
    for (int i = n - 1; i >= 0; --i) {
        value = Rational(cf[i]) + value.reciprocal();
    }
    return value;
}

ContinuedFraction canonicalize(const ContinuedFraction& cf) {
    std::vector<Integer> coeffs = cf.coefficients();
    while (coeffs.size() > 1 && coeffs.back() == 1) {
        coeffs.pop_back();
        coeffs.back() += 1;
    }
    return ContinuedFraction(std::move(coeffs));
}

ContinuedFraction cf_expand_real(const Rational& x, std::size_t max_terms) {
    if (max_terms == 0) {
        throw std::invalid_argument("cf_expand_real: max_terms must be >= 1");
    }
    std::vector<Integer> coeffs;
    Rational alpha = x;  // complete quotient, tracked exactly
    for (;;) {
        const Integer b = alpha.floor();
        coeffs.push_back(b);
        if (coeffs.size() == max_terms) break;
        const Rational frac = alpha - Rational(b);
        if (frac.is_zero()) break;
        alpha = frac.reciprocal();
    }
    return ContinuedFraction(std::move(coeffs));
}

ConvergentTable::ConvergentTable(const ContinuedFraction& cf) {
    const std::size_t n = cf.size();
    p_.reserve(n + 1);
    q_.reserve(n + 1);
    a_.reserve(n + 1);
    p_.emplace_back(1);  // p_{-1}
    q_.emplace_back(0);  // q_{-1}
    a_.emplace_back(0);  // placeholder, no a_{-1}
    Integer p_prev2 = 0, q_prev2 = 1;  // p_{-2} = 0, q_{-2} = 1 seed the recursion
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& a = cf[i];
        Integer p = a * p_.back() + p_prev2;
        Integer q = a * q_.back() + q_prev2;
        p_prev2 = p_.back();
        q_prev2 = q_.back();
        p_.push_back(std::move(p));
        q_.push_back(std::move(q));
        a_.push_back(a);
    }
}

const Integer& ConvergentTable::p(int n) const {
    if (n < -1 || n > order()) {
        throw std::out_of_range("ConvergentTable: index " + std::to_string(n));
    }
    return p_[static_cast<std::size_t>(n + 1)];
}

const Integer& ConvergentTable::q(int n) const {
    if (n < -1 || n > order()) {
        throw std::out_of_range("ConvergentTable: index " + std::to_string(n));
    }
    return q_[static_cast<std::size_t>(n + 1)];
}

const Integer& ConvergentTable::coefficient(int n) const {
    if (n < 0 || n > order()) {
        throw std::out_of_range("ConvergentTable: no coefficient at index " + std::to_string(n));
    }
    return a_[static_cast<std::size_t>(n + 1)];
}

Rational ConvergentTable::value(int n) const {
    if (n == -1) {
        throw std::domain_error("ConvergentTable: the virtual entry 1/0 has no value");
    }
    return Rational(p(n), q(n));
}

ConvergentTable convergents(const ContinuedFraction& cf) {
    return ConvergentTable(cf);
}

Rational semiconvergent(const ConvergentTable& table, int n, const Integer& t) {
    if (t < 1) {
        throw std::invalid_argument("semiconvergent: t must be >= 1");
    }
    if (n < -1 || n + 1 > table.order()) {
        throw std::out_of_range("semiconvergent: index " + std::to_string(n));
    }
    return Rational(t * table.p(n + 1) + table.p(n), t * table.q(n + 1) + table.q(n));
}

std::vector<Rational> enumerate_semiconvergents(const ContinuedFraction& cf) {
    const ConvergentTable table(cf);
    std::vector<Rational> out;
    for (int n = -1; n + 2 <= table.order(); ++n) {
        const Integer& bound = table.coefficient(n + 2);
        for (Integer t = 1; t <= bound; ++t) {
            out.push_back(semiconvergent(table, n, t));
        }
    }
    return out;
}

}  // namespace shorcf
