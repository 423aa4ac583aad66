#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace shorcf {

using Integer = mpz_class;

/// Exact fraction of arbitrary-precision integers. Always stored in lowest
/// terms with a positive denominator, so equality is value equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(const Integer& num) : value_(num) {}
    Rational(long num) : value_(num) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    const Integer num() const { return value_.get_num(); }
    const Integer den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Floor toward negative infinity.
    Integer floor() const;
    Rational abs() const;
    Rational reciprocal() const;

    double to_double() const { return value_.get_d(); }
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_;  // kept canonical
};

/// (a+c)/(b+d) on the lowest-terms representatives; lies strictly between
/// the inputs when they differ.
Rational mediant(const Rational& x, const Rational& y);

}  // namespace shorcf
