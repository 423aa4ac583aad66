#include "shorcf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace shorcf {

namespace {

void require_nonzero_den(const Integer& den) {
    if (sgn(den) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    require_nonzero_den(den);
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    text = text.substr(begin, end - begin);
    if (text.empty()) {
        throw std::invalid_argument("Rational::parse: empty input");
    }

    const auto is_integer_token = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };

    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (const size_t slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!is_integer_token(num_part) || !is_integer_token(den_part)) {
        throw std::invalid_argument("Rational::parse: expected \"p/q\" or \"p\", got \"" +
                                    std::string(text) + "\"");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (sgn(den) == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in \"" +
                                    std::string(text) + "\"");
    }
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return q;
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Rational::reciprocal: zero has no reciprocal");
    }
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational mediant(const Rational& x, const Rational& y) {
    return Rational(x.num() + y.num(), x.den() + y.den());
}

}  // namespace shorcf
