#include "shorcf/modular.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace shorcf {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mul_mod(i64 a, i64 b, i64 n) {
    return static_cast<i64>((static_cast<i128>(a) * b) % n);
}

i64 floor_mod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

i64 mod_exp(i64 a, i64 x, i64 n) {
    if (n < 1) {
        throw std::domain_error("mod_exp: modulus must be >= 1");
    }
    if (x < 0) {
        throw std::domain_error("mod_exp: exponent must be >= 0");
    }
    i64 base = floor_mod(a, n);
    i64 result = 1 % n;
    while (x > 0) {
        if (x & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        x >>= 1;
    }
    return result;
}

i64 multiplicative_order(i64 a, i64 n) {
    if (n < 2 || a <= 0 || a >= n) {
        throw std::domain_error("multiplicative_order: requires 0 < a < n and n >= 2");
    }
    if (std::gcd(a, n) != 1) {
        throw std::domain_error("multiplicative_order: gcd(a, n) = " +
                                std::to_string(std::gcd(a, n)) + " != 1");
    }
    i64 acc = a % n;
    i64 p = 1;
    while (acc != 1) {
        acc = mul_mod(acc, a, n);
        ++p;
    }
    return p;
}

i64 euler_phi(i64 n) {
    if (n < 1) {
        throw std::domain_error("euler_phi: n must be >= 1");
    }
    i64 count = 0;
    for (i64 z = 1; z <= n; ++z) {
        if (std::gcd(z, n) == 1) ++count;
    }
    return count;
}

std::optional<std::pair<i64, i64>> factor_from_period(i64 a, i64 p, i64 n) {
    if (p < 1 || n < 2) {
        throw std::domain_error("factor_from_period: requires p >= 1 and n >= 2");
    }
    if (mod_exp(a, p, n) != 1) {
        throw std::invalid_argument("factor_from_period: a^p != 1 (mod n)");
    }
    if (p % 2 != 0) {
        return std::nullopt;
    }
    // gcd is invariant under reduction mod n, so a^{p/2} +- 1 is taken mod n.
    const i64 half = mod_exp(a, p / 2, n);
    for (i64 g : {std::gcd(floor_mod(half - 1, n), n), std::gcd(floor_mod(half + 1, n), n)}) {
        if (g > 1 && g < n) {
            return std::make_pair(g, n / g);
        }
    }
    return std::nullopt;  // a^{p/2} = -1 (mod n): retry with another a
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace shorcf
