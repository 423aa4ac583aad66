#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace shorcf {

/// a^x mod n by square-and-multiply, O(log x) multiplications. n >= 1;
/// a is reduced into [0, n) first, so any integer base is accepted.
std::int64_t mod_exp(std::int64_t a, std::int64_t x, std::int64_t n);

/// Smallest p >= 1 with a^p = 1 (mod n), by iterated multiplication.
/// Requires 0 < a < n, n >= 2 and gcd(a, n) = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

/// Count of 1 <= z <= n coprime to n, by direct count. Test oracle.
std::int64_t euler_phi(std::int64_t n);

/// Given a period p of a mod n (a^p = 1 mod n), tries to split n as
/// gcd(a^{p/2} -+ 1, n) times its cofactor. Returns nothing when p is odd
/// or when both gcds are trivial (a^{p/2} = -1 mod n); the caller retries
/// with a different a. Throws std::invalid_argument when a^p != 1 (mod n).
std::optional<std::pair<std::int64_t, std::int64_t>> factor_from_period(std::int64_t a,
                                                                        std::int64_t p,
                                                                        std::int64_t n);

/// Deterministic trial division up to sqrt(n).
bool is_prime(std::int64_t n);

}  // namespace shorcf
