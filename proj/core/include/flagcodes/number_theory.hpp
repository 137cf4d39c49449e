#pragma once

#include <cstdint>
#include <vector>

namespace flagcodes {

/// Distinct prime factors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// base^exp, throwing BadDimensions on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// Gaussian binomial coefficient [n choose k]_q, or UINT64_MAX on overflow.
std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

}  // namespace flagcodes
