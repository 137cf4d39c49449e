#include "flagcodes/number_theory.hpp"

#include <algorithm>
#include <limits>

#include "flagcodes/error.hpp"

namespace flagcodes {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(Errc::BadDimensions, "integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

std::uint64_t gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Product of (q^{n-i} - 1) / (q^{i+1} - 1); every partial quotient is
  // itself a Gaussian binomial, hence an integer.
  unsigned __int128 acc = 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (unsigned i = 0; i < k; ++i) {
    unsigned __int128 num = 1, den = 1;
    for (unsigned j = 0; j < n - i; ++j) {
      num *= q;
      if (num > kMax) return kMax;
    }
    for (unsigned j = 0; j < i + 1; ++j) den *= q;
    acc *= (num - 1);
    acc /= (den - 1);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace flagcodes
