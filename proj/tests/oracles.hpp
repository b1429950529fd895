// Brute-force reference implementations used as independent oracles.
// Everything here is deliberately naive: trial division, direct O(n*k)
// sums, exhaustive enumeration. Nothing includes the library code paths
// it is used to check.
#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

inline int mu_trial(std::uint64_t n) {
  if (n == 1) return 1;
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

inline int omega_trial(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ++count;
  return count;
}

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::int64_t mertens_direct(std::uint64_t x) {
  std::int64_t s = 0;
  for (std::uint64_t n = 1; n <= x; ++n) s += mu_trial(n);
  return s;
}

inline double landau_direct(std::uint64_t x) {
  double s = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n)
    s += static_cast<double>(mu_trial(n)) / static_cast<double>(n);
  return s;
}

// Truncated one-sided sample autocorrelation, direct O(n * k_max).
inline std::vector<std::complex<double>> autocorrelation_direct(
    const std::vector<std::complex<double>>& g, std::size_t k_max) {
  const std::size_t n = g.size();
  std::vector<std::complex<double>> out(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j + k < n; ++j) s += g[j + k] * std::conj(g[j]);
    out[k] = s / static_cast<double>(n);
  }
  return out;
}

// Periodogram by direct evaluation of the trigonometric polynomial.
inline std::vector<double> periodogram_direct(
    const std::vector<std::complex<double>>& g, std::size_t grid) {
  const std::size_t n = g.size();
  std::vector<double> density(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                     static_cast<double>(grid);
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j)
      s += g[j] * std::polar(1.0, x * static_cast<double>(j));
    density[i] = std::norm(s) / static_cast<double>(n);
  }
  return density;
}

inline int thue_morse_digit_sum(std::uint64_t n) {
  return (std::popcount(n) % 2 == 0) ? 1 : -1;
}

// Exhaustive distinct-window count over a symbol sequence.
inline std::size_t distinct_windows(const std::vector<std::uint16_t>& symbols,
                                    std::size_t m) {
  std::set<std::vector<std::uint16_t>> seen;
  for (std::size_t i = 0; i + m <= symbols.size(); ++i)
    seen.insert(std::vector<std::uint16_t>(symbols.begin() + i,
                                           symbols.begin() + i + m));
  return seen.size();
}

// Atomic part of the squared-Mobius spectral measure, materialized one atom
// at a time with exact rational reduction. Usable for small d_max only.
inline std::map<std::pair<std::uint64_t, std::uint64_t>, double>
mu_squared_atoms_direct(std::uint32_t d_max, long double base_constant) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> atoms;
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    if (mu_trial(d) == 0) continue;
    long double w = base_constant / static_cast<long double>(d * d);
    for (std::uint64_t p = 2; p <= d; ++p)
      if (is_prime_trial(p) && d % p == 0)
        w /= static_cast<long double>(p * p - 2);
    for (std::uint64_t j = 0; j < d * d; ++j) {
      std::uint64_t num = j, den = d * d;
      const std::uint64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
      atoms[{num, den}] += static_cast<double>(w);
    }
  }
  return atoms;
}

}  // namespace oracle
