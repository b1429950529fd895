#include "mobius/sieve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mobius::arith {

namespace {

constexpr char kMagic[8] = {'M', 'U', 'S', 'V', '0', '0', '0', '1'};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  for (std::uint32_t i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back(i);
  return primes;
}

void SieveTable::check_index(std::uint64_t n) const {
  if (n == 0 || n > n_max_)
    throw std::out_of_range("SieveTable: index " + std::to_string(n) +
                            " outside [1, " + std::to_string(n_max_) + "]");
}

int SieveTable::omega(std::uint64_t n) const {
  check_index(n);
  if (omega_.empty())
    throw std::logic_error("SieveTable: omega was not requested at sieve time");
  return omega_[n - 1];
}

SieveTable SieveTable::sieve(std::uint64_t n_max, const SieveOptions& opts) {
  if (n_max == 0) throw std::invalid_argument("SieveTable: n_max must be >= 1");

  SieveTable table;
  table.n_max_ = n_max;
  try {
    table.mu_packed_.assign((n_max + 3) / 4, 0);
    if (opts.with_omega) table.omega_.assign(n_max, 0);
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("SieveTable: allocation failed for n_max = " +
                             std::to_string(n_max));
  }

  const auto base_primes =
      primes_up_to(static_cast<std::uint32_t>(isqrt(n_max)));

  // Segment boundaries are multiples of 4 in slot space so concurrent
  // segments write disjoint bytes of the packed array.
  std::uint64_t segment = std::max<std::uint64_t>(opts.segment_size, 4);
  segment = (segment + 3) / 4 * 4;
  const std::uint64_t n_segments = (n_max + segment - 1) / segment;

#ifdef _OPENMP
  const int n_threads =
      opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
  const int n_threads = 1;
  (void)n_threads;
#endif

#pragma omp parallel num_threads(n_threads)
  {
    std::vector<std::uint64_t> partial(segment);
    std::vector<std::int8_t> sign(segment);
    std::vector<std::uint8_t> zero(segment);
    std::vector<std::uint8_t> om(segment);

#pragma omp for schedule(dynamic)
    for (std::int64_t seg = 0; seg < static_cast<std::int64_t>(n_segments);
         ++seg) {
      const std::uint64_t lo = 1 + static_cast<std::uint64_t>(seg) * segment;
      const std::uint64_t hi = std::min(n_max, lo + segment - 1);
      const std::uint64_t len = hi - lo + 1;

      std::fill_n(partial.begin(), len, std::uint64_t{1});
      std::fill_n(sign.begin(), len, std::int8_t{1});
      std::fill_n(zero.begin(), len, std::uint8_t{0});
      std::fill_n(om.begin(), len, std::uint8_t{0});

      for (std::uint32_t p : base_primes) {
        const std::uint64_t p64 = p;
        // Primes above sqrt(hi) leave at most one factor per entry; the
        // leftover pass below accounts for it.
        if (p64 * p64 > hi) break;
        // distinct-prime pass
        for (std::uint64_t m = (lo + p64 - 1) / p64 * p64; m <= hi; m += p64) {
          const std::uint64_t i = m - lo;
          partial[i] *= p64;
          sign[i] = static_cast<std::int8_t>(-sign[i]);
          ++om[i];
        }
        // higher powers: track full multiplicity, mark mu = 0 at p^2
        std::uint64_t q = p64 * p64;
        if (q <= hi) {
          for (std::uint64_t m = (lo + q - 1) / q * q; m <= hi; m += q)
            zero[m - lo] = 1;
          while (q <= hi) {
            for (std::uint64_t m = (lo + q - 1) / q * q; m <= hi; m += q)
              partial[m - lo] *= p64;
            if (q > hi / p64) break;
            q *= p64;
          }
        }
      }

      for (std::uint64_t i = 0; i < len; ++i) {
        // leftover factor is a single prime > sqrt(n_max)
        if (partial[i] != lo + i) {
          sign[i] = static_cast<std::int8_t>(-sign[i]);
          ++om[i];
        }
      }

      std::uint8_t* out = table.mu_packed_.data() + (lo - 1) / 4;
      for (std::uint64_t i = 0; i < len; ++i) {
        const std::uint8_t code = zero[i] ? 0 : (sign[i] > 0 ? 1 : 2);
        out[i >> 2] |= static_cast<std::uint8_t>(code << (2 * (i & 3)));
      }
      if (!table.omega_.empty())
        std::memcpy(table.omega_.data() + (lo - 1), om.data(), len);
    }
  }
  return table;
}

std::int64_t SieveTable::mertens(std::uint64_t x) const {
  check_index(x);
  std::int64_t sum = 0;
  for (std::uint64_t n = 1; n <= x; ++n) sum += decode(raw_code(n));
  return sum;
}

double SieveTable::landau_sum(std::uint64_t x) const {
  check_index(x);
  // Neumaier compensated sum of mu(n)/n.
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const int m = decode(raw_code(n));
    if (m == 0) continue;
    const double term = static_cast<double>(m) / static_cast<double>(n);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

std::uint64_t SieveTable::squarefree_count(std::uint64_t x) const {
  check_index(x);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) count += raw_code(n) != 0;
  return count;
}

double SieveTable::squarefree_density(std::uint64_t x) const {
  return static_cast<double>(squarefree_count(x)) / static_cast<double>(x);
}

void SieveTable::save(const std::filesystem::path& file) const {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("SieveTable: cannot open for writing: " +
                             file.string());
  out.write(kMagic, sizeof(kMagic));
  std::array<unsigned char, 8> le{};
  for (int i = 0; i < 8; ++i)
    le[i] = static_cast<unsigned char>((n_max_ >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(le.data()), le.size());
  const char flags = omega_.empty() ? 0 : 1;
  out.put(flags);
  out.write(reinterpret_cast<const char*>(mu_packed_.data()),
            static_cast<std::streamsize>(mu_packed_.size()));
  if (!omega_.empty())
    out.write(reinterpret_cast<const char*>(omega_.data()),
              static_cast<std::streamsize>(omega_.size()));
  if (!out)
    throw std::runtime_error("SieveTable: write failed: " + file.string());
}

SieveTable SieveTable::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in)
    throw std::runtime_error("SieveTable: cannot open cache: " + file.string());
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("SieveTable: cache-version mismatch in " +
                             file.string() + " (expected magic MUSV0001)");
  std::array<unsigned char, 8> le{};
  in.read(reinterpret_cast<char*>(le.data()), le.size());
  std::uint64_t n_max = 0;
  for (int i = 0; i < 8; ++i) n_max |= std::uint64_t{le[i]} << (8 * i);
  const int flags = in.get();
  if (!in || n_max == 0)
    throw std::runtime_error("SieveTable: corrupt cache header in " +
                             file.string());

  SieveTable table;
  table.n_max_ = n_max;
  table.mu_packed_.assign((n_max + 3) / 4, 0);
  in.read(reinterpret_cast<char*>(table.mu_packed_.data()),
          static_cast<std::streamsize>(table.mu_packed_.size()));
  if (flags & 1) {
    table.omega_.assign(n_max, 0);
    in.read(reinterpret_cast<char*>(table.omega_.data()),
            static_cast<std::streamsize>(table.omega_.size()));
  }
  if (!in)
    throw std::runtime_error("SieveTable: truncated cache: " + file.string());
  return table;
}

}  // namespace mobius::arith
