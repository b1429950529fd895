#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace mobius::arith {

struct SieveOptions {
  /// Entries per sieving segment. Rounded up to a multiple of 4 so that
  /// segments never share a byte of the packed output.
  std::size_t segment_size = std::size_t{1} << 20;
  /// Store omega(n) (distinct prime factor counts, one byte per entry).
  bool with_omega = false;
  /// Worker threads; 0 picks the OpenMP default.
  int threads = 0;
};

/// Values of mu(n) and optionally omega(n) for 1 <= n <= n_max.
///
/// mu is packed two bits per entry (0 -> 0, 1 -> +1, 2 -> -1, 3 reserved),
/// so the table for n_max = 1e8 fits in 25 MB. Index 0 does not exist;
/// accessors reject it. Immutable after construction and safe to share
/// across threads.
class SieveTable {
public:
  static SieveTable sieve(std::uint64_t n_max, const SieveOptions& opts = {});

  std::uint64_t n_max() const { return n_max_; }
  bool has_omega() const { return !omega_.empty(); }

  /// mu(n) in {-1, 0, +1}. Throws std::out_of_range unless 1 <= n <= n_max.
  int mu(std::uint64_t n) const {
    check_index(n);
    return decode(raw_code(n));
  }

  /// mu^2(n), i.e. 1 exactly when n is squarefree.
  bool squarefree(std::uint64_t n) const {
    check_index(n);
    return raw_code(n) != 0;
  }

  /// Number of distinct prime factors. Requires with_omega at sieve time.
  int omega(std::uint64_t n) const;

  /// Packed code for n (0, 1 or 2); bounds-checked.
  std::uint8_t code(std::uint64_t n) const {
    check_index(n);
    return raw_code(n);
  }

  /// Mertens sum M(x) = sum_{n<=x} mu(n), exact.
  std::int64_t mertens(std::uint64_t x) const;

  /// sum_{n<=x} mu(n)/n with compensated summation.
  double landau_sum(std::uint64_t x) const;

  /// Number of squarefree n <= x.
  std::uint64_t squarefree_count(std::uint64_t x) const;

  /// (1/x) sum_{n<=x} mu^2(n).
  double squarefree_density(std::uint64_t x) const;

  /// Binary cache. Layout: magic "MUSV0001", n_max as 8-byte little-endian,
  /// one flags byte (bit 0: omega block present), packed mu codes for
  /// n = 1..n_max (four codes per byte, lowest n in the least significant
  /// bits), then n_max omega bytes when flagged.
  void save(const std::filesystem::path& file) const;
  static SieveTable load(const std::filesystem::path& file);

  bool operator==(const SieveTable& other) const {
    return n_max_ == other.n_max_ && mu_packed_ == other.mu_packed_ &&
           omega_ == other.omega_;
  }

private:
  SieveTable() = default;
  void check_index(std::uint64_t n) const;
  std::uint8_t raw_code(std::uint64_t n) const {
    const std::uint64_t slot = n - 1;
    return static_cast<std::uint8_t>(
        (mu_packed_[slot >> 2] >> (2 * (slot & 3))) & 3u);
  }
  static int decode(std::uint8_t code) {
    static constexpr int kValue[4] = {0, 1, -1, 0};
    return kValue[code];
  }

  std::uint64_t n_max_ = 0;
  std::vector<std::uint8_t> mu_packed_;
  std::vector<std::uint8_t> omega_;
};

/// Simple bitmap sieve of Eratosthenes; primes up to and including limit.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace mobius::arith
