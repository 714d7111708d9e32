#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fc {

/// All primes <= limit, ascending.
class PrimeTable {
 public:
  /// Sieve of Eratosthenes over odd numbers. Throws std::invalid_argument if limit < 2.
  static PrimeTable sieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  /// Prefix of primes <= x (x may be below or above limit; clipped to the table).
  std::span<const std::uint64_t> up_to(std::uint64_t x) const noexcept;
  /// pi(x) for x <= limit.
  std::size_t count_up_to(std::uint64_t x) const noexcept { return up_to(x).size(); }

 private:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

/// Process-wide cached table covering at least `limit`; thread-safe.
std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t limit);

/// Primality by trial division; for cross-checks and small inputs.
bool is_prime_trial(std::uint64_t n);

}  // namespace fc
