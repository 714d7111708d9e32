#include "fc/primes.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fc {

PrimeTable PrimeTable::sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  // composite[i] marks 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  composite[0] = true;  // 1
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<std::uint64_t> primes{2};
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(2 * i + 1);
  }
  return PrimeTable(limit, std::move(primes));
}

std::span<const std::uint64_t> PrimeTable::up_to(std::uint64_t x) const noexcept {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), x);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const PrimeTable> cached;
  limit = std::max<std::uint64_t>(limit, 1000);
  std::lock_guard lock(mutex);
  if (!cached || cached->limit() < limit) {
    // Grow geometrically so repeated slightly-larger requests do not re-sieve.
    const std::uint64_t target = cached ? std::max(limit, cached->limit() * 2) : limit;
    cached = std::make_shared<const PrimeTable>(PrimeTable::sieve(target));
  }
  return cached;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace fc
