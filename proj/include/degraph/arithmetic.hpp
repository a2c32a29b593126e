#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace degraph {

using u64 = std::uint64_t;

/// Largest integer accepted anywhere in the library (2^63 - 1).
inline constexpr u64 kMaxValue = (u64{1} << 63) - 1;

/// Throws Errc::overflow when `n` is outside the supported range.
void require_in_range(u64 n, const char* what);

/// a*b, throwing Errc::overflow if the product exceeds kMaxValue.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exponent);

u64 gcd(u64 a, u64 b) noexcept;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, primes strictly increasing.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  u64 product() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Sorted, deduplicated set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<u64> primes);
  /// Validates primality of every element; duplicates are merged.
  explicit PrimeSet(std::vector<u64> primes);

  const std::vector<u64>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(u64 p) const noexcept;
  bool is_subset_of(const PrimeSet& other) const noexcept;
  /// Position of `p` in sorted order, or size() if absent.
  std::size_t index_of(u64 p) const noexcept;

  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  friend PrimeSet operator|(const PrimeSet& a, const PrimeSet& b);
  friend PrimeSet operator&(const PrimeSet& a, const PrimeSet& b);
  friend PrimeSet operator-(const PrimeSet& a, const PrimeSet& b);
  PrimeSet& operator|=(const PrimeSet& other) { return *this = *this | other; }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

  std::string to_string() const;

 private:
  struct Trusted {};
  PrimeSet(Trusted, std::vector<u64> sorted) : primes_(std::move(sorted)) {}

  std::vector<u64> primes_;
};

Factorization factor(u64 n);
PrimeSet prime_set(u64 n);

struct PrimePowerForm {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePowerForm&, const PrimePowerForm&) = default;
};

/// (p, f) with p^f == n, or nullopt when n is not a prime power. Requires n >= 2.
std::optional<PrimePowerForm> as_prime_power(u64 n);

/// True iff s is prime and 2^s - 1 is prime. Requires s >= 2.
bool is_mersenne_prime_exponent(u64 s);

/// True iff n = 2^i 3^j with i >= min_two_exponent.
bool is_2_3_smooth(u64 n, unsigned min_two_exponent = 0);

bool is_power_of_two(u64 n) noexcept;

}  // namespace degraph
