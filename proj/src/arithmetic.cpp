#include "degraph/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "degraph/error.hpp"

namespace degraph {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::overflow: return "overflow";
    case Errc::unsupported_family: return "unsupported_family";
    case Errc::unsupported: return "unsupported";
    case Errc::precondition: return "precondition";
    case Errc::parse_error: return "parse_error";
    case Errc::unknown_claim: return "unknown_claim";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

namespace {

__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<u64, 12> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Brent's variant of Pollard rho with a fixed polynomial offset, so runs are
// reproducible. Returns a nontrivial divisor of composite odd n, or n on failure.
u64 brent_rho(u64 n, u64 c) {
  u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
  u64 r = 1;
  constexpr u64 kBatch = 128;
  auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
      k += kBatch;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = brent_rho(n, c);
    if (d != n && d != 1) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

}  // namespace

void require_in_range(u64 n, const char* what) {
  if (n > kMaxValue) {
    std::ostringstream msg;
    msg << "overflow: " << what << " = " << n << " exceeds the supported range 2^63-1";
    throw Error(Errc::overflow, msg.str());
  }
}

u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kMaxValue) {
    std::ostringstream msg;
    msg << "overflow: product " << a << " * " << b << " exceeds 2^63-1";
    throw Error(Errc::overflow, msg.str());
  }
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kMaxValue) {
    std::ostringstream msg;
    msg << "overflow: sum " << a << " + " << b << " exceeds 2^63-1";
    throw Error(Errc::overflow, msg.str());
  }
  return r;
}

u64 checked_pow(u64 base, unsigned exponent) {
  u64 r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

u64 gcd(u64 a, u64 b) noexcept {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic witness set below 3.3e24.
  for (u64 a : kSmallPrimes) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 Factorization::product() const {
  u64 r = 1;
  for (const auto& [p, e] : factors) r = checked_mul(r, checked_pow(p, e));
  return r;
}

Factorization factor(u64 n) {
  if (n == 0) throw Error(Errc::invalid_argument, "factor: n must be >= 1, got 0");
  require_in_range(n, "factor argument");

  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  split(rest, primes);
  std::sort(primes.begin(), primes.end());

  Factorization out;
  out.value = n;
  for (u64 p : primes) {
    if (!out.factors.empty() && out.factors.back().prime == p) {
      ++out.factors.back().exponent;
    } else {
      out.factors.push_back({p, 1});
    }
  }
  return out;
}

PrimeSet prime_set(u64 n) {
  std::vector<u64> primes;
  for (const auto& pp : factor(n).factors) primes.push_back(pp.prime);
  return PrimeSet(std::move(primes));
}

std::optional<PrimePowerForm> as_prime_power(u64 n) {
  if (n < 2) throw Error(Errc::invalid_argument, "as_prime_power: n must be >= 2");
  auto f = factor(n);
  if (f.factors.size() != 1) return std::nullopt;
  return PrimePowerForm{f.factors[0].prime, f.factors[0].exponent};
}

bool is_mersenne_prime_exponent(u64 s) {
  if (s < 2) throw Error(Errc::invalid_argument, "is_mersenne_prime_exponent: s must be >= 2");
  if (!is_prime(s)) return false;
  if (s >= 63) throw Error(Errc::overflow, "overflow: is_mersenne_prime_exponent: 2^s - 1 exceeds 2^63-1");
  return is_prime((u64{1} << s) - 1);
}

bool is_power_of_two(u64 n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

bool is_2_3_smooth(u64 n, unsigned min_two_exponent) {
  if (n == 0) return false;
  unsigned twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  while (n % 3 == 0) n /= 3;
  return n == 1 && twos >= min_two_exponent;
}

// --- PrimeSet ---------------------------------------------------------------

PrimeSet::PrimeSet(std::initializer_list<u64> primes)
    : PrimeSet(std::vector<u64>(primes)) {}

PrimeSet::PrimeSet(std::vector<u64> primes) {
  for (u64 p : primes) {
    if (!is_prime(p)) {
      throw Error(Errc::invalid_argument, "PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  primes_ = std::move(primes);
}

bool PrimeSet::contains(u64 p) const noexcept {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::size_t PrimeSet::index_of(u64 p) const noexcept {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return primes_.size();
  return static_cast<std::size_t>(it - primes_.begin());
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const noexcept {
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(),
                       primes_.end());
}

PrimeSet operator|(const PrimeSet& a, const PrimeSet& b) {
  std::vector<u64> out;
  std::set_union(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                 std::back_inserter(out));
  return PrimeSet(PrimeSet::Trusted{}, std::move(out));
}

PrimeSet operator&(const PrimeSet& a, const PrimeSet& b) {
  std::vector<u64> out;
  std::set_intersection(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                        b.primes_.end(), std::back_inserter(out));
  return PrimeSet(PrimeSet::Trusted{}, std::move(out));
}

PrimeSet operator-(const PrimeSet& a, const PrimeSet& b) {
  std::vector<u64> out;
  std::set_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                      std::back_inserter(out));
  return PrimeSet(PrimeSet::Trusted{}, std::move(out));
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) os << (i ? "," : "") << primes_[i];
  os << '}';
  return os.str();
}

}  // namespace degraph
