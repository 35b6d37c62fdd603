#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace coprime::nt {

inline constexpr std::uint64_t kDefaultSieveCap = std::uint64_t{1} << 28;

// Snapshot of the sieve up to `limit`. Immutable once published.
struct PrimeTables {
  std::uint64_t limit = 0;
  std::vector<std::uint8_t> is_prime;      // indexed 0..limit
  std::vector<std::uint32_t> primes;       // ascending, all <= limit
  std::vector<std::uint32_t> pi_prefix;    // pi_prefix[x] = pi(x), x <= limit

  bool prime(std::uint64_t x) const { return x <= limit && is_prime[x] != 0; }
  std::uint64_t pi(std::uint64_t x) const { return pi_prefix[x]; }
};

std::shared_ptr<const PrimeTables> sieve_tables(std::uint64_t limit);

struct Lemma11Failure {
  std::uint64_t x;
};

// Growable sieve with cached derived tables (Ramanujan primes). Growth is
// serialized behind a mutex; readers get a shared snapshot that stays valid
// after later growth.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t memory_cap = kDefaultSieveCap);

  // Tables valid at least up to `limit`. Grows geometrically; never shrinks.
  std::shared_ptr<const PrimeTables> ensure(std::uint64_t limit);
  std::shared_ptr<const PrimeTables> snapshot() const;
  std::uint64_t memory_cap() const noexcept { return cap_; }

  // p_i, 1-based: nth_prime(1) == 2.
  std::uint64_t nth_prime(std::uint64_t i);
  // pi(x): number of primes <= x.
  std::uint64_t prime_count(std::uint64_t x);
  bool is_prime(std::uint64_t x);

  // R_k: least integer with pi(x) - pi(floor(x/2)) >= k for every x >= R_k.
  std::uint64_t ramanujan_prime(std::uint64_t k);

  // Least prime p in (x, 2x] with p mod 11 not in {1, 10}.
  std::uint64_t lemma11_witness(std::uint64_t x);
  std::vector<Lemma11Failure> verify_lemma11_range(std::uint64_t x_max);

 private:
  std::uint64_t certify_ramanujan(std::uint64_t k);

  std::uint64_t cap_;
  mutable std::mutex mu_;
  std::shared_ptr<const PrimeTables> tables_;
  std::vector<std::uint64_t> ramanujan_;  // ramanujan_[k-1] = R_k, prefix-complete
};

// Process-wide sieve used by the free functions below and by the rest of the
// library.
PrimeSieve& default_sieve();

std::shared_ptr<const PrimeTables> ensure_sieve(std::uint64_t limit);
std::uint64_t nth_prime(std::uint64_t i);
std::uint64_t prime_count(std::uint64_t x);
bool is_prime(std::uint64_t x);
std::uint64_t ramanujan_prime(std::uint64_t k);
std::uint64_t lemma11_witness(std::uint64_t x);
std::vector<Lemma11Failure> verify_lemma11_range(std::uint64_t x_max);

// f(x) = pi(x) - pi(floor(x/2)) evaluated on a snapshot.
inline std::uint64_t half_interval_count(const PrimeTables& t, std::uint64_t x) {
  return t.pi(x) - t.pi(x / 2);
}

}  // namespace coprime::nt
