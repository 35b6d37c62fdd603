#include "coprime/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coprime/errors.hpp"

namespace coprime::nt {

std::shared_ptr<const PrimeTables> sieve_tables(std::uint64_t limit) {
  auto t = std::make_shared<PrimeTables>();
  t->limit = limit;
  t->is_prime.assign(limit + 1, 1);
  t->is_prime[0] = 0;
  if (limit >= 1) t->is_prime[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!t->is_prime[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) t->is_prime[j] = 0;
  }
  t->pi_prefix.resize(limit + 1);
  std::uint32_t count = 0;
  for (std::uint64_t x = 0; x <= limit; ++x) {
    if (t->is_prime[x]) {
      ++count;
      t->primes.push_back(static_cast<std::uint32_t>(x));
    }
    t->pi_prefix[x] = count;
  }
  return t;
}

PrimeSieve::PrimeSieve(std::uint64_t memory_cap) : cap_(memory_cap), tables_(sieve_tables(2)) {}

std::shared_ptr<const PrimeTables> PrimeSieve::snapshot() const {
  std::lock_guard lock(mu_);
  return tables_;
}

std::shared_ptr<const PrimeTables> PrimeSieve::ensure(std::uint64_t limit) {
  if (limit < 2) limit = 2;
  std::lock_guard lock(mu_);
  if (tables_->limit >= limit) return tables_;
  if (limit > cap_) {
    throw ResourceLimitError("sieve limit " + std::to_string(limit) + " exceeds memory cap " +
                             std::to_string(cap_));
  }
  std::uint64_t grown = tables_->limit;
  while (grown < limit) grown *= 2;
  grown = std::min(grown, cap_);
  tables_ = sieve_tables(grown);
  return tables_;
}

std::uint64_t PrimeSieve::nth_prime(std::uint64_t i) {
  if (i == 0) throw ParameterError("nth_prime: index must be >= 1");
  auto t = snapshot();
  while (t->primes.size() < i) {
    // p_i < i (ln i + ln ln i) for i >= 6
    double di = static_cast<double>(i);
    std::uint64_t estimate =
        i < 6 ? 16 : static_cast<std::uint64_t>(di * (std::log(di) + std::log(std::log(di)))) + 16;
    t = ensure(std::max(estimate, t->limit * 2));
  }
  return t->primes[i - 1];
}

std::uint64_t PrimeSieve::prime_count(std::uint64_t x) {
  if (x < 2) return 0;
  return ensure(x)->pi(x);
}

bool PrimeSieve::is_prime(std::uint64_t x) {
  if (x < 2) return false;
  return ensure(x)->prime(x);
}

std::uint64_t PrimeSieve::ramanujan_prime(std::uint64_t k) {
  if (k == 0) throw ParameterError("ramanujan_prime: k must be >= 1");
  for (;;) {
    std::uint64_t next;
    {
      std::lock_guard lock(mu_);
      if (k <= ramanujan_.size()) return ramanujan_[k - 1];
      next = ramanujan_.size() + 1;
    }
    std::uint64_t r = certify_ramanujan(next);
    std::lock_guard lock(mu_);
    if (ramanujan_.size() == next - 1) ramanujan_.push_back(r);
  }
}

std::uint64_t PrimeSieve::certify_ramanujan(std::uint64_t k) {
  // Last x <= bound with f(x) < k, plus one. Certified once f stays at least
  // k + 2 over the whole top half [bound/2, bound].
  auto last_below = [&](const PrimeTables& t, std::uint64_t bound) {
    std::uint64_t last = 0;
    for (std::uint64_t x = 0; x <= bound; ++x) {
      if (half_interval_count(t, x) < k) last = x;
    }
    return last + 1;
  };
  auto top_half_min = [&](const PrimeTables& t, std::uint64_t bound) {
    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t x = bound / 2; x <= bound; ++x) lo = std::min(lo, half_interval_count(t, x));
    return lo;
  };

  std::uint64_t bound = std::max<std::uint64_t>(64, 8 * k * static_cast<std::uint64_t>(std::log2(k + 2) + 1));
  auto t = ensure(bound);
  while (top_half_min(*t, bound) < k + 2) {
    bound *= 2;
    t = ensure(bound);
  }
  std::uint64_t r = last_below(*t, bound);

  // Stability: the same answer over a window twice as wide.
  auto wide = ensure(bound * 2);
  if (last_below(*wide, bound * 2) != r || !wide->prime(r)) {
    throw ConstructionFailure("Ramanujan prime certification unstable for k=" + std::to_string(k));
  }
  return r;
}

std::uint64_t PrimeSieve::lemma11_witness(std::uint64_t x) {
  if (x == 0) throw ParameterError("lemma11_witness: x must be >= 1");
  auto t = ensure(2 * x);
  auto it = std::upper_bound(t->primes.begin(), t->primes.end(), x);
  for (; it != t->primes.end() && *it <= 2 * x; ++it) {
    auto r = *it % 11;
    if (r != 1 && r != 10) return *it;
  }
  throw WitnessNotFound("no prime in (" + std::to_string(x) + ", " + std::to_string(2 * x) +
                        "] avoids 1 and 10 mod 11");
}

std::vector<Lemma11Failure> PrimeSieve::verify_lemma11_range(std::uint64_t x_max) {
  std::vector<Lemma11Failure> failures;
  ensure(2 * x_max);
  for (std::uint64_t x = 1; x <= x_max; ++x) {
    try {
      lemma11_witness(x);
    } catch (const WitnessNotFound&) {
      failures.push_back({x});
    }
  }
  return failures;
}

PrimeSieve& default_sieve() {
  static PrimeSieve sieve;
  return sieve;
}

std::shared_ptr<const PrimeTables> ensure_sieve(std::uint64_t limit) { return default_sieve().ensure(limit); }
std::uint64_t nth_prime(std::uint64_t i) { return default_sieve().nth_prime(i); }
std::uint64_t prime_count(std::uint64_t x) { return default_sieve().prime_count(x); }
bool is_prime(std::uint64_t x) { return default_sieve().is_prime(x); }
std::uint64_t lemma11_witness(std::uint64_t x) { return default_sieve().lemma11_witness(x); }
std::vector<Lemma11Failure> verify_lemma11_range(std::uint64_t x_max) {
  return default_sieve().verify_lemma11_range(x_max);
}

std::uint64_t ramanujan_prime(std::uint64_t k) { return default_sieve().ramanujan_prime(k); }

}  // namespace coprime::nt
