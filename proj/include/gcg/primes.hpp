#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gcg {

/// Sorted, deduplicated set of primes (π, π_x, ...).
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  bool contains(std::uint64_t p) const;

  PrimeSet unite(const PrimeSet& other) const;
  bool intersects(const PrimeSet& other) const;

  /// Every prime divisor of n lies in the set (1 is a π-number for every π).
  bool is_pi_number(std::uint64_t n) const;
  /// No prime divisor of n lies in the set.
  bool is_complement_number(std::uint64_t n) const;

  /// "{2,3,7}"
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Prime divisors of n by trial division; empty for n = 1.
PrimeSet primes_of(std::uint64_t n);

/// Largest divisor of n that is a power of p.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace gcg
