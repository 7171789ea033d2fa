#include "gcg/primes.hpp"

#include <algorithm>
#include <string>

#include "gcg/errors.hpp"

namespace gcg {

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes) : primes_(primes) {
  for (const auto p : primes_) {
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(out.primes_));
  return out;
}

bool PrimeSet::intersects(const PrimeSet& other) const {
  auto a = primes_.begin();
  auto b = other.primes_.begin();
  while (a != primes_.end() && b != other.primes_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

bool PrimeSet::is_pi_number(std::uint64_t n) const {
  for (const auto p : primes_) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

bool PrimeSet::is_complement_number(std::uint64_t n) const {
  return std::none_of(primes_.begin(), primes_.end(), [n](std::uint64_t p) { return n % p == 0; });
}

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(primes_[i]);
  }
  return out + "}";
}

PrimeSet primes_of(std::uint64_t n) {
  if (n == 0) throw ValidationError("primes_of requires n >= 1");
  PrimeSet out;
  std::vector<std::uint64_t> found;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    found.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) found.push_back(n);
  for (const auto p : found) out = out.unite(PrimeSet{p});
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace gcg
