#pragma once

#include <cstdint>
#include <vector>

namespace sumcover {

// Modulus of the cyclic group Z_n, n >= 2. All residue arithmetic in the
// library is reduced into [0, n).
class Modulus {
 public:
  explicit Modulus(uint64_t n);

  uint64_t value() const { return n_; }

  uint64_t reduce(long long x) const {
    long long m = static_cast<long long>(n_);
    long long r = x % m;
    return static_cast<uint64_t>(r < 0 ? r + m : r);
  }

  bool operator==(const Modulus& o) const { return n_ == o.n_; }
  bool operator!=(const Modulus& o) const { return n_ != o.n_; }

 private:
  uint64_t n_;
};

bool is_coprime(uint64_t a, uint64_t n);

// b with a * b = 1 (mod n). Throws NotCoprimeError when gcd(a, n) != 1.
uint64_t mod_inverse(uint64_t a, Modulus n);

std::vector<uint64_t> divisors_ascending(uint64_t n);

uint64_t smallest_prime_factor(uint64_t n);  // n >= 2
bool is_prime(uint64_t n);
uint64_t totient(uint64_t n);

}  // namespace sumcover
