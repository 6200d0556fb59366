#include "sumcover/modular.hpp"

#include <algorithm>
#include <numeric>

#include "sumcover/errors.hpp"

namespace sumcover {

Modulus::Modulus(uint64_t n) : n_(n) {
  if (n < 2) throw InvalidElementError("modulus must be at least 2");
}

bool is_coprime(uint64_t a, uint64_t n) { return std::gcd(a, n) == 1; }

uint64_t mod_inverse(uint64_t a, Modulus n) {
  const int64_t m = static_cast<int64_t>(n.value());
  int64_t r0 = m, r1 = static_cast<int64_t>(a % n.value());
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1)
    throw NotCoprimeError("no inverse: gcd(" + std::to_string(a) + ", " +
                          std::to_string(n.value()) + ") != 1");
  return static_cast<uint64_t>(t0 < 0 ? t0 + m : t0);
}

std::vector<uint64_t> divisors_ascending(uint64_t n) {
  std::vector<uint64_t> low, high;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

uint64_t smallest_prime_factor(uint64_t n) {
  if (n < 2) throw InvalidElementError("smallest_prime_factor needs n >= 2");
  if (n % 2 == 0) return 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

bool is_prime(uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

uint64_t totient(uint64_t n) {
  uint64_t result = n, m = n;
  for (uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace sumcover
