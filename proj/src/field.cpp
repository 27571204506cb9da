#include "engel/field.hpp"

#include <string>

#include "engel/errors.hpp"

namespace engel {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_odd_prime(p) || p >= (1u << 15))
    throw UsageError("coefficient modulus must be an odd prime below 32768, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw UsageError("zero has no inverse");
  // Fermat: a^(p-2).
  std::uint32_t result = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace engel
