#pragma once

#include <cstdint>

namespace engel {

// Residue arithmetic modulo an odd prime p. Residues live in [0, p).
class PrimeField {
 public:
  // Throws UsageError unless p is an odd prime below 2^15.
  explicit PrimeField(std::uint32_t p = 5);

  std::uint32_t prime() const { return p_; }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  // Throws UsageError on zero.
  std::uint32_t inv(std::uint32_t a) const;

  // Symmetric representative in (-p/2, p/2], for display only.
  std::int64_t centered(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace engel
