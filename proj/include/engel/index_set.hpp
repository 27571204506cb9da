#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace engel {

// Finite subset of {1, ..., 63}. The empty set stands for the bare generator z.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 63;

  IndexSet() = default;
  // Throws UsageError on an out-of-range or repeated index.
  IndexSet(std::initializer_list<int> elements);

  static IndexSet from_mask(std::uint64_t mask);
  // nullopt when an index repeats: the corresponding generator is zero.
  static std::optional<IndexSet> from_elements(std::span<const int> elements);
  // {lo, ..., hi}; empty when hi < lo.
  static IndexSet range(int lo, int hi);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool contains(int i) const { return i >= 1 && i <= kMaxIndex && ((mask_ >> i) & 1u); }
  // Requires non-empty.
  int min() const { return std::countr_zero(mask_); }
  int max() const { return 63 - std::countl_zero(mask_); }
  bool disjoint(IndexSet o) const { return (mask_ & o.mask_) == 0; }
  bool subset_of(IndexSet o) const { return (mask_ & ~o.mask_) == 0; }

  // I ∪ {k}; nullopt when k ∈ I (the zero element).
  std::optional<IndexSet> adjoin(int k) const;
  IndexSet unite(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  IndexSet minus(IndexSet o) const { return from_mask(mask_ & ~o.mask_); }

  std::vector<int> elements() const;
  // "1,2,5"; empty string for the empty set.
  std::string to_string() const;

  friend bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Generator order on [z,c_I]: z is greatest; non-empty sets compare lexicographically
// as increasing sequences, a proper prefix being smaller than its extension.
std::strong_ordering gen_order_compare(IndexSet a, IndexSet b);

struct GenOrderLess {
  bool operator()(IndexSet a, IndexSet b) const { return gen_order_compare(a, b) < 0; }
};

}  // namespace engel
