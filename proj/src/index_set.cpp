#include "engel/index_set.hpp"

#include "engel/errors.hpp"

namespace engel {

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int i : elements) {
    if (i < 1 || i > kMaxIndex) throw UsageError("index out of range: " + std::to_string(i));
    std::uint64_t bit = std::uint64_t{1} << i;
    if (mask_ & bit) throw UsageError("repeated index " + std::to_string(i));
    mask_ |= bit;
  }
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  if (mask & 1u) throw UsageError("index 0 is not a generator index");
  IndexSet s;
  s.mask_ = mask;
  return s;
}

std::optional<IndexSet> IndexSet::from_elements(std::span<const int> elements) {
  std::uint64_t mask = 0;
  for (int i : elements) {
    if (i < 1 || i > kMaxIndex) throw UsageError("index out of range: " + std::to_string(i));
    std::uint64_t bit = std::uint64_t{1} << i;
    if (mask & bit) return std::nullopt;
    mask |= bit;
  }
  return from_mask(mask);
}

IndexSet IndexSet::range(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.mask_ |= std::uint64_t{1} << i;
  return s;
}

std::optional<IndexSet> IndexSet::adjoin(int k) const {
  if (k < 1 || k > kMaxIndex) throw UsageError("index out of range: " + std::to_string(k));
  if (contains(k)) return std::nullopt;
  return from_mask(mask_ | (std::uint64_t{1} << k));
}

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string IndexSet::to_string() const {
  std::string s;
  for (int i : elements()) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

std::strong_ordering gen_order_compare(IndexSet a, IndexSet b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.empty()) return std::strong_ordering::greater;
  if (b.empty()) return std::strong_ordering::less;
  // Both sequences agree below the lowest differing element x. The set holding x
  // continues with x; the other continues with something larger, or stops.
  std::uint64_t diff = a.mask() ^ b.mask();
  int x = std::countr_zero(diff);
  bool x_in_a = (a.mask() >> x) & 1u;
  std::uint64_t other = x_in_a ? b.mask() : a.mask();
  bool other_continues = (other >> x) >> 1 != 0;
  // Holder of x is smaller iff the other continues past x.
  bool a_smaller = x_in_a ? other_continues : !other_continues;
  return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace engel
