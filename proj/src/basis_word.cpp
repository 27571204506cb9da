#include "engel/basis_word.hpp"

#include <algorithm>

#include "engel/errors.hpp"

namespace engel {

std::string MultiDegree::to_string() const {
  return "(" + std::to_string(zdeg) + "; " + support.to_string() + ")";
}

BasisWord::BasisWord(std::vector<IndexSet> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw StructuralError("basis word needs at least one block");
  std::uint64_t seen = 0;
  for (IndexSet b : blocks_) {
    if (seen & b.mask()) throw StructuralError("basis word blocks overlap");
    seen |= b.mask();
  }
  if (blocks_.size() >= 2) {
    if (gen_order_compare(blocks_[0], blocks_[1]) <= 0)
      throw StructuralError("basis word head must exceed the second block");
    for (std::size_t i = 2; i < blocks_.size(); ++i)
      if (gen_order_compare(blocks_[i - 1], blocks_[i]) > 0)
        throw StructuralError("basis word tail must be non-decreasing");
  }
}

BasisWord BasisWord::generator(IndexSet block) { return BasisWord({block}, Unchecked{}); }

std::optional<BasisWord> BasisWord::assemble(IndexSet head, IndexSet second, std::vector<IndexSet> tail) {
  std::uint64_t seen = head.mask();
  if (seen & second.mask()) return std::nullopt;
  seen |= second.mask();
  for (IndexSet b : tail) {
    if (seen & b.mask()) return std::nullopt;
    seen |= b.mask();
  }
  std::sort(tail.begin(), tail.end(), GenOrderLess{});
  std::vector<IndexSet> blocks;
  blocks.reserve(tail.size() + 2);
  blocks.push_back(head);
  blocks.push_back(second);
  blocks.insert(blocks.end(), tail.begin(), tail.end());
  return BasisWord(std::move(blocks), Unchecked{});
}

IndexSet BasisWord::support() const {
  std::uint64_t m = 0;
  for (IndexSet b : blocks_) m |= b.mask();
  return IndexSet::from_mask(m);
}

std::string BasisWord::to_string() const {
  std::string s;
  for (IndexSet b : blocks_) s += "[z|" + b.to_string() + "]";
  return s;
}

std::strong_ordering operator<=>(const BasisWord& a, const BasisWord& b) {
  if (auto c = a.blocks_.size() <=> b.blocks_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (auto c = gen_order_compare(a.blocks_[i], b.blocks_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

// Assign each element of `rest` to one of `slots` blocks (possibly empty) in every way.
void distribute(const std::vector<int>& rest, std::size_t pos, std::vector<std::uint64_t>& slots,
                std::vector<std::vector<std::uint64_t>>& out) {
  if (pos == rest.size()) {
    out.push_back(slots);
    return;
  }
  for (auto& s : slots) {
    s |= std::uint64_t{1} << rest[pos];
    distribute(rest, pos + 1, slots, out);
    s &= ~(std::uint64_t{1} << rest[pos]);
  }
}

}  // namespace

std::vector<BasisWord> enumerate_basis(const MultiDegree& d) {
  std::vector<BasisWord> out;
  if (d.zdeg < 1) return out;
  if (d.zdeg == 1) {
    out.push_back(BasisWord::generator(d.support));
    return out;
  }
  // Every ordered block assignment; keep those already in normal order.
  std::vector<std::vector<std::uint64_t>> assignments;
  std::vector<std::uint64_t> slots(d.zdeg, 0);
  distribute(d.support.elements(), 0, slots, assignments);
  for (const auto& a : assignments) {
    std::vector<IndexSet> blocks;
    blocks.reserve(a.size());
    for (auto m : a) blocks.push_back(IndexSet::from_mask(m));
    if (gen_order_compare(blocks[0], blocks[1]) <= 0) continue;
    bool sorted = true;
    for (std::size_t i = 2; i < blocks.size() && sorted; ++i)
      sorted = gen_order_compare(blocks[i - 1], blocks[i]) <= 0;
    if (sorted) out.push_back(BasisWord(std::move(blocks)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace engel
