#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "engel/index_set.hpp"

namespace engel {

// Multidegree of a homogeneous element of Id(z): zdeg copies of z and each c_i at most once.
struct MultiDegree {
  int zdeg = 0;
  IndexSet support;

  int type() const { return support.size() - 2 * zdeg; }
  std::string to_string() const;  // "(m; 1,2,5)"

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) {
    if (auto c = a.zdeg <=> b.zdeg; c != 0) return c;
    return a.support.mask() <=> b.support.mask();
  }
};

inline int type_of(const MultiDegree& d) { return d.type(); }

// Basis element [[z,c_{I1}],[z,c_{I2}],...,[z,c_{Im}]] of the free metabelian algebra on the
// [z,c_I]. Blocks are pairwise disjoint, I1 > I2 <= I3 <= ... <= Im in generator order.
class BasisWord {
 public:
  // Throws StructuralError if the blocks violate the normal-form invariants.
  explicit BasisWord(std::vector<IndexSet> blocks);

  static BasisWord generator(IndexSet block);
  static BasisWord z() { return generator(IndexSet{}); }

  // Normal word with the given head pair and unsorted tail; nullopt if blocks overlap.
  // Requires head > second in generator order and second <= every tail block.
  static std::optional<BasisWord> assemble(IndexSet head, IndexSet second, std::vector<IndexSet> tail);

  const std::vector<IndexSet>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  IndexSet support() const;
  MultiDegree degree() const { return {length(), support()}; }

  // "[z|2,5][z|1,3,4]"
  std::string to_string() const;

  friend bool operator==(const BasisWord&, const BasisWord&) = default;
  // Lexicographic by block sequence under the generator order, shorter first.
  friend std::strong_ordering operator<=>(const BasisWord& a, const BasisWord& b);

 private:
  struct Unchecked {};
  BasisWord(std::vector<IndexSet> blocks, Unchecked) : blocks_(std::move(blocks)) {}

  std::vector<IndexSet> blocks_;
};

inline MultiDegree multidegree_of(const BasisWord& w) { return w.degree(); }

// All basis words of degree d, in ascending word order.
std::vector<BasisWord> enumerate_basis(const MultiDegree& d);

}  // namespace engel
