#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "engel/basis_word.hpp"
#include "engel/metabelian.hpp"

namespace testing_support {

inline constexpr std::uint64_t kSeed = 0x5eed'2024;

// Random subset of {1..n}.
inline engel::IndexSet random_block(std::mt19937_64& rng, int n, double density = 0.35) {
  std::bernoulli_distribution take(density);
  std::uint64_t mask = 0;
  for (int i = 1; i <= n; ++i)
    if (take(rng)) mask |= std::uint64_t{1} << i;
  return engel::IndexSet::from_mask(mask);
}

// Random bracket tree with the given number of leaves.
inline engel::GeneratorTree random_tree(std::mt19937_64& rng, int n, int leaves) {
  if (leaves <= 1) {
    std::uniform_int_distribution<int> coeff(1, 4);
    return engel::GeneratorTree::leaf(random_block(rng, n), coeff(rng));
  }
  std::uniform_int_distribution<int> split(1, leaves - 1);
  int left = split(rng);
  auto a = random_tree(rng, n, left);
  auto b = random_tree(rng, n, leaves - left);
  return engel::GeneratorTree::node(std::move(a), std::move(b));
}

// Sum of a few normalized random trees with at most max_leaves leaves each.
inline engel::LieElt random_element(std::mt19937_64& rng, const engel::FreeMetabelian& alg, int n, int max_leaves) {
  std::uniform_int_distribution<int> terms(1, 3), leaves(1, max_leaves);
  engel::LieElt out = alg.zero();
  for (int t = terms(rng); t > 0; --t) out += alg.normal_form(random_tree(rng, n, leaves(rng)));
  return out;
}

// Ordered sequences of m pairwise disjoint blocks whose union is s; empty blocks allowed.
inline std::vector<std::vector<engel::IndexSet>> block_sequences(int m, engel::IndexSet s) {
  std::vector<std::vector<engel::IndexSet>> out;
  std::vector<int> elems = s.elements();
  std::vector<int> slot(elems.size(), 0);
  while (true) {
    std::vector<std::uint64_t> masks(m, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) masks[slot[i]] |= std::uint64_t{1} << elems[i];
    std::vector<engel::IndexSet> seq;
    for (auto mk : masks) seq.push_back(engel::IndexSet::from_mask(mk));
    out.push_back(std::move(seq));
    std::size_t pos = 0;
    while (pos < slot.size() && ++slot[pos] == m) slot[pos++] = 0;
    if (pos == slot.size()) break;
  }
  return out;
}

}  // namespace testing_support
