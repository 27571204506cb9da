#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "engel/field.hpp"

namespace engel {

// A monomial of the associative algebra on z and commuting c_1..c_n: letters left to right,
// each maximal c-run sorted. Letter i >= 1 is c_i; kZLetter is z, the largest letter.
using EnvMonomial = std::vector<std::uint8_t>;
inline constexpr std::uint8_t kZLetter = 0xFF;

struct EnvTerm {
  EnvMonomial monomial;
  std::uint32_t coeff;
};

// Expansion of [z,c_{i1},...,c_{ir}] for a multiset given as a sorted index list.
std::vector<EnvTerm> expand_generator(PrimeField field, const std::vector<int>& multiset);

// Leading monomial of an expansion: largest in lexicographic order, a prefix being smaller.
EnvMonomial leading_monomial(const std::vector<EnvTerm>& terms);

struct FreeGenerationReport {
  int max_weight = 0;
  int n_gens = 0;
  std::size_t tuples = 0;     // ordered tuples (I_1..I_r) tested
  std::size_t rank = 0;       // rank of their expanded products
  std::size_t monomials = 0;  // distinct monomials met
  std::size_t graded_blocks = 0;
  bool leading_terms_ok = false;
  bool pass = false;
};

// Products [z,c_{I1}]...[z,c_{Ir}] with 1 <= r <= maxWeight factors and total c-content
// at most maxWeight (multisets over c_1..c_nGens) are linearly independent.
// Throws ResourceError if a graded block exceeds the dimension cap.
FreeGenerationReport verify_free_generation(PrimeField field, int max_weight, int n_gens);

}  // namespace engel
