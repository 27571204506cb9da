#pragma once

#include <string_view>
#include <vector>

#include "engel/basis_word.hpp"
#include "engel/lie_elt.hpp"

namespace engel {

enum class ShapeClass { kZSmall, kZeta1, kZeta2, kZeta3, kZeta4, kXi1, kXi2, kTau1, kXMinusZ };

std::string_view shape_name(ShapeClass s);

// Survivor pattern of a normal word, by block sizes (|I1|, |I2|, tail multiset):
//   m = 1: Z_SMALL iff |I1| <= 3.
//   ZETA1 |I1|+|I2| = 3, |I1| <= 2, tail all pairs
//   ZETA2 |I1|+|I2| = 4, |I1| <= 2, |I2| <= 3, tail one singleton and pairs
//   ZETA3 (2,3), tail one empty block and pairs
//   ZETA4 (2,3), tail two singletons and pairs
//   XI1   (2,3), tail one singleton and pairs
//   XI2   |I1|+|I2| = 4, |I1| <= 2, |I2| <= 3, tail all pairs
//   TAU1  (2,3), tail all pairs
// Everything else is X_MINUS_Z.
ShapeClass classify(const BasisWord& w);

// The word is one of the ideal's generators: w != z and either type(w) is outside [-1, 1],
// or m >= 2 and a block other than I2 has more than two elements.
bool violates_defining_conditions(const BasisWord& w);

// All generator words of degree d, as unit elements.
std::vector<LieElt> j0_generators(PrimeField field, const MultiDegree& d);

}  // namespace engel
