#include "engel/shape.hpp"

#include <algorithm>

namespace engel {

std::string_view shape_name(ShapeClass s) {
  switch (s) {
    case ShapeClass::kZSmall: return "Z_SMALL";
    case ShapeClass::kZeta1: return "ZETA1";
    case ShapeClass::kZeta2: return "ZETA2";
    case ShapeClass::kZeta3: return "ZETA3";
    case ShapeClass::kZeta4: return "ZETA4";
    case ShapeClass::kXi1: return "XI1";
    case ShapeClass::kXi2: return "XI2";
    case ShapeClass::kTau1: return "TAU1";
    case ShapeClass::kXMinusZ: return "X_MINUS_Z";
  }
  return "?";
}

ShapeClass classify(const BasisWord& w) {
  const auto& b = w.blocks();
  if (b.size() == 1) return b[0].size() <= 3 ? ShapeClass::kZSmall : ShapeClass::kXMinusZ;
  int a = b[0].size(), s2 = b[1].size();
  if (s2 > 3) return ShapeClass::kXMinusZ;
  int zeros = 0, ones = 0;
  for (std::size_t i = 2; i < b.size(); ++i) {
    int sz = b[i].size();
    if (sz == 0) ++zeros;
    else if (sz == 1) ++ones;
    else if (sz != 2) return ShapeClass::kXMinusZ;
  }
  int sum = a + s2;
  bool big_pair = a == 2 && s2 == 3;
  if (sum == 3 && a <= 2 && zeros == 0 && ones == 0) return ShapeClass::kZeta1;
  if (sum == 4 && a <= 2 && zeros == 0 && ones == 1) return ShapeClass::kZeta2;
  if (big_pair && zeros == 1 && ones == 0) return ShapeClass::kZeta3;
  if (big_pair && zeros == 0 && ones == 2) return ShapeClass::kZeta4;
  if (big_pair && zeros == 0 && ones == 1) return ShapeClass::kXi1;
  if (sum == 4 && a <= 2 && zeros == 0 && ones == 0) return ShapeClass::kXi2;
  if (big_pair && zeros == 0 && ones == 0) return ShapeClass::kTau1;
  return ShapeClass::kXMinusZ;
}

bool violates_defining_conditions(const BasisWord& w) {
  const auto& b = w.blocks();
  if (b.size() == 1 && b[0].empty()) return false;
  int t = w.degree().type();
  if (t < -1 || t > 1) return true;
  if (b.size() < 2) return false;
  if (b[0].size() > 2) return true;
  return std::any_of(b.begin() + 2, b.end(), [](IndexSet s) { return s.size() > 2; });
}

std::vector<LieElt> j0_generators(PrimeField field, const MultiDegree& d) {
  std::vector<LieElt> out;
  for (const auto& w : enumerate_basis(d))
    if (violates_defining_conditions(w)) out.emplace_back(field, w);
  return out;
}

}  // namespace engel
