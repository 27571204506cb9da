#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "engel/basis_word.hpp"
#include "engel/field.hpp"

namespace engel {

// Element of Id(z) in normal form: basis words with nonzero residues mod p.
class LieElt {
 public:
  using Terms = std::map<BasisWord, std::uint32_t>;

  explicit LieElt(PrimeField field) : field_(field) {}
  LieElt(PrimeField field, const BasisWord& w, std::int64_t coeff = 1);

  const PrimeField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint32_t coefficient(const BasisWord& w) const;

  // this += c * w
  void add_term(const BasisWord& w, std::uint32_t c);
  // this += c * other
  void add_scaled(const LieElt& other, std::uint32_t c);

  LieElt& operator+=(const LieElt& o);
  LieElt& operator-=(const LieElt& o);
  friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
  friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
  LieElt operator-() const;
  LieElt scaled(std::int64_t c) const;

  // Throws UsageError unless all terms share one multidegree; zero has none.
  MultiDegree degree() const;
  bool is_homogeneous() const;
  // Split into homogeneous parts.
  std::map<MultiDegree, LieElt> homogeneous_parts() const;

  // One "<coeff> [z|..][z|..]" line per term; "0" for the zero element.
  std::string dump() const;

  friend bool operator==(const LieElt& a, const LieElt& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void check_field(const LieElt& o) const;

  PrimeField field_;
  Terms terms_;
};

}  // namespace engel
