#include "engel/lie_elt.hpp"

#include "engel/errors.hpp"

namespace engel {

LieElt::LieElt(PrimeField field, const BasisWord& w, std::int64_t coeff) : field_(field) {
  add_term(w, field_.reduce(coeff));
}

std::uint32_t LieElt::coefficient(const BasisWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void LieElt::add_term(const BasisWord& w, std::uint32_t c) {
  c %= field_.prime();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void LieElt::check_field(const LieElt& o) const {
  if (!(field_ == o.field_)) throw UsageError("elements over different fields");
}

void LieElt::add_scaled(const LieElt& other, std::uint32_t c) {
  check_field(other);
  c %= field_.prime();
  if (c == 0) return;
  for (const auto& [w, a] : other.terms_) add_term(w, field_.mul(a, c));
}

LieElt& LieElt::operator+=(const LieElt& o) {
  add_scaled(o, 1);
  return *this;
}

LieElt& LieElt::operator-=(const LieElt& o) {
  add_scaled(o, field_.prime() - 1);
  return *this;
}

LieElt LieElt::operator-() const { return scaled(-1); }

LieElt LieElt::scaled(std::int64_t c) const {
  LieElt out(field_);
  out.add_scaled(*this, field_.reduce(c));
  return out;
}

bool LieElt::is_homogeneous() const {
  if (terms_.empty()) return true;
  MultiDegree d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (!(w.degree() == d)) return false;
  return true;
}

MultiDegree LieElt::degree() const {
  if (terms_.empty()) throw UsageError("the zero element has no degree");
  if (!is_homogeneous()) throw UsageError("element is not multihomogeneous");
  return terms_.begin()->first.degree();
}

std::map<MultiDegree, LieElt> LieElt::homogeneous_parts() const {
  std::map<MultiDegree, LieElt> parts;
  for (const auto& [w, c] : terms_) parts.try_emplace(w.degree(), field_).first->second.add_term(w, c);
  return parts;
}

std::string LieElt::dump() const {
  if (terms_.empty()) return "0\n";
  std::string s;
  for (const auto& [w, c] : terms_) s += std::to_string(c) + " " + w.to_string() + "\n";
  return s;
}

}  // namespace engel
