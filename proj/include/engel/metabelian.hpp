#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "engel/basis_word.hpp"
#include "engel/lie_elt.hpp"

namespace engel {

// Binary bracket tree whose leaves are scaled generators coeff * [z,c_I].
struct GeneratorTree {
  std::int64_t coeff = 1;
  IndexSet block;
  std::vector<GeneratorTree> children;

  static GeneratorTree leaf(IndexSet block, std::int64_t coeff = 1);
  static GeneratorTree node(GeneratorTree left, GeneratorTree right);
  // [[g1,g2],g3],...
  static GeneratorTree left_normed(std::span<const IndexSet> blocks);

  bool is_leaf() const { return children.empty(); }
  std::string key() const;
};

// Id(z) as the free metabelian Lie algebra on the [z,c_I], with the derivations ad(c_k) and ad(z).
class FreeMetabelian {
 public:
  explicit FreeMetabelian(PrimeField field) : field_(field) {}
  FreeMetabelian(const FreeMetabelian&) = delete;
  FreeMetabelian& operator=(const FreeMetabelian&) = delete;

  const PrimeField& field() const { return field_; }

  LieElt zero() const { return LieElt(field_); }
  LieElt generator(IndexSet block, std::int64_t coeff = 1) const;
  LieElt z() const { return generator(IndexSet{}); }
  LieElt word(const BasisWord& w) const { return LieElt(field_, w); }

  LieElt bracket(const LieElt& a, const LieElt& b) const;
  // [g_{B1}, g_{B2}, ..., g_{Bm}] left-normed; zero if two blocks overlap.
  LieElt left_normed(std::span<const IndexSet> blocks) const;
  // Derivation [z,c_I] -> [z,c_{I ∪ k}] (zero when k ∈ I), i.e. right bracket with c_k.
  LieElt ad_c(const LieElt& a, int k) const;
  // Right bracket with z.
  LieElt ad_z(const LieElt& a) const;

  // Throws StructuralError for nodes without exactly two children.
  LieElt normal_form(const GeneratorTree& tree) const;

  // Bracket of two basis words, added to out with coefficient c.
  void bracket_words(const BasisWord& u, const BasisWord& v, std::uint32_t c, LieElt& out) const;

 private:
  PrimeField field_;
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::string, LieElt> memo_;
};

// Value of a bracket expression over z and the c_i. Brackets among c's alone leave Id(z);
// they are kept only as "c-commutators", whose adjoint action on Id(z) is zero.
class ModelValue {
 public:
  enum class Kind { kIdeal, kGenerator, kCCommutator };

  static ModelValue ideal(LieElt e) { return ModelValue(Kind::kIdeal, std::move(e), 0, 0); }
  static ModelValue c_generator(PrimeField f, int index, std::int64_t coeff = 1);
  static ModelValue c_commutator(PrimeField f) { return ModelValue(Kind::kCCommutator, LieElt(f), 0, 0); }

  Kind kind() const { return kind_; }
  const LieElt& element() const { return element_; }
  int index() const { return index_; }
  std::uint32_t coeff() const { return coeff_; }
  bool is_zero() const;

  ModelValue scaled(std::int64_t c) const;
  static ModelValue bracket(const FreeMetabelian& alg, const ModelValue& a, const ModelValue& b);

 private:
  ModelValue(Kind k, LieElt e, int index, std::uint32_t coeff)
      : kind_(k), element_(std::move(e)), index_(index), coeff_(coeff) {}

  Kind kind_;
  LieElt element_;
  int index_;
  std::uint32_t coeff_;
};

}  // namespace engel
