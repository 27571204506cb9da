#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "engel/echelon.hpp"
#include "engel/metabelian.hpp"
#include "engel/relators.hpp"
#include "engel/shape.hpp"

namespace engel {

// One multidegree slice: its basis and the ideal's intersection with it.
class GradedComponent {
 public:
  GradedComponent(MultiDegree degree, std::vector<BasisWord> basis, RowEchelon echelon);

  const MultiDegree& degree() const { return degree_; }
  const std::vector<BasisWord>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t j_rank() const { return echelon_.rank(); }
  std::size_t quotient_dim() const { return basis_.size() - echelon_.rank(); }
  // Reduced row-echelon form over the basis columns.
  const std::vector<SparseRow>& j_matrix() const { return j_matrix_; }
  // Non-pivot columns; their words represent a basis of the quotient slice.
  const std::vector<std::uint32_t>& quotient_columns() const { return quotient_columns_; }

  std::optional<std::uint32_t> column_of(const BasisWord& w) const;
  // Throws UsageError for a term outside this slice.
  SparseRow to_row(const LieElt& a) const;
  LieElt from_row(PrimeField field, const SparseRow& row) const;
  bool contains(const LieElt& a) const { return echelon_.contains(to_row(a)); }
  // Residue supported on quotient columns.
  SparseRow reduce(const LieElt& a) const { return echelon_.reduce(to_row(a)); }

 private:
  MultiDegree degree_;
  std::vector<BasisWord> basis_;
  std::map<BasisWord, std::uint32_t> index_;
  RowEchelon echelon_;
  std::vector<SparseRow> j_matrix_;
  std::vector<std::uint32_t> quotient_columns_;
};

// The graded ideal J, slice by slice, with memoized components.
class EngelIdeal {
 public:
  explicit EngelIdeal(const FreeMetabelian& alg) : alg_(alg) {}

  const FreeMetabelian& algebra() const { return alg_; }

  // Span of the X\Z words and every relator instantiation of this degree. Without the
  // two-block families the span is smaller on the m = 2 slices of type -1 and 0.
  std::shared_ptr<const GradedComponent> explicit_component(const MultiDegree& d, bool boundary_families = true) const;
  // Closure of the generator words under ad(c_k) and ad(z), built up from lower degrees.
  std::shared_ptr<const GradedComponent> closure_component(const MultiDegree& d) const;

  // Every homogeneous part lies in its explicit slice.
  bool member(const LieElt& a) const;

 private:
  const FreeMetabelian& alg_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<MultiDegree, bool>, std::shared_ptr<const GradedComponent>> explicit_cache_;
  mutable std::map<MultiDegree, std::shared_ptr<const GradedComponent>> closure_cache_;
};

// Multidegrees with c-degrees in {0,1} over c_1..c_n and type in [-2, 1], ordered by support
// mask, then zdeg.
std::vector<MultiDegree> lattice_degrees(int n);

struct SliceComparison {
  MultiDegree degree;
  std::size_t dimension = 0;
  std::size_t explicit_rank = 0;
  std::size_t closure_rank = 0;
  std::size_t without_boundary_rank = 0;  // explicit span without the two-block families
  bool equal = false;                     // explicit and closure row spaces coincide
  bool equal_without_boundary = false;
  double elapsed_ms = 0;
};

SliceComparison compare_slice(const EngelIdeal& ideal, const MultiDegree& d);

// Span of relators modulo the X\Z words: elements are projected onto their Z-class terms.
class ProjectedSpan {
 public:
  explicit ProjectedSpan(PrimeField field) : field_(field), echelon_(field) {}

  void insert(const LieElt& a) { echelon_.insert(project(a)); }
  std::size_t rank() const { return echelon_.rank(); }
  // Canonical residue of a modulo X\Z and the span, as an element.
  LieElt residue(const LieElt& a) const;
  bool contains(const LieElt& a) const { return echelon_.contains(project(a)); }

 private:
  SparseRow project(const LieElt& a) const;

  PrimeField field_;
  RowEchelon echelon_;
  mutable std::map<BasisWord, std::uint32_t> columns_;
  mutable std::vector<BasisWord> words_;
};

}  // namespace engel
