#include "engel/engel_ideal.hpp"

#include <chrono>

#include "engel/errors.hpp"
#include "engel/limits.hpp"

namespace engel {

GradedComponent::GradedComponent(MultiDegree degree, std::vector<BasisWord> basis, RowEchelon echelon)
    : degree_(degree), basis_(std::move(basis)), echelon_(std::move(echelon)) {
  for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  j_matrix_ = echelon_.rref();
  for (std::uint32_t c = 0; c < basis_.size(); ++c)
    if (!echelon_.is_pivot(c)) quotient_columns_.push_back(c);
}

std::optional<std::uint32_t> GradedComponent::column_of(const BasisWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseRow GradedComponent::to_row(const LieElt& a) const {
  std::map<std::uint32_t, std::uint32_t> row;
  for (const auto& [w, c] : a.terms()) {
    auto col = column_of(w);
    if (!col) throw UsageError("term " + w.to_string() + " is outside slice " + degree_.to_string());
    row[*col] = c;
  }
  return SparseRow(row.begin(), row.end());
}

LieElt GradedComponent::from_row(PrimeField field, const SparseRow& row) const {
  LieElt out(field);
  for (auto [c, x] : row) out.add_term(basis_.at(c), x);
  return out;
}

namespace {

std::vector<BasisWord> checked_basis(const MultiDegree& d) {
  auto basis = enumerate_basis(d);
  if (basis.size() > dimension_cap())
    throw ResourceError("slice " + d.to_string() + " exceeds the dimension cap");
  return basis;
}

}  // namespace

std::shared_ptr<const GradedComponent> EngelIdeal::explicit_component(const MultiDegree& d, bool boundary) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = explicit_cache_.find({d, boundary}); it != explicit_cache_.end()) return it->second;
  }
  auto basis = checked_basis(d);
  RowEchelon ech(alg_.field());
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    if (classify(basis[i]) == ShapeClass::kXMinusZ) ech.insert({{i, 1}});
  auto comp = std::make_shared<GradedComponent>(d, basis, RowEchelon(alg_.field()));
  int t = d.type();
  if (t >= -1 && t <= 1)
    for (RelatorFamily f : spanning_families(t, boundary))
      for (const auto& b : enumerate_bindings(f, d)) ech.insert(comp->to_row(instantiate_relator(alg_, f, b)));
  auto result = std::make_shared<const GradedComponent>(d, std::move(basis), std::move(ech));
  std::lock_guard lock(mutex_);
  return explicit_cache_.try_emplace({d, boundary}, result).first->second;
}

std::shared_ptr<const GradedComponent> EngelIdeal::closure_component(const MultiDegree& d) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = closure_cache_.find(d); it != closure_cache_.end()) return it->second;
  }
  auto basis = checked_basis(d);
  auto shell = std::make_shared<GradedComponent>(d, basis, RowEchelon(alg_.field()));
  RowEchelon ech(alg_.field());
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    if (violates_defining_conditions(basis[i])) ech.insert({{i, 1}});
  std::size_t z_count = (d.zdeg == 1 && d.support.empty()) ? 1 : 0;
  // Once the generators fill the slice (z aside) nothing lower can add to it.
  if (ech.rank() + z_count < basis.size()) {
    const PrimeField& f = alg_.field();
    for (int k : d.support.elements()) {
      MultiDegree lower{d.zdeg, d.support.minus(IndexSet{k})};
      auto sub = closure_component(lower);
      for (const auto& row : sub->j_matrix())
        ech.insert(shell->to_row(alg_.ad_c(sub->from_row(f, row), k)));
    }
    if (d.zdeg >= 2) {
      auto sub = closure_component({d.zdeg - 1, d.support});
      for (const auto& row : sub->j_matrix()) ech.insert(shell->to_row(alg_.ad_z(sub->from_row(f, row))));
    }
  }
  auto result = std::make_shared<const GradedComponent>(d, std::move(basis), std::move(ech));
  std::lock_guard lock(mutex_);
  return closure_cache_.try_emplace(d, result).first->second;
}

bool EngelIdeal::member(const LieElt& a) const {
  for (const auto& [d, part] : a.homogeneous_parts())
    if (!explicit_component(d)->contains(part)) return false;
  return true;
}

SparseRow ProjectedSpan::project(const LieElt& a) const {
  std::map<std::uint32_t, std::uint32_t> row;
  for (const auto& [w, c] : a.terms()) {
    if (classify(w) == ShapeClass::kXMinusZ) continue;
    auto [it, inserted] = columns_.try_emplace(w, static_cast<std::uint32_t>(words_.size()));
    if (inserted) words_.push_back(w);
    row[it->second] = c;
  }
  return SparseRow(row.begin(), row.end());
}

LieElt ProjectedSpan::residue(const LieElt& a) const {
  LieElt out(field_);
  for (auto [c, x] : echelon_.reduce(project(a))) out.add_term(words_[c], x);
  return out;
}

std::vector<MultiDegree> lattice_degrees(int n) {
  if (n < 0 || n > IndexSet::kMaxIndex) throw UsageError("n out of range");
  std::vector<MultiDegree> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet s = IndexSet::from_mask(mask << 1);
    for (int m = 1; s.size() - 2 * m >= -2; ++m)
      if (s.size() - 2 * m <= 1) out.push_back(MultiDegree{m, s});
  }
  return out;
}

SliceComparison compare_slice(const EngelIdeal& ideal, const MultiDegree& d) {
  auto t0 = std::chrono::steady_clock::now();
  const PrimeField& f = ideal.algebra().field();
  auto with = ideal.explicit_component(d, true);
  auto without = ideal.explicit_component(d, false);
  auto closure = ideal.closure_component(d);
  SliceComparison c;
  c.degree = d;
  c.dimension = with->dimension();
  c.explicit_rank = with->j_rank();
  c.closure_rank = closure->j_rank();
  c.without_boundary_rank = without->j_rank();
  c.equal = same_row_space(f, with->j_matrix(), closure->j_matrix());
  c.equal_without_boundary = same_row_space(f, without->j_matrix(), closure->j_matrix());
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace engel
