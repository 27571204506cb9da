#include "engel/metabelian.hpp"

#include "engel/errors.hpp"

namespace engel {

GeneratorTree GeneratorTree::leaf(IndexSet block, std::int64_t coeff) {
  GeneratorTree t;
  t.block = block;
  t.coeff = coeff;
  return t;
}

GeneratorTree GeneratorTree::node(GeneratorTree left, GeneratorTree right) {
  GeneratorTree t;
  t.children.push_back(std::move(left));
  t.children.push_back(std::move(right));
  return t;
}

GeneratorTree GeneratorTree::left_normed(std::span<const IndexSet> blocks) {
  if (blocks.empty()) throw StructuralError("empty bracket");
  GeneratorTree t = leaf(blocks[0]);
  for (std::size_t i = 1; i < blocks.size(); ++i) t = node(std::move(t), leaf(blocks[i]));
  return t;
}

std::string GeneratorTree::key() const {
  if (is_leaf()) return std::to_string(coeff) + "{" + block.to_string() + "}";
  std::string s = std::to_string(coeff) + "[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ',';
    s += children[i].key();
  }
  return s + "]";
}

LieElt FreeMetabelian::generator(IndexSet block, std::int64_t coeff) const {
  return LieElt(field_, BasisWord::generator(block), coeff);
}

void FreeMetabelian::bracket_words(const BasisWord& u, const BasisWord& v, std::uint32_t c, LieElt& out) const {
  if (c == 0 || !u.support().disjoint(v.support())) return;
  const auto& ub = u.blocks();
  const auto& vb = v.blocks();
  if (ub.size() >= 2 && vb.size() >= 2) return;
  if (ub.size() == 1 && vb.size() == 1) {
    auto ord = gen_order_compare(ub[0], vb[0]);
    if (ord == 0) return;
    if (ord > 0)
      out.add_term(*BasisWord::assemble(ub[0], vb[0], {}), c);
    else
      out.add_term(*BasisWord::assemble(vb[0], ub[0], {}), field_.neg(c));
    return;
  }
  if (ub.size() == 1) {
    bracket_words(v, u, field_.neg(c), out);
    return;
  }
  IndexSet a = ub[0], b = ub[1], g = vb[0];
  std::vector<IndexSet> tail(ub.begin() + 2, ub.end());
  if (gen_order_compare(g, b) >= 0) {
    tail.push_back(g);
    out.add_term(*BasisWord::assemble(a, b, std::move(tail)), c);
    return;
  }
  // g < b < a: [a,b,g] = [a,g,b] - [b,g,a]; the tail commutes past.
  auto t1 = tail;
  t1.push_back(b);
  out.add_term(*BasisWord::assemble(a, g, std::move(t1)), c);
  tail.push_back(a);
  out.add_term(*BasisWord::assemble(b, g, std::move(tail)), field_.neg(c));
}

LieElt FreeMetabelian::bracket(const LieElt& a, const LieElt& b) const {
  if (!(a.field() == field_) || !(b.field() == field_)) throw UsageError("element over a different field");
  LieElt out(field_);
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) bracket_words(u, v, field_.mul(cu, cv), out);
  return out;
}

LieElt FreeMetabelian::left_normed(std::span<const IndexSet> blocks) const {
  if (blocks.empty()) throw StructuralError("empty bracket");
  LieElt x = generator(blocks[0]);
  for (std::size_t i = 1; i < blocks.size() && !x.is_zero(); ++i) {
    LieElt next(field_);
    BasisWord g = BasisWord::generator(blocks[i]);
    for (const auto& [w, c] : x.terms()) bracket_words(w, g, c, next);
    x = std::move(next);
  }
  return x;
}

LieElt FreeMetabelian::ad_c(const LieElt& a, int k) const {
  LieElt out(field_);
  for (const auto& [w, c] : a.terms()) {
    if (w.support().contains(k)) continue;
    std::vector<IndexSet> blocks = w.blocks();
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      IndexSet saved = blocks[j];
      blocks[j] = *saved.adjoin(k);
      out.add_scaled(left_normed(blocks), c);
      blocks[j] = saved;
    }
  }
  return out;
}

LieElt FreeMetabelian::ad_z(const LieElt& a) const { return bracket(a, z()); }

LieElt FreeMetabelian::normal_form(const GeneratorTree& tree) const {
  if (tree.is_leaf()) return generator(tree.block, tree.coeff);
  if (tree.children.size() != 2) throw StructuralError("bracket node must have exactly two children");
  std::string key = tree.key();
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  LieElt result = bracket(normal_form(tree.children[0]), normal_form(tree.children[1])).scaled(tree.coeff);
  std::lock_guard lock(memo_mutex_);
  memo_.emplace(std::move(key), result);
  return result;
}

ModelValue ModelValue::c_generator(PrimeField f, int index, std::int64_t coeff) {
  if (index < 1 || index > IndexSet::kMaxIndex) throw UsageError("generator index out of range");
  return ModelValue(Kind::kGenerator, LieElt(f), index, f.reduce(coeff));
}

bool ModelValue::is_zero() const {
  switch (kind_) {
    case Kind::kIdeal: return element_.is_zero();
    case Kind::kGenerator: return coeff_ == 0;
    case Kind::kCCommutator: return false;
  }
  return false;
}

ModelValue ModelValue::scaled(std::int64_t c) const {
  const PrimeField& f = element_.field();
  switch (kind_) {
    case Kind::kIdeal: return ideal(element_.scaled(c));
    case Kind::kGenerator: return ModelValue(kind_, element_, index_, f.mul(coeff_, f.reduce(c)));
    case Kind::kCCommutator: return *this;
  }
  return *this;
}

ModelValue ModelValue::bracket(const FreeMetabelian& alg, const ModelValue& a, const ModelValue& b) {
  const PrimeField& f = alg.field();
  using K = Kind;
  if (a.kind_ == K::kIdeal && b.kind_ == K::kIdeal) return ideal(alg.bracket(a.element_, b.element_));
  if (a.kind_ == K::kIdeal && b.kind_ == K::kGenerator)
    return ideal(alg.ad_c(a.element_, b.index_).scaled(b.coeff_));
  if (a.kind_ == K::kGenerator && b.kind_ == K::kIdeal)
    return ideal(alg.ad_c(b.element_, a.index_).scaled(-static_cast<std::int64_t>(a.coeff_)));
  if (a.kind_ == K::kGenerator && b.kind_ == K::kGenerator) {
    if (a.index_ == b.index_ || a.coeff_ == 0 || b.coeff_ == 0) return ideal(alg.zero());
    return c_commutator(f);
  }
  // One side is a c-commutator: it acts trivially on Id(z) and stays among the c's otherwise.
  if (a.kind_ == K::kIdeal || b.kind_ == K::kIdeal) return ideal(alg.zero());
  if (a.is_zero() || b.is_zero()) return ideal(alg.zero());
  return c_commutator(f);
}

}  // namespace engel
