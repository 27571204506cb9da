#include "engel/operators.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "engel/errors.hpp"
#include "engel/limits.hpp"

namespace engel {

namespace {

constexpr std::size_t kMaxFailures = 6;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

OperatorReport start_report(const OperatorGroup& g, std::string check) {
  OperatorReport rep;
  rep.check = std::move(check);
  rep.p = g.truncation().field().prime();
  rep.n = g.truncation().n();
  rep.dim = g.truncation().dim();
  return rep;
}

void record(OperatorReport& rep, bool& ok, bool cond, const std::string& what) {
  if (cond) return;
  ok = false;
  if (rep.failures.size() < kMaxFailures) rep.failures.push_back(what);
}

// Every binary tree with the given leaf sequence.
void all_trees(const std::vector<int>& letters, std::size_t lo, std::size_t hi, std::vector<SimpleCommutator>& out) {
  if (hi - lo == 1) {
    out.push_back(SimpleCommutator::leaf(letters[lo]));
    return;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    std::vector<SimpleCommutator> left, right;
    all_trees(letters, lo, mid, left);
    all_trees(letters, mid, hi, right);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back(SimpleCommutator::node(a, b));
  }
}

}  // namespace

// ---- Truncation ----

Truncation::Truncation(const EngelIdeal& ideal, int n) : alg_(ideal.algebra()), n_(n) {
  if (n < 0 || n > IndexSet::kMaxIndex) throw UsageError("truncation: n out of range");
  const std::size_t cap = dimension_cap();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    IndexSet s = IndexSet::from_mask(mask << 1);
    for (int m = 1; 2 * m <= s.size() + 2; ++m) {
      int type = s.size() - 2 * m;
      bool z_slice = m == 1 && s.empty();
      if (!z_slice && (type < -1 || type > 1)) continue;
      MultiDegree d{m, s};
      auto comp = ideal.explicit_component(d);
      Slice slice{comp, {}};
      for (std::uint32_t col : comp->quotient_columns()) {
        slice.column_to_basis.emplace(col, basis_.size());
        basis_.push_back(comp->basis()[col]);
        basis_degree_.push_back(d);
        if (basis_.size() > cap)
          throw ResourceError("truncation dimension exceeds the cap of " + std::to_string(cap) +
                              " (set ENGEL_LAB_MAX_DIM to raise it)");
      }
      slices_.emplace(d, std::move(slice));
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  z_index_ = index_.at(BasisWord::z());
  ad_z_ = ad(alg_.z());
  for (int k = 1; k <= n; ++k) ad_c_.push_back(ad(ModelValue::c_generator(alg_.field(), k)));
}

std::optional<std::size_t> Truncation::index_of(const BasisWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> Truncation::coordinates(const LieElt& a) const {
  std::vector<std::uint32_t> v(dim(), 0);
  const IndexSet universe = IndexSet::range(1, n_);
  for (const auto& [d, part] : a.homogeneous_parts()) {
    if (!d.support.subset_of(universe))
      throw UsageError("element uses a generator beyond c_" + std::to_string(n_));
    auto it = slices_.find(d);
    if (it == slices_.end()) continue;  // type outside [-1, 1]: the slice lies in J
    for (auto [col, x] : it->second.component->reduce(part)) v[it->second.column_to_basis.at(col)] = x;
  }
  return v;
}

LieElt Truncation::element(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != dim()) throw UsageError("coordinate vector has the wrong length");
  LieElt out = alg_.zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) out.add_term(basis_[i], coords[i]);
  return out;
}

ModMatrix Truncation::ad(const LieElt& w) const {
  ModMatrix m(field(), dim(), dim());
  if (w.is_zero()) return m;
  for (std::size_t j = 0; j < dim(); ++j) {
    auto col = coordinates(alg_.bracket(alg_.word(basis_[j]), w));
    for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

ModMatrix Truncation::ad(const ModelValue& w) const {
  using K = ModelValue::Kind;
  switch (w.kind()) {
    case K::kIdeal: return ad(w.element());
    case K::kCCommutator: return ModMatrix(field(), dim(), dim());
    case K::kGenerator: {
      ModMatrix m(field(), dim(), dim());
      if (w.coeff() == 0) return m;
      if (w.index() < 1 || w.index() > n_) throw UsageError("generator c_" + std::to_string(w.index()) + " outside the truncation");
      for (std::size_t j = 0; j < dim(); ++j) {
        auto col = coordinates(alg_.ad_c(alg_.word(basis_[j]), w.index()));
        for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = field().mul(col[i], w.coeff());
      }
      return m;
    }
  }
  return ModMatrix(field(), dim(), dim());
}

const ModMatrix& Truncation::ad_c(int k) const {
  if (k < 1 || k > n_) throw UsageError("generator c_" + std::to_string(k) + " outside the truncation");
  return ad_c_[k - 1];
}

// ---- Operator ----

Operator Operator::one_plus(const ModMatrix& n) { return Operator(ModMatrix::identity(n.field(), n.rows()) + n); }

ModMatrix Operator::deviation() const { return m_ - ModMatrix::identity(m_.field(), m_.rows()); }

Operator Operator::inverse() const {
  // (1 + N)^-1 = sum_k (-N)^k, finite because N is nilpotent.
  const PrimeField& f = m_.field();
  ModMatrix neg = deviation().scaled(f.neg(1));
  ModMatrix term = neg;
  ModMatrix sum = ModMatrix::identity(f, m_.rows());
  for (std::size_t k = 1; !term.is_zero(); ++k) {
    if (k > m_.rows()) throw UsageError("operator is not unipotent");
    sum = sum + term;
    term = term * neg;
  }
  return Operator(std::move(sum));
}

Operator Operator::power(std::uint64_t k) const {
  Operator result = identity(m_.field(), m_.rows());
  Operator base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Operator group_commutator(const Operator& g, const Operator& h) { return g.inverse() * h.inverse() * g * h; }

Operator group_commutator(const std::vector<Operator>& ops) {
  if (ops.empty()) throw UsageError("commutator of no operators");
  Operator acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = group_commutator(acc, ops[i]);
  return acc;
}

bool is_unipotent(const Operator& g) {
  ModMatrix n = g.deviation();
  ModMatrix power = n;
  for (std::size_t k = 0; k <= g.dim(); ++k) {
    if (power.is_zero()) return true;
    power = power * n;
  }
  return false;
}

// ---- SimpleCommutator ----

SimpleCommutator SimpleCommutator::leaf(int letter) {
  if (letter < 0) throw UsageError("commutator letters are 0 (z) or positive (c_i)");
  return SimpleCommutator{letter, {}};
}

SimpleCommutator SimpleCommutator::node(SimpleCommutator a, SimpleCommutator b) {
  SimpleCommutator s;
  s.kids.push_back(std::move(a));
  s.kids.push_back(std::move(b));
  return s;
}

SimpleCommutator SimpleCommutator::left_normed(const std::vector<int>& letters) {
  if (letters.empty()) throw UsageError("empty commutator");
  SimpleCommutator acc = leaf(letters[0]);
  for (std::size_t i = 1; i < letters.size(); ++i) acc = node(std::move(acc), leaf(letters[i]));
  return acc;
}

int SimpleCommutator::weight() const { return is_leaf() ? 1 : kids[0].weight() + kids[1].weight(); }

int SimpleCommutator::z_count() const {
  return is_leaf() ? (letter == 0 ? 1 : 0) : kids[0].z_count() + kids[1].z_count();
}

int SimpleCommutator::type() const { return (weight() - z_count()) - 2 * z_count(); }

bool SimpleCommutator::repeats_c() const {
  std::vector<int> seen;
  std::function<void(const SimpleCommutator&)> walk = [&](const SimpleCommutator& s) {
    if (s.is_leaf()) {
      if (s.letter > 0) seen.push_back(s.letter);
      return;
    }
    walk(s.kids[0]);
    walk(s.kids[1]);
  };
  walk(*this);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
}

std::string SimpleCommutator::to_string() const {
  if (is_leaf()) return letter == 0 ? "z" : "c" + std::to_string(letter);
  return "[" + kids[0].to_string() + "," + kids[1].to_string() + "]";
}

ModelValue evaluate_lie(const FreeMetabelian& alg, const SimpleCommutator& s) {
  if (s.is_leaf())
    return s.letter == 0 ? ModelValue::ideal(alg.z()) : ModelValue::c_generator(alg.field(), s.letter);
  return ModelValue::bracket(alg, evaluate_lie(alg, s.kids[0]), evaluate_lie(alg, s.kids[1]));
}

std::string word_to_string(const GroupWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += l.letter == 0 ? "x" : "a" + std::to_string(l.letter);
    if (l.inverse) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

// ---- OperatorGroup ----

OperatorGroup::OperatorGroup(const Truncation& t) : t_(t) {
  gens_.push_back(Operator::one_plus(t.ad_z()));
  for (int k = 1; k <= t.n(); ++k) gens_.push_back(Operator::one_plus(t.ad_c(k)));
  for (const auto& g : gens_) invs_.push_back(g.inverse());
}

Operator OperatorGroup::evaluate(const GroupWord& w) const {
  Operator acc = identity();
  for (const auto& l : w) acc = acc * (l.inverse ? generator_inverse(l.letter) : generator(l.letter));
  return acc;
}

std::pair<Operator, Operator> OperatorGroup::eval_pair(const SimpleCommutator& s) const {
  if (s.is_leaf()) return {generator(s.letter), generator_inverse(s.letter)};
  auto [a, ai] = eval_pair(s.kids[0]);
  auto [b, bi] = eval_pair(s.kids[1]);
  // [a,b] = a^-1 b^-1 a b and [a,b]^-1 = b^-1 a^-1 b a.
  return {ai * bi * a * b, bi * ai * b * a};
}

Operator OperatorGroup::evaluate(const SimpleCommutator& s) const { return eval_pair(s).first; }

Operator OperatorGroup::lie_image(const SimpleCommutator& s) const {
  return Operator::one_plus(t_.ad(evaluate_lie(t_.algebra(), s)));
}

// ---- sampling ----

SimpleCommutator random_commutator(std::mt19937_64& rng, int n, int weight) {
  if (weight <= 1) {
    std::uniform_int_distribution<int> pick(0, n + n / 2);
    int x = pick(rng);
    // Roughly one leaf in three is z.
    return SimpleCommutator::leaf(x > n ? 0 : x);
  }
  std::uniform_int_distribution<int> split(1, weight - 1);
  int left = split(rng);
  SimpleCommutator a = random_commutator(rng, n, left);
  SimpleCommutator b = random_commutator(rng, n, weight - left);
  return SimpleCommutator::node(std::move(a), std::move(b));
}

GroupWord random_word(std::mt19937_64& rng, int n, int max_length) {
  std::uniform_int_distribution<int> len(1, max_length), letter(0, n), coin(0, 1);
  GroupWord w(len(rng));
  for (auto& l : w) l = GroupLetter{letter(rng), coin(rng) == 1};
  return w;
}

// ---- checks ----

OperatorReport check_ad_z_square(const OperatorGroup& g, std::size_t samples, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  OperatorReport rep = start_report(g, "lemma5.1");
  rep.seed = seed;
  bool ok = true;
  const ModMatrix& az = t.ad_z();
  record(rep, ok, (az * az).is_zero(), "ad(z)^2 != 0");
  auto sandwich = [&](const ModMatrix& aw, const std::string& name) {
    ++rep.samples;
    if (!aw.is_zero()) ++rep.nontrivial;
    record(rep, ok, (az * aw * az).is_zero(), "ad(z) ad(w) ad(z) != 0 for w = " + name);
  };
  for (int k = 1; k <= t.n(); ++k) sandwich(t.ad_c(k), "c" + std::to_string(k));
  for (const auto& w : t.basis()) sandwich(t.ad(t.algebra().word(w)), w.to_string());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wt(2, 7);
  for (std::size_t i = 0; i < samples; ++i) {
    SimpleCommutator s = random_commutator(rng, t.n(), wt(rng));
    sandwich(t.ad(evaluate_lie(t.algebra(), s)), s.to_string());
  }
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_commutator_image(const OperatorGroup& g, std::size_t samples, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  OperatorReport rep = start_report(g, "lemma5.2");
  rep.seed = seed;
  bool ok = true;
  auto compare = [&](const SimpleCommutator& s) {
    ++rep.samples;
    Operator h = g.evaluate(s);
    if (!h.is_identity()) ++rep.nontrivial;
    record(rep, ok, h == g.lie_image(s), "group image differs from 1 + ad(w) for " + s.to_string());
  };
  // Exhaustive over letters z, c1..c3 up to weight 4.
  int letters = std::min(3, t.n()) + 1;
  for (int w = 1; w <= 4; ++w) {
    std::vector<int> seq(w, 0);
    while (true) {
      std::vector<SimpleCommutator> trees;
      all_trees(seq, 0, seq.size(), trees);
      for (const auto& s : trees) compare(s);
      int pos = w - 1;
      while (pos >= 0 && ++seq[pos] == letters) seq[pos--] = 0;
      if (pos < 0) break;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wt(2, 6);
  for (std::size_t i = 0; i < samples; ++i) compare(random_commutator(rng, t.n(), wt(rng)));
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_group_relations(const OperatorGroup& g, std::size_t samples, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  OperatorReport rep = start_report(g, "prop5.3");
  rep.seed = seed;
  bool ok = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> wt(3, 7);
  const std::size_t max_draws = 200 * (samples + 1);

  // Repeated c letter.
  std::size_t got = 0;
  for (std::size_t draws = 0; got < samples && draws < max_draws; ++draws) {
    SimpleCommutator s = random_commutator(rng, t.n(), wt(rng));
    if (!s.repeats_c()) continue;
    ++got;
    record(rep, ok, g.evaluate(s).is_identity(), "repeated c letter but nontrivial: " + s.to_string());
  }
  record(rep, ok, got == samples, "too few commutators with a repeated c letter were drawn");
  rep.samples += got;

  // Both entries carry at least two z letters.
  got = 0;
  std::uniform_int_distribution<int> half(2, 4);
  for (std::size_t draws = 0; got < samples && draws < max_draws; ++draws) {
    SimpleCommutator u = random_commutator(rng, t.n(), half(rng));
    SimpleCommutator v = random_commutator(rng, t.n(), half(rng));
    if (u.z_count() < 2 || v.z_count() < 2) continue;
    ++got;
    record(rep, ok, group_commutator(g.evaluate(u), g.evaluate(v)).is_identity(),
           "z-heavy entries do not commute: " + u.to_string() + ", " + v.to_string());
  }
  record(rep, ok, got == samples, "too few z-heavy pairs were drawn");
  rep.samples += got;

  // p-th powers.
  for (int l = 0; l <= t.n(); ++l) {
    ++rep.samples;
    record(rep, ok, g.generator(l).power(t.field().prime()).is_identity(), "generator " + std::to_string(l) + " has order != p");
  }

  // Types outside [-1, 1].
  got = 0;
  std::uniform_int_distribution<int> wt4(2, 7);
  for (std::size_t draws = 0; got < samples && draws < max_draws; ++draws) {
    SimpleCommutator s = random_commutator(rng, t.n(), wt4(rng));
    if (s.type() >= -1 && s.type() <= 1) continue;
    ++got;
    record(rep, ok, g.evaluate(s).is_identity(), "extreme type but nontrivial: " + s.to_string());
  }
  record(rep, ok, got == samples, "too few commutators of extreme type were drawn");
  rep.samples += got;

  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_engel(const OperatorGroup& g, std::size_t samples, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  OperatorReport rep = start_report(g, "engel");
  rep.seed = seed;
  bool ok = true;
  std::mt19937_64 rng(seed);
  const Operator& x = g.generator(0);
  for (std::size_t i = 0; i < samples; ++i) {
    GroupWord w = random_word(rng, t.n(), 20);
    Operator h = g.evaluate(w);
    ++rep.samples;
    Operator c1 = group_commutator(h, x);
    if (!c1.is_identity()) ++rep.nontrivial;
    record(rep, ok, group_commutator({h, x, x, x}).is_identity(), "[g,x,x,x] != 1 for g = " + word_to_string(w));
    record(rep, ok, is_unipotent(h.inverse() * x * h), "conjugate of x is not unipotent for g = " + word_to_string(w));
  }
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_product_engel(const OperatorGroup& g, int r) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  if (r < 1 || r > t.n()) throw UsageError("r must lie in 1..n");
  OperatorReport rep = start_report(g, "prop2.2");
  rep.r = r;
  bool ok = true;
  Operator prod = g.identity();
  for (int i = 1; i <= r; ++i) prod = prod * g.generator(i);
  const Operator& x = g.generator(0);
  rep.samples = 1;
  if (!group_commutator(prod, x).is_identity()) rep.nontrivial = 1;
  record(rep, ok, group_commutator({prod, x, x, x}).is_identity(), "[a1...ar,x,x,x] != 1");
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_generator_orders(const OperatorGroup& g) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  OperatorReport rep = start_report(g, "order");
  bool ok = true;
  for (int l = 0; l <= t.n(); ++l) {
    ++rep.samples;
    const Operator& gen = g.generator(l);
    record(rep, ok, !gen.is_identity() || t.dim() == 1, "generator " + std::to_string(l) + " is trivial");
    record(rep, ok, gen.power(t.field().prime()).is_identity(), "generator " + std::to_string(l) + " has order != p");
    record(rep, ok, (gen * g.generator_inverse(l)).is_identity(), "generator " + std::to_string(l) + " inverse mismatch");
  }
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

OperatorReport check_nonnilpotency_witness(const OperatorGroup& g, const EngelIdeal& ideal, int m) {
  auto t0 = std::chrono::steady_clock::now();
  const Truncation& t = g.truncation();
  if (m < 1 || 2 * m + 1 > t.n()) throw UsageError("witness of weight m needs n >= 2m+1");
  OperatorReport rep = start_report(g, "thm5.4");
  rep.m = m;
  bool ok = true;
  // [[z,c1,c2,c3], [z,c4,c5], ..., [z,c_{2m},c_{2m+1}]]
  SimpleCommutator w = SimpleCommutator::left_normed({0, 1, 2, 3});
  for (int j = 2; j <= m; ++j) w = SimpleCommutator::node(std::move(w), SimpleCommutator::left_normed({0, 2 * j, 2 * j + 1}));
  Operator h = g.evaluate(w);
  rep.samples = 1;
  if (!h.is_identity()) rep.nontrivial = 1;
  record(rep, ok, !h.is_identity(), "witness operator is the identity");
  record(rep, ok, h == g.lie_image(w), "witness operator differs from 1 + ad(w_L)");
  // (h - 1) z = [z, w_L].
  std::vector<std::uint32_t> e(t.dim(), 0);
  e[t.z_index()] = 1;
  auto image = h.deviation().apply(e);
  record(rep, ok, std::any_of(image.begin(), image.end(), [](std::uint32_t x) { return x != 0; }),
         "witness operator fixes z");
  const FreeMetabelian& alg = t.algebra();
  LieElt wl = evaluate_lie(alg, w).element();
  LieElt wz = alg.bracket(wl, alg.z());
  record(rep, ok, !ideal.member(wl), "w_L lies in J");
  record(rep, ok, !ideal.member(wz), "[w_L, z] lies in J");
  rep.pass = ok;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

}  // namespace engel
