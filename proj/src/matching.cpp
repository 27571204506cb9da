#include "engel/matching.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "engel/errors.hpp"
#include "engel/relators.hpp"

namespace engel {

namespace {

constexpr std::size_t kMaxMessages = 6;

IndexSet pair_of(int a, int b) { return IndexSet::from_mask((std::uint64_t{1} << a) | (std::uint64_t{1} << b)); }

std::vector<IndexSet> concat(std::vector<IndexSet> a, const std::vector<IndexSet>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

// Every bijection from `from` onto `to`, as blocks {from[t], image}.
template <class Fn>
void for_each_bijection(const std::vector<int>& from, std::vector<int> to, Fn&& fn) {
  std::sort(to.begin(), to.end());
  do {
    std::vector<IndexSet> blocks;
    blocks.reserve(from.size());
    for (std::size_t t = 0; t < from.size(); ++t) blocks.push_back(pair_of(from[t], to[t]));
    fn(blocks);
  } while (std::next_permutation(to.begin(), to.end()));
}

// Sum over bijections a -> c, b -> d minus the sum over a -> d, b -> c; a, b left pairs, c, d right pairs.
WCombination exchange_relation(PrimeField f, int m, IndexSet a, IndexSet b, IndexSet c, IndexSet d,
                               const std::vector<IndexSet>& tail) {
  WCombination out(f);
  auto add = [&](IndexSet x, IndexSet y, IndexSet u, IndexSet v, std::uint32_t coeff) {
    for_each_bijection(x.elements(), y.elements(), [&](const std::vector<IndexSet>& first) {
      for_each_bijection(u.elements(), v.elements(), [&](const std::vector<IndexSet>& second) {
        out.add_term(PairPartition::from_blocks(m, concat(concat(first, second), tail)), coeff);
      });
    });
  };
  add(a, c, b, d, 1);
  add(a, d, b, c, f.neg(1));
  return out;
}

// Sum over the six bijections of a left triple onto a right triple.
WCombination triple_relation(PrimeField f, int m, const std::vector<int>& left, const std::vector<int>& right,
                             const std::vector<IndexSet>& tail) {
  WCombination out(f);
  for_each_bijection(left, right, [&](const std::vector<IndexSet>& blocks) {
    out.add_term(PairPartition::from_blocks(m, concat(blocks, tail)), 1);
  });
  return out;
}

// Every matching of `left` onto `right` as block lists.
std::vector<std::vector<IndexSet>> matchings_between(IndexSet left, IndexSet right) {
  std::vector<std::vector<IndexSet>> out;
  for_each_bijection(left.elements(), right.elements(), [&](const std::vector<IndexSet>& b) { out.push_back(b); });
  return out;
}

std::vector<IndexSet> subsets(IndexSet pool, int size) {
  std::vector<IndexSet> out;
  for (auto& v : ordered_disjoint_subsets(pool, std::vector<int>{size})) out.push_back(v.front());
  return out;
}

}  // namespace

// ---- PairPartition ----

PairPartition PairPartition::from_blocks(int m, std::vector<IndexSet> blocks) {
  if (m < 1 || 2 * m + 1 > IndexSet::kMaxIndex) throw UsageError("pair partition: m out of range");
  if (static_cast<int>(blocks.size()) != m) throw UsageError("pair partition: expected m blocks");
  std::uint64_t seen = 0;
  for (IndexSet b : blocks) {
    if (b.size() != 2) throw UsageError("pair partition: blocks must be pairs");
    if (seen & b.mask()) throw UsageError("pair partition: blocks overlap");
    seen |= b.mask();
  }
  if (IndexSet::from_mask(seen) != IndexSet::range(2, 2 * m + 1))
    throw UsageError("pair partition: blocks must cover 2.." + std::to_string(2 * m + 1));
  std::sort(blocks.begin(), blocks.end(), [](IndexSet a, IndexSet b) { return a.min() < b.min(); });
  return PairPartition(m, std::move(blocks));
}

PairPartition PairPartition::from_matching(const std::vector<int>& sigma) {
  int m = static_cast<int>(sigma.size());
  std::vector<IndexSet> blocks;
  for (int t = 0; t < m; ++t) {
    if (sigma[t] < m + 2 || sigma[t] > 2 * m + 1) throw UsageError("matching: image outside the right half");
    blocks.push_back(pair_of(2 + t, sigma[t]));
  }
  return from_blocks(m, std::move(blocks));
}

PairPartition PairPartition::identity_matching(int m) {
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), m + 2);
  return from_matching(sigma);
}

int PairPartition::norm() const {
  IndexSet l = left_half();
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [&](IndexSet b) { return b.subset_of(l); }));
}

int PairPartition::right_norm() const {
  IndexSet r = right_half();
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [&](IndexSet b) { return b.subset_of(r); }));
}

std::vector<IndexSet> PairPartition::left_blocks() const {
  std::vector<IndexSet> out;
  for (IndexSet b : blocks_)
    if (b.subset_of(left_half())) out.push_back(b);
  return out;
}

std::vector<IndexSet> PairPartition::right_blocks() const {
  std::vector<IndexSet> out;
  for (IndexSet b : blocks_)
    if (b.subset_of(right_half())) out.push_back(b);
  return out;
}

std::vector<int> PairPartition::matching() const {
  if (norm() != 0) throw UsageError("element has positive norm: " + to_string());
  std::vector<int> sigma(m_);
  for (IndexSet b : blocks_) sigma[b.min() - 2] = b.max();
  return sigma;
}

std::string PairPartition::to_string() const {
  std::string s;
  for (IndexSet b : blocks_) s += "{" + b.to_string() + "}";
  return s;
}

std::strong_ordering operator<=>(const PairPartition& a, const PairPartition& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (auto c = a.blocks_[i].mask() <=> b.blocks_[i].mask(); c != 0) return c;
  return std::strong_ordering::equal;
}

std::vector<PairPartition> all_pair_partitions(int m) {
  std::vector<PairPartition> out;
  for (auto& blocks : perfect_matchings(IndexSet::range(2, 2 * m + 1)))
    out.push_back(PairPartition::from_blocks(m, std::move(blocks)));
  return out;
}

std::vector<PairPartition> all_matchings(int m) {
  std::vector<PairPartition> out;
  std::vector<int> sigma(m);
  std::iota(sigma.begin(), sigma.end(), m + 2);
  do out.push_back(PairPartition::from_matching(sigma));
  while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// ---- WCombination ----

WCombination::WCombination(PrimeField field, const PairPartition& e, std::int64_t coeff) : field_(field) {
  add_term(e, field_.reduce(coeff));
}

void WCombination::add_term(const PairPartition& e, std::uint32_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, 0);
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void WCombination::add_scaled(const WCombination& o, std::uint32_t c) {
  for (const auto& [e, x] : o.terms_) add_term(e, field_.mul(x, c));
}

WCombination& WCombination::operator+=(const WCombination& o) {
  add_scaled(o, 1);
  return *this;
}

WCombination& WCombination::operator-=(const WCombination& o) {
  add_scaled(o, field_.neg(1));
  return *this;
}

WCombination WCombination::scaled(std::int64_t c) const {
  WCombination out(field_);
  out.add_scaled(*this, field_.reduce(c));
  return out;
}

int WCombination::max_norm() const {
  int n = 0;
  for (const auto& [e, x] : terms_) n = std::max(n, e.norm());
  return n;
}

std::string WCombination::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, x] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(field_.centered(x)) + "*" + e.to_string();
  }
  return s;
}

// ---- decompositions ----

WCombination decompose_one_step(PrimeField f, const PairPartition& e, IndexSet left, IndexSet right) {
  const auto& blocks = e.blocks();
  auto has = [&](IndexSet b) { return std::find(blocks.begin(), blocks.end(), b) != blocks.end(); };
  if (!has(left) || !left.subset_of(e.left_half()))
    throw UsageError("one-step decomposition: {" + left.to_string() + "} is not a left block of " + e.to_string());
  if (!has(right) || !right.subset_of(e.right_half()))
    throw UsageError("one-step decomposition: {" + right.to_string() + "} is not a right block of " + e.to_string());
  std::vector<IndexSet> rest;
  for (IndexSet b : blocks)
    if (b != left && b != right) rest.push_back(b);
  int a1 = left.min(), a2 = left.max(), b1 = right.min(), b2 = right.max();
  WCombination out(f);
  out.add_term(PairPartition::from_blocks(e.m(), concat({pair_of(a1, b1), pair_of(a2, b2)}, rest)), f.neg(1));
  out.add_term(PairPartition::from_blocks(e.m(), concat({pair_of(a1, b2), pair_of(a2, b1)}, rest)), f.neg(1));
  return out;
}

WCombination decompose_full(PrimeField f, const PairPartition& e, const Pairing& pairing) {
  auto lefts = e.left_blocks();
  auto rights = e.right_blocks();
  if (pairing.size() != lefts.size()) throw UsageError("pairing must cover every same-side block of " + e.to_string());
  std::vector<IndexSet> pl, pr;
  for (auto [l, r] : pairing) {
    pl.push_back(l);
    pr.push_back(r);
  }
  auto by_mask = [](IndexSet a, IndexSet b) { return a.mask() < b.mask(); };
  std::sort(pl.begin(), pl.end(), by_mask);
  std::sort(pr.begin(), pr.end(), by_mask);
  std::sort(lefts.begin(), lefts.end(), by_mask);
  std::sort(rights.begin(), rights.end(), by_mask);
  if (pl != lefts || pr != rights) throw UsageError("pairing must match left blocks with right blocks bijectively");

  WCombination cur(f, e);
  for (auto [l, r] : pairing) {
    WCombination next(f);
    for (const auto& [term, c] : cur.terms()) next.add_scaled(decompose_one_step(f, term, l, r), c);
    cur = std::move(next);
  }
  return cur;
}

Pairing canonical_pairing(const PairPartition& e) {
  // Blocks are stored sorted by minimum already.
  auto lefts = e.left_blocks();
  auto rights = e.right_blocks();
  Pairing p;
  for (std::size_t i = 0; i < lefts.size(); ++i) p.emplace_back(lefts[i], rights[i]);
  return p;
}

WCombination to_w0(PrimeField f, const PairPartition& e) {
  if (e.norm() == 0) return WCombination(f, e);
  return decompose_full(f, e, canonical_pairing(e));
}

WCombination to_w0(const WCombination& c) {
  WCombination out(c.field());
  for (const auto& [e, x] : c.terms()) out.add_scaled(to_w0(c.field(), e), x);
  return out;
}

// ---- quad relations ----

WCombination QuadRelation::combination(PrimeField f) const {
  auto q = quad.elements();
  WCombination out(f);
  for (int partner = 1; partner <= 3; ++partner) {
    std::vector<int> others;
    for (int t = 1; t <= 3; ++t)
      if (t != partner) others.push_back(q[t]);
    out.add_term(PairPartition::from_blocks(m, concat({pair_of(q[0], q[partner]), pair_of(others[0], others[1])}, rest)), 1);
  }
  return out;
}

bool QuadRelation::is_reduced() const {
  IndexSet l = IndexSet::range(2, m + 1), r = IndexSet::range(m + 2, 2 * m + 1);
  int pure = 0;
  for (IndexSet b : rest)
    if (b.subset_of(l) || b.subset_of(r)) ++pure;
  return pure <= 2;
}

std::vector<QuadRelation> quad_relations(int m, bool reduced_only) {
  std::vector<QuadRelation> out;
  if (m < 2) return out;
  IndexSet all = IndexSet::range(2, 2 * m + 1);
  for (IndexSet q : subsets(all, 4))
    for (auto& rest : perfect_matchings(all.minus(q))) {
      QuadRelation rel{m, q, std::move(rest)};
      if (!reduced_only || rel.is_reduced()) out.push_back(std::move(rel));
    }
  return out;
}

// ---- W0Span ----

W0Span::W0Span(PrimeField f) : field_(f), echelon_(f) {}

SparseRow W0Span::row(const WCombination& c) const {
  SparseRow r;
  for (const auto& [e, x] : c.terms()) {
    if (e.norm() != 0) throw UsageError("W0 span: term of positive norm " + e.to_string());
    auto [it, inserted] = columns_.try_emplace(e, static_cast<std::uint32_t>(columns_.size()));
    r.emplace_back(it->second, x);
  }
  std::sort(r.begin(), r.end());
  return r;
}

void W0Span::insert(const WCombination& c) { echelon_.insert(row(c)); }

bool W0Span::contains(const WCombination& c) const { return echelon_.contains(row(c)); }

bool decompositions_agree(PrimeField f, const PairPartition& e, const std::vector<int>& sigma, const W0Span& reduced) {
  Pairing base = canonical_pairing(e);
  if (sigma.size() != base.size()) throw UsageError("permutation size must equal the norm");
  Pairing moved;
  for (std::size_t t = 0; t < base.size(); ++t) moved.emplace_back(base[t].first, base[sigma[t]].second);
  return reduced.contains(decompose_full(f, e, base) - decompose_full(f, e, moved));
}

PairingSweepReport sweep_pairing_independence(PrimeField f, int m_max) {
  PairingSweepReport rep;
  rep.m_max = m_max;
  bool ok = true;
  for (int m = 4; m <= m_max; ++m) {
    W0Span reduced(f);
    for (const auto& rel : quad_relations(m, true)) reduced.insert(to_w0(rel.combination(f)));
    for (const auto& e : all_pair_partitions(m)) {
      int k = e.norm();
      if (k < 2) continue;
      ++rep.elements;
      rep.max_norm_seen = std::max(rep.max_norm_seen, k);
      std::vector<int> sigma(k);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        ++rep.permutations;
        ok = ok && decompositions_agree(f, e, sigma, reduced);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  rep.pass = ok && rep.elements > 0;
  return rep;
}

// ---- relations on W0 and the sign functional ----

W0Relations relations_on_w0(PrimeField f, int m) {
  W0Relations out;
  IndexSet left = IndexSet::range(2, m + 1), right = IndexSet::range(m + 2, 2 * m + 1);
  if (m >= 3) {
    for (IndexSet li : subsets(left, 3))
      for (IndexSet rj : subsets(right, 3))
        for (const auto& tail : matchings_between(left.minus(li), right.minus(rj)))
          out.triple.push_back(triple_relation(f, m, li.elements(), rj.elements(), tail));
  }
  if (m >= 4) {
    for (const auto& ab : ordered_disjoint_subsets(left, std::vector<int>{2, 2})) {
      if (ab[0].min() > ab[1].min()) continue;
      IndexSet lrest = left.minus(ab[0]).minus(ab[1]);
      for (const auto& cd : ordered_disjoint_subsets(right, std::vector<int>{2, 2})) {
        IndexSet rrest = right.minus(cd[0]).minus(cd[1]);
        for (const auto& tail : matchings_between(lrest, rrest))
          out.exchange.push_back(exchange_relation(f, m, ab[0], ab[1], cd[0], cd[1], tail));
      }
    }
  }
  return out;
}

std::uint32_t sign_functional(const WCombination& c) {
  const PrimeField& f = c.field();
  std::uint32_t acc = 0;
  for (const auto& [e, x] : c.terms()) {
    if (e.norm() != 0) throw UsageError("sign functional: term of positive norm " + e.to_string());
    std::vector<int> perm = e.matching();
    for (int& v : perm) v -= e.m() + 2;
    acc = permutation_sign(perm) > 0 ? f.add(acc, x) : f.sub(acc, x);
  }
  return acc;
}

std::string_view witness_mode_name(WitnessMode m) { return m == WitnessMode::kSign ? "sign" : "rowreduce"; }

LieElt partition_element(const FreeMetabelian& alg, const std::vector<IndexSet>& ordered_blocks) {
  if (ordered_blocks.empty()) throw UsageError("partition element needs at least one block");
  if (ordered_blocks.size() == 1) return alg.generator(*ordered_blocks[0].adjoin(1));
  std::vector<IndexSet> blocks = ordered_blocks;
  blocks[1] = *blocks[1].adjoin(1);
  return alg.left_normed(blocks);
}

WitnessReport witness_nonzero(const EngelIdeal& ideal, int m, WitnessMode mode) {
  auto start = std::chrono::steady_clock::now();
  const FreeMetabelian& alg = ideal.algebra();
  const PrimeField f = alg.field();
  WitnessReport rep;
  rep.m = m;
  rep.mode = mode;
  PairPartition id = PairPartition::identity_matching(m);
  rep.identity_functional = sign_functional(WCombination(f, id));

  if (mode == WitnessMode::kSign) {
    // Below m = 3 both families are empty and W0 n J is taken as 0.
    W0Relations rels = relations_on_w0(f, m);
    bool vanish = true;
    for (const auto* fam : {&rels.triple, &rels.exchange})
      for (const auto& r : *fam) {
        ++rep.relations_checked;
        vanish = vanish && sign_functional(r) == 0;
      }
    rep.pass = vanish && rep.identity_functional == 1;
  } else {
    MultiDegree d{m, IndexSet::range(1, 2 * m + 1)};
    auto comp = ideal.explicit_component(d);
    rep.slice_dim = comp->dimension();
    rep.slice_quotient = comp->quotient_dim();
    rep.identity_outside_j = !comp->contains(partition_element(alg, id.blocks()));

    // W n J from ranks: dim W + rank J - rank(J + W).
    std::vector<LieElt> w_words;
    std::vector<LieElt> relations;
    for (const auto& e : all_pair_partitions(m)) {
      const auto& b = e.blocks();
      std::vector<LieElt> orders;
      if (m == 1) {
        orders.push_back(partition_element(alg, b));
      } else {
        for (int h = 0; h < m; ++h)
          for (int s = 0; s < m; ++s) {
            if (h == s) continue;
            std::vector<IndexSet> ord{b[h], b[s]};
            for (int t = 0; t < m; ++t)
              if (t != h && t != s) ord.push_back(b[t]);
            orders.push_back(partition_element(alg, ord));
          }
      }
      for (std::size_t i = 1; i < orders.size(); ++i) relations.push_back(orders[i] - orders[0]);
      w_words.insert(w_words.end(), orders.begin(), orders.end());
    }
    for (const auto& q : quad_relations(m, false)) {
      auto qe = q.quad.elements();
      LieElt r = alg.zero();
      for (int partner = 1; partner <= 3; ++partner) {
        IndexSet first = pair_of(qe[0], qe[partner]);
        r += partition_element(alg, concat({first, q.quad.minus(first)}, q.rest));
      }
      relations.push_back(std::move(r));
    }

    RowEchelon with_w(f);
    for (const auto& row : comp->j_matrix()) with_w.insert(row);
    std::size_t j_rank = with_w.rank();
    RowEchelon w_only(f);
    for (const auto& w : w_words) {
      SparseRow row = comp->to_row(w);
      with_w.insert(row);
      w_only.insert(row);
    }
    rep.w_dim = w_only.rank();
    rep.w_cap_j_dim = rep.w_dim + j_rank - with_w.rank();

    RowEchelon rel_span(f);
    bool in_j = true;
    for (const auto& r : relations) {
      SparseRow row = comp->to_row(r);
      in_j = in_j && comp->contains(r);
      rel_span.insert(row);
    }
    rep.relations_checked = relations.size();
    rep.quad_and_order_rank = rel_span.rank();
    rep.quad_and_order_in_j = in_j;
    rep.pass = rep.identity_outside_j && in_j && rep.quad_and_order_rank == rep.w_cap_j_dim;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---- case replay ----

MatchingCaseReport case_check(PrimeField f, int case_id) {
  if (case_id < 1 || case_id > 4) throw UsageError("case id must be 1..4");
  MatchingCaseReport rep;
  rep.case_id = case_id;
  bool ok = true;
  auto fail = [&](const std::string& what, int m, const std::vector<int>& is, const std::vector<int>& js,
                  const std::vector<IndexSet>& tail) {
    ok = false;
    if (rep.discrepancies.size() >= kMaxMessages) return;
    std::string s = "case " + std::to_string(case_id) + " m=" + std::to_string(m) + ": " + what + " i=";
    for (int x : is) s += std::to_string(x) + " ";
    s += "j=";
    for (int x : js) s += std::to_string(x) + " ";
    for (IndexSet t : tail) s += "{" + t.to_string() + "}";
    rep.discrepancies.push_back(s);
  };

  for (int m = 4; m <= 5; ++m) {
    rep.windows.push_back(m);
    W0Relations rels = relations_on_w0(f, m);
    W0Span triples(f), exchanges(f), both(f);
    for (const auto& r : rels.triple) {
      triples.insert(r);
      both.insert(r);
    }
    for (const auto& r : rels.exchange) {
      exchanges.insert(r);
      both.insert(r);
    }
    IndexSet left = IndexSet::range(2, m + 1), right = IndexSet::range(m + 2, 2 * m + 1);
    // Remaining blocks beyond I1..I4 are mixed pairs.
    for (IndexSet tl : subsets(left, m - 4))
      for (IndexSet tr : subsets(right, m - 4))
        for (const auto& tail : matchings_between(tl, tr)) {
          std::vector<int> is = left.minus(tl).elements(), js = right.minus(tr).elements();
          std::sort(is.begin(), is.end());
          do {
            std::vector<int> js_perm = js;
            std::sort(js_perm.begin(), js_perm.end());
            do {
              ++rep.instances;
              int i1 = is[0], i2 = is[1], i3 = is[2], i4 = is[3];
              int j1 = js_perm[0], j2 = js_perm[1], j3 = js_perm[2], j4 = js_perm[3];
              auto part = [&](std::vector<IndexSet> b) { return PairPartition::from_blocks(m, concat(std::move(b), tail)); };
              auto quad = [&](std::initializer_list<int> q, std::vector<IndexSet> rest) {
                std::uint64_t mask = 0;
                for (int x : q) mask |= std::uint64_t{1} << x;
                return QuadRelation{m, IndexSet::from_mask(mask), concat(std::move(rest), tail)}.combination(f);
              };
              switch (case_id) {
                case 1: {
                  WCombination img = to_w0(quad({i1, i2, j1, j2}, {pair_of(i3, j3), pair_of(i4, j4)}));
                  if (!img.is_zero()) fail("defining relation does not vanish", m, is, js_perm, tail);
                  break;
                }
                case 2: {
                  IndexSet a = pair_of(i1, i2), b = pair_of(i3, i4), c = pair_of(j1, j2), d = pair_of(j3, j4);
                  PairPartition e = part({a, c, b, d});
                  WCombination diff = decompose_full(f, e, {{a, c}, {b, d}}) - decompose_full(f, e, {{a, d}, {b, c}});
                  if (diff != exchange_relation(f, m, a, b, c, d, tail))
                    fail("pairing difference is not the exchange identity", m, is, js_perm, tail);
                  if (!exchanges.contains(to_w0(quad({i1, i2, j1, j2}, {b, d}))))
                    fail("image outside the exchange span", m, is, js_perm, tail);
                  break;
                }
                case 3: {
                  WCombination img = to_w0(quad({i1, i2, i3, j1}, {pair_of(j2, j3), pair_of(i4, j4)}));
                  WCombination want = triple_relation(f, m, {i1, i2, i3}, {j1, j2, j3}, concat({pair_of(i4, j4)}, tail));
                  if (img != want.scaled(-1)) fail("image is not minus the triple sum", m, is, js_perm, tail);
                  // Mirror image: three right indices in the quad.
                  if (!triples.contains(to_w0(quad({i1, j1, j2, j3}, {pair_of(i2, i3), pair_of(i4, j4)}))))
                    fail("mirrored image outside the triple span", m, is, js_perm, tail);
                  break;
                }
                case 4: {
                  IndexSet c = pair_of(j1, j2), d = pair_of(j3, j4);
                  WCombination paired(f);
                  for (int x : {i2, i3, i4}) {
                    IndexSet a = pair_of(i1, x), b = pair_of(i1, i2).unite(pair_of(i3, i4)).minus(a);
                    paired += decompose_full(f, part({a, b, c, d}), {{a, c}, {b, d}});
                  }
                  WCombination want(f);
                  for_each_bijection({i1, i2, i3, i4}, {j1, j2, j3, j4}, [&](const std::vector<IndexSet>& blocks) {
                    if (c.contains(blocks[0].max())) want.add_term(part(blocks), 1);
                  });
                  if (paired != want) fail("paired expansion is not the sum over i1 -> {j1,j2}", m, is, js_perm, tail);
                  if (!triples.contains(paired)) fail("paired expansion outside the triple span", m, is, js_perm, tail);
                  if (!both.contains(to_w0(quad({i1, i2, i3, i4}, {c, d}))))
                    fail("canonical image outside the triple and exchange span", m, is, js_perm, tail);
                  break;
                }
              }
            } while (std::next_permutation(js_perm.begin(), js_perm.end()));
          } while (std::next_permutation(is.begin(), is.end()));
        }
  }
  rep.pass = ok && rep.instances > 0;
  return rep;
}

GenerationReport generation_check(PrimeField f, int m) {
  GenerationReport rep;
  rep.m = m;
  rep.w0_dim = all_matchings(m).size();
  W0Span all(f), reduced(f), fams(f);
  std::vector<WCombination> reduced_images;
  for (const auto& q : quad_relations(m, false)) {
    WCombination img = to_w0(q.combination(f));
    all.insert(img);
    if (q.is_reduced()) reduced.insert(img);
  }
  W0Relations rels = relations_on_w0(f, m);
  bool fam_in_reduced = true;
  for (const auto* fam : {&rels.triple, &rels.exchange})
    for (const auto& r : *fam) {
      fams.insert(r);
      fam_in_reduced = fam_in_reduced && reduced.contains(r);
    }
  rep.all_quad_rank = all.rank();
  rep.reduced_quad_rank = reduced.rank();
  rep.w0_relation_rank = fams.rank();
  rep.reduced_spans_all = rep.all_quad_rank == rep.reduced_quad_rank;
  rep.families_span_reduced = fam_in_reduced && rep.w0_relation_rank == rep.reduced_quad_rank;
  return rep;
}

}  // namespace engel
