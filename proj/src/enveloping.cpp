#include "engel/enveloping.hpp"

#include <algorithm>
#include <map>

#include "engel/echelon.hpp"
#include "engel/errors.hpp"
#include "engel/limits.hpp"

namespace engel {

namespace {

std::uint32_t binomial_mod(PrimeField f, int n, int k) {
  std::int64_t b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return f.reduce(b);
}

// Sort every maximal run of c-letters.
void canonicalize(EnvMonomial& m) {
  auto it = m.begin();
  while (it != m.end()) {
    auto run_end = std::find(it, m.end(), kZLetter);
    std::sort(it, run_end);
    it = run_end == m.end() ? run_end : run_end + 1;
  }
}

void enumerate_multisets(int n_gens, int max_size, int next, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_size) return;
  for (int g = next; g <= n_gens; ++g) {
    cur.push_back(g);
    enumerate_multisets(n_gens, max_size, g, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<EnvTerm> expand_generator(PrimeField field, const std::vector<int>& multiset) {
  // Each c_i of multiplicity e sends j copies to the left of z: sign (-1)^j, weight C(e, j).
  std::map<int, int> counts;
  for (int i : multiset) {
    if (i < 1 || i >= kZLetter) throw UsageError("generator index out of range");
    ++counts[i];
  }
  std::vector<std::pair<int, int>> gens(counts.begin(), counts.end());
  std::vector<EnvTerm> terms;
  std::vector<int> left(gens.size(), 0);
  while (true) {
    EnvMonomial m;
    std::uint32_t coeff = 1;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (int t = 0; t < left[g]; ++t) m.push_back(static_cast<std::uint8_t>(gens[g].first));
      coeff = field.mul(coeff, binomial_mod(field, gens[g].second, left[g]));
      if (left[g] % 2) coeff = field.neg(coeff);
    }
    m.push_back(kZLetter);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int t = left[g]; t < gens[g].second; ++t) m.push_back(static_cast<std::uint8_t>(gens[g].first));
    if (coeff) terms.push_back({std::move(m), coeff});
    std::size_t g = 0;
    while (g < gens.size() && left[g] == gens[g].second) left[g++] = 0;
    if (g == gens.size()) break;
    ++left[g];
  }
  return terms;
}

EnvMonomial leading_monomial(const std::vector<EnvTerm>& terms) {
  if (terms.empty()) throw UsageError("zero expansion has no leading monomial");
  return std::max_element(terms.begin(), terms.end(),
                          [](const EnvTerm& a, const EnvTerm& b) { return a.monomial < b.monomial; })
      ->monomial;
}

FreeGenerationReport verify_free_generation(PrimeField field, int max_weight, int n_gens) {
  if (max_weight < 1 || n_gens < 0 || n_gens >= kZLetter) throw UsageError("invalid weight or generator count");
  FreeGenerationReport rep;
  rep.max_weight = max_weight;
  rep.n_gens = n_gens;

  std::vector<std::vector<int>> multisets;
  std::vector<int> cur;
  enumerate_multisets(n_gens, max_weight, 1, cur, multisets);
  std::vector<std::vector<EnvTerm>> expansions;
  rep.leading_terms_ok = true;
  for (const auto& ms : multisets) {
    expansions.push_back(expand_generator(field, ms));
    EnvMonomial expected{kZLetter};
    for (int i : ms) expected.push_back(static_cast<std::uint8_t>(i));
    if (leading_monomial(expansions.back()) != expected) rep.leading_terms_ok = false;
  }

  // Products are homogeneous in (r, c-content): rank is computed block by block.
  struct Block {
    std::map<EnvMonomial, std::uint32_t> columns;
    std::vector<SparseRow> rows;
  };
  std::map<std::pair<int, std::vector<int>>, Block> blocks;
  const std::size_t cap = dimension_cap();

  std::vector<std::size_t> tuple;
  auto emit = [&]() {
    std::vector<int> key_content;
    std::map<EnvMonomial, std::uint32_t> product{{EnvMonomial{}, 1}};
    for (std::size_t idx : tuple) {
      key_content.insert(key_content.end(), multisets[idx].begin(), multisets[idx].end());
      std::map<EnvMonomial, std::uint32_t> next;
      for (const auto& [m, c] : product)
        for (const auto& t : expansions[idx]) {
          EnvMonomial mm = m;
          mm.insert(mm.end(), t.monomial.begin(), t.monomial.end());
          canonicalize(mm);
          auto& slot = next[mm];
          slot = field.add(slot, field.mul(c, t.coeff));
        }
      product = std::move(next);
    }
    std::sort(key_content.begin(), key_content.end());
    Block& b = blocks[{static_cast<int>(tuple.size()), key_content}];
    std::map<std::uint32_t, std::uint32_t> row;
    for (const auto& [m, c] : product) {
      if (!c) continue;
      auto [it, inserted] = b.columns.try_emplace(m, static_cast<std::uint32_t>(b.columns.size()));
      row[it->second] = c;
    }
    b.rows.emplace_back(row.begin(), row.end());
    if (b.rows.size() > cap || b.columns.size() > cap)
      throw ResourceError("enveloping block exceeds the dimension cap");
    ++rep.tuples;
  };
  auto recurse = [&](auto&& self, int content) -> void {
    if (!tuple.empty()) emit();
    if (static_cast<int>(tuple.size()) == max_weight) return;
    for (std::size_t i = 0; i < multisets.size(); ++i) {
      int c = content + static_cast<int>(multisets[i].size());
      if (c > max_weight) continue;
      tuple.push_back(i);
      self(self, c);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0);

  for (auto& [key, b] : blocks) {
    rep.rank += sparse_rank(field, b.rows);
    rep.monomials += b.columns.size();
  }
  rep.graded_blocks = blocks.size();
  rep.pass = rep.leading_terms_ok && rep.rank == rep.tuples;
  return rep;
}

}  // namespace engel
