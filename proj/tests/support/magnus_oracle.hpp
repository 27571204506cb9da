#pragma once

// Reference model of a free metabelian Lie algebra, independent of the straightening code.
// Generators g_I sit inside A + T, where A is abelian with basis a_I and T is the free module
// over F_p[t_I] with basis e_I; g_I = a_I + e_I and [(a,u),(b,v)] = (0, a.v - b.u).
// The embedding is faithful, so ranks computed here are slice dimensions. Terms in which some
// c index occurs twice span a graded ideal and are dropped, as in the model of Id(z).

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "engel/lie_elt.hpp"
#include "engel/metabelian.hpp"

namespace oracle {

using Monomial = std::vector<std::uint64_t>;  // sorted generator masks

struct MagnusElt {
  std::map<std::uint64_t, std::uint32_t> a;
  std::map<std::pair<std::uint64_t, Monomial>, std::uint32_t> u;

  bool is_zero() const { return a.empty() && u.empty(); }
  friend bool operator==(const MagnusElt&, const MagnusElt&) = default;
};

class Magnus {
 public:
  explicit Magnus(std::uint32_t p) : p_(p) {}

  std::uint32_t prime() const { return p_; }

  MagnusElt generator(std::uint64_t mask, std::int64_t coeff = 1) const {
    MagnusElt g;
    std::uint32_t c = reduce(coeff);
    if (c == 0) return g;
    g.a[mask] = c;
    g.u[{mask, {}}] = c;
    return g;
  }

  MagnusElt add(MagnusElt x, const MagnusElt& y, std::uint32_t c = 1) const {
    for (const auto& [k, v] : y.a) accumulate(x.a, k, mul(v, c));
    for (const auto& [k, v] : y.u) accumulate(x.u, k, mul(v, c));
    return x;
  }

  MagnusElt bracket(const MagnusElt& x, const MagnusElt& y) const {
    MagnusElt out;
    for (const auto& [ga, ca] : x.a)
      for (const auto& [key, cv] : y.u) accumulate(out.u, std::make_pair(key.first, times(key.second, ga)), mul(ca, cv));
    for (const auto& [gb, cb] : y.a)
      for (const auto& [key, cu] : x.u) accumulate(out.u, std::make_pair(key.first, times(key.second, gb)), mul(p_ - cb, cu));
    std::erase_if(out.u, [](const auto& kv) { return repeats_index(kv.first); });
    return out;
  }

  MagnusElt tree(const engel::GeneratorTree& t) const {
    if (t.is_leaf()) return generator(t.block.mask(), t.coeff);
    return bracket(tree(t.children[0]), tree(t.children[1]));
  }

  // Image of the derivation g_I -> g_{I u {k}} (zero when k in I) applied to a tree.
  MagnusElt derive(const engel::GeneratorTree& t, int k) const {
    if (t.is_leaf()) {
      if (t.block.contains(k)) return {};
      return generator(t.block.mask() | (std::uint64_t{1} << k), t.coeff);
    }
    return add(bracket(derive(t.children[0], k), tree(t.children[1])),
               bracket(tree(t.children[0]), derive(t.children[1], k)));
  }

  MagnusElt word(const engel::BasisWord& w) const {
    const auto& b = w.blocks();
    MagnusElt acc = generator(b[0].mask());
    for (std::size_t i = 1; i < b.size(); ++i) acc = bracket(acc, generator(b[i].mask()));
    return acc;
  }

  MagnusElt element(const engel::LieElt& e) const {
    MagnusElt out;
    for (const auto& [w, c] : e.terms()) out = add(out, word(w), c);
    return out;
  }

  // Rank over F_p by dense elimination on the union of the coordinates used.
  std::size_t rank(const std::vector<MagnusElt>& elts) const {
    std::map<std::pair<int, std::pair<std::uint64_t, Monomial>>, std::size_t> cols;
    for (const auto& e : elts) {
      for (const auto& [k, v] : e.a) cols.emplace(std::make_pair(0, std::make_pair(k, Monomial{})), 0);
      for (const auto& [k, v] : e.u) cols.emplace(std::make_pair(1, k), 0);
    }
    std::size_t n = 0;
    for (auto& [k, idx] : cols) idx = n++;
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& e : elts) {
      std::vector<std::uint32_t> r(n, 0);
      for (const auto& [k, v] : e.a) r[cols.at({0, {k, {}}})] = v;
      for (const auto& [k, v] : e.u) r[cols.at({1, k})] = v;
      rows.push_back(std::move(r));
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < n && rk < rows.size(); ++c) {
      std::size_t piv = rk;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rk]);
      std::uint32_t inv = inverse(rows[rk][c]);
      for (auto& x : rows[rk]) x = mul(x, inv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rk || rows[r][c] == 0) continue;
        std::uint32_t f = rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[r][j] = sub(rows[r][j], mul(f, rows[rk][j]));
      }
      ++rk;
    }
    return rk;
  }

 private:
  std::uint32_t p_;

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint32_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  static bool repeats_index(const std::pair<std::uint64_t, Monomial>& key) {
    std::uint64_t seen = key.first;
    for (std::uint64_t g : key.second) {
      if (seen & g) return true;
      seen |= g;
    }
    return false;
  }

  static Monomial times(Monomial m, std::uint64_t g) {
    m.insert(std::upper_bound(m.begin(), m.end(), g), g);
    return m;
  }

  template <class Map, class Key>
  void accumulate(Map& m, const Key& k, std::uint32_t v) const {
    if (v == 0) return;
    auto [it, fresh] = m.emplace(k, v);
    if (fresh) return;
    it->second = (it->second + v) % p_;
    if (it->second == 0) m.erase(it);
  }
};

// Closed-form slice dimension for multidegree (m; S). A multiset of m generators with d distinct
// members spans 1 dimension when m = 1 and d - 1 when m >= 2 (exactness of the Koszul complex).
// Generators are the blocks of a set partition of S into k parts plus m - k copies of z.
inline std::size_t koszul_slice_dimension(int m, int s) {
  // stirling[i][k]: partitions of an i-set into k blocks
  std::vector<std::vector<std::size_t>> st(s + 1, std::vector<std::size_t>(s + 1, 0));
  st[0][0] = 1;
  for (int i = 1; i <= s; ++i)
    for (int k = 1; k <= i; ++k) st[i][k] = st[i - 1][k - 1] + static_cast<std::size_t>(k) * st[i - 1][k];
  std::size_t total = 0;
  for (int k = 0; k <= std::min(m, s); ++k) {
    std::size_t d = static_cast<std::size_t>(k) + (m > k ? 1 : 0);
    std::size_t contrib = m == 1 ? 1 : d - 1;
    total += st[s][k] * contrib;
  }
  return total;
}

}  // namespace oracle
