#include "engel/relators.hpp"

#include <algorithm>
#include <array>

#include "engel/errors.hpp"

namespace engel {

namespace {

using F = RelatorFamily;

struct NamedFamily {
  F family;
  std::string_view name;
};

constexpr std::array<NamedFamily, 23> kNames{{
    {F::kE0a, "E0a"}, {F::kE0b, "E0b"}, {F::kE1, "E1"}, {F::kE2, "E2"}, {F::kE3, "E3"},
    {F::kE4, "E4"},   {F::kE5, "E5"},   {F::kE6, "E6"}, {F::kE7, "E7"}, {F::kE8, "E8"},
    {F::kE9, "E9"},   {F::kF1, "F1"},   {F::kG0a, "G0a"}, {F::kG0b, "G0b"}, {F::kG1, "G1"},
    {F::kG2, "G2"},   {F::kG3, "G3"},   {F::kG4, "G4"}, {F::kG5, "G5"}, {F::kG6, "G6"},
    {F::kH1, "H1"},   {F::kH2, "H2"},   {F::kH3, "H3"},
}};

std::vector<RelatorSchema> build_schemas() {
  // {family, set roles, set sizes, point roles, symmetric_from, fixed blocks, exact length}
  return {
      {F::kE0a, {}, {}, {"i", "k"}, 2, 2, true},
      {F::kE0b, {}, {}, {"i", "k"}, 2, 2, true},
      {F::kE1, {"I1", "I2\\1"}, {2, 2}, {"i", "j"}, 0, 4, false},
      {F::kE2, {"I1", "I2\\1"}, {2, 1}, {"i"}, 1, 3, false},
      {F::kE3, {"I2\\1"}, {2}, {"i", "j"}, 2, 3, false},
      {F::kE4, {"I2\\1", "I3"}, {2, 2}, {}, 0, 3, false},
      {F::kE5, {"I1"}, {2}, {"i", "j"}, 0, 3, false},
      {F::kE6, {"I2\\1"}, {1}, {"i", "j", "k"}, 1, 3, false},
      {F::kE7, {"I1", "I2\\1", "I4"}, {2, 2, 2}, {}, 0, 4, false},
      {F::kE8, {"I1", "I2"}, {2, 2}, {}, 0, 3, false},
      {F::kE9, {}, {}, {"i", "j", "k", "r"}, 1, 3, false},
      {F::kF1, {"I1", "I2\\1"}, {2, 2}, {"i", "j", "k"}, 0, 4, false},
      {F::kG0a, {}, {}, {"i", "k", "s"}, 3, 2, true},
      {F::kG0b, {}, {}, {"i", "k", "s"}, 3, 2, true},
      {F::kG1, {"I2\\1", "{j,k}"}, {2, 2}, {"i"}, 1, 3, false},
      {F::kG2, {"I1"}, {2}, {"k", "i", "j"}, 1, 3, false},
      {F::kG3, {"I1", "I2"}, {2, 2}, {"k"}, 1, 3, false},
      {F::kG4, {"I1", "I2\\1", "I4"}, {2, 2, 2}, {"k"}, 1, 4, false},
      {F::kG5, {}, {}, {"i", "s", "j", "k", "r"}, 2, 3, false},
      {F::kG6, {"I1"}, {2}, {"i", "j", "k"}, 0, 3, false},
      {F::kH1, {"I1", "I2"}, {2, 2}, {}, 0, 2, false},
      {F::kH2, {"I1", "I2\\1", "I4"}, {2, 2, 2}, {}, 0, 3, false},
      {F::kH3, {}, {}, {"i", "j", "k", "r"}, 1, 2, false},
  };
}

const std::vector<RelatorSchema>& schemas() {
  static const std::vector<RelatorSchema> s = build_schemas();
  return s;
}

IndexSet pts(std::initializer_list<int> xs) {
  std::uint64_t m = 0;
  for (int x : xs) m |= std::uint64_t{1} << x;
  return IndexSet::from_mask(m);
}

IndexSet with(IndexSet s, int x) { return s.unite(pts({x})); }

struct Term {
  int coeff;
  std::vector<IndexSet> blocks;
};

std::vector<Term> relator_terms(F f, const RelatorBinding& b) {
  const int one = b.one;
  const auto& S = b.sets;
  const auto& P = b.points;
  const IndexSet E{};
  auto t = [&](int c, std::vector<IndexSet> blocks) {
    blocks.insert(blocks.end(), b.tail.begin(), b.tail.end());
    return Term{c, std::move(blocks)};
  };
  switch (f) {
    case F::kE0a: return {t(1, {pts({P[0], P[1]}), pts({one})}), t(1, {pts({P[0]}), pts({one, P[1]})})};
    case F::kE0b: return {t(1, {pts({P[1]}), pts({one, P[0]})}), t(1, {E, pts({one, P[0], P[1]})})};
    case F::kE1: {
      IndexSet i2 = with(S[1], one);
      return {t(1, {S[0], i2, pts({P[0]}), pts({P[1]})}), t(1, {S[0], i2, E, pts({P[0], P[1]})})};
    }
    case F::kE2: {
      IndexSet i2 = with(S[1], one);
      return {t(1, {S[0], i2, pts({P[0]})}), t(1, {S[0], with(i2, P[0]), E})};
    }
    case F::kE3: {
      IndexSet i2 = with(S[0], one);
      return {t(1, {pts({P[0]}), i2, pts({P[1]})}), t(1, {pts({P[0], P[1]}), i2, E})};
    }
    case F::kE4: {
      IndexSet i2 = with(S[0], one);
      return {t(1, {E, i2, S[1]}), t(-1, {S[1], i2, E})};
    }
    case F::kE5:
      return {t(1, {S[0], pts({one}), pts({P[0], P[1]})}), t(-1, {S[0], pts({one, P[0], P[1]}), E})};
    case F::kE6: {
      IndexSet i2 = with(S[0], one);
      int i = P[0], j = P[1], k = P[2];
      return {t(1, {pts({i}), i2, pts({j, k})}), t(-1, {pts({i, j}), with(i2, k), E}),
              t(-1, {pts({i, k}), with(i2, j), E})};
    }
    case F::kE7: {
      IndexSet i2 = with(S[1], one);
      return {t(1, {S[0], i2, E, S[2]}), t(-1, {S[2], i2, E, S[0]})};
    }
    case F::kE8: return {t(1, {S[0], with(S[1], one), E}), t(-1, {S[1], with(S[0], one), E})};
    case F::kE9: {
      int i = P[0], j = P[1], k = P[2], r = P[3];
      return {t(1, {pts({i, k}), pts({one, j, r}), E}), t(1, {pts({i, j}), pts({one, k, r}), E}),
              t(1, {pts({i, r}), pts({one, j, k}), E})};
    }
    case F::kF1: {
      IndexSet i2 = with(S[1], one);
      int i = P[0], j = P[1], k = P[2];
      return {t(1, {S[0], i2, pts({j}), pts({i, k})}), t(1, {S[0], i2, pts({i}), pts({j, k})}),
              t(1, {S[0], i2, pts({k}), pts({i, j})})};
    }
    case F::kG1: {
      IndexSet i2 = with(S[0], one);
      return {t(1, {pts({P[0]}), i2, S[1]}), t(-1, {S[1], i2, pts({P[0]})})};
    }
    case F::kG2: {
      int k = P[0], i = P[1], j = P[2];
      return {t(1, {S[0], pts({one, k}), pts({i, j})}), t(-1, {S[0], pts({one, i, j}), pts({k})})};
    }
    case F::kG3:
      return {t(1, {S[0], with(S[1], one), pts({P[0]})}), t(-1, {S[1], with(S[0], one), pts({P[0]})})};
    case F::kG4: {
      IndexSet i2 = with(S[1], one);
      return {t(1, {S[0], i2, pts({P[0]}), S[2]}), t(-1, {S[2], i2, pts({P[0]}), S[0]})};
    }
    case F::kG5: {
      int i = P[0], s = P[1], j = P[2], k = P[3], r = P[4];
      return {t(1, {pts({i, k}), pts({one, j, r}), pts({s})}), t(1, {pts({i, j}), pts({one, k, r}), pts({s})}),
              t(1, {pts({i, r}), pts({one, j, k}), pts({s})})};
    }
    case F::kG6: {
      int i = P[0], j = P[1], k = P[2];
      return {t(1, {S[0], pts({one, i, k}), pts({j})}), t(1, {S[0], pts({one, k, j}), pts({i})}),
              t(1, {S[0], pts({one, i, j}), pts({k})})};
    }
    case F::kH1: return {t(1, {S[0], with(S[1], one)}), t(-1, {S[1], with(S[0], one)})};
    case F::kH2: {
      IndexSet i2 = with(S[1], one);
      return {t(1, {S[0], i2, S[2]}), t(-1, {S[2], i2, S[0]})};
    }
    case F::kH3: {
      int i = P[0], j = P[1], k = P[2], r = P[3];
      return {t(1, {pts({i, k}), pts({one, j, r})}), t(1, {pts({i, j}), pts({one, k, r})}),
              t(1, {pts({i, r}), pts({one, k, j})})};
    }
    case F::kG0a:
    case F::kG0b: break;
  }
  throw SchemaError("family has no direct term list");
}

void matchings_rec(std::uint64_t rest, std::vector<IndexSet>& cur, std::vector<std::vector<IndexSet>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  int a = std::countr_zero(rest);
  std::uint64_t r1 = rest & (rest - 1);
  for (std::uint64_t m = r1; m; m &= m - 1) {
    int b = std::countr_zero(m);
    cur.push_back(pts({a, b}));
    matchings_rec(r1 & ~(std::uint64_t{1} << b), cur, out);
    cur.pop_back();
  }
}

void subsets_of_size(std::uint64_t pool, int size, std::uint64_t cur, std::vector<std::uint64_t>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t m = pool; m; m &= m - 1) {
    std::uint64_t bit = m & (~m + 1);
    // Strictly increasing choice: only elements above this one stay available.
    std::uint64_t above = m & ~((bit << 1) - 1);
    subsets_of_size(above, size - 1, cur | bit, out);
  }
}

}  // namespace

std::string_view family_name(RelatorFamily f) {
  for (const auto& n : kNames)
    if (n.family == f) return n.name;
  return "?";
}

std::optional<RelatorFamily> family_from_name(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.family;
  return std::nullopt;
}

int family_type(RelatorFamily f) {
  switch (f) {
    case F::kE0a: case F::kE0b: case F::kE1: case F::kE2: case F::kE3: case F::kE4:
    case F::kE5: case F::kE6: case F::kE7: case F::kE8: case F::kE9:
      return -1;
    case F::kH1: case F::kH2: case F::kH3:
      return 1;
    default:
      return 0;
  }
}

bool is_boundary_family(RelatorFamily f) {
  return f == F::kE0a || f == F::kE0b || f == F::kG0a || f == F::kG0b;
}

std::vector<RelatorFamily> spanning_families(int type, bool include_boundary) {
  std::vector<RelatorFamily> out;
  for (const auto& n : kNames) {
    if (n.family == F::kF1 || family_type(n.family) != type) continue;
    if (!include_boundary && is_boundary_family(n.family)) continue;
    out.push_back(n.family);
  }
  return out;
}

const RelatorSchema& relator_schema(RelatorFamily f) {
  for (const auto& s : schemas())
    if (s.family == f) return s;
  throw SchemaError("unknown relator family");
}

IndexSet RelatorBinding::support() const {
  std::uint64_t m = std::uint64_t{1} << one;
  for (IndexSet s : sets) m |= s.mask();
  for (int p : points) m |= std::uint64_t{1} << p;
  for (IndexSet s : tail) m |= s.mask();
  return IndexSet::from_mask(m);
}

std::string RelatorBinding::to_string() const {
  std::string s = "one=" + std::to_string(one);
  for (IndexSet x : sets) s += " {" + x.to_string() + "}";
  for (int p : points) s += " " + std::to_string(p);
  if (!tail.empty()) {
    s += " |";
    for (IndexSet x : tail) s += " {" + x.to_string() + "}";
  }
  return s;
}

void validate_binding(RelatorFamily f, const RelatorBinding& b) {
  const RelatorSchema& sc = relator_schema(f);
  std::string name(family_name(f));
  if (b.sets.size() != sc.set_sizes.size() || b.points.size() != sc.point_roles.size())
    throw SchemaError(name + ": wrong number of roles");
  if (sc.exact_length && !b.tail.empty()) throw SchemaError(name + ": two-block family takes no tail");
  std::uint64_t seen = 0;
  auto claim = [&](std::uint64_t m) {
    if (seen & m) throw SchemaError(name + ": roles overlap");
    seen |= m;
  };
  if (b.one < 1 || b.one > IndexSet::kMaxIndex) throw SchemaError(name + ": index out of range");
  claim(std::uint64_t{1} << b.one);
  for (std::size_t i = 0; i < b.sets.size(); ++i) {
    if (b.sets[i].size() != sc.set_sizes[i])
      throw SchemaError(name + ": role " + std::string(sc.set_roles[i]) + " has the wrong size");
    claim(b.sets[i].mask());
  }
  for (int p : b.points) {
    if (p < 1 || p > IndexSet::kMaxIndex) throw SchemaError(name + ": index out of range");
    claim(std::uint64_t{1} << p);
  }
  for (IndexSet s : b.tail) {
    if (s.size() != 2) throw SchemaError(name + ": tail blocks must be pairs");
    claim(s.mask());
  }
  if (IndexSet::from_mask(seen).min() != b.one) throw SchemaError(name + ": the distinguished index must be the smallest");
}

LieElt instantiate_relator(const FreeMetabelian& alg, RelatorFamily f, const RelatorBinding& b) {
  validate_binding(f, b);
  if (f == F::kG0a || f == F::kG0b) {
    RelatorBinding base = b;
    base.points.pop_back();
    return alg.ad_c(instantiate_relator(alg, f == F::kG0a ? F::kE0a : F::kE0b, base), b.points.back());
  }
  LieElt out = alg.zero();
  for (const auto& term : relator_terms(f, b)) out.add_scaled(alg.left_normed(term.blocks), alg.field().reduce(term.coeff));
  return out;
}

std::vector<std::vector<IndexSet>> perfect_matchings(IndexSet pool) {
  std::vector<std::vector<IndexSet>> out;
  if (pool.size() % 2) return out;
  std::vector<IndexSet> cur;
  matchings_rec(pool.mask(), cur, out);
  return out;
}

std::vector<std::vector<IndexSet>> ordered_disjoint_subsets(IndexSet pool, std::span<const int> sizes) {
  std::vector<std::vector<IndexSet>> out;
  std::vector<IndexSet> cur;
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t avail) -> void {
    if (idx == sizes.size()) {
      out.push_back(cur);
      return;
    }
    std::vector<std::uint64_t> choices;
    subsets_of_size(avail, sizes[idx], 0, choices);
    for (auto c : choices) {
      cur.push_back(IndexSet::from_mask(c));
      self(self, idx + 1, avail & ~c);
      cur.pop_back();
    }
  };
  rec(rec, 0, pool.mask());
  return out;
}

std::vector<RelatorBinding> enumerate_bindings(RelatorFamily f, const MultiDegree& d) {
  std::vector<RelatorBinding> out;
  const RelatorSchema& sc = relator_schema(f);
  if (d.support.empty()) return out;
  int tail_pairs = d.zdeg - sc.fixed_blocks;
  if (tail_pairs < 0 || (sc.exact_length && tail_pairs != 0)) return out;
  int needed = 1 + static_cast<int>(sc.point_roles.size()) + 2 * tail_pairs;
  for (int s : sc.set_sizes) needed += s;
  if (needed != d.support.size()) return out;

  int one = d.support.min();
  IndexSet pool = d.support.minus(IndexSet{one});
  for (const auto& sets : ordered_disjoint_subsets(pool, sc.set_sizes)) {
    IndexSet rest = pool;
    for (IndexSet s : sets) rest = rest.minus(s);
    std::vector<int> points;
    auto rec = [&](auto&& self, IndexSet avail) -> void {
      if (points.size() == sc.point_roles.size()) {
        for (auto& tail : perfect_matchings(avail)) out.push_back({one, sets, points, std::move(tail)});
        return;
      }
      bool increasing = static_cast<int>(points.size()) > sc.symmetric_from;
      for (int p : avail.elements()) {
        if (increasing && p < points.back()) continue;
        points.push_back(p);
        self(self, avail.minus(IndexSet{p}));
        points.pop_back();
      }
    };
    rec(rec, rest);
  }
  return out;
}

}  // namespace engel
