#include "engel/derivations.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "engel/engel_ideal.hpp"

namespace engel {

namespace {

using F = RelatorFamily;
using Families = std::vector<F>;

constexpr std::array<std::pair<CaseId, std::string_view>, 21> kCaseNames{{
    {CaseId::A1, "A1"},   {CaseId::A2, "A2"},   {CaseId::A3, "A3"}, {CaseId::A4, "A4"}, {CaseId::A5, "A5"},
    {CaseId::A6, "A6"},   {CaseId::A7, "A7"},   {CaseId::A8, "A8"}, {CaseId::A9, "A9"}, {CaseId::A10, "A10"},
    {CaseId::A11, "A11"}, {CaseId::A12, "A12"}, {CaseId::B1, "B1"}, {CaseId::B2, "B2"}, {CaseId::B3, "B3"},
    {CaseId::B4, "B4"},   {CaseId::B5, "B5"},   {CaseId::B6, "B6"}, {CaseId::C1, "C1"}, {CaseId::C2, "C2"},
    {CaseId::C3, "C3"},
}};

// Largest support replayed at the second length.
constexpr int kSecondPassSupport = 9;
constexpr std::size_t kMaxMessages = 6;

const Families kTypeMinusOne{F::kE1, F::kE2, F::kE3, F::kE4, F::kE5, F::kE6, F::kE7, F::kE8, F::kE9};
const Families kTypeZero{F::kG1, F::kG2, F::kG3, F::kG4, F::kG5, F::kG6};
const Families kTypeOne{F::kH1, F::kH2, F::kH3};

IndexSet single(int x) { return IndexSet::from_mask(std::uint64_t{1} << x); }
IndexSet with(IndexSet s, int x) { return s.unite(single(x)); }

std::vector<int> sorted_points(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

using Expect = std::optional<std::pair<F, RelatorBinding>>;

// Shape of the expanded element u and the relator its bracket with c_k should give.
struct CaseRecipe {
  int m_min = 3;
  // Roles for u when it is a bare word shape.
  std::vector<int> set_sizes;
  int n_points = 0;
  int symmetric_from = 0;
  int fixed_blocks = 3;
  bool reserve_one = true;
  std::function<std::vector<IndexSet>(const RelatorBinding&)> u_blocks;
  // Otherwise u is an instance of this family.
  std::optional<F> source;
  std::function<Expect(const RelatorBinding&, int)> expected;
  Families prior;
  Families cited;
  Families final_span;
};

Expect expect(F f, int one, std::vector<IndexSet> sets, std::vector<int> points, std::vector<IndexSet> tail) {
  return std::make_pair(f, RelatorBinding{one, std::move(sets), std::move(points), std::move(tail)});
}

std::vector<IndexSet> plus_tail(std::vector<IndexSet> head, const RelatorBinding& r) {
  head.insert(head.end(), r.tail.begin(), r.tail.end());
  return head;
}

Families stage(std::initializer_list<F> xs) { return Families(xs); }

CaseRecipe word_case(int m_min, std::vector<int> sizes, int n_points, int sym, int fixed,
                   std::function<std::vector<IndexSet>(const RelatorBinding&)> blocks,
                   std::function<Expect(const RelatorBinding&, int)> exp, Families prior, Families cited) {
  CaseRecipe s;
  s.m_min = m_min;
  s.set_sizes = std::move(sizes);
  s.n_points = n_points;
  s.symmetric_from = sym;
  s.fixed_blocks = fixed;
  s.u_blocks = std::move(blocks);
  s.expected = std::move(exp);
  s.prior = std::move(prior);
  s.cited = std::move(cited);
  s.final_span = kTypeMinusOne;
  return s;
}

CaseRecipe family_case(F source, std::function<Expect(const RelatorBinding&, int)> exp, Families prior,
                     Families final_span) {
  CaseRecipe s;
  s.source = source;
  const RelatorSchema& sc = relator_schema(source);
  s.m_min = sc.fixed_blocks;
  s.expected = std::move(exp);
  s.prior = std::move(prior);
  s.final_span = std::move(final_span);
  return s;
}

CaseRecipe recipe_for(CaseId id) {
  const IndexSet E{};
  auto none = [](const RelatorBinding&, int) -> Expect { return std::nullopt; };
  const Families a_stage1{F::kE1}, a_stage2{F::kE1, F::kE3}, a_stage3{F::kE1, F::kE3, F::kE2};
  const Families a_stage4{F::kE1, F::kE3, F::kE2, F::kE5};
  const Families a_stage5{F::kE1, F::kE3, F::kE2, F::kE5, F::kE6};
  const Families a_stage7{F::kE1, F::kE3, F::kE2, F::kE5, F::kE6, F::kE4, F::kE7};
  const Families a_stage8{F::kE1, F::kE3, F::kE2, F::kE5, F::kE6, F::kE4, F::kE7, F::kE9};
  switch (id) {
    case CaseId::A1:
      return word_case(
          4, {2, 2}, 1, 1, 4,
          [E](const RelatorBinding& r) { return plus_tail({r.sets[0], with(r.sets[1], r.one), E, single(r.points[0])}, r); },
          [](const RelatorBinding& r, int k) {
            return expect(F::kE1, r.one, r.sets, sorted_points({r.points[0], k}), r.tail);
          },
          {}, {});
    case CaseId::A2:
      return word_case(
          3, {2}, 1, 1, 3,
          [E](const RelatorBinding& r) { return plus_tail({single(r.points[0]), with(r.sets[0], r.one), E}, r); },
          [](const RelatorBinding& r, int k) { return expect(F::kE3, r.one, r.sets, {r.points[0], k}, r.tail); },
          a_stage1, {});
    case CaseId::A3:
      return word_case(
          3, {2, 1}, 0, 0, 3,
          [E](const RelatorBinding& r) { return plus_tail({r.sets[0], with(r.sets[1], r.one), E}, r); },
          [](const RelatorBinding& r, int k) { return expect(F::kE2, r.one, r.sets, {k}, r.tail); }, a_stage2, {});
    case CaseId::A4:
      return word_case(
          3, {2}, 1, 1, 3,
          [](const RelatorBinding& r) { return plus_tail({r.sets[0], single(r.one), single(r.points[0])}, r); },
          [](const RelatorBinding& r, int k) {
            return expect(F::kE5, r.one, r.sets, sorted_points({r.points[0], k}), r.tail);
          },
          a_stage3, {F::kE2});
    case CaseId::A5:
      return word_case(
          3, {1}, 2, 2, 3,
          [](const RelatorBinding& r) {
            return plus_tail({single(r.points[0]), with(r.sets[0], r.one), single(r.points[1])}, r);
          },
          [](const RelatorBinding& r, int k) {
            auto jk = sorted_points({r.points[1], k});
            return expect(F::kE6, r.one, r.sets, {r.points[0], jk[0], jk[1]}, r.tail);
          },
          a_stage4, {F::kE3, F::kE2});
    case CaseId::A6:
      return word_case(
          3, {2}, 1, 1, 3,
          [E](const RelatorBinding& r) { return plus_tail({E, with(r.sets[0], r.one), single(r.points[0])}, r); },
          [](const RelatorBinding& r, int k) {
            return expect(F::kE4, r.one, {r.sets[0], with(single(r.points[0]), k)}, {}, r.tail);
          },
          a_stage5, {});
    case CaseId::A7:
      return word_case(
          3, {2}, 1, 1, 3,
          [](const RelatorBinding& r) { return plus_tail({single(r.points[0]), single(r.one), r.sets[0]}, r); },
          [](const RelatorBinding& r, int k) {
            auto jkr = with(r.sets[0], k).elements();
            return expect(F::kE9, r.one, {}, {r.points[0], jkr[0], jkr[1], jkr[2]}, r.tail);
          },
          a_stage7, {F::kE5, F::kE6});
    case CaseId::A8:
      return word_case(
          3, {2}, 1, 1, 3,
          [E](const RelatorBinding& r) { return plus_tail({E, with(single(r.one), r.points[0]), r.sets[0]}, r); },
          [](const RelatorBinding& r, int k) {
            return expect(F::kE8, r.one, {r.sets[0], with(single(r.points[0]), k)}, {}, r.tail);
          },
          a_stage8, {F::kE9});
    case CaseId::A9:
      return word_case(
          4, {2, 1}, 2, 0, 4,
          [](const RelatorBinding& r) {
            return plus_tail({r.sets[0], with(r.sets[1], r.one), single(r.points[0]), single(r.points[1])}, r);
          },
          none, kTypeMinusOne, {});
    case CaseId::A10:
      return word_case(
          5, {2, 2}, 3, 0, 5,
          [](const RelatorBinding& r) {
            return plus_tail({r.sets[0], with(r.sets[1], r.one), single(r.points[0]), single(r.points[1]),
                              single(r.points[2])},
                             r);
          },
          none, kTypeMinusOne, {});
    case CaseId::A11:
      return word_case(
          4, {2}, 3, 1, 4,
          [](const RelatorBinding& r) {
            return plus_tail({single(r.points[0]), with(r.sets[0], r.one), single(r.points[1]), single(r.points[2])}, r);
          },
          none, kTypeMinusOne, {});
    case CaseId::A12: {
      auto s = word_case(
          3, {2}, 0, 0, 2, [E](const RelatorBinding& r) { return plus_tail({r.sets[0], E}, r); }, none,
          kTypeMinusOne, {});
      s.reserve_one = false;
      return s;
    }
    case CaseId::B1:
      return family_case(
          F::kE1,
          [](const RelatorBinding& r, int k) {
            return expect(F::kF1, r.one, r.sets, sorted_points({r.points[0], r.points[1], k}), r.tail);
          },
          {}, kTypeZero);
    case CaseId::B2:
      return family_case(
          F::kE8, [](const RelatorBinding& r, int k) { return expect(F::kG3, r.one, r.sets, {k}, r.tail); },
          stage({F::kF1}), kTypeZero);
    case CaseId::B3:
      return family_case(
          F::kE7, [](const RelatorBinding& r, int k) { return expect(F::kG4, r.one, r.sets, {k}, r.tail); },
          stage({F::kF1, F::kG3}), kTypeZero);
    case CaseId::B4:
      return family_case(
          F::kE9,
          [](const RelatorBinding& r, int s) {
            const auto& p = r.points;
            return expect(F::kG5, r.one, {}, {p[0], s, p[1], p[2], p[3]}, r.tail);
          },
          stage({F::kF1, F::kG3, F::kG4}), kTypeZero);
    case CaseId::B5:
      return family_case(
          F::kE4, [](const RelatorBinding& r, int k) { return expect(F::kG1, r.one, r.sets, {k}, r.tail); },
          stage({F::kF1, F::kG3, F::kG4, F::kG5}), kTypeZero);
    case CaseId::B6:
      return family_case(
          F::kE5,
          [](const RelatorBinding& r, int k) {
            return expect(F::kG2, r.one, r.sets, {k, r.points[0], r.points[1]}, r.tail);
          },
          stage({F::kF1, F::kG3, F::kG4, F::kG5, F::kG1}), kTypeZero);
    case CaseId::C1:
      return family_case(
          F::kG3,
          [](const RelatorBinding& r, int k) {
            return expect(F::kH1, r.one, r.sets, {}, plus_tail({with(single(r.points[0]), k)}, r));
          },
          {}, kTypeOne);
    case CaseId::C2:
      return family_case(
          F::kG4,
          [](const RelatorBinding& r, int k) {
            return expect(F::kH2, r.one, r.sets, {}, plus_tail({with(single(r.points[0]), k)}, r));
          },
          stage({F::kH1}), kTypeOne);
    case CaseId::C3:
      return family_case(
          F::kG5,
          [](const RelatorBinding& r, int t) {
            const auto& p = r.points;
            return expect(F::kH3, r.one, {}, {p[0], p[2], p[3], p[4]}, plus_tail({with(single(p[1]), t)}, r));
          },
          stage({F::kH1, F::kH2}), kTypeOne);
  }
  return {};
}

// Role assignments for a bare word shape over `support`.
std::vector<RelatorBinding> enumerate_roles(const CaseRecipe& s, int m, IndexSet support) {
  std::vector<RelatorBinding> out;
  int tail_pairs = m - s.fixed_blocks;
  if (tail_pairs < 0) return out;
  int one = support.min();
  IndexSet pool = s.reserve_one ? support.minus(single(one)) : support;
  for (const auto& sets : ordered_disjoint_subsets(pool, s.set_sizes)) {
    IndexSet rest = pool;
    for (IndexSet x : sets) rest = rest.minus(x);
    if (rest.size() != s.n_points + 2 * tail_pairs) continue;
    std::vector<int> points;
    auto rec = [&](auto&& self, IndexSet avail) -> void {
      if (static_cast<int>(points.size()) == s.n_points) {
        for (auto& tail : perfect_matchings(avail)) out.push_back({one, sets, points, std::move(tail)});
        return;
      }
      bool increasing = static_cast<int>(points.size()) > s.symmetric_from;
      for (int p : avail.elements()) {
        if (increasing && p < points.back()) continue;
        points.push_back(p);
        self(self, avail.minus(single(p)));
        points.pop_back();
      }
    };
    rec(rec, rest);
  }
  return out;
}

class SpanCache {
 public:
  explicit SpanCache(const FreeMetabelian& alg) : alg_(alg) {}

  const ProjectedSpan& get(Families fams, const MultiDegree& d) {
    std::sort(fams.begin(), fams.end());
    auto key = std::make_pair(fams, d);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto span = std::make_unique<ProjectedSpan>(alg_.field());
    for (F f : fams)
      for (const auto& b : enumerate_bindings(f, d)) span->insert(instantiate_relator(alg_, f, b));
    return *cache_.emplace(key, std::move(span)).first->second;
  }

 private:
  const FreeMetabelian& alg_;
  std::map<std::pair<Families, MultiDegree>, std::unique_ptr<ProjectedSpan>> cache_;
};

Families without(const Families& fams, F f) {
  Families out;
  for (F g : fams)
    if (g != f) out.push_back(g);
  return out;
}

std::string fam_list(const Families& fams) {
  std::string s;
  for (F f : fams) s += (s.empty() ? "" : ",") + std::string(family_name(f));
  return s.empty() ? "-" : s;
}

class Replay {
 public:
  Replay(const FreeMetabelian& alg, CaseId id, const CaseRecipe& recipe, DerivationReport& rep)
      : alg_(alg), id_(id), recipe_(recipe), rep_(rep), spans_(alg) {}

  // u's support is S minus k; the bracket lands in (m, S).
  std::vector<std::pair<LieElt, RelatorBinding>> sources(int m, IndexSet support) {
    std::vector<std::pair<LieElt, RelatorBinding>> out;
    if (recipe_.source) {
      for (auto& b : enumerate_bindings(*recipe_.source, {m, support}))
        out.emplace_back(instantiate_relator(alg_, *recipe_.source, b), std::move(b));
    } else {
      for (auto& b : enumerate_roles(recipe_, m, support)) out.emplace_back(alg_.left_normed(recipe_.u_blocks(b)), std::move(b));
    }
    return out;
  }

  // Whether every k >= 2 expansion reduces to the stated relator modulo `fams`.
  bool replay_slice(int m, int n, const Families& fams, bool record) {
    MultiDegree d{m, IndexSet::range(1, n)};
    const ProjectedSpan& span = spans_.get(fams, d);
    bool ok = true;
    for (int k = 2; k <= n; ++k) {
      for (const auto& [u, b] : sources(m, d.support.minus(single(k)))) {
        LieElt got = alg_.ad_c(u, k);
        Expect e = recipe_.expected(b, k);
        if (record) ++rep_.bindings_checked;
        if (!e) {
          if (!span.contains(got)) {
            ok = false;
            if (record) note(fmt("not in span", m, b, k));
          }
          continue;
        }
        LieElt want = instantiate_relator(alg_, e->first, e->second);
        bool match = span.contains(got - want) || span.contains(got + want);
        if (!match) {
          ok = false;
          if (record) note(fmt("residue differs from " + std::string(family_name(e->first)), m, b, k));
        }
        if (record && span.contains(want)) {
          if (rep_.redundant++ == 0)
            rep_.notes.push_back(fmt(std::string(family_name(e->first)) + " already in prior span", m, b, k));
        }
      }
    }
    if (record && !ok) rep_.residue_matches = false;
    return ok;
  }

  void k1_slice(int m, int n) {
    MultiDegree d{m, IndexSet::range(1, n)};
    const ProjectedSpan& span = spans_.get(recipe_.final_span, d);
    for (const auto& [u, b] : sources(m, d.support.minus(single(1)))) {
      ++rep_.k1_bindings_checked;
      if (!span.contains(alg_.ad_c(u, 1))) {
        rep_.k1_in_span = false;
        note(fmt("k=1 expansion outside " + fam_list(recipe_.final_span), m, b, 1));
      }
    }
  }

  // Every ad(c_k) consequence of `f`, k = 1 included, lies in span(target).
  void consequences_in_span(F f, const Families& target) {
    int m0 = relator_schema(f).fixed_blocks;
    for (int m = m0; m <= m0 + 1; ++m) {
      int n = support_size(f, m) + 1;
      if (m > m0 && n > kSecondPassSupport) break;
      MultiDegree d{m, IndexSet::range(1, n)};
      const ProjectedSpan& span = spans_.get(target, d);
      for (int k = 1; k <= n; ++k) {
        for (const auto& b : enumerate_bindings(f, {m, d.support.minus(single(k))})) {
          ++rep_.extra_checks;
          if (!span.contains(alg_.ad_c(instantiate_relator(alg_, f, b), k))) {
            rep_.extras_ok = false;
            note(fmt("consequence of " + std::string(family_name(f)) + " outside " + fam_list(target), m, b, k));
          }
        }
      }
    }
  }

  // Every instance of each family in `a` lies in span(b) on the slice.
  void spans_contain(const Families& a, const Families& b, const MultiDegree& d) {
    const ProjectedSpan& span = spans_.get(b, d);
    for (F f : a)
      for (const auto& bind : enumerate_bindings(f, d)) {
        ++rep_.extra_checks;
        if (!span.contains(instantiate_relator(alg_, f, bind))) {
          rep_.extras_ok = false;
          note(fmt(std::string(family_name(f)) + " outside " + fam_list(b), d.zdeg, bind, 0));
        }
      }
  }

  // Every instance of `a` lies in the span of all ad(c_k) images of `lower` instances on the slice.
  void list_in_consequences(const Families& a, const Families& lower, const MultiDegree& d) {
    ProjectedSpan span(alg_.field());
    for (int k : d.support.elements())
      for (F f : lower)
        for (const auto& b : enumerate_bindings(f, {d.zdeg, d.support.minus(single(k))}))
          span.insert(alg_.ad_c(instantiate_relator(alg_, f, b), k));
    for (F f : a)
      for (const auto& bind : enumerate_bindings(f, d)) {
        ++rep_.extra_checks;
        if (!span.contains(instantiate_relator(alg_, f, bind))) {
          rep_.extras_ok = false;
          note(fmt(std::string(family_name(f)) + " not a consequence of " + fam_list(lower), d.zdeg, bind, 0));
        }
      }
  }

  // ad(z) of each instance of `upper` equals the matching instance of `lower` up to sign, modulo X\Z.
  void z_closure(F upper, F lower) {
    int m = relator_schema(upper).fixed_blocks + 1;
    MultiDegree d{m, IndexSet::range(1, support_size(upper, m))};
    ProjectedSpan empty(alg_.field());
    for (const auto& b : enumerate_bindings(upper, d)) {
      ++rep_.extra_checks;
      LieElt up = alg_.ad_z(instantiate_relator(alg_, upper, b));
      LieElt low = instantiate_relator(alg_, lower, b);
      if (!empty.contains(up - low) && !empty.contains(up + low)) {
        rep_.extras_ok = false;
        note(fmt("ad(z) of " + std::string(family_name(upper)) + " differs from " + std::string(family_name(lower)), m, b, 0));
      }
    }
  }

  static int support_size(F f, int m) {
    const RelatorSchema& sc = relator_schema(f);
    int n = 1 + static_cast<int>(sc.point_roles.size()) + 2 * (m - sc.fixed_blocks);
    for (int s : sc.set_sizes) n += s;
    return n;
  }

  int u_support_size(int m) const {
    if (recipe_.source) return support_size(*recipe_.source, m);
    int n = (recipe_.reserve_one ? 1 : 0) + recipe_.n_points + 2 * (m - recipe_.fixed_blocks);
    for (int s : recipe_.set_sizes) n += s;
    return n;
  }

  SpanCache& spans() { return spans_; }

 private:
  std::string fmt(const std::string& what, int m, const RelatorBinding& b, int k) const {
    std::string s = std::string(case_name(id_)) + ": " + what + " at m=" + std::to_string(m) + " [" + b.to_string() + "]";
    if (k) s += " k=" + std::to_string(k);
    return s;
  }
  void note(std::string s) {
    if (rep_.discrepancies.size() < kMaxMessages) rep_.discrepancies.push_back(std::move(s));
  }

  const FreeMetabelian& alg_;
  CaseId id_;
  const CaseRecipe& recipe_;
  DerivationReport& rep_;
  SpanCache spans_;
};

}  // namespace

std::string_view case_name(CaseId id) {
  for (const auto& [c, n] : kCaseNames)
    if (c == id) return n;
  return "?";
}

std::optional<CaseId> case_from_name(std::string_view name) {
  for (const auto& [c, n] : kCaseNames)
    if (n == name) return c;
  return std::nullopt;
}

std::vector<CaseId> all_cases() {
  std::vector<CaseId> out;
  for (const auto& [c, n] : kCaseNames) out.push_back(c);
  return out;
}

DerivationReport derive_case(const FreeMetabelian& alg, CaseId id) {
  auto start = std::chrono::steady_clock::now();
  const CaseRecipe recipe = recipe_for(id);
  DerivationReport rep;
  rep.id = id;
  rep.prior = recipe.prior;
  rep.cited = recipe.cited;
  Replay replay(alg, id, recipe, rep);

  int m0 = std::max(recipe.m_min, 3);
  for (int m = m0; m <= m0 + 1; ++m) {
    int n = replay.u_support_size(m) + 1;
    if (m > m0 && n > kSecondPassSupport) break;
    rep.degrees.push_back(MultiDegree{m, IndexSet::range(1, n)}.to_string());
    replay.replay_slice(m, n, recipe.prior, true);
    replay.k1_slice(m, n);
    if (m == m0) {
      for (F f : recipe.cited)
        if (!replay.replay_slice(m, n, without(recipe.prior, f), false)) rep.necessary.push_back(f);
    }
  }
  {
    // Stated relator for the first binding names the family this case produces.
    int n = replay.u_support_size(m0) + 1;
    auto srcs = replay.sources(m0, IndexSet::range(1, n).minus(IndexSet{n}));
    if (!srcs.empty())
      if (auto e = recipe.expected(srcs.front().second, n)) rep.produces = e->first;
  }

  switch (id) {
    case CaseId::A6: {
      // The companion relator follows from the one produced here.
      Families with_e4 = recipe.prior;
      with_e4.push_back(F::kE4);
      replay.spans_contain({F::kE7}, with_e4, {4, IndexSet::range(1, 9)});
      break;
    }
    case CaseId::B6: {
      for (F f : {F::kE2, F::kE3, F::kE6}) replay.consequences_in_span(f, kTypeZero);
      Families derived = recipe.prior;
      derived.push_back(F::kG2);
      for (MultiDegree d : {MultiDegree{3, IndexSet::range(1, 6)}, MultiDegree{4, IndexSet::range(1, 8)}}) {
        replay.spans_contain(derived, kTypeZero, d);
        replay.list_in_consequences(kTypeZero, kTypeMinusOne, d);
      }
      break;
    }
    case CaseId::C1: replay.z_closure(F::kH1, F::kE8); break;
    case CaseId::C2: replay.z_closure(F::kH2, F::kE7); break;
    case CaseId::C3:
      replay.z_closure(F::kH3, F::kE9);
      for (F f : {F::kG1, F::kG2, F::kG6}) replay.consequences_in_span(f, kTypeOne);
      break;
    default: break;
  }

  bool cited_ok = rep.necessary.size() == rep.cited.size();
  if (!cited_ok) {
    for (F f : rep.cited)
      if (std::find(rep.necessary.begin(), rep.necessary.end(), f) == rep.necessary.end())
        rep.discrepancies.push_back(std::string(case_name(id)) + ": reduction does not depend on " +
                                    std::string(family_name(f)));
  }
  rep.pass = rep.residue_matches && rep.k1_in_span && rep.extras_ok && cited_ok &&
             rep.bindings_checked > 0;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace engel
