// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "engel/derivations.hpp"
#include "engel/engel_ideal.hpp"
#include "engel/enveloping.hpp"
#include "engel/matching.hpp"
#include "engel/operators.hpp"
#include "support/magnus_oracle.hpp"
#include "support/random_elements.hpp"

using namespace engel;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome free_generation() {
  Outcome o;
  std::size_t tuples = 0;
  for (int n = 1; n <= 4; ++n) {
    auto r = verify_free_generation(PrimeField(5), 5, n);
    o.pass = o.pass && r.pass && r.rank == r.tuples;
    tuples += r.tuples;
  }
  o.detail = "weight<=5, n=1..4, " + std::to_string(tuples) + " tuples independent";
  return o;
}

Outcome metabelian_engine() {
  Outcome o;
  PrimeField f(5);
  FreeMetabelian alg(f);
  oracle::Magnus magnus(f.prime());
  std::size_t slices = 0, total = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    IndexSet s = IndexSet::from_mask(mask << 1);
    for (int m = 1; m <= 3; ++m) {
      std::map<BasisWord, std::uint32_t> cols;
      for (const auto& w : enumerate_basis({m, s})) cols.emplace(w, static_cast<std::uint32_t>(cols.size()));
      RowEchelon span(f);
      std::vector<oracle::MagnusElt> images;
      for (const auto& seq : testing_support::block_sequences(m, s)) {
        images.push_back(magnus.tree(GeneratorTree::left_normed(seq)));
        SparseRow row;
        LieElt e = alg.left_normed(seq);
        for (const auto& [w, c] : e.terms()) row.emplace_back(cols.at(w), c);
        std::sort(row.begin(), row.end());
        span.insert(row);
      }
      std::size_t koszul = oracle::koszul_slice_dimension(m, s.size());
      if (span.rank() != magnus.rank(images) || span.rank() != koszul || cols.size() != koszul) {
        o.pass = false;
        o.detail = "mismatch on " + MultiDegree{m, s}.to_string() + "; ";
      }
      ++slices;
      total += span.rank();
    }
  }
  o.detail += std::to_string(slices) + " slices, zdeg<=3, n=6, total dimension " + std::to_string(total);
  return o;
}

Outcome explicit_equals_closure() {
  Outcome o;
  FreeMetabelian alg(PrimeField(5));
  EngelIdeal ideal(alg);
  std::size_t slices = 0, mismatches = 0;
  for (const auto& d : lattice_degrees(7)) {
    ++slices;
    if (!compare_slice(ideal, d).equal) ++mismatches;
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(slices) + " slices for n=7, " + std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome derivation_replay() {
  Outcome o;
  FreeMetabelian alg(PrimeField(5));
  std::size_t bindings = 0, passed = 0;
  for (CaseId id : all_cases()) {
    auto r = derive_case(alg, id);
    bindings += r.bindings_checked + r.k1_bindings_checked;
    if (r.pass && r.k1_in_span)
      ++passed;
    else
      o.detail += std::string(case_name(id)) + " failed; ";
  }
  o.pass = passed == all_cases().size();
  o.detail += std::to_string(passed) + "/" + std::to_string(all_cases().size()) + " cases, " + std::to_string(bindings) +
              " expansions";
  return o;
}

Outcome matching_cases() {
  Outcome o;
  PrimeField f(5);
  for (int c = 1; c <= 4; ++c) o.pass = o.pass && case_check(f, c).pass;
  auto sweep = sweep_pairing_independence(f, 6);
  o.pass = o.pass && sweep.pass;
  o.detail = "cases 1..4, pairing independence over " + std::to_string(sweep.elements) + " elements up to m=6";
  return o;
}

Outcome matching_witness() {
  Outcome o;
  FreeMetabelian alg(PrimeField(5));
  EngelIdeal ideal(alg);
  for (int m = 1; m <= 6; ++m) {
    bool sign = witness_nonzero(ideal, m, WitnessMode::kSign).pass;
    o.pass = o.pass && sign;
    if (m <= 3) o.pass = o.pass && witness_nonzero(ideal, m, WitnessMode::kRowReduce).pass == sign;
  }
  o.detail = "sign m=1..6, rowreduce m=1..3, modes agree";
  return o;
}

Outcome operator_identities() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u}) {
    FreeMetabelian alg{PrimeField(p)};
    EngelIdeal ideal(alg);
    Truncation t(ideal, 7);
    OperatorGroup g(t);
    for (const auto& r : {check_ad_z_square(g, 100, kDefaultSeed), check_commutator_image(g, 100, kDefaultSeed),
                          check_group_relations(g, 100, kDefaultSeed)}) {
      o.pass = o.pass && r.pass && r.samples >= 100;
      o.detail += r.check + "@p" + std::to_string(p) + " " + std::to_string(r.samples) + " samples; ";
    }
  }
  o.detail += "n=7";
  return o;
}

Outcome engel_identity() {
  Outcome o;
  FreeMetabelian alg(PrimeField(5));
  EngelIdeal ideal(alg);
  for (int n = 4; n <= 7; ++n) {
    Truncation t(ideal, n);
    OperatorGroup g(t);
    for (int r = 1; r <= 4; ++r) o.pass = o.pass && check_product_engel(g, r).pass;
    if (n == 7) {
      auto e = check_engel(g, 200, kDefaultSeed);
      o.pass = o.pass && e.pass && e.samples == 200;
      o.detail = "r=1..4 at n=4..7, 200 sampled g at n=7 (" + std::to_string(e.nontrivial) + " nontrivial)";
    }
  }
  return o;
}

Outcome nonnilpotency_witness() {
  Outcome o;
  FreeMetabelian alg(PrimeField(5));
  EngelIdeal ideal(alg);
  for (int m = 1; m <= 3; ++m) {
    Truncation t(ideal, 2 * m + 1);
    OperatorGroup g(t);
    auto r = check_nonnilpotency_witness(g, ideal, m);
    o.pass = o.pass && r.pass && r.nontrivial == 1;
  }
  o.detail = "m=1..3 at n=3,5,7; witness differs from 1 and [w,z] outside J";
  return o;
}

Outcome generator_orders() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u}) {
    FreeMetabelian alg{PrimeField(p)};
    EngelIdeal ideal(alg);
    Truncation t(ideal, 7);
    OperatorGroup g(t);
    o.pass = o.pass && check_generator_orders(g).pass;
  }
  o.detail = "x and a_1..a_7 at n=7, p=3,5";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"free generation of the enveloping algebra", free_generation},
      {"metabelian engine vs Magnus oracle", metabelian_engine},
      {"explicit relators span J", explicit_equals_closure},
      {"derivation replay A1..C3", derivation_replay},
      {"matching-space cases and pairing independence", matching_cases},
      {"matching-space witness", matching_witness},
      {"operator identities", operator_identities},
      {"Engel identity in H", engel_identity},
      {"non-nilpotency witness", nonnilpotency_witness},
      {"generator orders", generator_orders},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s  %s: %s (%.1f s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
