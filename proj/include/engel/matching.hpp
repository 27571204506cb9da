#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "engel/engel_ideal.hpp"
#include "engel/field.hpp"
#include "engel/index_set.hpp"

namespace engel {

// Partition of {2, ..., 2m+1} into m pairs, blocks sorted by minimum.
// Stands for E(I_1, ..., I_m) = [[z,c_{I_1}], [z,c_{1 u I_2}], [z,c_{I_3}], ...] modulo block order.
class PairPartition {
 public:
  // Throws UsageError unless the blocks are 2-subsets partitioning {2, ..., 2m+1}.
  static PairPartition from_blocks(int m, std::vector<IndexSet> blocks);
  // Norm-0 element pairing 2+t with sigma[t], sigma a bijection onto {m+2, ..., 2m+1}.
  static PairPartition from_matching(const std::vector<int>& sigma);
  static PairPartition identity_matching(int m);

  int m() const { return m_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  IndexSet left_half() const { return IndexSet::range(2, m_ + 1); }
  IndexSet right_half() const { return IndexSet::range(m_ + 2, 2 * m_ + 1); }

  // Blocks inside the left half; always equal to the count inside the right half.
  int norm() const;
  int right_norm() const;
  std::vector<IndexSet> left_blocks() const;
  std::vector<IndexSet> right_blocks() const;
  // sigma for a norm-0 element; throws UsageError otherwise.
  std::vector<int> matching() const;
  std::string to_string() const;

  friend bool operator==(const PairPartition&, const PairPartition&) = default;
  friend std::strong_ordering operator<=>(const PairPartition& a, const PairPartition& b);

 private:
  PairPartition(int m, std::vector<IndexSet> blocks) : m_(m), blocks_(std::move(blocks)) {}
  int m_ = 0;
  std::vector<IndexSet> blocks_;
};

// Every partition for the given m; there are (2m)!/(2^m m!).
std::vector<PairPartition> all_pair_partitions(int m);
// Every norm-0 partition; there are m!.
std::vector<PairPartition> all_matchings(int m);

class WCombination {
 public:
  explicit WCombination(PrimeField field) : field_(field) {}
  WCombination(PrimeField field, const PairPartition& e, std::int64_t coeff = 1);

  const PrimeField& field() const { return field_; }
  const std::map<PairPartition, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const PairPartition& e, std::uint32_t c);
  void add_scaled(const WCombination& o, std::uint32_t c);
  WCombination& operator+=(const WCombination& o);
  WCombination& operator-=(const WCombination& o);
  friend WCombination operator+(WCombination a, const WCombination& b) { return a += b; }
  friend WCombination operator-(WCombination a, const WCombination& b) { return a -= b; }
  WCombination scaled(std::int64_t c) const;
  int max_norm() const;
  std::string to_string() const;

  friend bool operator==(const WCombination& a, const WCombination& b) { return a.terms_ == b.terms_; }

 private:
  PrimeField field_;
  std::map<PairPartition, std::uint32_t> terms_;
};

using Pairing = std::vector<std::pair<IndexSet, IndexSet>>;

// E(A, B, rest) -> -E({a1,b1},{a2,b2}, rest) - E({a1,b2},{a2,b1}, rest) for a left block A and right
// block B of e. Throws UsageError if A or B is not such a block.
WCombination decompose_one_step(PrimeField f, const PairPartition& e, IndexSet left, IndexSet right);
// Successive one-step decompositions; the pairing must match all left blocks with all right blocks.
WCombination decompose_full(PrimeField f, const PairPartition& e, const Pairing& pairing);
// Left blocks and right blocks each sorted by minimum, matched in order.
Pairing canonical_pairing(const PairPartition& e);
// Image in W0 under the defining decompositions E = E^0 (canonical pairing).
WCombination to_w0(PrimeField f, const PairPartition& e);
WCombination to_w0(const WCombination& c);

// The three-term relation on a 4-set `quad` with the remaining blocks fixed:
// E(ab|cd, rest) + E(ac|bd, rest) + E(ad|bc, rest).
struct QuadRelation {
  int m;
  IndexSet quad;
  std::vector<IndexSet> rest;

  WCombination combination(PrimeField f) const;
  // At most two of the remaining blocks lie inside one half.
  bool is_reduced() const;
};

std::vector<QuadRelation> quad_relations(int m, bool reduced_only);

// Span of relations inside W0, indexed by norm-0 partitions.
class W0Span {
 public:
  explicit W0Span(PrimeField f);
  void insert(const WCombination& c);
  bool contains(const WCombination& c) const;
  std::size_t rank() const { return echelon_.rank(); }

 private:
  SparseRow row(const WCombination& c) const;
  PrimeField field_;
  RowEchelon echelon_;
  mutable std::map<PairPartition, std::uint32_t> columns_;
};

// D through the canonical pairing minus D through the pairing with right blocks permuted by sigma
// lies in the span of the reduced quad relations mapped to W0. sigma permutes 0..k-1.
bool decompositions_agree(PrimeField f, const PairPartition& e, const std::vector<int>& sigma, const W0Span& reduced);

struct PairingSweepReport {
  int m_max = 0;
  std::size_t elements = 0;
  std::size_t permutations = 0;
  int max_norm_seen = 0;
  bool pass = false;
};

// decompositions_agree for every element of norm >= 2 and every sigma, m = 4 .. m_max.
PairingSweepReport sweep_pairing_independence(PrimeField f, int m_max);

struct W0Relations {
  std::vector<WCombination> triple;    // sum over Sym{1,2,3} of a three-pair block, rest matched
  std::vector<WCombination> exchange;  // Sym{1,2} x Sym{3,4} exchange of two pair-of-pairs
};

// Empty families below m = 3 (triple) and m = 4 (exchange).
W0Relations relations_on_w0(PrimeField f, int m);

// Sum of coeff * sign(sigma) over norm-0 terms; throws UsageError on any other term.
std::uint32_t sign_functional(const WCombination& c);

enum class WitnessMode { kSign, kRowReduce };

struct WitnessReport {
  int m = 0;
  WitnessMode mode = WitnessMode::kSign;
  std::uint32_t identity_functional = 0;
  std::size_t relations_checked = 0;
  // Row-reduction details.
  std::size_t slice_dim = 0;
  std::size_t slice_quotient = 0;
  bool identity_outside_j = false;
  std::size_t w_dim = 0;
  std::size_t w_cap_j_dim = 0;
  std::size_t quad_and_order_rank = 0;
  bool quad_and_order_in_j = false;
  bool pass = false;
  double elapsed_ms = 0;
};

std::string_view witness_mode_name(WitnessMode m);

// Lie element for E with blocks in the given order; m = 1 gives [z, c_{1 u I_1}].
LieElt partition_element(const FreeMetabelian& alg, const std::vector<IndexSet>& ordered_blocks);

// SIGN: the functional is 1 on the identity matching and 0 on every W0 relation.
// ROWREDUCE: the identity matching element lies outside J on (m; 1..2m+1), and the order and quad
// relations span W n J there.
WitnessReport witness_nonzero(const EngelIdeal& ideal, int m, WitnessMode mode);

struct MatchingCaseReport {
  int case_id = 0;
  std::vector<int> windows;
  std::size_t instances = 0;
  bool pass = false;
  std::vector<std::string> discrepancies;
};

// Replays the reduction of quad relations with two pure blocks among I1..I4, cases 1..4, over every
// labelling at m = 4 and m = 5.
MatchingCaseReport case_check(PrimeField f, int case_id);

struct GenerationReport {
  int m = 0;
  std::size_t all_quad_rank = 0;
  std::size_t reduced_quad_rank = 0;
  std::size_t w0_relation_rank = 0;
  std::size_t w0_dim = 0;
  bool reduced_spans_all = false;
  bool families_span_reduced = false;
};

// Ranks inside W0 of the images of all quad relations, of the reduced ones, and of the triple and
// exchange families.
GenerationReport generation_check(PrimeField f, int m);

}  // namespace engel
