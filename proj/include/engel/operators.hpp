#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "engel/echelon.hpp"
#include "engel/engel_ideal.hpp"
#include "engel/metabelian.hpp"

namespace engel {

// Id_L(z) restricted to c_1..c_n: z plus quotient representatives of every slice of type -1, 0, 1.
// Immutable after construction.
class Truncation {
 public:
  // Throws ResourceError above dimension_cap().
  Truncation(const EngelIdeal& ideal, int n);

  int n() const { return n_; }
  const PrimeField& field() const { return alg_.field(); }
  const FreeMetabelian& algebra() const { return alg_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisWord>& basis() const { return basis_; }
  std::size_t z_index() const { return z_index_; }
  std::optional<std::size_t> index_of(const BasisWord& w) const;

  // Coordinates modulo J; throws UsageError for a term outside the truncation's support.
  std::vector<std::uint32_t> coordinates(const LieElt& a) const;
  LieElt element(const std::vector<std::uint32_t>& coords) const;

  // Column convention: column j holds the coordinates of [b_j, w].
  ModMatrix ad(const LieElt& w) const;
  ModMatrix ad(const ModelValue& w) const;
  const ModMatrix& ad_z() const { return ad_z_; }
  const ModMatrix& ad_c(int k) const;

 private:
  struct Slice {
    std::shared_ptr<const GradedComponent> component;
    std::map<std::uint32_t, std::size_t> column_to_basis;
  };

  const FreeMetabelian& alg_;
  int n_;
  std::vector<BasisWord> basis_;
  std::vector<MultiDegree> basis_degree_;
  std::map<MultiDegree, Slice> slices_;
  std::map<BasisWord, std::size_t> index_;
  std::size_t z_index_ = 0;
  ModMatrix ad_z_;
  std::vector<ModMatrix> ad_c_;
};

// Invertible operator on the truncation. Products compose left to right: (g * h) applies g first.
class Operator {
 public:
  Operator() = default;
  explicit Operator(ModMatrix m) : m_(std::move(m)) {}
  static Operator identity(PrimeField f, std::size_t dim) { return Operator(ModMatrix::identity(f, dim)); }
  // 1 + N for a nilpotent N.
  static Operator one_plus(const ModMatrix& n);

  const ModMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  bool is_identity() const { return m_.is_identity(); }
  // M - 1.
  ModMatrix deviation() const;

  friend Operator operator*(const Operator& g, const Operator& h) { return Operator(h.m_ * g.m_); }
  friend bool operator==(const Operator& a, const Operator& b) { return a.m_ == b.m_; }

  // Finite series sum (1 - M)^k; throws UsageError if M - 1 is not nilpotent.
  Operator inverse() const;
  Operator power(std::uint64_t k) const;

 private:
  ModMatrix m_;
};

// g^-1 h^-1 g h.
Operator group_commutator(const Operator& g, const Operator& h);
// Left-normed [g1, g2, ..., gk].
Operator group_commutator(const std::vector<Operator>& ops);

// Nilpotency of M - 1.
bool is_unipotent(const Operator& g);

// Simple commutator over z (letter 0) and c_i (letter i).
struct SimpleCommutator {
  int letter = -1;  // -1 on inner nodes
  std::vector<SimpleCommutator> kids;

  static SimpleCommutator leaf(int letter);
  static SimpleCommutator node(SimpleCommutator a, SimpleCommutator b);
  static SimpleCommutator left_normed(const std::vector<int>& letters);

  bool is_leaf() const { return kids.empty(); }
  int weight() const;
  int z_count() const;
  int type() const;
  bool repeats_c() const;
  std::string to_string() const;
};

// Value in L of the corresponding Lie commutator.
ModelValue evaluate_lie(const FreeMetabelian& alg, const SimpleCommutator& s);

// Group words over x = 1 + ad(z) (letter 0) and a_i = 1 + ad(c_i).
struct GroupLetter {
  int letter;
  bool inverse;
};
using GroupWord = std::vector<GroupLetter>;

std::string word_to_string(const GroupWord& w);

// Generator operators with cached inverses.
class OperatorGroup {
 public:
  explicit OperatorGroup(const Truncation& t);

  const Truncation& truncation() const { return t_; }
  const Operator& generator(int letter) const { return gens_.at(letter); }
  const Operator& generator_inverse(int letter) const { return invs_.at(letter); }
  Operator identity() const { return Operator::identity(t_.field(), t_.dim()); }

  Operator evaluate(const GroupWord& w) const;
  // Image of a simple commutator: nested group commutators of the generators.
  Operator evaluate(const SimpleCommutator& s) const;
  // 1 + ad(w_L).
  Operator lie_image(const SimpleCommutator& s) const;

 private:
  std::pair<Operator, Operator> eval_pair(const SimpleCommutator& s) const;

  const Truncation& t_;
  std::vector<Operator> gens_;
  std::vector<Operator> invs_;
};

struct OperatorReport {
  std::string check;
  std::uint32_t p = 0;
  int n = 0;
  int m = 0;
  int r = 0;
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::size_t nontrivial = 0;  // samples whose operator differs from the identity
  std::uint64_t seed = 0;
  bool pass = false;
  double elapsed_ms = 0;
  std::vector<std::string> failures;
};

constexpr std::uint64_t kDefaultSeed = 20240901;

// ad(z)^2 = 0 and ad(z) ad(w) ad(z) = 0 for every basis word, every generator and sampled products w.
OperatorReport check_ad_z_square(const OperatorGroup& g, std::size_t samples, std::uint64_t seed);
// Nested group commutators equal 1 + ad of the Lie commutator: exhaustive to weight 4, then sampled.
OperatorReport check_commutator_image(const OperatorGroup& g, std::size_t samples, std::uint64_t seed);
// The four relations of the group: repeated c letter, two z-heavy entries, p-th powers, extreme type.
OperatorReport check_group_relations(const OperatorGroup& g, std::size_t samples, std::uint64_t seed);
// [g, x, x, x] = 1 for random words g of length <= 20, and conjugates of x stay unipotent.
OperatorReport check_engel(const OperatorGroup& g, std::size_t samples, std::uint64_t seed);
// [a_1 a_2 ... a_r, x, x, x] = 1.
OperatorReport check_product_engel(const OperatorGroup& g, int r);
// M^p = 1 for every generator.
OperatorReport check_generator_orders(const OperatorGroup& g);
// [[x,a1,a2,a3], [x,a4,a5], ..., [x,a_{2m},a_{2m+1}]] differs from 1, equals 1 + ad(w_L), and sends z to
// a nonzero vector; w_L and [w_L, z] lie outside J. Needs n >= 2m+1.
OperatorReport check_nonnilpotency_witness(const OperatorGroup& g, const EngelIdeal& ideal, int m);

// Random simple commutator of the given weight over z and c_1..c_n.
SimpleCommutator random_commutator(std::mt19937_64& rng, int n, int weight);
GroupWord random_word(std::mt19937_64& rng, int n, int max_length);

}  // namespace engel
