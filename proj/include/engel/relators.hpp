#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "engel/basis_word.hpp"
#include "engel/lie_elt.hpp"
#include "engel/metabelian.hpp"

namespace engel {

// Relator families of the ideal. E* live in type -1, F1/G* in type 0, H* in type 1.
// E0a/E0b/G0a/G0b are the two-block relators (m = 2) that the three-block lists do not reach.
enum class RelatorFamily {
  kE0a, kE0b, kE1, kE2, kE3, kE4, kE5, kE6, kE7, kE8, kE9,
  kF1,
  kG0a, kG0b, kG1, kG2, kG3, kG4, kG5, kG6,
  kH1, kH2, kH3,
};

std::string_view family_name(RelatorFamily f);
std::optional<RelatorFamily> family_from_name(std::string_view name);
int family_type(RelatorFamily f);
bool is_boundary_family(RelatorFamily f);

// Families used by the explicit construction of the ideal in a slice of the given type.
std::vector<RelatorFamily> spanning_families(int type, bool include_boundary);

// Index assignment for a family. `one` is the smallest index of the degree; `sets` and
// `points` follow the family schema order; `tail` holds the remaining pairs I_{q}, ..., I_m.
struct RelatorBinding {
  int one = 1;
  std::vector<IndexSet> sets;
  std::vector<int> points;
  std::vector<IndexSet> tail;

  IndexSet support() const;
  std::string to_string() const;
};

struct RelatorSchema {
  RelatorFamily family;
  std::vector<std::string_view> set_roles;
  std::vector<int> set_sizes;
  std::vector<std::string_view> point_roles;
  // Points with index >= symmetric_from are interchangeable; enumeration keeps them increasing.
  int symmetric_from;
  // Blocks other than the tail pairs.
  int fixed_blocks;
  // Two-block families admit no tail.
  bool exact_length;
};

const RelatorSchema& relator_schema(RelatorFamily f);

// Throws SchemaError if the binding does not fit the family's schema.
void validate_binding(RelatorFamily f, const RelatorBinding& b);

// The relator (left side minus right side) as a normal-form element.
LieElt instantiate_relator(const FreeMetabelian& alg, RelatorFamily f, const RelatorBinding& b);

// Every binding of the family whose support is d.support and whose length is d.zdeg.
std::vector<RelatorBinding> enumerate_bindings(RelatorFamily f, const MultiDegree& d);

// Helpers shared with the case replays.
// Ordered choices of disjoint subsets of `pool` with the given sizes.
std::vector<std::vector<IndexSet>> ordered_disjoint_subsets(IndexSet pool, std::span<const int> sizes);
// All partitions of `pool` into pairs.
std::vector<std::vector<IndexSet>> perfect_matchings(IndexSet pool);

}  // namespace engel
