#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "engel/metabelian.hpp"
#include "engel/relators.hpp"

namespace engel {

// Replayable steps of the relator derivation. A*: brackets of type -2 words with c_k;
// B*: consequences of type -1 relators; C*: consequences of type 0 relators.
enum class CaseId { A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12, B1, B2, B3, B4, B5, B6, C1, C2, C3 };

std::string_view case_name(CaseId id);
std::optional<CaseId> case_from_name(std::string_view name);
std::vector<CaseId> all_cases();

struct DerivationReport {
  CaseId id;
  std::vector<std::string> degrees;          // slices replayed
  std::vector<RelatorFamily> prior;          // span the expansion is reduced against
  std::optional<RelatorFamily> produces;     // relator the residue must equal, up to sign
  std::vector<RelatorFamily> cited;          // families the reduction must depend on
  std::vector<RelatorFamily> necessary;      // cited families whose removal breaks the match
  std::size_t bindings_checked = 0;          // k >= 2 expansions
  std::size_t k1_bindings_checked = 0;       // k = 1 expansions
  std::size_t extra_checks = 0;              // side claims attached to the case
  bool residue_matches = true;
  // Bindings whose stated relator already lies in the prior span; redundancy is not a failure.
  std::size_t redundant = 0;
  bool k1_in_span = true;
  bool extras_ok = true;
  bool pass = false;
  double elapsed_ms = 0;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;
};

// Re-expands the case over every binding of its shape at the smallest legal length (and one
// more block when at most nine indices are involved), reduces modulo the span available at
// that stage, and compares with the stated relator. The k = 1 expansions must land in the
// final span of their type.
DerivationReport derive_case(const FreeMetabelian& alg, CaseId id);

}  // namespace engel
