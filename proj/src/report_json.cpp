#include "engel/report_json.hpp"

#include "engel/shape.hpp"

namespace engel {

using nlohmann::json;

namespace {

json family_list(const std::vector<RelatorFamily>& fams) {
  json out = json::array();
  for (auto f : fams) out.push_back(std::string(family_name(f)));
  return out;
}

}  // namespace

json to_json(const FreeGenerationReport& r, double elapsed_ms) {
  return {{"check", "prop3.1"},   {"maxWeight", r.max_weight}, {"nGens", r.n_gens},
          {"tuples", r.tuples},   {"rank", r.rank},            {"monomials", r.monomials},
          {"gradedBlocks", r.graded_blocks}, {"leadingTermsOk", r.leading_terms_ok},
          {"pass", r.pass},       {"elapsedMs", elapsed_ms}};
}

json to_json(const SliceComparison& c) {
  return {{"check", "lemma3.2"},
          {"degree", c.degree.to_string()},
          {"dims", {{"slice", c.dimension}, {"jRank", c.closure_rank}, {"quotient", c.dimension - c.closure_rank}}},
          {"explicitRank", c.explicit_rank},
          {"withoutBoundaryRank", c.without_boundary_rank},
          {"withoutBoundaryEqual", c.equal_without_boundary},
          {"pass", c.equal},
          {"elapsedMs", c.elapsed_ms}};
}

json to_json(const DerivationReport& r) {
  json j = {{"check", "cases"},
            {"case", std::string(case_name(r.id))},
            {"degrees", r.degrees},
            {"prior", family_list(r.prior)},
            {"cited", family_list(r.cited)},
            {"necessary", family_list(r.necessary)},
            {"bindingsChecked", r.bindings_checked},
            {"k1BindingsChecked", r.k1_bindings_checked},
            {"extraChecks", r.extra_checks},
            {"residueMatches", r.residue_matches},
            {"redundant", r.redundant},
            {"k1InSpan", r.k1_in_span},
            {"extrasOk", r.extras_ok},
            {"pass", r.pass},
            {"elapsedMs", r.elapsed_ms},
            {"discrepancies", r.discrepancies},
            {"notes", r.notes}};
  j["produces"] = r.produces ? json(std::string(family_name(*r.produces))) : json(nullptr);
  return j;
}

json to_json(const MatchingCaseReport& r, double elapsed_ms) {
  return {{"check", "thm4.1"}, {"part", "case"},         {"case", r.case_id},
          {"windows", r.windows}, {"instances", r.instances}, {"pass", r.pass},
          {"elapsedMs", elapsed_ms}, {"discrepancies", r.discrepancies}};
}

json to_json(const PairingSweepReport& r, double elapsed_ms) {
  return {{"check", "thm4.1"},     {"part", "pairing-independence"}, {"mMax", r.m_max},
          {"elements", r.elements}, {"permutations", r.permutations},  {"maxNormSeen", r.max_norm_seen},
          {"pass", r.pass},         {"elapsedMs", elapsed_ms}};
}

json to_json(const GenerationReport& r, double elapsed_ms) {
  return {{"check", "thm4.1"},
          {"part", "generation"},
          {"m", r.m},
          {"allQuadRank", r.all_quad_rank},
          {"reducedQuadRank", r.reduced_quad_rank},
          {"w0RelationRank", r.w0_relation_rank},
          {"w0Dim", r.w0_dim},
          {"pass", r.reduced_spans_all && r.families_span_reduced},
          {"elapsedMs", elapsed_ms}};
}

json to_json(const WitnessReport& r) {
  json j = {{"m", r.m},
            {"mode", std::string(witness_mode_name(r.mode))},
            {"identityMatchingCoefficientFunctional", r.identity_functional},
            {"relationsChecked", r.relations_checked},
            {"pass", r.pass},
            {"elapsedMs", r.elapsed_ms}};
  if (r.mode == WitnessMode::kRowReduce)
    j["rowReduce"] = {{"sliceDim", r.slice_dim},          {"sliceQuotient", r.slice_quotient},
                      {"identityOutsideJ", r.identity_outside_j}, {"wDim", r.w_dim},
                      {"wCapJDim", r.w_cap_j_dim},        {"quadAndOrderRank", r.quad_and_order_rank},
                      {"quadAndOrderInJ", r.quad_and_order_in_j}};
  return j;
}

json to_json(const OperatorReport& r) {
  json j = {{"check", r.check}, {"p", r.p},       {"n", r.n},           {"m", r.m},
            {"dim", r.dim},     {"samples", r.samples}, {"seed", r.seed}, {"pass", r.pass},
            {"elapsedMs", r.elapsed_ms}, {"nontrivial", r.nontrivial}, {"failures", r.failures}};
  if (r.r > 0) j["r"] = r.r;
  return j;
}

json to_json(const LieElt& e) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"word", w.to_string()},
                     {"coeff", e.field().centered(c)},
                     {"degree", w.degree().to_string()},
                     {"shape", std::string(shape_name(classify(w)))}});
  return terms;
}

json to_json(const ModelValue& v) {
  switch (v.kind()) {
    case ModelValue::Kind::kIdeal: return {{"kind", "ideal"}, {"terms", to_json(v.element())}};
    case ModelValue::Kind::kGenerator:
      return {{"kind", "generator"}, {"index", v.index()}, {"coeff", v.coeff()}};
    case ModelValue::Kind::kCCommutator: return {{"kind", "c-commutator"}};
  }
  return {};
}

}  // namespace engel
