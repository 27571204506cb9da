#include "engel/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <optional>
#include <ostream>

#include "engel/derivations.hpp"
#include "engel/engel_ideal.hpp"
#include "engel/enveloping.hpp"
#include "engel/errors.hpp"
#include "engel/expr.hpp"
#include "engel/matching.hpp"
#include "engel/operators.hpp"
#include "engel/report_json.hpp"
#include "engel/shape.hpp"

namespace engel {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const std::vector<std::string> kChecks = {"prop3.1", "lemma3.2", "cases",  "thm4.1", "lemma5.1",
                                          "lemma5.2", "prop5.3", "engel", "prop2.2", "thm5.4"};

struct Options {
  std::uint32_t p = 5;
  std::string output = "text";
  std::string expr;
  std::string check;
  std::optional<int> n, m, r;
  int weight = 5;
  std::string case_name;
  std::string mode = "sign";
  std::string families = "all";
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> samples;
};

// Accumulates reports of one invocation and renders them at the end.
class Run {
 public:
  Run(const Options& o, std::string command, std::ostream& out)
      : opts_(o), command_(std::move(command)), out_(out), field_(o.p), alg_(field_), ideal_(alg_) {}

  const PrimeField& field() const { return field_; }
  const FreeMetabelian& alg() const { return alg_; }
  const EngelIdeal& ideal() const { return ideal_; }
  bool json_mode() const { return opts_.output == "json"; }

  void add(json report, const std::string& line, bool pass, const std::vector<std::string>& details = {}) {
    pass_ = pass_ && pass;
    reports_.push_back(std::move(report));
    if (json_mode()) return;
    out_ << (pass ? "PASS  " : "FAIL  ") << line << '\n';
    for (const auto& d : details) out_ << "      " << d << '\n';
  }

  void note(const std::string& line) {
    if (!json_mode()) out_ << line << '\n';
  }

  json& summary() { return summary_; }

  int finish(const std::string& check) {
    if (json_mode()) {
      json env = {{"tool", "engel-lab"}, {"command", command_}, {"p", field_.prime()},
                  {"pass", pass_},       {"reports", reports_}};
      if (!check.empty()) env["check"] = check;
      if (!summary_.is_null()) env["summary"] = summary_;
      out_ << env.dump(2) << '\n';
    } else {
      out_ << fmt::format("{}{}: {} ({} report{})\n", command_, check.empty() ? "" : " " + check,
                          pass_ ? "pass" : "FAIL", reports_.size(), reports_.size() == 1 ? "" : "s");
    }
    return pass_ ? kExitPass : kExitDiscrepancy;
  }

 private:
  const Options& opts_;
  std::string command_;
  std::ostream& out_;
  PrimeField field_;
  FreeMetabelian alg_;
  EngelIdeal ideal_;
  json reports_ = json::array();
  json summary_;
  bool pass_ = true;
};

void require_range(const char* flag, int v, int lo, int hi) {
  if (v < lo || v > hi) throw UsageError(fmt::format("{} must lie in {}..{}", flag, lo, hi));
}

std::string operator_line(const OperatorReport& r) {
  std::string s = fmt::format("{:<9} p={} n={} dim={} samples={} nontrivial={}", r.check, r.p, r.n, r.dim, r.samples,
                              r.nontrivial);
  if (r.m) s += fmt::format(" m={}", r.m);
  if (r.r) s += fmt::format(" r={}", r.r);
  if (r.seed) s += fmt::format(" seed={}", r.seed);
  return s + fmt::format("  {:.1f} ms", r.elapsed_ms);
}

void add_operator(Run& run, const OperatorReport& r) { run.add(to_json(r), operator_line(r), r.pass, r.failures); }

// ---- verify ----

void verify_prop31(Run& run, const Options& o) {
  int n = o.n.value_or(4);
  require_range("--n", n, 1, 8);
  require_range("--weight", o.weight, 1, 8);
  auto t0 = Clock::now();
  auto r = verify_free_generation(run.field(), o.weight, n);
  double ms = ms_since(t0);
  run.add(to_json(r, ms),
          fmt::format("prop3.1   weight<={} n={} tuples={} rank={} leading-terms={}  {:.1f} ms", r.max_weight, r.n_gens,
                      r.tuples, r.rank, r.leading_terms_ok ? "distinct" : "collide", ms),
          r.pass);
}

void verify_lemma32(Run& run, const Options& o) {
  int n = o.n.value_or(5);
  require_range("--n", n, 0, 9);
  // "listed" judges each slice by the span without the two-block boundary families.
  const bool listed_only = o.families == "listed";
  std::size_t mismatches = 0, boundary_only = 0;
  auto degrees = lattice_degrees(n);
  std::sort(degrees.begin(), degrees.end());
  for (const auto& d : degrees) {
    SliceComparison c = compare_slice(run.ideal(), d);
    if (!c.equal) ++mismatches;
    if (!c.equal_without_boundary) ++boundary_only;
    json report = to_json(c);
    if (listed_only) report["pass"] = c.equal_without_boundary;
    run.add(std::move(report),
            fmt::format("lemma3.2  {:<22} slice={} jRank={} quotient={} explicitRank={}  {:.1f} ms", d.to_string(),
                        c.dimension, c.closure_rank, c.dimension - c.closure_rank,
                        listed_only ? c.without_boundary_rank : c.explicit_rank, c.elapsed_ms),
            listed_only ? c.equal_without_boundary : c.equal);
  }
  run.summary() = {{"n", n},
                   {"families", o.families},
                   {"slices", degrees.size()},
                   {"mismatches", mismatches},
                   {"withoutBoundaryMismatches", boundary_only}};
  run.note(fmt::format("slices={} mismatches={} withoutBoundaryMismatches={} (explicit span without the two-block families)",
                       degrees.size(), mismatches, boundary_only));
}

void verify_cases(Run& run, const Options& o) {
  std::vector<CaseId> ids;
  if (o.case_name.empty()) {
    ids = all_cases();
  } else {
    auto id = case_from_name(o.case_name);
    if (!id) throw UsageError("unknown case '" + o.case_name + "' (expected A1..A12, B1..B6, C1..C3)");
    ids.push_back(*id);
  }
  for (CaseId id : ids) {
    DerivationReport r = derive_case(run.alg(), id);
    std::vector<std::string> details = r.discrepancies;
    for (const auto& n : r.notes) details.push_back("note: " + n);
    if (details.size() > 8) details.resize(8);
    run.add(to_json(r),
            fmt::format("case {:<4} produces={} bindings={} k1={} extras={} redundant={}  {:.1f} ms", case_name(id),
                        r.produces ? std::string(family_name(*r.produces)) : "-", r.bindings_checked,
                        r.k1_bindings_checked, r.extra_checks, r.redundant, r.elapsed_ms),
            r.pass, details);
  }
}

void verify_thm41(Run& run, const Options& o) {
  int m_max = o.m.value_or(5);
  require_range("--m", m_max, 1, 7);
  for (int c = 1; c <= 4; ++c) {
    auto t0 = Clock::now();
    MatchingCaseReport r = case_check(run.field(), c);
    double ms = ms_since(t0);
    run.add(to_json(r, ms), fmt::format("thm4.1    case {} instances={}  {:.1f} ms", c, r.instances, ms), r.pass,
            r.discrepancies);
  }
  if (m_max >= 4) {
    auto t0 = Clock::now();
    PairingSweepReport r = sweep_pairing_independence(run.field(), m_max);
    double ms = ms_since(t0);
    run.add(to_json(r, ms),
            fmt::format("thm4.1    pairing independence m<={} elements={} permutations={} max-norm={}  {:.1f} ms",
                        m_max, r.elements, r.permutations, r.max_norm_seen, ms),
            r.pass);
  }
  for (int m = 3; m <= std::min(m_max, 5); ++m) {
    auto t0 = Clock::now();
    GenerationReport r = generation_check(run.field(), m);
    double ms = ms_since(t0);
    bool pass = r.reduced_spans_all && r.families_span_reduced;
    run.add(to_json(r, ms),
            fmt::format("thm4.1    generation m={} quad-rank={} reduced-rank={} family-rank={} w0-dim={}  {:.1f} ms", m,
                        r.all_quad_rank, r.reduced_quad_rank, r.w0_relation_rank, r.w0_dim, ms),
            pass);
  }
  for (int m = 1; m <= m_max; ++m) {
    WitnessReport sign = witness_nonzero(run.ideal(), m, WitnessMode::kSign);
    run.add(to_json(sign),
            fmt::format("thm4.1    witness m={} sign relations={} functional={}  {:.1f} ms", m, sign.relations_checked,
                        sign.identity_functional, sign.elapsed_ms),
            sign.pass);
    if (m > 3) continue;
    WitnessReport row = witness_nonzero(run.ideal(), m, WitnessMode::kRowReduce);
    bool agree = row.pass == sign.pass;
    run.add(to_json(row),
            fmt::format("thm4.1    witness m={} rowreduce slice={} quotient={} W={} WnJ={} relation-rank={}  {:.1f} ms",
                        m, row.slice_dim, row.slice_quotient, row.w_dim, row.w_cap_j_dim, row.quad_and_order_rank,
                        row.elapsed_ms),
            row.pass && agree, agree ? std::vector<std::string>{} : std::vector<std::string>{"modes disagree"});
  }
}

void verify_operators(Run& run, const Options& o) {
  const std::string& check = o.check;
  int n;
  if (check == "thm5.4") {
    n = o.n.value_or(o.m ? 2 * *o.m + 1 : 5);
  } else if (check == "prop2.2") {
    n = o.n.value_or(std::max(4, o.r.value_or(4)));
  } else {
    n = o.n.value_or(5);
  }
  require_range("--n", n, 1, 9);
  Truncation t(run.ideal(), n);
  OperatorGroup g(t);
  run.note(fmt::format("truncation n={} p={} dim={}", n, run.field().prime(), t.dim()));
  const std::size_t samples = o.samples.value_or(check == "engel" ? 200 : 100);

  auto product_checks = [&] {
    if (o.r) {
      require_range("--r", *o.r, 1, n);
      add_operator(run, check_product_engel(g, *o.r));
    } else {
      for (int r = 1; r <= std::min(4, n); ++r) add_operator(run, check_product_engel(g, r));
    }
  };

  if (check == "lemma5.1") {
    add_operator(run, check_ad_z_square(g, samples, o.seed));
  } else if (check == "lemma5.2") {
    add_operator(run, check_commutator_image(g, samples, o.seed));
  } else if (check == "prop5.3") {
    add_operator(run, check_group_relations(g, samples, o.seed));
    add_operator(run, check_generator_orders(g));
  } else if (check == "engel") {
    add_operator(run, check_engel(g, samples, o.seed));
    product_checks();
  } else if (check == "prop2.2") {
    product_checks();
  } else if (check == "thm5.4") {
    if (o.m) {
      add_operator(run, check_nonnilpotency_witness(g, run.ideal(), *o.m));
    } else {
      for (int m = 1; 2 * m + 1 <= n; ++m) add_operator(run, check_nonnilpotency_witness(g, run.ideal(), m));
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  Run run(o, "verify", out);
  if (o.check == "prop3.1") verify_prop31(run, o);
  else if (o.check == "lemma3.2") verify_lemma32(run, o);
  else if (o.check == "cases") verify_cases(run, o);
  else if (o.check == "thm4.1") verify_thm41(run, o);
  else verify_operators(run, o);
  return run.finish(o.check);
}

// ---- expression commands ----

int cmd_expression(const Options& o, const std::string& command, std::ostream& out) {
  Run run(o, command, out);
  Expr e = parse_expr(o.expr);
  ModelValue v = evaluate(run.alg(), e);
  json doc = {{"tool", "engel-lab"}, {"command", command}, {"p", o.p}, {"expr", to_string(e)}, {"value", to_json(v)}};
  std::string text;
  if (v.kind() == ModelValue::Kind::kGenerator) {
    text = v.coeff() == 0 ? "0" : fmt::format("{}*c{}", run.field().centered(v.coeff()), v.index());
  } else if (v.kind() == ModelValue::Kind::kCCommutator) {
    text = "nonzero bracket of generators outside Id(z)";
  } else {
    text = v.element().is_zero() ? "0" : v.element().dump();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  }

  if (command == "j-member") {
    bool member = v.kind() == ModelValue::Kind::kIdeal ? run.ideal().member(v.element())
                                                       : v.kind() == ModelValue::Kind::kGenerator && v.coeff() == 0;
    doc["member"] = member;
    text = member ? "true" : "false";
  } else if (command == "classify") {
    std::vector<std::string> lines;
    if (v.kind() == ModelValue::Kind::kIdeal) {
      for (const auto& [w, c] : v.element().terms())
        lines.push_back(fmt::format("{:<12} {:>4}  {}", shape_name(classify(w)), run.field().centered(c), w.to_string()));
    }
    text.clear();
    for (const auto& l : lines) text += (text.empty() ? "" : "\n") + l;
    if (lines.empty()) text = "no Id(z) terms";
  }
  if (run.json_mode()) {
    out << doc.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return kExitPass;
}

int cmd_dims(const Options& o, std::ostream& out) {
  int n = o.n.value_or(5);
  require_range("--n", n, 0, 9);
  Run run(o, "dims", out);
  auto degrees = lattice_degrees(n);
  std::sort(degrees.begin(), degrees.end());
  std::size_t total = 0;
  json rows = json::array();
  if (!run.json_mode()) out << fmt::format("{:<24} {:>6} {:>6} {:>9}\n", "degree", "slice", "jRank", "quotient");
  for (const auto& d : degrees) {
    auto comp = run.ideal().explicit_component(d);
    total += comp->quotient_dim();
    rows.push_back({{"degree", d.to_string()},
                    {"type", d.type()},
                    {"dims", {{"slice", comp->dimension()}, {"jRank", comp->j_rank()}, {"quotient", comp->quotient_dim()}}}});
    if (!run.json_mode())
      out << fmt::format("{:<24} {:>6} {:>6} {:>9}\n", d.to_string(), comp->dimension(), comp->j_rank(),
                         comp->quotient_dim());
  }
  if (run.json_mode()) {
    json doc = {{"tool", "engel-lab"}, {"command", "dims"}, {"p", o.p}, {"n", n}, {"slices", rows}, {"totalQuotient", total}};
    out << doc.dump(2) << '\n';
  } else {
    out << fmt::format("total quotient dimension {} over {} slices\n", total, degrees.size());
  }
  return kExitPass;
}

int cmd_witness(const Options& o, std::ostream& out) {
  if (!o.m) throw UsageError("witness requires --m");
  require_range("--m", *o.m, 1, o.mode == "sign" ? 7 : 4);
  Run run(o, "witness", out);
  WitnessMode mode = o.mode == "sign" ? WitnessMode::kSign : WitnessMode::kRowReduce;
  WitnessReport r = witness_nonzero(run.ideal(), *o.m, mode);
  std::string line = fmt::format("witness   m={} mode={} functional={} relations={}", r.m, witness_mode_name(r.mode),
                                 r.identity_functional, r.relations_checked);
  if (mode == WitnessMode::kRowReduce)
    line += fmt::format(" slice={} quotient={} W={} WnJ={} relation-rank={}", r.slice_dim, r.slice_quotient, r.w_dim,
                        r.w_cap_j_dim, r.quad_and_order_rank);
  run.add(to_json(r), line + fmt::format("  {:.1f} ms", r.elapsed_ms), r.pass);
  return run.finish("");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for a metabelian Lie algebra model and its operator group", "engel-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", o.p, "odd prime modulus")->capture_default_str();
  app.add_option("--output", o.output, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* nf = app.add_subcommand("normal-form", "normal form of a bracket expression");
  nf->add_option("expr", o.expr, "expression such as [z,c1,c2]")->required();
  auto* cl = app.add_subcommand("classify", "survivor shape of each normal-form term");
  cl->add_option("expr", o.expr)->required();
  auto* jm = app.add_subcommand("j-member", "membership of an expression in J");
  jm->add_option("expr", o.expr)->required();
  auto* dims = app.add_subcommand("dims", "slice dimensions of J and the quotient");
  dims->add_option("--n", o.n, "number of c generators");

  auto* verify = app.add_subcommand("verify", "run one verification check");
  verify->add_option("--check", o.check)->required()->check(CLI::IsMember(kChecks));
  verify->add_option("--n", o.n, "number of c generators");
  verify->add_option("--m", o.m, "block count, or its upper bound for thm4.1");
  verify->add_option("--r", o.r, "product length for prop2.2");
  verify->add_option("--weight", o.weight, "maximum weight for prop3.1")->capture_default_str();
  verify->add_option("--case", o.case_name, "single derivation case, A1..C3");
  verify->add_option("--families", o.families, "relator families for lemma3.2")
      ->check(CLI::IsMember({"all", "listed"}))
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "sampled commutators or group elements");

  auto* wit = app.add_subcommand("witness", "certificate that the identity matching element survives");
  wit->add_option("--m", o.m)->required();
  wit->add_option("--mode", o.mode)->check(CLI::IsMember({"sign", "rowreduce"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    PrimeField check_prime(o.p);
    (void)check_prime;
    if (*nf) return cmd_expression(o, "normal-form", out);
    if (*cl) return cmd_expression(o, "classify", out);
    if (*jm) return cmd_expression(o, "j-member", out);
    if (*dims) return cmd_dims(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*wit) return cmd_witness(o, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace engel
