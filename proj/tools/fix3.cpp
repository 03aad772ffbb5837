// Command-line surface of the verification engine.
//
//   fix3 check <recipe> [--subgroup <recipe>] [--tier T]   one case
//   fix3 spectrum <recipe> [--subgroup <recipe>]           fixed points
//   fix3 table [--filter substr] [--json out] [--jobs N]   the full table
//   fix3 small --degree N                                  classify <= 6
//   fix3 parse <file> [--emit]                             group files
//
// Exit codes: 0 = all verdicts as expected, 1 = verdict mismatch,
// 2 = tool error. FIX3_MAX_ENUM overrides the element-enumeration bound.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fix3/groupfile.hpp"
#include "fix3/report.hpp"

using namespace fix3;

namespace {

Tier parse_tier(const std::string& s) {
  if (s == "exhaustive") return Tier::exhaustive;
  if (s == "tree") return Tier::tree;
  if (s == "structural") return Tier::structural;
  if (s == "conditional") return Tier::conditional;
  throw refusal_error("unknown tier: " + s);
}

int run_check(const std::string& recipe, const std::string& subgroup,
              const std::string& tier_str, bool expect_fail,
              const std::string& json_out) {
  ExampleCase ex = make_case(recipe, subgroup);
  Tier tier;
  if (!tier_str.empty()) {
    tier = parse_tier(tier_str);
  } else if (ex.group->order() / ex.subgroup.order() > kDefaultDegreeCap) {
    tier = ex.normalizer_witness ? Tier::conditional : Tier::structural;
  } else {
    GroupPtr probe = ex.group;
    tier = probe->order() <= enumeration_bound() ? Tier::exhaustive
                                                 : Tier::tree;
  }
  Report rep = run_example(ex, tier, !expect_fail, kDefaultDegreeCap);
  rep.id = recipe + (subgroup.empty() ? "" : "/" + subgroup);
  const auto j = report_json(rep);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

int run_spectrum(const std::string& recipe, const std::string& subgroup) {
  ExampleCase ex = make_case(recipe, subgroup);
  GroupPtr action = ex.group;
  if (!ex.natural) {
    CosetAction act = coset_action(ex.group, ex.subgroup);
    action = act.image;
  }
  const FixedPointSpectrum spec = spectrum_of(action);
  nlohmann::ordered_json j;
  j["case"] = recipe + (subgroup.empty() ? "" : "/" + subgroup);
  j["degree"] = action->degree();
  j["order"] = action->order();
  nlohmann::ordered_json s = nlohmann::ordered_json::object();
  for (const auto& [k, c] : spec) s[std::to_string(k)] = c;
  j["spectrum"] = s;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_table(const std::string& filter, const std::string& json_out,
              unsigned jobs, bool allow_conditional) {
  const auto reports = run_all(filter, jobs);
  bool all_ok = true;
  for (const Report& rep : reports) {
    const bool counts = allow_conditional || !rep.conditional;
    if (counts && !rep.ok) all_ok = false;
    std::cout << (rep.ok ? "  ok    " : (rep.error ? "  ERROR " : "  FAIL  "))
              << rep.id;
    if (rep.degree)
      std::cout << "  degree " << rep.degree << "  stab " << rep.stab_order;
    std::cout << "  [" << tier_name(rep.verdict.tier) << "]";
    if (rep.conditional) std::cout << " (conditional)";
    if (rep.error) std::cout << "  " << rep.error_text;
    std::cout << "  " << rep.millis << " ms\n";
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << reports_json(reports).dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_small(Point degree) {
  const auto classes = classify_small(degree);
  std::size_t satisfied = 0;
  for (const auto& c : classes) {
    if (!c.satisfied) continue;
    ++satisfied;
    std::cout << "  order " << c.order << "  generators";
    for (const Perm& g : c.generators) std::cout << "  " << g.cycle_string();
    std::cout << "\n";
  }
  std::cout << classes.size() << " transitive classes of degree "
            << unsigned(degree) << ", " << satisfied
            << " satisfy the hypothesis\n";
  return 0;
}

int run_parse(const std::string& path, bool emit) {
  std::ifstream in(path);
  if (!in) throw refusal_error("cannot open " + path);
  GroupPtr G = parse_group_stream(in);
  if (emit) {
    std::cout << emit_group(*G);
  } else {
    std::cout << "degree " << G->degree() << ", " << G->generators().size()
              << " generators, order " << G->order() << ", "
              << (G->is_transitive() ? "transitive" : "intransitive") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification engine for transitive actions with trivial "
               "four-point stabilizers"};
  app.require_subcommand(1);

  std::string recipe, subgroup, tier, json_out, filter, path;
  bool expect_fail = false, allow_conditional = false, emit = false;
  unsigned jobs = 0;
  Point degree = 0;

  auto* check = app.add_subcommand("check", "verify one case");
  check->add_option("recipe", recipe)->required();
  check->add_option("--subgroup", subgroup);
  check->add_option("--tier", tier);
  check->add_flag("--expect-fail", expect_fail);
  check->add_option("--json", json_out);

  auto* spectrum = app.add_subcommand("spectrum", "fixed-point spectrum");
  spectrum->add_option("recipe", recipe)->required();
  spectrum->add_option("--subgroup", subgroup);

  auto* table = app.add_subcommand("table", "run the built-in case table");
  table->add_option("--filter", filter);
  table->add_option("--json", json_out);
  table->add_option("--jobs", jobs);
  table->add_flag("--allow-conditional", allow_conditional);

  auto* small = app.add_subcommand("small", "classify degrees up to 6");
  small->add_option("--degree", degree)->required();

  auto* parse = app.add_subcommand("parse", "parse a group file");
  parse->add_option("file", path)->required();
  parse->add_flag("--emit", emit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(recipe, subgroup, tier, expect_fail, json_out);
    if (spectrum->parsed()) return run_spectrum(recipe, subgroup);
    if (table->parsed())
      return run_table(filter, json_out, jobs, allow_conditional);
    if (small->parsed()) return run_small(degree);
    if (parse->parsed()) return run_parse(path, emit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
