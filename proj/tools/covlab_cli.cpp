#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "covlab/harness.hpp"
#include "covlab/io.hpp"

using namespace covlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Topology load_space(const std::string& path) {
  InstanceDocument d = parse_instance(slurp(path));
  if (!d.topology) throw ValidationError("expected a topology document: " + path);
  return *d.topology;
}

SetFamily load_family(const std::string& path) {
  InstanceDocument d = parse_instance(slurp(path));
  if (!d.family) throw ValidationError("expected a family document: " + path);
  return *d.family;
}

FamilyCollection load_collection(const std::string& path) {
  InstanceDocument d = parse_instance(slurp(path));
  if (!d.collection) throw ValidationError("expected a collection document: " + path);
  return *d.collection;
}

// --- shared command cores (also used by recheck) ----------------------------

Verdict run_check(const std::string& name, const json& inst, Budget& budget) {
  const Topology X = topology_from_json(inst.at("space"));
  if (name == "compact")
    return check_BA_compact(X, inst.at("A_size").get<int>(),
                            family_from_json(inst.at("B")), budget);
  if (name == "compact-closed")
    return check_BA_compact_closed(X, inst.at("A_size").get<int>(),
                                   family_from_json(inst.at("B")), budget);
  if (name == "f-compact")
    return check_F_BA_compact(X, inst.at("A_size").get<int>(),
                              family_from_json(inst.at("B")),
                              family_from_json(inst.at("F")), budget);
  if (name == "bg-compact") {
    int A = inst.at("A_size").get<int>();
    SetFamily B = family_from_json(inst.at("B"));
    SetFamily G = family_from_json(inst.at("G"));
    if (inst.contains("F"))
      return check_F_BG_compact(X, A, B, G, family_from_json(inst.at("F")), budget);
    return check_BG_compact(X, A, B, G, budget);
  }
  if (name == "d-compact") return check_D_compact(X, family_from_json(inst.at("D")), budget);
  if (name == "weak-m")
    return check_weak_M_compact(X, collection_from_json(inst.at("M")), budget);
  if (name == "quasi-m")
    return check_quasi_M_compact(X, collection_from_json(inst.at("M")), budget);
  if (name == "accum")
    return check_E_accumulation_property(X, inst.at("I_size").get<int>(),
                                         family_from_json(inst.at("E")), budget);
  if (name == "f-accum")
    return check_F_E_accumulation(X, inst.at("I_size").get<int>(),
                                  family_from_json(inst.at("E")),
                                  family_from_json(inst.at("F")), budget);
  if (name == "cale-accum") {
    std::optional<SetFamily> F;
    if (inst.contains("F")) F = family_from_json(inst.at("F"));
    return check_calE_accumulation(X, inst.at("I_size").get<int>(),
                                   collection_from_json(inst.at("calE")), F, budget);
  }
  if (name == "irreducible")
    return has_irreducible_cover(X, inst.at("k").get<int>(), budget);
  throw ParseError("unknown check: " + name);
}

ConditionReport run_verify(const std::string& name, const json& inst, Budget& budget) {
  const Topology X = topology_from_json(inst.at("space"));
  if (name == "theorem-e")
    return verify_theorem_e(X, inst.at("A_size").get<int>(),
                            family_from_json(inst.at("B")), budget);
  if (name == "theorem-r")
    return verify_theorem_r(X, inst.at("I_size").get<int>(),
                            family_from_json(inst.at("A")), budget);
  if (name == "theorem-eo")
    return verify_theorem_eO(X, inst.at("A_size").get<int>(),
                             family_from_json(inst.at("B")),
                             family_from_json(inst.at("F")), budget);
  if (name == "theorem-ro")
    return verify_theorem_rO(X, inst.at("I_size").get<int>(),
                             family_from_json(inst.at("A")),
                             family_from_json(inst.at("F")), budget);
  if (name == "theorem-eg")
    return verify_theorem_eG(X, inst.at("A_size").get<int>(),
                             family_from_json(inst.at("B")),
                             family_from_json(inst.at("G")), budget);
  if (name == "theorem-eog")
    return verify_theorem_eOG(X, inst.at("A_size").get<int>(),
                              family_from_json(inst.at("B")),
                              family_from_json(inst.at("G")),
                              family_from_json(inst.at("F")), budget);
  if (name == "theorem-ree")
    return verify_theorem_rEE(X, inst.at("I_size").get<int>(),
                              collection_from_json(inst.at("Gcal")), budget);
  if (name == "theorem-reef")
    return verify_theorem_rEEf(X, inst.at("I_size").get<int>(),
                               collection_from_json(inst.at("Gcal")),
                               family_from_json(inst.at("F")), budget);
  if (name == "prop-ae")
    return verify_prop_ae(X, inst.at("I_size").get<int>(), family_from_json(inst.at("A")),
                          point_sequence_from_json(inst.at("seq")),
                          inst.at("x").get<int>());
  if (name == "prop-aeo")
    return verify_prop_aeO(X, inst.at("I_size").get<int>(), family_from_json(inst.at("A")),
                           subset_sequence_from_json(inst.at("setseq")),
                           inst.at("x").get<int>());
  if (name == "facts")
    return verify_facts(X, inst.at("A_size").get<int>(), family_from_json(inst.at("B")),
                        budget);
  throw ParseError("unknown verifier: " + name);
}

json verdict_report(const std::string& command, const json& inst, const Verdict& v,
                    const Budget& budget) {
  json rep;
  rep["command"] = command;
  rep["instance"] = inst;
  rep["holds"] = v.holds;
  rep["budget_used"] = budget.used();
  if (v.cover_witness)
    rep["witness"] = subset_sequence_to_json(*v.cover_witness);
  else if (v.point_witness)
    rep["witness"] = point_sequence_to_json(*v.point_witness);
  else if (v.setseq_witness)
    rep["witness"] = subset_sequence_to_json(*v.setseq_witness);
  if (v.assignment) rep["assignment"] = *v.assignment;
  return rep;
}

json condition_report_json(const std::string& command, const json& inst,
                           const ConditionReport& r, const Budget& budget) {
  json rep;
  rep["command"] = command;
  rep["instance"] = inst;
  rep["holds"] = r.agree;
  rep["budget_used"] = budget.used();
  json conds = json::array();
  for (const auto& [label, holds] : r.condition_values)
    conds.push_back(json{{"holds", holds}, {"label", label}});
  rep["conditions"] = conds;
  rep["theorem"] = r.theorem_id;
  return rep;
}

// --- witness re-validation ----------------------------------------------------

bool no_collection_accumulation(const Topology& X, const PointSequence& seq,
                                const FamilyCollection& calE) {
  for (int x = 0; x < X.points; ++x)
    for (const SetFamily& E : calE.families)
      if (is_E_accumulation_point(X, seq, x, E)) return false;
  return true;
}

bool no_limit_point(const Topology& X, const SubsetSequence& seq, const SetFamily& E) {
  for (int x = 0; x < X.points; ++x)
    if (is_E_limit_point(X, seq, x, E)) return false;
  return true;
}

bool no_collection_limit(const Topology& X, const SubsetSequence& seq,
                         const FamilyCollection& calE) {
  for (int x = 0; x < X.points; ++x)
    for (const SetFamily& E : calE.families)
      if (is_E_limit_point(X, seq, x, E)) return false;
  return true;
}

bool members_of(const SubsetSequence& seq, const SetFamily& F) {
  for (mask_t m : seq.values)
    if (!F.contains(m)) return false;
  return true;
}

// Confirms that the stored witness really demonstrates the failing outcome.
bool validate_witness(const std::string& name, const json& inst, const json& witness) {
  const Topology X = topology_from_json(inst.at("space"));
  if (name == "compact" || name == "compact-closed")
    return is_violating_cover(X, family_from_json(inst.at("B")),
                              subset_sequence_from_json(witness));
  if (name == "f-compact")
    return is_violating_F_cover(X, family_from_json(inst.at("B")),
                                family_from_json(inst.at("F")),
                                subset_sequence_from_json(witness));
  if (name == "bg-compact") {
    SetFamily B = family_from_json(inst.at("B"));
    SetFamily G = family_from_json(inst.at("G"));
    SubsetSequence w = subset_sequence_from_json(witness);
    if (inst.contains("F"))
      return is_violating_FG_cover(X, B, G, family_from_json(inst.at("F")), w);
    return is_violating_G_cover(X, B, G, w);
  }
  if (name == "accum")
    return has_no_E_accumulation_point(X, point_sequence_from_json(witness),
                                       family_from_json(inst.at("E")));
  if (name == "d-compact")
    return has_no_E_accumulation_point(X, point_sequence_from_json(witness),
                                       family_from_json(inst.at("D")));
  if (name == "weak-m")
    return has_no_E_accumulation_point(X, point_sequence_from_json(witness),
                                       union_of(collection_from_json(inst.at("M"))));
  if (name == "quasi-m")
    return no_collection_accumulation(X, point_sequence_from_json(witness),
                                      collection_from_json(inst.at("M")));
  if (name == "f-accum") {
    SubsetSequence w = subset_sequence_from_json(witness);
    return members_of(w, family_from_json(inst.at("F"))) &&
           no_limit_point(X, w, family_from_json(inst.at("E")));
  }
  if (name == "cale-accum") {
    FamilyCollection calE = collection_from_json(inst.at("calE"));
    if (inst.contains("F")) {
      SubsetSequence w = subset_sequence_from_json(witness);
      return members_of(w, family_from_json(inst.at("F"))) &&
             no_collection_limit(X, w, calE);
    }
    return no_collection_accumulation(X, point_sequence_from_json(witness), calE);
  }
  throw ParseError("no witness validation for: " + name);
}

struct Args {
  std::string space, B, F, G, E, M, calE, D, A_fam, Gcal, partition, seqfile, report,
      family, claim;
  std::string mode = "one-of";
  int A_size = 0, I_size = 0, k = 2, x = 0, points = 3, at_most = 1;
  std::uint64_t seed = 0, count = 100;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite covering-property laboratory"};
  app.require_subcommand(1);

  std::uint64_t budget_limit = Budget::kDefaultLimit;
  bool pretty = false;
  bool json_out = true;
  app.add_option("--budget", budget_limit, "enumeration cap (elementary checks)");
  app.add_flag("--pretty", pretty, "indented JSON output");
  app.add_flag("--json", json_out, "compact JSON output (default)");

  Args a;
  int exit_code = 0;
  std::string g_command = "covlab";
  auto emit = [&](const json& j) { std::cout << render_json(j, pretty); };

  auto* check = app.add_subcommand("check", "decide a covering/accumulation property");
  check->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "evaluate a theorem's conditions");
  verify->require_subcommand(1);
  auto* build = app.add_subcommand("build", "construct canonical spaces and families");
  build->require_subcommand(1);
  auto* closure = app.add_subcommand("closure", "upward/downward closure of a family");
  closure->require_subcommand(1);

  auto run_check_cmd = [&](const std::string& name, const json& inst) {
    g_command = "check " + name;
    Budget budget(budget_limit);
    Verdict v = run_check(name, inst, budget);
    emit(verdict_report(g_command, inst, v, budget));
    exit_code = v.holds ? 0 : 1;
  };
  auto run_verify_cmd = [&](const std::string& name, const json& inst) {
    g_command = "verify " + name;
    Budget budget(budget_limit);
    ConditionReport r = run_verify(name, inst, budget);
    emit(condition_report_json(g_command, inst, r, budget));
    exit_code = r.agree ? 0 : 1;
  };
  auto emit_result = [&](const std::string& command, const json& inst, const json& result,
                         const Budget& budget, const json& witness = json()) {
    json rep;
    rep["command"] = command;
    rep["instance"] = inst;
    rep["holds"] = true;
    rep["budget_used"] = budget.used();
    rep["result"] = result;
    if (!witness.is_null()) rep["witness"] = witness;
    emit(rep);
    exit_code = 0;
  };

  // --- check ----------------------------------------------------------------
  struct CheckSpec {
    const char* name;
    const char* needs;  // letters: s=space, a=A, i=I, B, F(optional f), G, E, M, C=calE, D, k
  };
  auto add_common = [&](CLI::App* cmd, const std::string& needs) {
    if (needs.find('s') != std::string::npos)
      cmd->add_option("--space", a.space)->required();
    if (needs.find('a') != std::string::npos) cmd->add_option("--A", a.A_size)->required();
    if (needs.find('i') != std::string::npos) cmd->add_option("--I", a.I_size)->required();
    if (needs.find('B') != std::string::npos) cmd->add_option("--B", a.B)->required();
    if (needs.find('F') != std::string::npos) cmd->add_option("--F", a.F)->required();
    if (needs.find('f') != std::string::npos) cmd->add_option("--F", a.F);
    if (needs.find('G') != std::string::npos) cmd->add_option("--G", a.G)->required();
    if (needs.find('E') != std::string::npos) cmd->add_option("--E", a.E)->required();
    if (needs.find('M') != std::string::npos) cmd->add_option("--M", a.M)->required();
    if (needs.find('C') != std::string::npos) cmd->add_option("--calE", a.calE)->required();
    if (needs.find('D') != std::string::npos) cmd->add_option("--D", a.D)->required();
    if (needs.find('k') != std::string::npos) cmd->add_option("--k", a.k)->required();
  };
  auto check_instance = [&](const std::string& needs) {
    json inst;
    if (needs.find('s') != std::string::npos)
      inst["space"] = topology_to_json(load_space(a.space));
    if (needs.find('a') != std::string::npos) inst["A_size"] = a.A_size;
    if (needs.find('i') != std::string::npos) inst["I_size"] = a.I_size;
    if (needs.find('B') != std::string::npos) inst["B"] = family_to_json(load_family(a.B));
    if (needs.find('F') != std::string::npos) inst["F"] = family_to_json(load_family(a.F));
    if (needs.find('f') != std::string::npos && !a.F.empty())
      inst["F"] = family_to_json(load_family(a.F));
    if (needs.find('G') != std::string::npos) inst["G"] = family_to_json(load_family(a.G));
    if (needs.find('E') != std::string::npos) inst["E"] = family_to_json(load_family(a.E));
    if (needs.find('M') != std::string::npos)
      inst["M"] = collection_to_json(load_collection(a.M));
    if (needs.find('C') != std::string::npos)
      inst["calE"] = collection_to_json(load_collection(a.calE));
    if (needs.find('D') != std::string::npos) inst["D"] = family_to_json(load_family(a.D));
    if (needs.find('k') != std::string::npos) inst["k"] = a.k;
    return inst;
  };
  const std::vector<CheckSpec> checks = {
      {"compact", "saB"},     {"compact-closed", "saB"}, {"f-compact", "saBF"},
      {"bg-compact", "saBGf"}, {"d-compact", "sD"},       {"weak-m", "sM"},
      {"quasi-m", "sM"},       {"accum", "siE"},          {"f-accum", "siEF"},
      {"cale-accum", "siCf"},  {"irreducible", "sk"},
  };
  for (const auto& spec : checks) {
    auto* cmd = check->add_subcommand(spec.name);
    std::string needs = spec.needs;
    add_common(cmd, needs);
    std::string name = spec.name;
    cmd->callback([&, name, needs] {
      g_command = "check " + name;
      run_check_cmd(name, check_instance(needs));
    });
  }

  // --- verify ---------------------------------------------------------------
  struct VerifySpec {
    const char* name;
    const char* needs;  // additional letters: A=family A, L=Gcal, q=seq, Q=setseq, x
  };
  auto add_verify_opts = [&](CLI::App* cmd, const std::string& needs) {
    add_common(cmd, needs);
    if (needs.find('A') != std::string::npos) cmd->add_option("--A", a.A_fam)->required();
    if (needs.find('L') != std::string::npos)
      cmd->add_option("--Gcal", a.Gcal)->required();
    if (needs.find('q') != std::string::npos) cmd->add_option("--seq", a.seqfile)->required();
    if (needs.find('Q') != std::string::npos)
      cmd->add_option("--setseq", a.seqfile)->required();
    if (needs.find('x') != std::string::npos) cmd->add_option("--x", a.x)->required();
  };
  auto verify_instance = [&](const std::string& needs) {
    json inst = check_instance(needs);
    if (needs.find('A') != std::string::npos)
      inst["A"] = family_to_json(load_family(a.A_fam));
    if (needs.find('L') != std::string::npos)
      inst["Gcal"] = collection_to_json(load_collection(a.Gcal));
    if (needs.find('q') != std::string::npos)
      inst["seq"] =
          point_sequence_to_json(point_sequence_from_json(json::parse(slurp(a.seqfile))));
    if (needs.find('Q') != std::string::npos)
      inst["setseq"] = subset_sequence_to_json(
          subset_sequence_from_json(json::parse(slurp(a.seqfile))));
    if (needs.find('x') != std::string::npos) inst["x"] = a.x;
    return inst;
  };
  const std::vector<VerifySpec> verifies = {
      {"theorem-e", "saB"},   {"theorem-r", "siA"},     {"theorem-eo", "saBF"},
      {"theorem-ro", "siAF"}, {"theorem-eg", "saBG"},   {"theorem-eog", "saBGF"},
      {"theorem-ree", "siL"}, {"theorem-reef", "siLF"}, {"prop-ae", "siAqx"},
      {"prop-aeo", "siAQx"},  {"facts", "saB"},
  };
  for (const auto& spec : verifies) {
    auto* cmd = verify->add_subcommand(spec.name);
    std::string needs = spec.needs;
    add_verify_opts(cmd, needs);
    std::string name = spec.name;
    cmd->callback([&, name, needs] {
      g_command = "verify " + name;
      run_verify_cmd(name, verify_instance(needs));
    });
  }

  // --- dual / closure ---------------------------------------------------------
  auto* dual = app.add_subcommand("dual", "transversal dual of a family");
  dual->add_option("--family", a.family)->required();
  dual->callback([&] {
    g_command = "dual";
    Budget budget(budget_limit);
    SetFamily f = load_family(a.family);
    budget.charge(checked_pow(2, f.ground));
    emit_result(g_command, json{{"family", family_to_json(f)}},
                family_to_json(transversal_dual(f)), budget);
  });
  for (const char* dir : {"up", "down"}) {
    auto* cmd = closure->add_subcommand(dir);
    cmd->add_option("--family", a.family)->required();
    std::string d = dir;
    cmd->callback([&, d] {
      g_command = "closure " + d;
      Budget budget(budget_limit);
      SetFamily f = load_family(a.family);
      budget.charge(checked_pow(2, f.ground));
      SetFamily out = d == "up" ? upward_closure(f) : downward_closure(f);
      emit_result(g_command, json{{"family", family_to_json(f)}}, family_to_json(out),
                  budget);
    });
  }

  // --- build -------------------------------------------------------------------
  for (const char* which : {"example-a", "example-b"}) {
    auto* cmd = build->add_subcommand(which);
    cmd->add_option("--A", a.A_size)->required();
    cmd->add_option("--B", a.B)->required();
    std::string w = which;
    cmd->callback([&, w] {
      g_command = "build " + w;
      Budget budget(budget_limit);
      SetFamily B = load_family(a.B);
      Topology X = w == "example-a" ? example_space_a(a.A_size, B)
                                    : example_space_b(a.A_size, B);
      emit_result(g_command, json{{"A_size", a.A_size}, {"B", family_to_json(B)}},
                  topology_to_json(X), budget,
                  subset_sequence_to_json(example_space_witness(a.A_size, B)));
    });
  }
  {
    auto* cmd = build->add_subcommand("sections");
    cmd->add_option("--I", a.I_size)->required();
    cmd->add_option("--A", a.A_fam)->required();
    cmd->callback([&] {
      g_command = "build sections";
      Budget budget(budget_limit);
      SetFamily A = load_family(a.A_fam);
      emit_result(g_command, json{{"A", family_to_json(A)}, {"I_size", a.I_size}},
                  family_to_json(sections_family(a.I_size, A)), budget);
    });
  }
  {
    auto* cmd = build->add_subcommand("cover-dual");
    cmd->add_option("--A", a.A_size)->required();
    cmd->add_option("--B", a.B)->required();
    cmd->callback([&] {
      g_command = "build cover-dual";
      Budget budget(budget_limit);
      SetFamily B = load_family(a.B);
      emit_result(g_command, json{{"A_size", a.A_size}, {"B", family_to_json(B)}},
                  family_to_json(cover_dual_family(a.A_size, B, budget)), budget);
    });
  }
  {
    auto* cmd = build->add_subcommand("selectors");
    cmd->add_option("--A", a.A_size)->required();
    cmd->add_option("--partition", a.partition)->required();
    cmd->add_option("--mode", a.mode)->check(CLI::IsMember({"one-of", "at-most-k"}));
    cmd->add_option("--k", a.at_most);
    cmd->callback([&] {
      g_command = "build selectors";
      Budget budget(budget_limit);
      SetFamily part = load_family(a.partition);
      budget.charge(checked_pow(2, a.A_size));
      SelectorMode mode =
          a.mode == "one-of" ? SelectorMode::OneOf : SelectorMode::AtMostK;
      emit_result(g_command,
                  json{{"A_size", a.A_size},
                       {"k", a.at_most},
                       {"mode", a.mode},
                       {"partition", family_to_json(part)}},
                  family_to_json(selector_families(a.A_size, part, mode, a.at_most)),
                  budget);
    });
  }
  for (const char* which : {"segments", "complements"}) {
    auto* cmd = build->add_subcommand(which);
    cmd->add_option("--A", a.A_size)->required();
    std::string w = which;
    cmd->callback([&, w] {
      g_command = "build " + w;
      Budget budget(budget_limit);
      SetFamily out = w == "segments" ? initial_segments(a.A_size)
                                      : complements_family(a.A_size);
      emit_result(g_command, json{{"A_size", a.A_size}}, family_to_json(out), budget);
    });
  }

  // --- fuzz / find-counterexample / recheck -------------------------------------
  {
    auto* cmd = app.add_subcommand("fuzz", "seeded random theorem sweep");
    cmd->add_option("--seed", a.seed);
    cmd->add_option("--count", a.count);
    cmd->add_option("--points", a.points);
    cmd->callback([&] {
      g_command = "fuzz";
      Budget budget(budget_limit);
      FuzzResult r = fuzz_theorems(a.seed, a.count, a.points, budget);
      json rep;
      rep["command"] = g_command;
      rep["instance"] =
          json{{"count", a.count}, {"points", a.points}, {"seed", a.seed}};
      rep["holds"] = r.all_agree;
      rep["checked"] = r.checked;
      rep["budget_used"] = budget.used();
      if (!r.all_agree) {
        rep["witness"] = json{{"A_size", r.A_size},
                              {"B", family_to_json(r.B)},
                              {"F", family_to_json(r.F)},
                              {"G", family_to_json(r.G)},
                              {"Gcal", collection_to_json(r.Gcal)},
                              {"seed", r.bad_seed},
                              {"space", topology_to_json(r.X)},
                              {"theorem", r.theorem_id}};
      }
      emit(rep);
      exit_code = r.all_agree ? 0 : 1;
    });
  }
  {
    auto* cmd = app.add_subcommand("find-counterexample",
                                   "search seeded instances refuting a claim");
    cmd->add_option("--claim", a.claim)->required();
    cmd->add_option("--count", a.count);
    cmd->add_option("--points", a.points);
    cmd->callback([&] {
      g_command = "find-counterexample";
      Budget budget(budget_limit);
      auto found = find_counterexample(a.claim, a.count, a.points, budget);
      json rep;
      rep["command"] = g_command;
      rep["instance"] =
          json{{"claim", a.claim}, {"count", a.count}, {"points", a.points}};
      rep["holds"] = !found.has_value();
      rep["budget_used"] = budget.used();
      if (found) {
        json w;
        w["claim"] = found->claim;
        w["seed"] = found->seed;
        w["space"] = topology_to_json(found->X);
        w["A_size"] = found->A_size;
        if (found->claim == "weak-implies-quasi" || found->claim == "quasi-implies-weak")
          w["M"] = collection_to_json(found->M);
        else if (found->claim == "bg-implies-ba") {
          w["B"] = family_to_json(found->B);
          w["G"] = family_to_json(found->B2);
        } else {
          w["B"] = family_to_json(found->B);
          w["B2"] = family_to_json(found->B2);
        }
        rep["witness"] = w;
      }
      emit(rep);
      exit_code = found ? 1 : 0;
    });
  }
  {
    auto* cmd = app.add_subcommand("recheck", "re-validate a report's witness");
    cmd->add_option("--report", a.report)->required();
    cmd->callback([&] {
      g_command = "recheck";
      json rep = json::parse(slurp(a.report));
      std::string orig = rep.at("command").get<std::string>();
      const json& inst = rep.at("instance");
      bool holds = rep.at("holds").get<bool>();
      bool ok;
      Budget budget(budget_limit);
      if (orig.rfind("check ", 0) == 0) {
        std::string name = orig.substr(6);
        if (!holds && rep.contains("witness"))
          ok = (name == "irreducible")
                   ? !run_check(name, inst, budget).holds
                   : validate_witness(name, inst, rep.at("witness"));
        else if (holds && name == "irreducible" && rep.contains("witness"))
          ok = is_violating_cover(topology_from_json(inst.at("space")),
                                  irreducible_test_family(inst.at("k").get<int>()),
                                  subset_sequence_from_json(rep.at("witness")));
        else
          ok = run_check(name, inst, budget).holds == holds;
      } else if (orig.rfind("verify ", 0) == 0) {
        ConditionReport r = run_verify(orig.substr(7), inst, budget);
        ok = r.agree == holds;
      } else if (orig.rfind("build example", 0) == 0) {
        SetFamily B = family_from_json(inst.at("B"));
        Topology X = topology_from_json(rep.at("result"));
        ok = is_violating_cover(X, B, subset_sequence_from_json(rep.at("witness")));
      } else if (orig == "find-counterexample" && !holds) {
        const json& w = rep.at("witness");
        Topology X = topology_from_json(w.at("space"));
        std::string claim = w.at("claim").get<std::string>();
        int A_size = w.at("A_size").get<int>();
        bool premise, concl;
        if (claim == "weak-implies-quasi" || claim == "quasi-implies-weak") {
          FamilyCollection M = collection_from_json(w.at("M"));
          bool weak = check_weak_M_compact(X, M, budget).holds;
          bool quasi = check_quasi_M_compact(X, M, budget).holds;
          premise = claim == "weak-implies-quasi" ? weak : quasi;
          concl = claim == "weak-implies-quasi" ? quasi : weak;
        } else if (claim == "bg-implies-ba") {
          SetFamily B = family_from_json(w.at("B"));
          premise =
              check_BG_compact(X, A_size, B, family_from_json(w.at("G")), budget).holds;
          concl = check_BA_compact(X, A_size, B, budget).holds;
        } else {
          bool small =
              check_BA_compact(X, A_size, family_from_json(w.at("B")), budget).holds;
          bool big =
              check_BA_compact(X, A_size, family_from_json(w.at("B2")), budget).holds;
          premise = claim == "ba-subset-monotone" ? small : big;
          concl = claim == "ba-subset-monotone" ? big : small;
        }
        ok = premise && !concl;
      } else {
        throw ParseError("recheck does not support reports from: " + orig);
      }
      json out;
      out["command"] = g_command;
      out["instance"] = json{{"command", orig}, {"holds", holds}};
      out["holds"] = ok;
      out["budget_used"] = budget.used();
      emit(out);
      exit_code = ok ? 0 : 1;
    });
  }

  // Let the global --budget/--pretty flags appear after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* node) {
    for (CLI::App* sub : node->get_subcommands(nullptr)) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    json err;
    err["command"] = g_command;
    err["error"] = e.what();
    std::cout << render_json(err, pretty);
    return 2;
  } catch (const BudgetExceeded& e) {
    json err;
    err["command"] = g_command;
    err["error"] = e.what();
    std::cout << render_json(err, pretty);
    return 3;
  } catch (const json::exception& e) {
    json err;
    err["command"] = g_command;
    err["error"] = std::string("bad document: ") + e.what();
    std::cout << render_json(err, pretty);
    return 2;
  } catch (const std::runtime_error& e) {
    // ParseError, ValidationError, ground/index/precondition failures
    json err;
    err["command"] = g_command;
    err["error"] = e.what();
    std::cout << render_json(err, pretty);
    return 2;
  }
  return exit_code;
}
