#include "endow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "endow/cores.hpp"
#include "endow/document.hpp"
#include "endow/error.hpp"
#include "endow/fixtures.hpp"
#include "endow/generator.hpp"
#include "endow/reduction.hpp"
#include "endow/taxonomy.hpp"
#include "endow/yrmh.hpp"

namespace endow {

namespace {

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T, typename Parse>
T parse_name(const std::string& name, Parse&& parse, const char* what) {
  auto value = parse(name);
  if (!value) throw ParseError(what, "unknown name '" + name + "'");
  return *value;
}

void print_members(std::ostream& out, const Economy& economy, const std::vector<Allocation>& members) {
  for (const auto& a : members) out << "  " << format_allocation(economy, a) << '\n';
}

struct CoresArgs {
  std::string file;
  std::vector<std::string> concepts;
  bool diagnostics = false;
};

int run_cores(const CoresArgs& a, std::ostream& out) {
  const Economy economy = load_economy(a.file);
  std::vector<CoreConcept> kinds;
  for (const auto& name : a.concepts) kinds.push_back(parse_name<CoreConcept>(name, parse_core_concept, "concept"));
  if (kinds.empty()) kinds.assign(std::begin(kAllCoreConcepts), std::end(kAllCoreConcepts));
  const BlockFinder finder(economy, SearchLimits::from_environment());
  for (CoreConcept kind : kinds) {
    const CoreSet core = compute_core(finder, kind, a.diagnostics);
    out << to_string(kind) << " (" << core.members.size() << ")\n";
    print_members(out, economy, core.members);
    for (const auto& x : core.excluded) {
      out << "  excluded " << format_allocation(economy, x.allocation) << " by "
          << format_agents(economy, x.certificate.coalition) << " via "
          << format_allocation(economy, x.certificate.alternative) << '\n';
    }
  }
  return kExitOk;
}

struct YrmhArgs {
  std::string file;
  std::string order;
  bool all_orders = false;
  bool trace = false;
};

int run_yrmh(const YrmhArgs& a, std::ostream& out) {
  const Economy economy = load_economy(a.file);
  if (a.all_orders == !a.order.empty()) throw ParseError("", "give exactly one of --order and --all-orders");
  if (a.all_orders) {
    const auto outcomes = yrmh_all_outcomes(economy, SearchLimits::from_environment());
    out << "outcomes (" << outcomes.size() << ")\n";
    print_members(out, economy, outcomes);
    return kExitOk;
  }
  const YrmhResult result = yrmh_run(economy, parse_order(economy, a.order));
  if (a.trace) out << render_trace(economy, result.trace);
  out << format_allocation(economy, result.allocation) << '\n';
  return kExitOk;
}

int run_inclusions(const std::string& file, std::ostream& out) {
  const Economy economy = load_economy(file);
  const InclusionReport report = inclusion_report(economy);
  for (const auto& core : report.cores) {
    out << to_string(core.kind) << " (" << core.members.size() << ")\n";
    print_members(out, economy, core.members);
  }
  for (const auto& r : report.relations) {
    out << to_string(r.left) << ' ' << to_string(r.relation) << ' ' << to_string(r.right);
    if (r.only_left) out << "; only " << to_string(r.left) << ' ' << format_allocation(economy, *r.only_left);
    if (r.only_right) out << "; only " << to_string(r.right) << ' ' << format_allocation(economy, *r.only_right);
    out << '\n';
  }
  return kExitOk;
}

int run_classify(const std::string& file, std::ostream& out) {
  const Economy economy = load_economy(file);
  for (ClassLabel label : classify(economy)) out << to_string(label) << '\n';
  return kExitOk;
}

struct ReduceArgs {
  std::string file;
  std::string allocation;
  std::string remove;
  bool print_allocation = false;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  const Economy economy = load_economy(a.file);
  const Allocation mu = parse_allocation(economy, a.allocation);
  const AgentSet removed = parse_agents(economy, a.remove);
  const ReducedEconomy reduced = reduce(economy, mu, removed);
  if (a.print_allocation) {
    out << format_allocation(reduced.economy, restrict_allocation(reduced, mu)) << '\n';
  } else {
    out << serialize_economy(reduced.economy);
  }
  return kExitOk;
}

int run_augment(const std::string& file, const std::string& kind, std::ostream& out) {
  const Economy economy = load_economy(file);
  if (kind == "housing") {
    out << serialize_economy(augment_housing_market(economy));
  } else if (kind == "private-public") {
    out << serialize_economy(augment_private_public(economy));
  } else {
    throw ParseError("kind", "expected housing or private-public");
  }
  return kExitOk;
}

struct ConsistencyArgs {
  std::string file;
  std::string concept_name;
  std::string mode;
  std::string expect;
};

int run_consistency(const ConsistencyArgs& a, std::ostream& out) {
  const Economy economy = load_economy(a.file);
  const Solution solution = parse_name<Solution>(a.concept_name, parse_solution, "concept");
  const ConsistencyMode mode = parse_name<ConsistencyMode>(a.mode, parse_consistency_mode, "mode");
  if (!a.expect.empty() && a.expect != "holds" && a.expect != "fails") {
    throw ParseError("expect", "expected holds or fails");
  }
  const ConsistencyVerdict verdict = check_consistency(economy, solution, mode);
  out << (verdict.holds ? "holds" : "fails");
  if (verdict.counterexample) out << ": " << render_counterexample(economy, mode, *verdict.counterexample);
  out << '\n';
  if (!a.expect.empty() && (a.expect == "holds") != verdict.holds) {
    throw CheckFailed("verdict differs from --expect " + a.expect);
  }
  return kExitOk;
}

struct GenArgs {
  std::uint64_t seed = 0;
  int agents = 3;
  int objects = 3;
  std::string class_name;
  double density = 1.0;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  GeneratorSpec spec;
  spec.seed = a.seed;
  spec.agents = a.agents;
  spec.objects = a.objects;
  spec.density = a.density;
  if (!a.class_name.empty()) spec.class_label = parse_name<ClassLabel>(a.class_name, parse_class_label, "class");
  out << serialize_economy(generate(spec));
  return kExitOk;
}

struct FixturesArgs {
  bool list = false;
  std::string run;
  std::string dir = default_fixture_dir();
  bool update = false;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// First differing line, 1-based, with both versions.
std::string first_difference(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected);
  std::istringstream a(actual);
  std::string le;
  std::string la;
  for (int line = 1;; ++line) {
    const bool more_e = static_cast<bool>(std::getline(e, le));
    const bool more_a = static_cast<bool>(std::getline(a, la));
    if (!more_e && !more_a) return "identical";
    if (!more_e || !more_a || le != la) {
      return "line " + std::to_string(line) + ": expected '" + (more_e ? le : "<end>") + "', got '" +
             (more_a ? la : "<end>") + "'";
    }
  }
}

int run_fixtures(const FixturesArgs& a, std::ostream& out, std::ostream& err) {
  if (a.list == !a.run.empty()) throw ParseError("", "give exactly one of --list and --run");
  if (a.list) {
    for (const auto& f : fixture_registry()) out << f.id << "  " << f.summary << '\n';
    return kExitOk;
  }
  std::vector<const Fixture*> selected;
  if (a.run == "all") {
    for (const auto& f : fixture_registry()) selected.push_back(&f);
  } else {
    const Fixture* f = find_fixture(a.run);
    if (f == nullptr) throw ParseError("run", "unknown fixture '" + a.run + "'");
    selected.push_back(f);
  }
  int failures = 0;
  for (const Fixture* f : selected) {
    const Economy economy = load_economy(fixture_path(a.dir, f->id));
    const std::string report = fixture_report(*f, economy);
    const std::string golden = golden_path(a.dir, f->id);
    if (a.update) {
      std::ofstream(golden) << report;
      out << "updated " << f->id << '\n';
      continue;
    }
    const auto expected = read_file(golden);
    if (!expected) {
      ++failures;
      out << "FAIL " << f->id << '\n';
      err << f->id << ": missing golden file " << golden << '\n';
    } else if (*expected != report) {
      ++failures;
      out << "FAIL " << f->id << '\n';
      err << f->id << ": " << first_difference(*expected, report) << '\n';
    } else {
      out << "ok " << f->id << '\n';
    }
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core solver for exchange economies with general endowments", "endow"};
  app.require_subcommand(1);

  CoresArgs cores;
  auto* cores_cmd = app.add_subcommand("cores", "Print core solution sets");
  cores_cmd->add_option("file", cores.file, "Economy document")->required();
  cores_cmd->add_option("--concept", cores.concepts,
                        "weak, strong, exclusion, refined-exclusion, effective, rectified or pareto (repeatable)");
  cores_cmd->add_flag("--diagnostics", cores.diagnostics, "Show a blocking certificate per excluded allocation");

  YrmhArgs yrmh;
  auto* yrmh_cmd = app.add_subcommand("yrmh", "Run the YRMH-IGYT mechanism");
  yrmh_cmd->add_option("file", yrmh.file, "Economy document")->required();
  yrmh_cmd->add_option("--order", yrmh.order, "Priority order, comma-separated agent labels");
  yrmh_cmd->add_flag("--all-orders", yrmh.all_orders, "Collect outcomes over every order");
  yrmh_cmd->add_flag("--trace", yrmh.trace, "Print the step log");

  std::string inclusions_file;
  auto* inclusions_cmd = app.add_subcommand("inclusions", "Compare all solution sets pairwise");
  inclusions_cmd->add_option("file", inclusions_file, "Economy document")->required();

  std::string classify_file;
  auto* classify_cmd = app.add_subcommand("classify", "List the economy classes that apply");
  classify_cmd->add_option("file", classify_file, "Economy document")->required();

  ReduceArgs red;
  auto* reduce_cmd = app.add_subcommand("reduce", "Remove a self-enforcing group with its assignments");
  reduce_cmd->add_option("file", red.file, "Economy document")->required();
  reduce_cmd->add_option("--allocation", red.allocation, "Allocation literal")->required();
  reduce_cmd->add_option("--remove", red.remove, "Agents to remove, comma-separated")->required();
  reduce_cmd->add_flag("--print-allocation", red.print_allocation, "Print the restricted allocation instead");

  std::string augment_file;
  std::string augment_kind;
  auto* augment_cmd = app.add_subcommand("augment", "Add the artificial agent of an augmented economy");
  augment_cmd->add_option("file", augment_file, "Economy document")->required();
  augment_cmd->add_option("--kind", augment_kind, "housing or private-public")->required();

  ConsistencyArgs cons;
  auto* consistency_cmd = app.add_subcommand("consistency", "Check a consistency property on one economy");
  consistency_cmd->add_option("file", cons.file, "Economy document")->required();
  consistency_cmd->add_option("--concept", cons.concept_name, "Core name or yrmh")->required();
  consistency_cmd->add_option("--mode", cons.mode, "full, weak, strong or strong-e0")->required();
  consistency_cmd->add_option("--expect", cons.expect, "holds or fails; exit 1 on mismatch");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random economy");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--agents", gen.agents, "Number of agents")->required();
  gen_cmd->add_option("--objects", gen.objects, "Number of objects")->required();
  gen_cmd->add_option("--class", gen.class_name, "Economy class the result must belong to");
  gen_cmd->add_option("--density", gen.density, "Acceptability density in (0, 1]");

  FixturesArgs fix;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or replay the example fixtures");
  fixtures_cmd->add_flag("--list", fix.list, "List fixture ids");
  fixtures_cmd->add_option("--run", fix.run, "Fixture id or all");
  fixtures_cmd->add_option("--dir", fix.dir, "Fixture directory");
  fixtures_cmd->add_flag("--update", fix.update, "Rewrite golden reports instead of comparing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cores_cmd) return run_cores(cores, out);
    if (*yrmh_cmd) return run_yrmh(yrmh, out);
    if (*inclusions_cmd) return run_inclusions(inclusions_file, out);
    if (*classify_cmd) return run_classify(classify_file, out);
    if (*reduce_cmd) return run_reduce(red, out);
    if (*augment_cmd) return run_augment(augment_file, augment_kind, out);
    if (*consistency_cmd) return run_consistency(cons, out);
    if (*gen_cmd) return run_gen(gen, out);
    if (*fixtures_cmd) return run_fixtures(fix, out, err);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace endow
