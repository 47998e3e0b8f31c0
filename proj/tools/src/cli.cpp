#include "knapkern_cli/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knapkern/composition.hpp"
#include "knapkern/error.hpp"
#include "knapkern/generators.hpp"
#include "knapkern/json_io.hpp"
#include "knapkern/kernel.hpp"
#include "knapkern/reductions.hpp"
#include "knapkern/solvers.hpp"
#include "knapkern/verify.hpp"

namespace knapkern::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  bool strip_labels = false;
  bool report = false;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  const Globals& globals;
  std::string command;

  // Adds the invocation metadata and writes to --out, or to stdout.
  void emit(const std::string& document, json extra_meta = json::object()) const {
    json doc = json::parse(document);
    extra_meta["seed"] = globals.seed;
    extra_meta["command"] = command;
    doc["meta"] = std::move(extra_meta);
    if (globals.out.empty()) {
      out << doc.dump() << '\n';
    } else {
      write_text_file(globals.out, doc.dump());
    }
  }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::guard:
    case ErrorCode::budget:
      return kGuardExceeded;
    case ErrorCode::schema:
    case ErrorCode::invariant:
    case ErrorCode::precondition:
      return kInvalidInput;
  }
  return kInvalidInput;
}

// Re-raises failures while reading `path` with the file named.
template <class Parse>
auto load(const std::string& path, Parse&& parse) {
  try {
    return parse(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  unsigned n = 1;
  bool no = false;
  std::size_t w_distinct = 2;
  std::size_t p_distinct = 2;
  std::string max_value = "1000";
};

int run_gen(const GenArgs& a, const Io& io) {
  if (a.kind == "x3c") {
    io.emit(to_json(gen_x3c(a.n, io.globals.seed, !a.no)), {{"planted", a.no ? "no" : "yes"}});
  } else if (a.kind == "rss") {
    io.emit(to_json(gen_rss(a.n, io.globals.seed, !a.no)), {{"planted", a.no ? "no" : "yes"}});
  } else {
    const auto max_value = parse_natural(a.max_value);
    if (!max_value) fail(ErrorCode::precondition, "gen: --max-value must be a decimal natural");
    const auto inst = gen_knapsack(a.n, a.w_distinct, a.p_distinct, *max_value, io.globals.seed);
    io.emit(to_json(inst, io.globals.strip_labels));
  }
  return kOk;
}

// --- reduce ----------------------------------------------------------------

int run_reduce(const std::string& kind, const std::string& input, const Io& io) {
  if (kind == "x3c-to-rss") {
    const auto x3c = load(input, [](const std::string& s) { return parse_x3c(s); });
    io.emit(to_json(x3c_to_rss(x3c)));
  } else {
    const auto ss = load(input, [](const std::string& s) { return parse_subset_sum(s); });
    io.emit(to_json(subset_sum_to_knapsack(ss), io.globals.strip_labels));
  }
  return kOk;
}

// --- compose ---------------------------------------------------------------

fs::path sidecar_path(const fs::path& out) {
  fs::path side = out;
  side.replace_extension();
  side += ".meta.json";
  return side;
}

int run_compose(const std::vector<std::string>& inputs, YRule y_rule, const Io& io) {
  std::vector<RestrictedSubsetSumInstance> instances;
  for (const auto& path : inputs) {
    instances.push_back(load(path, [](const std::string& s) { return parse_rss(s); }));
    if (instances.back().n() != instances.front().n()) {
      fail(ErrorCode::invariant, path + ": n=" + std::to_string(instances.back().n()) +
                                     " differs from n=" + std::to_string(instances.front().n()) +
                                     " of " + inputs.front());
    }
  }
  const ComposedInstance composed = compose(instances, y_rule);
  const std::string metadata = composition_metadata_json(composed);
  io.emit(to_json(composed.knapsack, io.globals.strip_labels), json::parse(metadata));
  std::ostream& summary = io.globals.out.empty() ? io.err : io.out;
  if (!io.globals.out.empty()) {
    write_text_file(sidecar_path(io.globals.out), metadata);
  }
  summary << "w#=" << count_distinct_weights(composed.knapsack)
          << " p#=" << count_distinct_profits(composed.knapsack) << " t=" << composed.constants.t
          << " items=" << composed.knapsack.items.size() << '\n';
  return kOk;
}

// --- kernelize -------------------------------------------------------------

int run_kernelize(const std::string& input, const Io& io) {
  const auto inst = load(input, [](const std::string& s) { return parse_knapsack(s); });
  const KernelResult result = kernelize(inst);
  const std::string report = kernel_report_json(result.report);
  io.emit(to_json(result.instance, io.globals.strip_labels), {{"kernel", json::parse(report)}});
  if (io.globals.report) io.out << report << '\n';
  return kOk;
}

// --- solve -----------------------------------------------------------------

SolverResult solve_with(const std::string& method, const KnapsackInstance& inst) {
  if (method == "brute") return solve_brute_force(inst);
  if (method == "mim") return solve_meet_in_middle(inst);
  if (method == "dp") return solve_dp_by_weight(inst);
  if (method == "grouped-bb") return solve_grouped_items(inst);
  // auto: the cheapest exact method whose guard admits the instance.
  if (inst.items.size() <= kBruteForceMaxItems) return solve_brute_force(inst);
  if (inst.items.size() <= kMeetInMiddleMaxItems) return solve_meet_in_middle(inst);
  Nat total = 0;
  for (const auto& item : inst.items) total += item.weight;
  const Nat clamped = inst.capacity < total ? inst.capacity : total;
  if (clamped <= Nat(static_cast<unsigned long>(kDpMaxCapacity))) return solve_dp_by_weight(inst);
  return solve_grouped_items(inst);
}

int run_solve(const std::string& input, const std::string& method, bool witness, const Io& io) {
  const auto inst = load(input, [](const std::string& s) { return parse_knapsack(s); });
  const SolverResult result = solve_with(method, inst);
  json doc = {{"kind", "solution"},
              {"method", method},
              {"feasible", result.feasible},
              {"weight", to_decimal(result.weight)},
              {"profit", to_decimal(result.profit)}};
  if (witness) doc["chosen"] = result.chosen;
  if (io.globals.out.empty()) {
    io.out << doc.dump() << '\n';
  } else {
    write_text_file(io.globals.out, doc.dump());
  }
  if (io.globals.report)
    io.out << (result.feasible ? "yes" : "no") << " chosen=" << result.chosen.size() << '\n';
  return kOk;
}

// --- verify compose -------------------------------------------------------

std::string labels_of(std::uint64_t pattern, unsigned t) {
  std::string s;
  for (unsigned i = 0; i < t; ++i) s += ((pattern >> i) & 1u) ? '1' : '0';
  return s;
}

std::vector<std::string> dump_counterexample(const PatternOutcome& o, unsigned t, unsigned n,
                                             YRule y_rule, const Io& io) {
  const fs::path dir = io.globals.out.empty() ? fs::path(".") : fs::path(io.globals.out);
  fs::create_directories(dir);
  std::vector<std::string> paths;
  const std::string stem = "counterexample_t" + std::to_string(t) + "_n" + std::to_string(n) + "_" +
                           labels_of(o.pattern, t);
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    const fs::path p = dir / (stem + "_input" + std::to_string(i) + ".json");
    write_text_file(p, to_json(o.inputs[i]));
    paths.push_back(p.string());
  }
  const fs::path p = dir / (stem + "_composed.json");
  write_text_file(p, to_json(compose(o.inputs, y_rule).knapsack));
  paths.push_back(p.string());
  return paths;
}

int run_verify_compose(unsigned t, unsigned n, std::size_t trials, YRule y_rule, const Io& io) {
  const ComposeVerification v = verify_compose(t, n, trials, io.globals.seed, y_rule);
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };
  io.out << "verify compose t=" << t << " n=" << n << " seed=" << io.globals.seed
         << " patterns=" << v.outcomes.size() << (y_rule == YRule::narrow ? " y=narrow" : "") << '\n';
  io.out << std::left << std::setw(std::max<int>(8, static_cast<int>(t) + 2)) << "labels"
         << std::setw(10) << "expected" << std::setw(9) << "verdict" << std::setw(7) << "index"
         << std::setw(11) << "canonical" << "result\n";
  for (const auto& o : v.outcomes) {
    io.out << std::setw(std::max<int>(8, static_cast<int>(t) + 2)) << labels_of(o.pattern, t)
           << std::setw(10) << yes_no(o.expected) << std::setw(9) << yes_no(o.verdict)
           << std::setw(7) << (o.verdict ? (o.index_part_ok ? "ok" : "BAD") : "-") << std::setw(11)
           << (o.expected ? (o.canonical_ok ? "ok" : "BAD") : "-") << (o.passed() ? "PASS" : "FAIL")
           << '\n';
    if (!o.passed()) {
      for (const auto& path : dump_counterexample(o, t, n, y_rule, io)) io.out << "  counterexample " << path << '\n';
    }
  }
  const bool ok = v.passed();
  io.out << (ok ? "all patterns pass" : "verification FAILED") << '\n';
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"knapkern: composition, kernelization and exact solvers for Knapsack"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", globals.seed, "Seed for every random choice");
  app.add_option("--out", globals.out, "Output file (directory for verify counterexamples)");
  app.add_flag("--strip-labels", globals.strip_labels, "Omit item labels from Knapsack output");
  app.add_flag("--report", globals.report, "Print a summary report to stdout");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("kind", gen_args.kind)->required()->check(CLI::IsMember({"x3c", "rss", "knapsack"}));
  gen->add_option("--n", gen_args.n, "Instance size (item count for knapsack)");
  auto* yes_flag = gen->add_flag("--yes", "Planted yes-instance (default)");
  gen->add_flag("--no", gen_args.no, "Verified no-instance")->excludes(yes_flag);
  gen->add_option("--w-distinct", gen_args.w_distinct, "Distinct weights (knapsack)");
  gen->add_option("--p-distinct", gen_args.p_distinct, "Distinct profits (knapsack)");
  gen->add_option("--max-value", gen_args.max_value, "Largest weight or profit (knapsack)");

  std::string reduce_kind, reduce_input;
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->add_option("reduction", reduce_kind)
      ->required()
      ->check(CLI::IsMember({"x3c-to-rss", "subset-sum-to-knapsack"}));
  reduce->add_option("input", reduce_input)->required();

  std::vector<std::string> compose_inputs;
  auto* compose_cmd = app.add_subcommand("compose", "Compose Restricted Subset Sum instances");
  compose_cmd->add_option("inputs", compose_inputs)->required();
  bool compose_narrow_y = false;
  compose_cmd->add_flag("--narrow-y", compose_narrow_y, "Use Y = 3nBt^2 (unsound for t >= 4)");

  std::string kernel_input;
  auto* kernel_cmd = app.add_subcommand("kernelize", "Kernelize a Knapsack instance");
  kernel_cmd->add_option("input", kernel_input)->required();

  std::string solve_input, method = "auto";
  bool witness = false;
  auto* solve = app.add_subcommand("solve", "Solve a Knapsack instance exactly");
  solve->add_option("input", solve_input)->required();
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "brute", "mim", "dp", "grouped-bb"}));
  solve->add_flag("--witness", witness, "Include the chosen item indices");

  unsigned vt = 2, vn = 1;
  std::size_t trials = 16;
  auto* verify = app.add_subcommand("verify", "End-to-end verification");
  verify->require_subcommand(1);
  auto* verify_compose_cmd = verify->add_subcommand("compose", "Check the OR property of compose");
  verify_compose_cmd->add_option("--t", vt, "Number of composed instances");
  verify_compose_cmd->add_option("--n", vn, "Instance size");
  verify_compose_cmd->add_option("--trials", trials, "Patterns to check (exhaustive if 2^t <= trials)");
  bool verify_narrow_y = false;
  verify_compose_cmd->add_flag("--narrow-y", verify_narrow_y, "Use Y = 3nBt^2 (unsound for t >= 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  auto io_for = [&](std::string command) { return Io{out, err, globals, std::move(command)}; };
  try {
    if (*gen) return run_gen(gen_args, io_for("gen"));
    if (*reduce) return run_reduce(reduce_kind, reduce_input, io_for("reduce"));
    auto rule = [](bool narrow) { return narrow ? YRule::narrow : YRule::widened; };
    if (*compose_cmd) return run_compose(compose_inputs, rule(compose_narrow_y), io_for("compose"));
    if (*kernel_cmd) return run_kernelize(kernel_input, io_for("kernelize"));
    if (*solve) return run_solve(solve_input, method, witness, io_for("solve"));
    if (*verify_compose_cmd) return run_verify_compose(vt, vn, trials, rule(verify_narrow_y), io_for("verify"));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace knapkern::cli
