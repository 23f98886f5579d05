// dtk: command-line front end.
//
// Exit codes: 0 success, 1 infeasible or negative answer, 2 usage or input
// error, 3 size guard exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>

#include "dtk/approx.hpp"
#include "dtk/errors.hpp"
#include "dtk/exact_solver.hpp"
#include "dtk/json_io.hpp"
#include "dtk/knapsack.hpp"
#include "dtk/reduction.hpp"
#include "dtk/svg.hpp"

namespace {

using namespace dtk;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kGuard = 3 };

std::size_t guard_from_env(std::size_t fallback) {
  const char* env = std::getenv("DTK_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t pos = 0;
    unsigned long value = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("DTK_MAX_N is not a non-negative integer: ") + env);
  }
}

void emit(const ordered_json& doc, bool compact) {
  std::cout << (compact ? doc.dump() : doc.dump(2)) << "\n";
}

Rational parse_number(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + what + ": " + text);
  }
}

// Exact values print as "p/q"; float values as shortest round-trip numbers.
ordered_json num(double value) { return number_json(value); }
ordered_json num(const ExactNum& value) { return number_json(value); }

template <class Fn>
auto with_metric(const Instance& instance, Fn&& fn) {
  if (instance.mode() == ArithmeticMode::Exact) return fn(Metric<ExactNum>(instance));
  return fn(Metric<double>(instance));
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string out;
  std::string mode = "float";
  std::string delta = "2";
};

int cmd_gen(const GenArgs& args) {
  if (args.n < 1) throw UsageError("--n must be at least 1");
  const ArithmeticMode mode = args.mode == "exact" ? ArithmeticMode::Exact : ArithmeticMode::Float;
  std::vector<Point> pts;
  if (args.kind == "grid") {
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(args.n))));
    for (std::size_t i = 0; i < args.n; ++i) {
      pts.push_back({Rational(static_cast<long>(i % side)), Rational(static_cast<long>(i / side))});
    }
  } else {
    std::mt19937_64 rng(args.seed);
    std::set<std::pair<Rational, Rational>> seen;
    while (pts.size() < args.n) {
      Point p;
      if (mode == ArithmeticMode::Exact) {
        p = {Rational(static_cast<long>(rng() % 1000000)), Rational(static_cast<long>(rng() % 1000000))};
      } else {
        // 53 random bits scaled into [0, 1000)
        auto coord = [&] { return std::ldexp(static_cast<double>(rng() >> 11), -53) * 1000.0; };
        double x = coord(), y = coord();
        p = {rational_from_double(x), rational_from_double(y)};
      }
      if (seen.insert({p.x, p.y}).second) pts.push_back(p);
    }
  }
  Instance instance(mode, std::move(pts), 0, parse_number(args.delta, "--delta"));
  std::string text = save_instance(instance);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  return kOk;
}

// --- reduce -----------------------------------------------------------------

int cmd_reduce(const std::string& path, const std::string& prefix, bool compact) {
  auto source = knapsack::load_knapsack(read_file(path));
  auto artifact = reduction::build_reduction(source);
  write_file(prefix + ".instance.json", save_instance(artifact.instance));
  write_file(prefix + ".sidecar.json", reduction::save_sidecar(artifact));
  write_file(prefix + ".base_tree.json", save_tree(reduction::base_tree(artifact)));
  ordered_json doc;
  doc["points"] = artifact.instance.size();
  doc["k"] = artifact.k;
  doc["delta"] = format_rational(artifact.delta);
  doc["cost_bound"] = artifact.cost_bound.get_str();
  doc["instance"] = prefix + ".instance.json";
  doc["sidecar"] = prefix + ".sidecar.json";
  doc["base_tree"] = prefix + ".base_tree.json";
  emit(doc, compact);
  return kOk;
}

// --- approx -----------------------------------------------------------------

int cmd_approx(const std::string& path, const std::string& delta, bool compact,
               const std::string& tree_out) {
  Instance instance = load_instance(read_file(path));
  if (!delta.empty()) instance = instance.with_delta(parse_number(delta, "--delta"));
  return with_metric(instance, [&](const auto& metric) {
    auto result = approximate(instance, metric);
    ordered_json doc;
    doc["delay"] = num(result.delay);
    doc["cost"] = num(result.cost);
    doc["mst_cost"] = num(result.mst_cost);
    doc["cost_ratio"] = result.cost_ratio;
    doc["spanner_edges"] = result.spanner_report ? result.spanner_report->edge_count : 0;
    if (result.spanner_report) {
      doc["spanner_max_degree"] = result.spanner_report->max_degree;
      doc["spanner_cost_ratio"] = result.spanner_report->cost_ratio;
      doc["construction"] = result.spanner_report->construction;
    }
    doc["used_star"] = result.used_star;
    if (!tree_out.empty()) write_file(tree_out, save_tree(result.tree));
    emit(doc, compact);
    return static_cast<int>(kOk);
  });
}

// --- exact ------------------------------------------------------------------

struct ExactArgs {
  std::string instance;
  std::string delta;
  std::string cost_bound;
  std::optional<std::size_t> max_n;
  unsigned threads = 1;
  bool compact = false;
  std::string tree_out;
};

int cmd_exact(const ExactArgs& args) {
  Instance instance = load_instance(read_file(args.instance));
  SolveOptions options;
  options.max_n = args.max_n ? *args.max_n : guard_from_env(kSolverGuard);
  options.threads = std::max(1u, args.threads);
  if (!args.delta.empty()) options.delta = parse_number(args.delta, "--delta");
  if (!args.cost_bound.empty()) options.cost_bound = parse_number(args.cost_bound, "--cost-bound");
  // With a cost bound the question is the decision problem.
  options.stop_at_first_feasible = options.cost_bound.has_value() || instance.cost_bound().has_value();
  return with_metric(instance, [&](const auto& metric) {
    auto result = solve_exact(instance, metric, options);
    const bool feasible = result.status == SolveStatus::Feasible;
    ordered_json doc;
    doc["status"] = feasible ? "feasible" : "infeasible";
    if (feasible) {
      doc["delay"] = num(delay(*result.tree, metric));
      doc["cost"] = num(*result.cost);
    }
    doc["nodes_explored"] = result.nodes_explored;
    doc["proof_of_optimality"] = result.proof_of_optimality;
    if (feasible && !args.tree_out.empty()) write_file(args.tree_out, save_tree(*result.tree));
    emit(doc, args.compact);
    return static_cast<int>(feasible ? kOk : kNegative);
  });
}

// --- eval -------------------------------------------------------------------

int cmd_eval(const std::string& instance_path, const std::string& tree_path, bool compact) {
  Instance instance = load_instance(read_file(instance_path));
  Tree tree = load_tree(read_file(tree_path), instance.size(), instance.root());
  return with_metric(instance, [&](const auto& metric) {
    using Num = std::decay_t<decltype(metric(0, 0))>;
    auto d = delay(tree, metric);
    auto c = cost(tree, metric);
    bool ok_delay = d <= NumTraits<Num>::from_rational(instance.delta());
    bool ok_cost = !instance.cost_bound() || c <= NumTraits<Num>::from_rational(*instance.cost_bound());
    ordered_json doc;
    doc["delay"] = num(d);
    doc["cost"] = num(c);
    doc["within_delta"] = ok_delay;
    if (instance.cost_bound()) doc["within_cost_bound"] = ok_cost;
    emit(doc, compact);
    return static_cast<int>(ok_delay && ok_cost ? kOk : kNegative);
  });
}

// --- knapsack ---------------------------------------------------------------

int cmd_knapsack(const std::string& path, bool via_reduction, std::optional<std::size_t> max_n,
                 unsigned threads, bool compact) {
  auto source = knapsack::load_knapsack(read_file(path));
  ordered_json doc;
  bool positive = false;
  if (via_reduction) {
    std::size_t guard = max_n ? *max_n : guard_from_env(kSolverGuard);
    auto answer = reduction::answer_via_reduction(source, reduction::exact_decider(guard, threads));
    positive = answer.positive;
    doc["positive"] = positive;
    doc["method"] = "reduction";
    if (answer.witness) doc["witness_tree"] = ordered_json::parse(save_tree(*answer.witness));
  } else {
    auto answer = knapsack::solve_dp(source);
    positive = answer.positive;
    doc["positive"] = positive;
    doc["method"] = "dp";
    doc["witness"] = answer.witness;
  }
  emit(doc, compact);
  return positive ? kOk : kNegative;
}

// --- plot -------------------------------------------------------------------

int cmd_plot(const std::string& instance_path, const std::string& graph_path,
             const std::string& out) {
  Instance instance = load_instance(read_file(instance_path));
  std::string text = read_file(graph_path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  Network network = doc.contains("parent")
                        ? load_tree(text, instance.size(), instance.root()).network()
                        : load_network(text, instance.size());
  write_file(out, render_svg(instance, network));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-source dilation-bounded spanning trees"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--json", compact, "Print machine-readable single-line JSON");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "random or grid")->required()->check(CLI::IsMember({"random", "grid"}));
  gen_cmd->add_option("--n", gen.n, "Number of points");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--mode", gen.mode, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  gen_cmd->add_option("--delta", gen.delta, "Delay bound");

  std::string path, second, out, delta, cost_bound, tree_out;
  std::optional<std::size_t> max_n;
  unsigned threads = 1;
  bool via_reduction = false;

  auto add_common = [&](CLI::App* cmd) { cmd->add_flag("--json", compact, "Single-line JSON"); };

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the reduction instance of a knapsack file");
  reduce_cmd->add_option("knapsack", path)->required();
  reduce_cmd->add_option("--out", out, "Output prefix")->required();
  add_common(reduce_cmd);

  auto* approx_cmd = app.add_subcommand("approx", "Spanner plus shortest-path tree");
  approx_cmd->add_option("instance", path)->required();
  approx_cmd->add_option("--delta", delta, "Override the delay bound");
  approx_cmd->add_option("--tree-out", tree_out, "Write the tree here");
  add_common(approx_cmd);

  auto* exact_cmd = app.add_subcommand("exact", "Branch-and-bound optimum or decision");
  exact_cmd->add_option("instance", path)->required();
  exact_cmd->add_option("--delta", delta, "Override the delay bound");
  exact_cmd->add_option("--cost-bound", cost_bound, "Decide against this cost bound");
  exact_cmd->add_option("--max-n", max_n, "Size guard (default DTK_MAX_N or 14)");
  exact_cmd->add_option("--threads", threads, "Worker threads");
  exact_cmd->add_option("--tree-out", tree_out, "Write the tree here");
  add_common(exact_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Cost and delay of a tree");
  eval_cmd->add_option("instance", path)->required();
  eval_cmd->add_option("tree", second)->required();
  add_common(eval_cmd);

  auto* knap_cmd = app.add_subcommand("knapsack", "Decide a knapsack instance");
  knap_cmd->add_option("file", path)->required();
  knap_cmd->add_flag("--via-reduction", via_reduction, "Answer through the tree problem");
  knap_cmd->add_option("--max-n", max_n, "Size guard for the tree solver");
  knap_cmd->add_option("--threads", threads, "Worker threads");
  add_common(knap_cmd);

  auto* plot_cmd = app.add_subcommand("plot", "Render a network or tree as SVG");
  plot_cmd->add_option("instance", path)->required();
  plot_cmd->add_option("graph", second, "Network or tree file")->required();
  plot_cmd->add_option("--out", out, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*reduce_cmd) return cmd_reduce(path, out, compact);
    if (*approx_cmd) return cmd_approx(path, delta, compact, tree_out);
    if (*exact_cmd) return cmd_exact({path, delta, cost_bound, max_n, threads, compact, tree_out});
    if (*eval_cmd) return cmd_eval(path, second, compact);
    if (*knap_cmd) return cmd_knapsack(path, via_reduction, max_n, threads, compact);
    if (*plot_cmd) return cmd_plot(path, second, out);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
