// Command-line front end: parse an instance (or game table), dispatch one
// operation, print a deterministic report. Exit codes: 0 ok, 1 property
// failure, 2 validation error, 3 I/O or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rps/analysis.hpp"
#include "rps/core.hpp"
#include "rps/error.hpp"
#include "rps/flow.hpp"
#include "rps/json_io.hpp"
#include "rps/shapley.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  int max_n = rps::kDefaultEnumLimit;

  bool json() const { return format == "json"; }
};

void print_payments(const rps::PaymentVector& payments, const Options& opt) {
  if (opt.json()) {
    std::cout << rps::payments_to_json(payments) << "\n";
    return;
  }
  for (std::size_t i = 0; i < payments.size(); ++i) {
    std::cout << (i + 1) << ": " << rps::ratio_string(payments[i]) << "\n";
  }
}

rps::RpsInstance load_instance(const std::string& path) {
  return rps::RpsInstance::validate(rps::load_instance_file(path));
}

rps::PaymentVector parse_payments(const std::string& text, int players) {
  rps::PaymentVector payments = rps::parse_payment_list(text);
  if (payments.size() != static_cast<std::size_t>(players)) {
    rps::fail(rps::ErrorKind::OutOfRange,
              "expected " + std::to_string(players) + " payments, got " +
                  std::to_string(payments.size()));
  }
  return payments;
}

int cmd_value(const std::string& path, const std::string& coalition_text,
              const Options& opt) {
  const rps::RpsInstance inst = load_instance(path);
  const rps::Coalition coalition =
      rps::Coalition::parse(inst.player_count(), coalition_text);
  const std::int64_t value = inst.char_value(coalition);
  if (opt.json()) {
    Json root;
    root["value"] = value;
    std::cout << root.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_shapley(const std::string& path, const Options& opt) {
  print_payments(rps::shapley_closed_form(load_instance(path)), opt);
  return 0;
}

int cmd_core(const std::string& path, const std::string& dot_path,
             const Options& opt) {
  const rps::RpsInstance inst = load_instance(path);
  rps::ProfitSharingGraph graph = rps::build_profit_sharing_graph(inst);
  rps::max_flow(graph.network);
  const rps::PaymentVector payments = rps::payment_from_flow(inst, graph);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      rps::fail(rps::ErrorKind::ParseError, "cannot write '" + dot_path + "'");
    }
    out << rps::to_dot(graph.network);
  }
  print_payments(payments, opt);
  return 0;
}

int cmd_check_core(const std::string& path, const std::string& payment_text,
                   const Options& opt) {
  const rps::RpsInstance inst = load_instance(path);
  const rps::PaymentVector payments =
      parse_payments(payment_text, inst.player_count());
  const rps::CoreCheck check = rps::is_core(inst, payments, opt.max_n);
  if (opt.json()) {
    std::cout << rps::core_check_to_json(check) << "\n";
  } else if (check.in_core) {
    std::cout << "in core\n";
  } else {
    std::cout << "violation: "
              << (check.violated == rps::CoreCheck::Property::Efficiency
                      ? "EFF"
                      : "CR")
              << " S={" << check.witness.to_string()
              << "} gap=" << rps::ratio_string(check.gap) << "\n";
  }
  return check.in_core ? 0 : 1;
}

int cmd_solve(const std::string& path, const Options& opt) {
  const rps::RpsInstance inst = load_instance(path);
  const rps::RpspSolution best = rps::rpsp_solve(inst, opt.max_n);
  if (opt.json()) {
    Json root;
    root["selection"] = best.selection.members();
    root["value"] = best.value;
    std::cout << root.dump() << "\n";
  } else {
    std::cout << "selection: {" << best.selection.to_string() << "}\n"
              << "value: " << best.value << "\n";
  }
  return 0;
}

int cmd_convex(const std::string& path, bool as_table, const Options& opt) {
  const rps::GameTable table =
      as_table ? rps::load_game_table_file(path)
               : rps::game_table(load_instance(path), opt.max_n);
  const rps::ConvexityCheck convex = rps::is_convex(table, opt.max_n);
  const rps::ConvexityCheck superadditive =
      rps::is_superadditive(table, opt.max_n);
  if (opt.json()) {
    Json root;
    root["convex"] = convex.ok;
    if (!convex.ok) {
      root["convexity_counterexample"] = {{"s", convex.s.members()},
                                          {"t", convex.t.members()}};
    }
    root["superadditive"] = superadditive.ok;
    if (!superadditive.ok) {
      root["superadditivity_counterexample"] = {
          {"s", superadditive.s.members()}, {"t", superadditive.t.members()}};
    }
    std::cout << root.dump() << "\n";
  } else {
    if (convex.ok) {
      std::cout << "convex: yes\n";
    } else {
      std::cout << "convex: no (S={" << convex.s.to_string() << "}, T={"
                << convex.t.to_string() << "})\n";
    }
    if (superadditive.ok) {
      std::cout << "superadditive: yes\n";
    } else {
      std::cout << "superadditive: no (S={" << superadditive.s.to_string()
                << "}, T={" << superadditive.t.to_string() << "})\n";
    }
  }
  return 0;
}

int cmd_embed3(const std::string& path) {
  const rps::GameTable table = rps::load_game_table_file(path);
  const rps::RpsInstance inst = rps::embed_three_player(table);
  // the canonical instance JSON is the report in both formats
  std::cout << rps::instance_to_json(inst) << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const Options& opt) {
  const rps::RpsInstance inst = load_instance(path);
  std::vector<std::pair<std::string, std::string>> checks;
  const auto record = [&](const std::string& name, bool pass) {
    checks.emplace_back(name, pass ? "pass" : "fail");
  };

  const rps::GameTable table = rps::game_table(inst, opt.max_n);
  record("convexity", rps::is_convex(table, opt.max_n).ok);
  record("superadditivity", rps::is_superadditive(table, opt.max_n).ok);

  const rps::PaymentVector closed = rps::shapley_closed_form(inst);
  record("shapley-closed-form-equals-oracle",
         closed == rps::shapley_oracle(inst, opt.max_n));
  record("shapley-efficiency", closed.total() == inst.grand_value());
  record("shapley-in-core", rps::is_core(inst, closed, opt.max_n).in_core);

  rps::ProfitSharingGraph graph = rps::build_profit_sharing_graph(inst);
  const std::int64_t value = rps::max_flow(graph.network);
  record("flow-value-H",
         value == rps::H_value(inst) && graph.finite_edges_saturated());
  record("min-cut-equals-H",
         rps::min_cut(graph.network).capacity == rps::H_value(inst));

  const rps::PaymentVector element = rps::payment_from_flow(inst, graph);
  record("core-element-in-core",
         rps::is_core(inst, element, opt.max_n).in_core);

  bool round_trip = false;
  try {
    round_trip = rps::flow_from_core(inst, element, rps::kDefaultOrientation,
                                     rps::ClampPolicy::ClampToZero,
                                     opt.max_n)
                     .payments() == element;
  } catch (const rps::Error&) {
    round_trip = false;
  }
  record("flow-round-trip", round_trip);

  bool shapley_trip = false;
  try {
    shapley_trip = rps::flow_from_core(inst, closed, rps::kDefaultOrientation,
                                       rps::ClampPolicy::ClampToZero,
                                       opt.max_n)
                       .payments() == closed;
  } catch (const rps::Error&) {
    shapley_trip = false;
  }
  record("shapley-flow-round-trip", shapley_trip);

  if (inst.singleton_sets_only()) {
    const rps::PaymentVector unique = rps::singleton_core(inst);
    record("singleton-coincidence", element == unique && closed == unique);
  } else {
    checks.emplace_back("singleton-coincidence", "skip");
  }

  bool ok = true;
  for (const auto& [name, status] : checks) {
    if (status == "fail") ok = false;
  }

  if (opt.json()) {
    Json root;
    root["checks"] = Json::array();
    for (const auto& [name, status] : checks) {
      root["checks"].push_back({{"name", name}, {"status", status}});
    }
    root["ok"] = ok;
    std::cout << root.dump() << "\n";
  } else {
    for (const auto& [name, status] : checks) {
      const std::string tag = status == "pass"   ? "PASS"
                              : status == "fail" ? "FAIL"
                                                 : "SKIP";
      std::cout << tag << " " << name << "\n";
    }
    std::cout << (ok ? "ok\n" : "failed\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reward-penalty-selection games: exact coalition values, "
               "Shapley payments, core elements via network flow"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-n", opt.max_n, "Player limit for any 2^n enumeration")
      ->envname("RPS_MAX_N")
      ->capture_default_str();

  std::string instance_path, table_path, coalition_text, payment_text,
      dot_path;
  bool as_table = false;

  CLI::App* value = app.add_subcommand("value", "Evaluate v(S)");
  value->add_option("instance", instance_path, "Instance file")->required();
  value->add_option("--coalition", coalition_text,
                    "Comma-separated 1-based players (empty for {})");

  CLI::App* shapley =
      app.add_subcommand("shapley", "Shapley value (closed form)");
  shapley->add_option("instance", instance_path, "Instance file")->required();

  CLI::App* core =
      app.add_subcommand("core", "One core element via maximum flow");
  core->add_option("instance", instance_path, "Instance file")->required();
  core->add_option("--dot", dot_path, "Write the solved network as DOT");

  CLI::App* check =
      app.add_subcommand("check-core", "Exhaustive core membership test");
  check->add_option("instance", instance_path, "Instance file")->required();
  check
      ->add_option("--payment", payment_text,
                   "Comma-separated payments, exact rationals")
      ->required();

  CLI::App* solve =
      app.add_subcommand("solve", "Brute-force optimal selection");
  solve->add_option("instance", instance_path, "Instance file")->required();

  CLI::App* convex =
      app.add_subcommand("convex", "Convexity / superadditivity check");
  convex->add_option("input", instance_path, "Instance (or table) file")
      ->required();
  convex->add_flag("--table", as_table, "Input is a game-table file");

  CLI::App* embed3 = app.add_subcommand(
      "embed3", "Realize a convex 3-player table as an instance");
  embed3->add_option("table", table_path, "Game-table file")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "Run the full property suite");
  verify->add_option("instance", instance_path, "Instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (value->parsed()) return cmd_value(instance_path, coalition_text, opt);
    if (shapley->parsed()) return cmd_shapley(instance_path, opt);
    if (core->parsed()) return cmd_core(instance_path, dot_path, opt);
    if (check->parsed()) {
      return cmd_check_core(instance_path, payment_text, opt);
    }
    if (solve->parsed()) return cmd_solve(instance_path, opt);
    if (convex->parsed()) return cmd_convex(instance_path, as_table, opt);
    if (embed3->parsed()) return cmd_embed3(table_path);
    if (verify->parsed()) return cmd_verify(instance_path, opt);
  } catch (const rps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case rps::ErrorKind::ParseError:
        return 3;
      case rps::ErrorKind::FlowNotMaximal:
      case rps::ErrorKind::ReconstructionFailed:
      case rps::ErrorKind::NegativeResidual:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
