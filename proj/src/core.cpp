#include "rps/core.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "rps/error.hpp"

namespace rps {

namespace {

std::int64_t edge_flow(const ProfitSharingGraph& graph, int edge_id) {
  return graph.network.edge(static_cast<std::size_t>(edge_id)).flow;
}

std::int64_t extract_raw(const ProfitSharingGraph& graph, int player,
                         FlowOrientation orientation) {
  const std::int64_t out =
      edge_flow(graph, graph.player_out[static_cast<std::size_t>(player)]);
  const std::int64_t in =
      edge_flow(graph, graph.player_in[static_cast<std::size_t>(player)]);
  return orientation == FlowOrientation::PaymentToAuxSink ? out - in
                                                          : in - out;
}

std::int64_t checked_int64(const BigInt& value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    fail(ErrorKind::Overflow, std::string(what) + " leaves the 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

PaymentVector payment_from_flow(const RpsInstance& instance,
                                const ProfitSharingGraph& graph,
                                FlowOrientation orientation) {
  const std::int64_t h = H_value(instance);
  const std::int64_t value = graph.network.flow_value();
  if (value != h) {
    fail(ErrorKind::FlowNotMaximal, "flow value " + std::to_string(value) +
                                        " but H = " + std::to_string(h));
  }
  PaymentVector out(static_cast<std::size_t>(instance.player_count()));
  for (int p = 0; p < instance.player_count(); ++p) {
    out[static_cast<std::size_t>(p)] = extract_raw(graph, p, orientation);
  }
  return out;
}

PaymentVector core_element(const RpsInstance& instance,
                           FlowOrientation orientation) {
  ProfitSharingGraph graph = build_profit_sharing_graph(instance);
  max_flow(graph.network);
  return payment_from_flow(instance, graph, orientation);
}

CoreCheck is_core(const RpsInstance& instance, const PaymentVector& payments,
                  int max_n, Exec exec) {
  const int n = instance.player_count();
  if (payments.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("payment vector length mismatch");
  }

  const Rational grand = instance.grand_value();
  if (payments.total() != grand) {
    CoreCheck check;
    check.in_core = false;
    check.violated = CoreCheck::Property::Efficiency;
    check.witness = instance.full_coalition();
    check.gap = grand - payments.total();
    return check;
  }

  const std::vector<std::int64_t> table = dense_char_table(instance, max_n,
                                                           exec);
  const GapScan scan = rationality_scan(table, payments, n, exec);
  if (!scan.found) return CoreCheck::ok();

  CoreCheck check;
  check.in_core = false;
  check.violated = CoreCheck::Property::CoalitionalRationality;
  check.witness = Coalition::from_mask(n, scan.witness);
  check.gap = Rational(table[scan.witness]) - payments.total(check.witness);
  return check;
}

PaymentVector singleton_core(const RpsInstance& instance) {
  for (const WeightedSet& set : instance.rewards()) {
    if (set.members.size() != 1) {
      fail(ErrorKind::NotSingletonInstance,
           "reward set with " + std::to_string(set.members.size()) +
               " members");
    }
  }
  for (const WeightedSet& set : instance.penalties()) {
    if (set.members.size() != 1) {
      fail(ErrorKind::NotSingletonInstance,
           "penalty set with " + std::to_string(set.members.size()) +
               " members");
    }
  }
  PaymentVector out(static_cast<std::size_t>(instance.player_count()));
  for (const WeightedSet& set : instance.rewards()) {
    out[static_cast<std::size_t>(set.members.front()) - 1] += set.weight;
  }
  for (const WeightedSet& set : instance.penalties()) {
    out[static_cast<std::size_t>(set.members.front()) - 1] -= set.weight;
  }
  return out;
}

PaymentVector FlowReconstruction::payments() const {
  PaymentVector out(
      static_cast<std::size_t>(scaled_instance.player_count()));
  for (int p = 0; p < scaled_instance.player_count(); ++p) {
    out[static_cast<std::size_t>(p)] =
        Rational(BigInt(extract_raw(graph, p, orientation)), scale);
  }
  return out;
}

FlowReconstruction flow_from_core(const RpsInstance& instance,
                                  const PaymentVector& payments,
                                  FlowOrientation orientation,
                                  ClampPolicy clamp, int max_n) {
  const int n = instance.player_count();
  if (payments.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("payment vector length mismatch");
  }

  // Core membership is a precondition; enforce it whenever the exhaustive
  // check is within reach.
  if (n <= max_n && n <= kMaxMaskPlayers) {
    const CoreCheck check = is_core(instance, payments, max_n);
    if (!check.in_core) {
      fail(ErrorKind::NotInCore,
           "payment vector violates " +
               std::string(check.violated == CoreCheck::Property::Efficiency
                               ? "efficiency"
                               : "coalitional rationality") +
               " at {" + check.witness.to_string() + "}");
    }
  }

  // Solve integrally: scale everything by the common denominator.
  const BigInt scale = common_denominator(
      std::vector<Rational>(payments.begin(), payments.end()));

  RawInstance scaled_raw;
  scaled_raw.players = n;
  for (const WeightedSet& set : instance.rewards()) {
    scaled_raw.rewards.push_back(
        {set.members, checked_int64(BigInt(set.weight) * scale,
                                    "scaled reward weight")});
  }
  for (const WeightedSet& set : instance.penalties()) {
    scaled_raw.penalties.push_back(
        {set.members, checked_int64(BigInt(set.weight) * scale,
                                    "scaled penalty weight")});
  }
  RpsInstance scaled = RpsInstance::validate(scaled_raw);

  std::vector<std::int64_t> scaled_pay(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    const Rational q = payments[static_cast<std::size_t>(p)] * scale;
    scaled_pay[static_cast<std::size_t>(p)] =
        checked_int64(numerator(q), "scaled payment");
  }

  FlowReconstruction result{build_profit_sharing_graph(scaled),
                            scaled,
                            scale,
                            0,
                            false,
                            orientation};
  ProfitSharingGraph& graph = result.graph;

  // Replace the unbounded payment carriers with the finite capacities the
  // target vector dictates.
  std::int64_t aux_source_cap_total = 0;
  for (int p = 0; p < n; ++p) {
    const std::int64_t q = scaled_pay[static_cast<std::size_t>(p)];
    const std::int64_t positive = q > 0 ? q : 0;
    const std::int64_t negative = q < 0 ? -q : 0;
    FlowEdge& in_edge = graph.network.edge(
        static_cast<std::size_t>(graph.player_in[static_cast<std::size_t>(p)]));
    FlowEdge& out_edge = graph.network.edge(static_cast<std::size_t>(
        graph.player_out[static_cast<std::size_t>(p)]));
    if (orientation == FlowOrientation::PaymentToAuxSink) {
      out_edge.capacity = positive;
      in_edge.capacity = negative;
    } else {
      in_edge.capacity = positive;
      out_edge.capacity = negative;
    }
    in_edge.unbounded = false;
    out_edge.unbounded = false;
    aux_source_cap_total += in_edge.capacity;
  }

  // The bypass takes whatever share of sum(b) the players do not carry.
  std::int64_t bypass_cap = scaled.penalty_total() - aux_source_cap_total;
  if (bypass_cap < 0) {
    if (clamp == ClampPolicy::Reject) {
      fail(ErrorKind::NegativeAuxCapacity,
           "bypass capacity " + std::to_string(bypass_cap));
    }
    bypass_cap = 0;
    result.bypass_clamped = true;
  }
  FlowEdge& bypass =
      graph.network.edge(static_cast<std::size_t>(graph.aux_bypass));
  bypass.capacity = bypass_cap;
  bypass.unbounded = false;

  result.value = max_flow(graph.network);
  const std::int64_t h = H_value(scaled);
  if (result.value != h) {
    fail(ErrorKind::ReconstructionFailed,
         "maximum flow " + std::to_string(result.value) + " is below H = " +
             std::to_string(h));
  }
  for (int p = 0; p < n; ++p) {
    if (extract_raw(graph, p, orientation) !=
        scaled_pay[static_cast<std::size_t>(p)]) {
      fail(ErrorKind::ReconstructionFailed,
           "reconstructed flow does not induce the requested payments");
    }
  }
  return result;
}

}  // namespace rps
