#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "rps/core.hpp"
#include "rps/error.hpp"
#include "rps/shapley.hpp"
#include "test_support.hpp"

using namespace rps;
using rps::testing::GenConfig;
using rps::testing::q;
using rps::testing::random_instance;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an rps::Error");
  return ErrorKind::ParseError;
}

PaymentVector payments(std::vector<Rational> values) {
  return PaymentVector(std::move(values));
}

}  // namespace

TEST_CASE("payment_from_flow on hand-checked instances") {
  const RpsInstance solo = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  ProfitSharingGraph g = build_profit_sharing_graph(solo);
  max_flow(g.network);
  const PaymentVector p = payment_from_flow(solo, g);
  CHECK(p[0] == 2);

  const RpsInstance pair = make_instance(2, {{{1, 2}, 2}}, {});
  ProfitSharingGraph g2 = build_profit_sharing_graph(pair);
  max_flow(g2.network);
  const PaymentVector p2 = payment_from_flow(pair, g2);
  CHECK(p2.total() == 2);
  CHECK(p2[0] >= 0);
  CHECK(p2[1] >= 0);
  CHECK(is_core(pair, p2).in_core);

  const RpsInstance empty = make_instance(3, {}, {});
  ProfitSharingGraph g3 = build_profit_sharing_graph(empty);
  max_flow(g3.network);
  for (const Rational& value : payment_from_flow(empty, g3)) {
    CHECK(value == 0);
  }
}

TEST_CASE("payment_from_flow rejects an unsolved graph") {
  const RpsInstance inst = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  const ProfitSharingGraph g = build_profit_sharing_graph(inst);
  CHECK(kind_of([&] { payment_from_flow(inst, g); }) ==
        ErrorKind::FlowNotMaximal);
}

TEST_CASE("is_core on hand-checked vectors") {
  const RpsInstance solo = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  CHECK(is_core(solo, payments({q(2)})).in_core);

  const CoreCheck eff = is_core(solo, payments({q(1)}));
  CHECK(!eff.in_core);
  CHECK(eff.violated == CoreCheck::Property::Efficiency);
  CHECK(eff.witness == Coalition::full(1));
  CHECK(eff.gap == 1);

  const RpsInstance pair = make_instance(2, {{{1, 2}, 2}}, {});
  const CoreCheck cr = is_core(pair, payments({q(3), q(-1)}));
  CHECK(!cr.in_core);
  CHECK(cr.violated == CoreCheck::Property::CoalitionalRationality);
  CHECK(cr.witness == Coalition::of(2, {2}));
  CHECK(cr.gap == 1);  // v({2}) = 0, p({2}) = -1
}

TEST_CASE("is_core returns the lexicographically least witness") {
  // v({1}) = v({2}) = v({3}) = 4 but nothing is paid out; every non-empty
  // coalition violates, {1} is the lex-least witness.
  const RpsInstance inst =
      make_instance(3, {{{1}, 4}, {{2}, 4}, {{3}, 4}}, {});
  const PaymentVector zero(3);
  const CoreCheck check = is_core(inst, payments({q(4), q(4), q(4)}));
  CHECK(check.in_core);
  const CoreCheck bad = is_core(
      inst, payments({q(12), q(0), q(0)}));  // efficient, starves 2 and 3
  CHECK(!bad.in_core);
  CHECK(bad.violated == CoreCheck::Property::CoalitionalRationality);
  CHECK(bad.witness == Coalition::of(3, {2}));
}

TEST_CASE("is_core witness gap is confirmed by recomputation") {
  std::mt19937 rng(301);
  GenConfig cfg;
  cfg.min_players = 2;
  for (int round = 0; round < 60; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    PaymentVector p = shapley_closed_form(inst);
    // misdirect a random amount from one player to another
    const std::size_t from = static_cast<std::size_t>(
        rps::testing::rand_int(rng, 0, inst.player_count() - 1));
    const std::size_t to = static_cast<std::size_t>(
        rps::testing::rand_int(rng, 0, inst.player_count() - 1));
    const Rational delta = rps::testing::rand_int(rng, 1, 40);
    p[from] -= delta;
    p[to] += delta;
    const CoreCheck check = is_core(inst, p);
    if (check.in_core) continue;
    CHECK(check.violated == CoreCheck::Property::CoalitionalRationality);
    const Rational direct =
        Rational(inst.char_value(check.witness)) - p.total(check.witness);
    CHECK(check.gap == direct);
    CHECK(check.gap > 0);
  }
}

TEST_CASE("core_element lands in the core") {
  std::mt19937 rng(302);
  GenConfig cfg;
  cfg.max_players = 10;
  for (int round = 0; round < 150; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    const PaymentVector p = core_element(inst);
    CHECK(p.total() == inst.grand_value());
    CHECK(is_core(inst, p).in_core);
  }
}

TEST_CASE("core_element of the two-player symmetric game sits on the segment") {
  const RpsInstance inst = make_instance(2, {{{1, 2}, 2}}, {});
  const PaymentVector p = core_element(inst);
  CHECK(p.total() == 2);
  CHECK(p[0] >= 0);
  CHECK(p[0] <= 2);
  CHECK(is_core(inst, p).in_core);
}

TEST_CASE("singleton_core formula and errors") {
  const PaymentVector p =
      singleton_core(make_instance(2, {{{1}, 4}}, {{{2}, 1}}));
  CHECK(p[0] == 4);
  CHECK(p[1] == -1);
  CHECK(singleton_core(make_instance(1, {{{1}, 5}}, {{{1}, 3}}))[0] == 2);
  CHECK(kind_of([] {
          singleton_core(make_instance(2, {{{1, 2}, 1}}, {}));
        }) == ErrorKind::NotSingletonInstance);
}

TEST_CASE("singleton instances: all three computations coincide") {
  std::mt19937 rng(303);
  GenConfig cfg;
  cfg.singleton_sets = true;
  for (int round = 0; round < 120; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    const PaymentVector unique = singleton_core(inst);
    CHECK(core_element(inst) == unique);
    CHECK(shapley_closed_form(inst) == unique);
    CHECK(is_core(inst, unique).in_core);
  }
}

TEST_CASE("flow_from_core rebuilds a value-H flow") {
  const RpsInstance solo = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  const FlowReconstruction rec = flow_from_core(solo, payments({q(2)}));
  CHECK(rec.value == 8);
  CHECK(rec.scale == 1);
  CHECK(!rec.bypass_clamped);
  CHECK(rec.payments() == payments({q(2)}));
}

TEST_CASE("flow_from_core rejects non-core vectors") {
  const RpsInstance solo = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  CHECK(kind_of([&] { flow_from_core(solo, payments({q(1)})); }) ==
        ErrorKind::NotInCore);
}

TEST_CASE("round trip: extract, rebuild, extract again") {
  std::mt19937 rng(304);
  GenConfig cfg;
  for (int round = 0; round < 120; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    const PaymentVector p = core_element(inst);
    const FlowReconstruction rec = flow_from_core(inst, p);
    CHECK(rec.value == H_value(inst));
    CHECK(rec.scale == 1);
    CHECK(!rec.bypass_clamped);
    CHECK(rec.payments() == p);
    CHECK(rec.graph.network.conserves_flow());
  }
}

TEST_CASE("round trip with rational payments scales exactly") {
  std::mt19937 rng(305);
  GenConfig cfg;
  for (int round = 0; round < 80; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    const PaymentVector phi = shapley_closed_form(inst);
    const FlowReconstruction rec = flow_from_core(inst, phi);
    CHECK(rec.value == H_value(rec.scaled_instance));
    CHECK(rec.payments() == phi);
  }
}

TEST_CASE("the mirrored orientation does not produce core vectors") {
  // Under the mirrored orientation the extracted vector solves the
  // negated game, so it can satisfy efficiency only when v(N) = 0; and
  // rebuilding with mirrored capacities starves the player carriers. Both
  // failures pin the default orientation.
  const RpsInstance inst = make_instance(1, {{{1}, 5}}, {{{1}, 3}});
  ProfitSharingGraph g = build_profit_sharing_graph(inst);
  max_flow(g.network);
  const PaymentVector mirrored =
      payment_from_flow(inst, g, FlowOrientation::PaymentFromAuxSource);
  CHECK(mirrored.total() == -2);
  CHECK(!is_core(inst, mirrored).in_core);

  CHECK(kind_of([&] {
          flow_from_core(inst, PaymentVector(std::vector<Rational>{q(2)}),
                         FlowOrientation::PaymentFromAuxSource,
                         ClampPolicy::ClampToZero);
        }) == ErrorKind::ReconstructionFailed);
}

TEST_CASE("bypass clamp policy") {
  // p = (5): all mass flows to the aux source under the mirrored
  // orientation, pushing the bypass capacity negative.
  const RpsInstance inst = make_instance(1, {{{1}, 5}}, {});
  CHECK(kind_of([&] {
          flow_from_core(inst, PaymentVector(std::vector<Rational>{q(5)}),
                         FlowOrientation::PaymentFromAuxSource,
                         ClampPolicy::Reject);
        }) == ErrorKind::NegativeAuxCapacity);
  // with clamping the capacity is floored at zero and the value-H check
  // reports the inconsistency instead
  CHECK(kind_of([&] {
          flow_from_core(inst, PaymentVector(std::vector<Rational>{q(5)}),
                         FlowOrientation::PaymentFromAuxSource,
                         ClampPolicy::ClampToZero);
        }) == ErrorKind::ReconstructionFailed);
  // the default orientation reconstructs the same vector without fuss
  const FlowReconstruction rec =
      flow_from_core(inst, PaymentVector(std::vector<Rational>{q(5)}));
  CHECK(rec.value == 5);
  CHECK(!rec.bypass_clamped);
}

TEST_CASE("core_element stays polynomial for wide instances") {
  // 60 players is far past any 2^n enumeration
  RawInstance raw;
  raw.players = 60;
  for (int i = 0; i < 40; ++i) {
    raw.rewards.push_back({{1 + (i % 60), 1 + ((i * 7 + 3) % 60)}, 5});
    raw.penalties.push_back({{1 + ((i * 11 + 2) % 60)}, 3});
  }
  for (RawSet& set : raw.rewards) {
    if (set.members[0] == set.members[1]) set.members.pop_back();
  }
  const RpsInstance inst = RpsInstance::validate(raw);
  const PaymentVector p = core_element(inst);
  CHECK(p.total() == inst.grand_value());

  // past the enumeration guard the core gate is skipped; the value-H and
  // readback assertions still close the round trip
  const FlowReconstruction rec = flow_from_core(inst, p);
  CHECK(rec.value == H_value(inst));
  CHECK(rec.payments() == p);
}
