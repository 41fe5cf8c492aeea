#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rps/error.hpp"
#include "rps/flow.hpp"
#include "test_support.hpp"

using namespace rps;
using rps::testing::GenConfig;
using rps::testing::random_instance;

namespace {

// The membership pattern of the worked five-player example: three reward
// sets, two penalty sets.
RpsInstance five_player_example(std::int64_t a1, std::int64_t a2,
                                std::int64_t a3, std::int64_t b1,
                                std::int64_t b2) {
  return make_instance(5,
                       {{{1, 3}, a1}, {{1, 3, 4, 5}, a2}, {{2, 4}, a3}},
                       {{{1, 2, 4, 5}, b1}, {{2, 3}, b2}});
}

}  // namespace

TEST_CASE("H is the total weight mass") {
  CHECK(H_value(make_instance(1, {{{1}, 5}}, {{{1}, 3}})) == 8);
  CHECK(H_value(make_instance(3, {}, {})) == 0);
  CHECK(H_value(five_player_example(1, 2, 3, 4, 5)) == 15);
}

TEST_CASE("profit sharing graph matches the construction") {
  const ProfitSharingGraph g =
      build_profit_sharing_graph(five_player_example(1, 2, 3, 4, 5));
  CHECK(g.network.node_count() == 4 + 5 + 3 + 2);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_supply)).capacity ==
        4 + 5);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_drain)).capacity ==
        1 + 2 + 3);
  CHECK(g.reward_supply.size() == 3);
  CHECK(g.penalty_drain.size() == 2);
  CHECK(g.network.edge(static_cast<std::size_t>(g.reward_supply[1])).capacity ==
        2);
  CHECK(g.network.edge(static_cast<std::size_t>(g.penalty_drain[0])).capacity ==
        4);
  // 3 supplies + 2 drains + 2 aux + 2*5 player carriers + memberships + bypass
  CHECK(g.network.edge_count() == 3u + 2u + 2u + 10u + (2u + 4u + 2u) +
                                      (4u + 2u) + 1u);
}

TEST_CASE("graph of a single-player instance") {
  const ProfitSharingGraph g =
      build_profit_sharing_graph(make_instance(1, {{{1}, 5}}, {{{1}, 3}}));
  CHECK(g.network.edge(static_cast<std::size_t>(g.reward_supply[0])).capacity ==
        5);
  CHECK(g.network.edge(static_cast<std::size_t>(g.penalty_drain[0])).capacity ==
        3);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_supply)).capacity == 3);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_drain)).capacity == 5);
}

TEST_CASE("graph of an instance without sets") {
  const RpsInstance inst = make_instance(3, {}, {});
  const ProfitSharingGraph g = build_profit_sharing_graph(inst);
  CHECK(g.network.node_count() == 7);
  // (s,s-bar), (t-bar,t), per-player carriers, bypass
  CHECK(g.network.edge_count() == 2u + 6u + 1u);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_supply)).capacity == 0);
  CHECK(g.network.edge(static_cast<std::size_t>(g.aux_drain)).capacity == 0);
  FlowNetwork net = g.network;
  CHECK(max_flow(net) == 0);
}

TEST_CASE("max flow on a two-node network") {
  FlowNetwork net;
  const int s = net.add_node({NodeId::Kind::Source, 0});
  const int t = net.add_node({NodeId::Kind::Sink, 0});
  net.set_source(s);
  net.set_sink(t);
  net.add_edge(s, t, 7);
  CHECK(max_flow(net) == 7);
  const CutResult cut = min_cut(net);
  CHECK(cut.capacity == 7);
  CHECK(cut.contains(s));
  CHECK(!cut.contains(t));
}

TEST_CASE("max flow with zero capacities") {
  FlowNetwork net;
  const int s = net.add_node({NodeId::Kind::Source, 0});
  const int v = net.add_node({NodeId::Kind::Player, 1});
  const int t = net.add_node({NodeId::Kind::Sink, 0});
  net.set_source(s);
  net.set_sink(t);
  net.add_edge(s, v, 0);
  net.add_edge(v, t, 0);
  CHECK(max_flow(net) == 0);
  CHECK(min_cut(net).capacity == 0);
}

TEST_CASE("min cut of a disconnected sink is empty") {
  FlowNetwork net;
  const int s = net.add_node({NodeId::Kind::Source, 0});
  net.add_node({NodeId::Kind::Player, 1});
  const int t = net.add_node({NodeId::Kind::Sink, 0});
  net.set_source(s);
  net.set_sink(t);
  net.add_edge(s, 1, 4);
  CHECK(max_flow(net) == 0);
  CHECK(min_cut(net).capacity == 0);
}

TEST_CASE("max flow needs a classic augmenting back edge") {
  // diamond where the greedy first path must be partially undone
  FlowNetwork net;
  const int s = net.add_node({NodeId::Kind::Source, 0});
  const int a = net.add_node({NodeId::Kind::Player, 1});
  const int b = net.add_node({NodeId::Kind::Player, 2});
  const int t = net.add_node({NodeId::Kind::Sink, 0});
  net.set_source(s);
  net.set_sink(t);
  net.add_edge(s, a, 1);
  net.add_edge(s, b, 1);
  net.add_edge(a, b, 1);
  net.add_edge(a, t, 1);
  net.add_edge(b, t, 1);
  CHECK(max_flow(net) == 2);
  CHECK(net.conserves_flow());
}

TEST_CASE("profit sharing graphs always carry a flow of value H") {
  std::mt19937 rng(201);
  GenConfig cfg;
  for (int round = 0; round < 150; ++round) {
    const RpsInstance inst = random_instance(rng, cfg);
    ProfitSharingGraph g = build_profit_sharing_graph(inst);
    const std::int64_t value = max_flow(g.network);
    CHECK(value == H_value(inst));
    CHECK(g.finite_edges_saturated());
    CHECK(g.network.conserves_flow());
    const CutResult cut = min_cut(g.network);
    CHECK(cut.capacity == value);
    CHECK(cut.contains(g.network.source()));
    CHECK(!cut.contains(g.network.sink()));
  }
}

TEST_CASE("solver is deterministic") {
  const RpsInstance inst = five_player_example(3, 1, 4, 2, 5);
  ProfitSharingGraph first = build_profit_sharing_graph(inst);
  ProfitSharingGraph second = build_profit_sharing_graph(inst);
  max_flow(first.network);
  max_flow(second.network);
  for (std::size_t e = 0; e < first.network.edge_count(); ++e) {
    CHECK(first.network.edge(e).flow == second.network.edge(e).flow);
  }
}

TEST_CASE("dot export labels nodes and edges") {
  ProfitSharingGraph g =
      build_profit_sharing_graph(make_instance(2, {{{1, 2}, 2}}, {{{1}, 1}}));
  max_flow(g.network);
  const std::string dot = to_dot(g.network);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"s\"") != std::string::npos);
  CHECK(dot.find("label=\"P_2\"") != std::string::npos);
  CHECK(dot.find("label=\"A_1\"") != std::string::npos);
  CHECK(dot.find("label=\"B_1\"") != std::string::npos);
  CHECK(dot.find("/inf") != std::string::npos);
  CHECK(dot.find("2/2") != std::string::npos);
}
