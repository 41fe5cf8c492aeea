#include "rps/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "rps/error.hpp"

namespace rps {

std::string NodeId::label() const {
  switch (kind) {
    case Kind::Source: return "s";
    case Kind::Sink: return "t";
    case Kind::AuxSource: return "s̄";
    case Kind::AuxSink: return "t̄";
    case Kind::Player: return "P_" + std::to_string(index);
    case Kind::Reward: return "A_" + std::to_string(index);
    case Kind::Penalty: return "B_" + std::to_string(index);
  }
  return "?";
}

int FlowNetwork::add_node(NodeId id) {
  nodes_.push_back(id);
  return static_cast<int>(nodes_.size()) - 1;
}

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity,
                          bool unbounded) {
  if (from < 0 || from >= node_count() || to < 0 || to >= node_count()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  edges_.push_back(FlowEdge{from, to, capacity, 0, unbounded});
  return static_cast<int>(edges_.size()) - 1;
}

void FlowNetwork::clear_flow() {
  for (FlowEdge& e : edges_) e.flow = 0;
}

std::int64_t FlowNetwork::flow_value() const {
  std::int64_t out = 0;
  for (const FlowEdge& e : edges_) {
    if (e.from == source_) out += e.flow;
    if (e.to == source_) out -= e.flow;
  }
  return out;
}

bool FlowNetwork::conserves_flow() const {
  std::vector<std::int64_t> balance(static_cast<std::size_t>(node_count()), 0);
  for (const FlowEdge& e : edges_) {
    if (e.flow < 0 || e.flow > e.capacity) return false;
    balance[static_cast<std::size_t>(e.from)] -= e.flow;
    balance[static_cast<std::size_t>(e.to)] += e.flow;
  }
  for (int v = 0; v < node_count(); ++v) {
    if (v == source_ || v == sink_) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) return false;
  }
  return true;
}

bool CutResult::contains(int node) const {
  return std::binary_search(source_side.begin(), source_side.end(), node);
}

std::int64_t H_value(const RpsInstance& instance) {
  unsigned __int128 mass =
      static_cast<unsigned __int128>(instance.reward_total()) +
      static_cast<unsigned __int128>(instance.penalty_total());
  if (mass > static_cast<unsigned __int128>(
                 std::numeric_limits<std::int64_t>::max())) {
    fail(ErrorKind::Overflow, "H exceeds the 64-bit range");
  }
  return static_cast<std::int64_t>(mass);
}

ProfitSharingGraph build_profit_sharing_graph(const RpsInstance& instance) {
  const int n = instance.player_count();
  const std::int64_t cap_h = H_value(instance);

  ProfitSharingGraph g;
  FlowNetwork& net = g.network;
  const int s = net.add_node({NodeId::Kind::Source, 0});
  const int t = net.add_node({NodeId::Kind::Sink, 0});
  const int s_bar = net.add_node({NodeId::Kind::AuxSource, 0});
  const int t_bar = net.add_node({NodeId::Kind::AuxSink, 0});
  net.set_source(s);
  net.set_sink(t);

  std::vector<int> player_node(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    player_node[static_cast<std::size_t>(p)] =
        net.add_node({NodeId::Kind::Player, p + 1});
  }
  std::vector<int> reward_node;
  for (std::size_t i = 0; i < instance.rewards().size(); ++i) {
    reward_node.push_back(
        net.add_node({NodeId::Kind::Reward, static_cast<int>(i) + 1}));
  }
  std::vector<int> penalty_node;
  for (std::size_t j = 0; j < instance.penalties().size(); ++j) {
    penalty_node.push_back(
        net.add_node({NodeId::Kind::Penalty, static_cast<int>(j) + 1}));
  }

  for (std::size_t i = 0; i < instance.rewards().size(); ++i) {
    g.reward_supply.push_back(
        net.add_edge(s, reward_node[i], instance.rewards()[i].weight));
  }
  for (std::size_t j = 0; j < instance.penalties().size(); ++j) {
    g.penalty_drain.push_back(
        net.add_edge(penalty_node[j], t, instance.penalties()[j].weight));
  }
  g.aux_supply = net.add_edge(s, s_bar, instance.penalty_total());
  g.aux_drain = net.add_edge(t_bar, t, instance.reward_total());
  for (int p = 0; p < n; ++p) {
    g.player_in.push_back(
        net.add_edge(s_bar, player_node[static_cast<std::size_t>(p)], cap_h,
                     true));
  }
  for (int p = 0; p < n; ++p) {
    g.player_out.push_back(
        net.add_edge(player_node[static_cast<std::size_t>(p)], t_bar, cap_h,
                     true));
  }
  for (std::size_t i = 0; i < instance.rewards().size(); ++i) {
    for (int p : instance.rewards()[i].members) {
      net.add_edge(reward_node[i],
                   player_node[static_cast<std::size_t>(p) - 1], cap_h, true);
    }
  }
  for (std::size_t j = 0; j < instance.penalties().size(); ++j) {
    for (int p : instance.penalties()[j].members) {
      net.add_edge(player_node[static_cast<std::size_t>(p) - 1],
                   penalty_node[j], cap_h, true);
    }
  }
  g.aux_bypass = net.add_edge(s_bar, t_bar, cap_h, true);
  return g;
}

bool ProfitSharingGraph::finite_edges_saturated() const {
  const auto saturated = [&](int id) {
    const FlowEdge& e = network.edge(static_cast<std::size_t>(id));
    return e.flow == e.capacity;
  };
  for (int id : reward_supply) {
    if (!saturated(id)) return false;
  }
  for (int id : penalty_drain) {
    if (!saturated(id)) return false;
  }
  return saturated(aux_supply) && saturated(aux_drain);
}

namespace {

// Residual-arc Dinic solver. Arc 2k is edge k, arc 2k+1 its reverse.
class DinicSolver {
 public:
  explicit DinicSolver(const FlowNetwork& net)
      : node_count_(net.node_count()),
        adjacency_(static_cast<std::size_t>(net.node_count())),
        level_(static_cast<std::size_t>(net.node_count())),
        cursor_(static_cast<std::size_t>(net.node_count())) {
    arcs_.reserve(net.edge_count() * 2);
    for (std::size_t k = 0; k < net.edge_count(); ++k) {
      const FlowEdge& e = net.edge(k);
      adjacency_[static_cast<std::size_t>(e.from)].push_back(
          static_cast<int>(arcs_.size()));
      arcs_.push_back({e.to, e.capacity});
      adjacency_[static_cast<std::size_t>(e.to)].push_back(
          static_cast<int>(arcs_.size()));
      arcs_.push_back({e.from, 0});
    }
  }

  std::int64_t run(int source, int sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (true) {
        const std::int64_t pushed =
            dfs(source, sink, std::numeric_limits<std::int64_t>::max());
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Flow over edge k once run() finished.
  std::int64_t edge_flow(std::size_t k, std::int64_t original_capacity) const {
    return original_capacity - arcs_[2 * k].residual;
  }

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int arc : adjacency_[static_cast<std::size_t>(v)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(arc)];
        if (a.residual > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  std::int64_t dfs(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    auto& edges_of_v = adjacency_[static_cast<std::size_t>(v)];
    for (std::size_t& i = cursor_[static_cast<std::size_t>(v)];
         i < edges_of_v.size(); ++i) {
      const int arc = edges_of_v[i];
      Arc& a = arcs_[static_cast<std::size_t>(arc)];
      if (a.residual <= 0 ||
          level_[static_cast<std::size_t>(a.to)] !=
              level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      const std::int64_t pushed =
          dfs(a.to, sink, std::min(limit, a.residual));
      if (pushed > 0) {
        a.residual -= pushed;
        arcs_[static_cast<std::size_t>(arc ^ 1)].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int node_count_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

std::int64_t max_flow(FlowNetwork& network) {
  if (network.source() < 0 || network.sink() < 0) {
    throw std::invalid_argument("source/sink not set");
  }
  network.clear_flow();
  DinicSolver solver(network);
  const std::int64_t value = solver.run(network.source(), network.sink());
  for (std::size_t k = 0; k < network.edge_count(); ++k) {
    network.edge(k).flow = solver.edge_flow(k, network.edge(k).capacity);
  }
  return value;
}

CutResult min_cut(const FlowNetwork& network) {
  // Residual reachability: forward along spare capacity, backward along
  // positive flow.
  std::vector<std::vector<std::pair<int, bool>>> residual(
      static_cast<std::size_t>(network.node_count()));
  for (std::size_t k = 0; k < network.edge_count(); ++k) {
    const FlowEdge& e = network.edge(k);
    if (e.residual() > 0) {
      residual[static_cast<std::size_t>(e.from)].push_back({e.to, true});
    }
    if (e.flow > 0) {
      residual[static_cast<std::size_t>(e.to)].push_back({e.from, true});
    }
  }

  std::vector<bool> reachable(static_cast<std::size_t>(network.node_count()),
                              false);
  std::queue<int> queue;
  queue.push(network.source());
  reachable[static_cast<std::size_t>(network.source())] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (const auto& [to, _] : residual[static_cast<std::size_t>(v)]) {
      if (!reachable[static_cast<std::size_t>(to)]) {
        reachable[static_cast<std::size_t>(to)] = true;
        queue.push(to);
      }
    }
  }

  CutResult cut;
  for (int v = 0; v < network.node_count(); ++v) {
    if (reachable[static_cast<std::size_t>(v)]) cut.source_side.push_back(v);
  }
  for (const FlowEdge& e : network.edges()) {
    if (reachable[static_cast<std::size_t>(e.from)] &&
        !reachable[static_cast<std::size_t>(e.to)]) {
      cut.capacity += e.capacity;
    }
  }
  return cut;
}

std::string to_dot(const FlowNetwork& network) {
  std::string out = "digraph profit_sharing {\n  rankdir=LR;\n";
  for (int v = 0; v < network.node_count(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" +
           network.node(v).label() + "\"];\n";
  }
  for (const FlowEdge& e : network.edges()) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + std::to_string(e.flow) + "/" +
           (e.unbounded ? std::string("inf") : std::to_string(e.capacity)) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rps
