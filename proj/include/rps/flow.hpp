#ifndef RPS_FLOW_HPP
#define RPS_FLOW_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rps/instance.hpp"

namespace rps {

/// Typed node of the profit-sharing graph.
struct NodeId {
  enum class Kind {
    Source,     // s
    Sink,       // t
    AuxSource,  // s-bar
    AuxSink,    // t-bar
    Player,     // one node per player
    Reward,     // one node per reward set
    Penalty,    // one node per penalty set
  };

  Kind kind = Kind::Source;
  int index = 0;  // 1-based player / set index; unused for the four anchors

  std::string label() const;
  bool operator==(const NodeId&) const = default;
};

/// Directed edge with an integral capacity and the flow currently assigned
/// to it. Edges whose capacity in the abstract construction is infinite are
/// built with the finite surrogate H (no s-t flow can exceed H, the total
/// out-capacity of s) and flagged as unbounded for reporting.
struct FlowEdge {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
  std::int64_t flow = 0;
  bool unbounded = false;

  std::int64_t residual() const { return capacity - flow; }
};

/// Mutable flow network. Construction order of edges is the deterministic
/// adjacency order used by the solver, so identical build sequences give
/// identical flows. A network being solved must stay confined to one
/// thread.
class FlowNetwork {
 public:
  int add_node(NodeId id);
  int add_edge(int from, int to, std::int64_t capacity,
               bool unbounded = false);

  void set_source(int node) { source_ = node; }
  void set_sink(int node) { sink_ = node; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  const NodeId& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const FlowEdge& edge(std::size_t i) const { return edges_[i]; }
  FlowEdge& edge(std::size_t i) { return edges_[i]; }
  const std::vector<FlowEdge>& edges() const { return edges_; }

  void clear_flow();
  /// Net flow leaving the source.
  std::int64_t flow_value() const;
  /// Inflow minus outflow mismatch check at every node except s and t.
  bool conserves_flow() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<FlowEdge> edges_;
  int source_ = -1;
  int sink_ = -1;
};

/// An s-t cut: the source side as node indices plus its capacity.
struct CutResult {
  std::vector<int> source_side;
  std::int64_t capacity = 0;

  bool contains(int node) const;
};

/// Sum of all weights, H = sum(a) + sum(b); the value every maximum flow of
/// the profit-sharing graph attains. Errors: Overflow.
std::int64_t H_value(const RpsInstance& instance);

/// The profit-sharing graph of an instance together with the edge indices
/// needed to read payments back out of a flow:
///
///   s -> A_i        capacity a_i          (reward supply)
///   B_j -> t        capacity b_j          (penalty drain)
///   s -> s-bar      capacity sum(b)
///   t-bar -> t      capacity sum(a)
///   s-bar -> i, i -> t-bar   per player   (payment carriers, unbounded)
///   A_i -> p (p in A_i), p -> B_j (p in B_j), s-bar -> t-bar   (unbounded)
struct ProfitSharingGraph {
  FlowNetwork network;

  std::vector<int> reward_supply;   // edge ids of (s, A_i)
  std::vector<int> penalty_drain;   // edge ids of (B_j, t)
  int aux_supply = -1;              // (s, s-bar)
  int aux_drain = -1;               // (t-bar, t)
  std::vector<int> player_in;       // (s-bar, i) per player
  std::vector<int> player_out;      // (i, t-bar) per player
  int aux_bypass = -1;              // (s-bar, t-bar)

  /// True when every finite-capacity edge of the construction carries flow
  /// equal to its capacity (the signature of a value-H flow).
  bool finite_edges_saturated() const;
};

ProfitSharingGraph build_profit_sharing_graph(const RpsInstance& instance);

/// Dinic's algorithm: integral maximum s-t flow. Fills the per-edge flows
/// and returns the flow value. Deterministic for a fixed edge insertion
/// order.
std::int64_t max_flow(FlowNetwork& network);

/// Minimum cut from a solved network: the source side is everything
/// reachable from s in the residual graph; its capacity equals the
/// max-flow value.
CutResult min_cut(const FlowNetwork& network);

/// GraphViz rendering with "flow/capacity" edge labels.
std::string to_dot(const FlowNetwork& network);

}  // namespace rps

#endif  // RPS_FLOW_HPP
