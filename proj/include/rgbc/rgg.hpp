#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rgbc/geometry.hpp"
#include "rgbc/rng.hpp"

namespace rgbc {

/// Probabilistic link model: connection probability exp(-beta * r^eta).
struct SoftExponential {
  double beta = 1.0;
  double eta = 2.0;
};

/// Hard link model: connected iff separation <= range.
struct HardDisk {
  double range = 1.0;
};

using ConnectionModel = std::variant<SoftExponential, HardDisk>;

double link_probability(const ConnectionModel& m, double r);

/// Fixed substream keys so independently written call sites agree on which
/// child stream feeds node placement and which feeds the per-pair uniforms.
inline constexpr std::uint64_t kPositionStreamKey = 0;
inline constexpr std::uint64_t kPairStreamKey = 1;

struct GraphMeta {
  std::string domain;
  std::string model;
  double rho = 0.0;
  double beta = 0.0;
  double eta = 0.0;
  std::uint64_t seed = 0;
};

/// Undirected graph over embedded nodes. Adjacency lists are kept sorted;
/// edges are stored once per unordered pair.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Point> positions,
        const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return static_cast<int>(pos_.size()); }
  std::int64_t edge_count() const;
  const std::vector<Point>& positions() const { return pos_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int i, int j) const;
  /// Edge list with i < j, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  GraphMeta meta;

 private:
  std::vector<Point> pos_;
  std::vector<std::vector<int>> adj_;
};

/// Samples round(rho * area) node positions uniformly on the domain and links
/// each unordered pair independently per the connection model. Placement uses
/// rng.substream(kPositionStreamKey), pair uniforms rng.substream(kPairStreamKey)
/// in lexicographic (i, j) order, one uniform per pair for either model.
Graph sample_graph(const Domain& d, double rho, const ConnectionModel& m,
                   RngStream& rng);

/// Same link step on externally supplied positions.
Graph sample_graph_at(std::vector<Point> positions, const ConnectionModel& m,
                      RngStream& rng);

bool is_connected(const Graph& g);

/// Per-pair critical levels beta_ij = -ln(u_ij) / r_ij^eta in a flat
/// upper-triangular layout (i < j lexicographic). Under the monotone
/// coupling an edge exists at level beta iff beta <= beta_ij. Coincident
/// pairs (r = 0) are always linked: beta_ij = +infinity.
std::vector<double> pair_beta_levels(const std::vector<Point>& positions,
                                     double eta, RngStream& pair_stream);

/// Graph realized at level beta: edge iff beta_ij >= beta (non-strict, so a
/// graph realized exactly at its threshold keeps the bottleneck edge).
Graph realize_at_beta(const std::vector<Point>& positions,
                      const std::vector<double>& beta_levels, double beta);

struct ThresholdResult {
  double beta = 0.0;  // largest beta at which the coupled graph is connected
  Graph graph;        // realization at that beta (connected)
};

/// Connectivity threshold of the coupled realization: the bottleneck of the
/// maximum spanning tree over the beta_ij levels, computed exactly in O(N^2).
/// Pair uniforms come from rng.substream(kPairStreamKey), matching
/// sample_graph so the two agree on the same draw.
ThresholdResult beta_connectivity_threshold(std::vector<Point> positions,
                                            double eta, RngStream& rng);

}  // namespace rgbc
