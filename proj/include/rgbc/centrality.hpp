#pragma once

#include <vector>

#include "rgbc/rgg.hpp"

namespace rgbc {

enum class Normalization { Raw, PairNormalized };

/// Per-node betweenness values. Raw values count unordered pairs once, so
/// they are bounded by (N-1)(N-2)/2; PairNormalized divides by that bound.
struct BetweennessVector {
  std::vector<double> values;
  Normalization norm = Normalization::Raw;
};

/// Exact betweenness of every node via Brandes' algorithm on hop-count
/// geodesics. Disconnected pairs contribute zero. `workers` splits the
/// source loop over threads; the merge order is fixed independently of the
/// worker count, so results are bit-identical for any value.
BetweennessVector betweenness_brandes(const Graph& g, int workers = 1);

/// Independent oracle: per pair, enumerates all simple paths by depth-first
/// search, keeps the shortest ones and counts pass-throughs. Exponential;
/// guarded to N <= 12.
BetweennessVector betweenness_bruteforce(const Graph& g);

/// Converts between Raw and PairNormalized. Pair normalization requires
/// N >= 3.
BetweennessVector normalize(const BetweennessVector& v, Normalization mode);

/// BFS hop distances from `source`; -1 marks unreachable nodes.
std::vector<int> hop_distances(const Graph& g, int source);

}  // namespace rgbc
