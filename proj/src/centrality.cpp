#include "rgbc/centrality.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "rgbc/error.hpp"
#include "rgbc/parallel.hpp"

namespace rgbc {

namespace {

struct BrandesScratch {
  std::vector<int> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::vector<int>> preds;
  std::vector<int> order;  // BFS visit order, consumed in reverse
  std::vector<int> queue;

  explicit BrandesScratch(int n)
      : dist(n), sigma(n), delta(n), preds(n) {
    order.reserve(n);
    queue.reserve(n);
  }
};

// One source of Brandes' algorithm: BFS with geodesic counting, then
// dependency accumulation into acc.
void accumulate_source(const Graph& g, int s, BrandesScratch& sc,
                       std::vector<double>& acc) {
  std::fill(sc.dist.begin(), sc.dist.end(), -1);
  std::fill(sc.sigma.begin(), sc.sigma.end(), 0.0);
  std::fill(sc.delta.begin(), sc.delta.end(), 0.0);
  for (auto& p : sc.preds) p.clear();
  sc.order.clear();
  sc.queue.clear();

  sc.dist[s] = 0;
  sc.sigma[s] = 1.0;
  sc.queue.push_back(s);
  for (std::size_t head = 0; head < sc.queue.size(); ++head) {
    const int v = sc.queue[head];
    sc.order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (sc.dist[w] < 0) {
        sc.dist[w] = sc.dist[v] + 1;
        sc.queue.push_back(w);
      }
      if (sc.dist[w] == sc.dist[v] + 1) {
        sc.sigma[w] += sc.sigma[v];
        sc.preds[w].push_back(v);
      }
    }
  }
  for (auto it = sc.order.rbegin(); it != sc.order.rend(); ++it) {
    const int w = *it;
    for (int v : sc.preds[w])
      sc.delta[v] += sc.sigma[v] / sc.sigma[w] * (1.0 + sc.delta[w]);
    if (w != s) acc[w] += sc.delta[w];
  }
}

}  // namespace

BetweennessVector betweenness_brandes(const Graph& g, int workers) {
  const int n = g.node_count();
  BetweennessVector out;
  out.norm = Normalization::Raw;
  out.values.assign(n, 0.0);
  if (n == 0) return out;

  // Sources are processed in fixed blocks and the block partials are merged
  // in block order, so the floating-point addition order (and hence the
  // result bits) do not depend on the worker count.
  constexpr int kBlock = 64;
  const int nblocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<double>> partial(nblocks);
  parallel_for(nblocks, workers, [&](int b) {
    std::vector<double> acc(n, 0.0);
    BrandesScratch scratch(n);
    const int lo = b * kBlock;
    const int hi = std::min(n, lo + kBlock);
    for (int s = lo; s < hi; ++s) accumulate_source(g, s, scratch, acc);
    partial[b] = std::move(acc);
  });
  for (int b = 0; b < nblocks; ++b)
    for (int v = 0; v < n; ++v) out.values[v] += partial[b][v];
  // each unordered pair was visited from both endpoints
  for (double& v : out.values) v *= 0.5;
  return out;
}

namespace {

struct PairEnumerator {
  const Graph& g;
  int target = 0;
  int best = std::numeric_limits<int>::max();
  double sigma = 0.0;
  std::vector<double> through;
  std::vector<int> path;
  std::uint32_t visited = 0;
  bool counting = false;

  explicit PairEnumerator(const Graph& graph)
      : g(graph), through(graph.node_count(), 0.0) {}

  void dfs(int v, int len) {
    if (v == target) {
      if (!counting) {
        best = std::min(best, len);
      } else if (len == best) {
        sigma += 1.0;
        for (std::size_t k = 1; k < path.size(); ++k) through[path[k]] += 1.0;
      }
      return;
    }
    if (len >= best) return;  // any extension is longer than the geodesic
    visited |= 1u << v;
    path.push_back(v);
    for (int w : g.neighbors(v)) {
      if (visited & (1u << w)) continue;
      dfs(w, len + 1);
    }
    path.pop_back();
    visited &= ~(1u << v);
  }

  void run(int source, int tgt) {
    target = tgt;
    best = std::numeric_limits<int>::max();
    sigma = 0.0;
    std::fill(through.begin(), through.end(), 0.0);
    counting = false;
    visited = 0;
    path.clear();
    dfs(source, 0);
    if (best == std::numeric_limits<int>::max()) return;  // disconnected pair
    counting = true;
    visited = 0;
    path.clear();
    dfs(source, 0);
  }
};

}  // namespace

BetweennessVector betweenness_bruteforce(const Graph& g) {
  const int n = g.node_count();
  if (n > 12)
    fail(Errc::TooLarge, "brute-force enumeration is limited to 12 nodes");
  BetweennessVector out;
  out.norm = Normalization::Raw;
  out.values.assign(n, 0.0);
  PairEnumerator e(g);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      e.run(i, j);
      if (e.sigma == 0.0) continue;
      for (int v = 0; v < n; ++v)
        if (v != i && v != j && e.through[v] > 0.0)
          out.values[v] += e.through[v] / e.sigma;
    }
  }
  return out;
}

BetweennessVector normalize(const BetweennessVector& v, Normalization mode) {
  if (v.norm == mode) return v;
  const std::size_t n = v.values.size();
  if (n < 3)
    fail(Errc::DegenerateN, "pair normalization requires at least 3 nodes");
  const double pairs = 0.5 * static_cast<double>(n - 1) * static_cast<double>(n - 2);
  BetweennessVector out;
  out.norm = mode;
  out.values.reserve(n);
  const double scale = mode == Normalization::PairNormalized ? 1.0 / pairs : pairs;
  for (double x : v.values) out.values.push_back(x * scale);
  return out;
}

std::vector<int> hop_distances(const Graph& g, int source) {
  const int n = g.node_count();
  if (source < 0 || source >= n)
    fail(Errc::ConfigError, "source out of range");
  std::vector<int> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace rgbc
