#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "sparrow/error.hpp"
#include "sparrow/planner.hpp"

namespace sparrow {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::NearestNeighbor: return "nearest_neighbor";
    case Algorithm::Christofides: return "christofides";
    case Algorithm::Optimal: return "optimal";
    case Algorithm::Hybrid: return "hybrid";
  }
  return "unknown";
}

std::string_view to_string(Matching m) {
  switch (m) {
    case Matching::None: return "none";
    case Matching::Exact: return "exact";
    case Matching::Greedy: return "greedy";
  }
  return "unknown";
}

DistanceMatrix::DistanceMatrix(const GroundPoint& ref,
                               std::span<const GroundPoint> weeds)
    : n_(weeds.size() + 1), d_(n_ * n_, 0.0) {
  auto point = [&](std::size_t i) { return i == 0 ? ref : weeds[i - 1]; };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = distance(point(i), point(j));
      d_[i * n_ + j] = d;
      d_[j * n_ + i] = d;
    }
  }
}

DistanceMatrix build_distance_matrix(const GroundPoint& ref,
                                     std::span<const GroundPoint> weeds) {
  return DistanceMatrix(ref, weeds);
}

double tour_length(const SprayPlan& plan, std::span<const GroundPoint> weeds) {
  const std::size_t n = weeds.size();
  if (plan.order.size() != n) {
    throw ValidationError("plan visits " + std::to_string(plan.order.size()) +
                          " targets but there are " + std::to_string(n) + " weeds");
  }
  std::vector<bool> seen(n, false);
  for (const auto idx : plan.order) {
    if (idx >= n || seen[idx]) {
      throw ValidationError("plan order is not a permutation of the weed indices");
    }
    seen[idx] = true;
  }
  if (n == 0) return 0.0;

  auto walk = [&](auto first, auto last) {
    double sum = 0.0;
    GroundPoint prev = plan.start;
    for (auto it = first; it != last; ++it) {
      sum += distance(prev, weeds[*it]);
      prev = weeds[*it];
    }
    if (plan.closed) sum += distance(prev, plan.start);
    return sum;
  };
  const double forward = walk(plan.order.begin(), plan.order.end());
  if (!plan.closed) return forward;
  return std::min(forward, walk(plan.order.rbegin(), plan.order.rend()));
}

SprayPlan plan_nearest_neighbor(const GroundPoint& ref,
                                std::span<const GroundPoint> weeds,
                                Closure closure) {
  SprayPlan plan;
  plan.start = ref;
  plan.algorithm = Algorithm::NearestNeighbor;
  plan.inner = Algorithm::NearestNeighbor;
  plan.closed = closure == Closure::Closed;

  const DistanceMatrix d(ref, weeds);
  const std::size_t n = weeds.size();
  std::vector<bool> visited(n + 1, false);
  visited[0] = true;
  std::size_t current = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= n; ++j) {
      if (!visited[j] && d(current, j) < best_d) {
        best_d = d(current, j);
        best = j;
      }
    }
    visited[best] = true;
    plan.order.push_back(best - 1);
    current = best;
  }
  plan.length = tour_length(plan, weeds);
  return plan;
}

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// Prim's algorithm on the dense matrix, lowest index wins ties.
std::vector<Edge> minimum_spanning_tree(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  std::vector<bool> in_tree(n, false);
  std::vector<Edge> edges;
  key[0] = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || key[v] < key[u])) u = v;
    }
    in_tree[u] = true;
    if (u != 0) edges.emplace_back(parent[u], u);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && d(u, v) < key[v]) {
        key[v] = d(u, v);
        parent[v] = u;
      }
    }
  }
  return edges;
}

// Minimum-weight perfect matching by DP over subsets of the odd vertices.
std::vector<Edge> exact_matching(const DistanceMatrix& d,
                                 const std::vector<std::size_t>& odd) {
  const std::size_t k = odd.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  // best[mask] = min cost to match the vertices in mask; partner[mask] is the
  // vertex paired with the lowest set bit.
  std::vector<double> best(full + 1, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> partner(full + 1, 0);
  best[0] = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & ~(std::size_t{1} << i);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(rest & (std::size_t{1} << j))) continue;
      const std::size_t sub = rest & ~(std::size_t{1} << j);
      const double cost = best[sub] + d(odd[i], odd[j]);
      if (cost < best[mask]) {
        best[mask] = cost;
        partner[mask] = j;
      }
    }
  }
  std::vector<Edge> pairs;
  std::size_t mask = full;
  while (mask != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t j = partner[mask];
    pairs.emplace_back(odd[i], odd[j]);
    mask &= ~((std::size_t{1} << i) | (std::size_t{1} << j));
  }
  return pairs;
}

// Repeatedly pair the globally closest unmatched vertices.
std::vector<Edge> greedy_matching(const DistanceMatrix& d,
                                  const std::vector<std::size_t>& odd) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < odd.size(); ++a) {
    for (std::size_t b = a + 1; b < odd.size(); ++b) {
      candidates.emplace_back(d(odd[a], odd[b]), odd[a], odd[b]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<bool> matched(d.size(), false);
  std::vector<Edge> pairs;
  for (const auto& [w, u, v] : candidates) {
    if (!matched[u] && !matched[v]) {
      matched[u] = matched[v] = true;
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

// Hierholzer's algorithm on a connected multigraph with all degrees even.
std::vector<std::size_t> eulerian_circuit(std::size_t n,
                                          const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    auto& c = cursor[v];
    while (c < incident[v].size() && used[incident[v][c]]) ++c;
    if (c == incident[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const std::size_t e = incident[v][c];
      used[e] = true;
      stack.push_back(edges[e].first == v ? edges[e].second : edges[e].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

// A closed tour and its reverse are the same cycle; pick the orientation that
// starts at the lower index so near-equal floating sums cannot flip it.
void canonical_orientation(SprayPlan& plan) {
  if (plan.closed && plan.order.size() > 1 && plan.order.front() > plan.order.back()) {
    std::reverse(plan.order.begin(), plan.order.end());
  }
}

}  // namespace

SprayPlan plan_christofides(const GroundPoint& ref,
                            std::span<const GroundPoint> weeds,
                            Closure closure) {
  SprayPlan plan;
  plan.start = ref;
  plan.algorithm = Algorithm::Christofides;
  plan.inner = Algorithm::Christofides;
  plan.closed = closure == Closure::Closed;
  plan.matching = Matching::Exact;
  if (weeds.empty()) return plan;

  const DistanceMatrix d(ref, weeds);
  const std::size_t n = d.size();

  std::vector<Edge> multigraph = minimum_spanning_tree(d);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : multigraph) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::size_t> odd;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] % 2 == 1) odd.push_back(v);
  }

  std::vector<Edge> pairs;
  if (odd.size() <= kExactMatchingLimit) {
    pairs = exact_matching(d, odd);
  } else {
    pairs = greedy_matching(d, odd);
    plan.matching = Matching::Greedy;
  }
  multigraph.insert(multigraph.end(), pairs.begin(), pairs.end());

  // Shortcut the Euler circuit, keeping first occurrences.
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (const std::size_t v : eulerian_circuit(n, multigraph)) {
    if (!seen[v]) {
      seen[v] = true;
      plan.order.push_back(v - 1);
    }
  }
  canonical_orientation(plan);
  plan.length = tour_length(plan, weeds);
  return plan;
}

SprayPlan plan_optimal_heldkarp(const GroundPoint& ref,
                                std::span<const GroundPoint> weeds,
                                Closure closure) {
  const std::size_t n = weeds.size();
  if (n > kOracleLimit) {
    throw SizeError("Held-Karp oracle supports at most " +
                    std::to_string(kOracleLimit) + " weeds, got " +
                    std::to_string(n));
  }
  SprayPlan plan;
  plan.start = ref;
  plan.algorithm = Algorithm::Optimal;
  plan.inner = Algorithm::Optimal;
  plan.closed = closure == Closure::Closed;
  if (n == 0) return plan;

  const DistanceMatrix d(ref, weeds);
  const std::size_t subsets = std::size_t{1} << n;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // cost[S * n + j]: shortest path from ref through weed set S ending at weed j.
  std::vector<double> cost(subsets * n, kInf);
  std::vector<std::uint8_t> prev(subsets * n, 0xff);
  for (std::size_t j = 0; j < n; ++j) {
    cost[(std::size_t{1} << j) * n + j] = d(0, j + 1);
  }
  for (std::size_t s = 1; s < subsets; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const double base = cost[s * n + j];
      if (!(s & (std::size_t{1} << j)) || base == kInf) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (s & (std::size_t{1} << k)) continue;
        const std::size_t t = s | (std::size_t{1} << k);
        const double c = base + d(j + 1, k + 1);
        if (c < cost[t * n + k]) {
          cost[t * n + k] = c;
          prev[t * n + k] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  const std::size_t full = subsets - 1;
  std::size_t last = 0;
  double best = kInf;
  for (std::size_t j = 0; j < n; ++j) {
    const double c = cost[full * n + j] + (plan.closed ? d(j + 1, 0) : 0.0);
    if (c < best) {
      best = c;
      last = j;
    }
  }

  std::vector<std::size_t> reversed;
  std::size_t s = full;
  std::size_t j = last;
  while (true) {
    reversed.push_back(j);
    const std::uint8_t p = prev[s * n + j];
    s &= ~(std::size_t{1} << j);
    if (p == 0xff) break;
    j = p;
  }
  plan.order.assign(reversed.rbegin(), reversed.rend());
  canonical_orientation(plan);
  plan.length = tour_length(plan, weeds);
  return plan;
}

SprayPlan plan_hybrid(const GroundPoint& ref, std::span<const GroundPoint> weeds,
                      HybridMode mode, Closure closure) {
  SprayPlan chosen;
  if (mode.kind == HybridMode::Kind::Threshold) {
    chosen = weeds.size() < mode.threshold
                 ? plan_nearest_neighbor(ref, weeds, closure)
                 : plan_christofides(ref, weeds, closure);
  } else {
    SprayPlan nn = plan_nearest_neighbor(ref, weeds, closure);
    SprayPlan chr = plan_christofides(ref, weeds, closure);
    chosen = chr.length < nn.length ? std::move(chr) : std::move(nn);
  }
  chosen.inner = chosen.algorithm;
  chosen.algorithm = Algorithm::Hybrid;
  return chosen;
}

PhiScore phi_score(const SprayPlan& candidate, const SprayPlan& optimal) {
  if (optimal.algorithm != Algorithm::Optimal) {
    throw ValidationError("phi_score reference plan must come from the exact oracle");
  }
  if (candidate.closed != optimal.closed) {
    throw ValidationError("phi_score plans use different closed/open conventions");
  }
  if (candidate.order.size() != optimal.order.size()) {
    throw ValidationError("phi_score plans cover different weed sets");
  }
  if (candidate.length == 0.0 && optimal.length == 0.0) return {1.0};
  if (!(candidate.length > 0.0)) {
    throw ValidationError("candidate plan has zero length but the optimum does not");
  }
  return {optimal.length / candidate.length};
}

}  // namespace sparrow
