#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sparrow/geometry.hpp"

namespace sparrow {

enum class Algorithm { NearestNeighbor, Christofides, Optimal, Hybrid };
enum class Matching { None, Exact, Greedy };
enum class Closure { Closed, Open };

std::string_view to_string(Algorithm a);
std::string_view to_string(Matching m);

/// Ordered turret visit sequence. order[k] indexes the weed list the plan was
/// built from; the reference point is implicit at the start (and end, for
/// closed tours).
struct SprayPlan {
  GroundPoint start;
  std::vector<std::size_t> order;
  double length = 0.0;  // cm
  Algorithm algorithm = Algorithm::NearestNeighbor;
  // For Hybrid plans, the heuristic that produced the order.
  Algorithm inner = Algorithm::NearestNeighbor;
  // Christofides only: Greedy means the 1.5 bound no longer applies.
  Matching matching = Matching::None;
  bool closed = true;
};

/// Symmetric Euclidean distances over {ref} u weeds. Index 0 is the reference.
class DistanceMatrix {
 public:
  DistanceMatrix(const GroundPoint& ref, std::span<const GroundPoint> weeds);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return d_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

DistanceMatrix build_distance_matrix(const GroundPoint& ref,
                                     std::span<const GroundPoint> weeds);

// Held-Karp is exponential in the weed count; beyond this it refuses.
inline constexpr std::size_t kOracleLimit = 15;
// Above this many odd-degree vertices Christofides falls back to greedy matching.
inline constexpr std::size_t kExactMatchingLimit = 12;

SprayPlan plan_nearest_neighbor(const GroundPoint& ref,
                                std::span<const GroundPoint> weeds,
                                Closure closure = Closure::Closed);

SprayPlan plan_christofides(const GroundPoint& ref,
                            std::span<const GroundPoint> weeds,
                            Closure closure = Closure::Closed);

// Exact minimum tour (or open path) from ref. Throws SizeError above
// kOracleLimit weeds.
SprayPlan plan_optimal_heldkarp(const GroundPoint& ref,
                                std::span<const GroundPoint> weeds,
                                Closure closure = Closure::Closed);

struct HybridMode {
  enum class Kind { BestOfBoth, Threshold };
  Kind kind = Kind::BestOfBoth;
  std::size_t threshold = 10;

  static HybridMode best_of_both() { return {Kind::BestOfBoth, 10}; }
  static HybridMode threshold_at(std::size_t k) { return {Kind::Threshold, k}; }
};

SprayPlan plan_hybrid(const GroundPoint& ref, std::span<const GroundPoint> weeds,
                      HybridMode mode = HybridMode::best_of_both(),
                      Closure closure = Closure::Closed);

/// Length of the plan recomputed from the points. A closed tour reports the
/// smaller of its two traversal sums so a cycle and its reverse agree bit for
/// bit. Throws ValidationError if order is not a permutation of the weeds.
double tour_length(const SprayPlan& plan, std::span<const GroundPoint> weeds);

struct PhiScore {
  double value = 1.0;
};

// optimal.length / candidate.length; 1 when both are zero. Throws
// ValidationError on mismatched weed count, closure, or non-Optimal oracle.
PhiScore phi_score(const SprayPlan& candidate, const SprayPlan& optimal);

}  // namespace sparrow
