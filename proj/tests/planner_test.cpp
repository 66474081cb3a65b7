#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "sparrow/error.hpp"
#include "sparrow/evaluation.hpp"
#include "sparrow/planner.hpp"
#include "sparrow/random.hpp"

namespace sparrow {
namespace {

const CameraFootprint kFp{};
const GroundPoint kRef{0.0, 0.0};

// Exhaustive minimum over all visiting orders, both conventions.
double brute_force(const GroundPoint& ref, const std::vector<GroundPoint>& w, bool closed) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  if (w.empty()) return 0.0;
  do {
    double len = distance(ref, w[perm[0]]);
    for (std::size_t k = 1; k < perm.size(); ++k) len += distance(w[perm[k - 1]], w[perm[k]]);
    if (closed) len += distance(w[perm.back()], ref);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_permutation_of(const std::vector<std::size_t>& order, std::size_t n) {
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  return sorted.size() == n;
}

TEST(DistanceMatrix, ThreeFourFive) {
  const std::vector<GroundPoint> w{{3, 4}};
  const DistanceMatrix d = build_distance_matrix(kRef, w);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(d(1, 0), 5.0);
  EXPECT_EQ(d(0, 0), 0.0);
}

TEST(DistanceMatrix, EmptyIsOneByOneZero) {
  const DistanceMatrix d = build_distance_matrix(kRef, {});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d(0, 0), 0.0);
}

TEST(DistanceMatrix, TriangleInequalityOnAllTriples) {
  Rng rng(11);
  const auto w = random_weed_instance(kFp, 5, rng);
  const DistanceMatrix d = build_distance_matrix(kRef, w);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      EXPECT_EQ(d(i, j), d(j, i));
      for (std::size_t k = 0; k < d.size(); ++k) EXPECT_LE(d(i, k), d(i, j) + d(j, k) + 1e-12);
    }
}

TEST(NearestNeighbor, CollinearOpenAndClosed) {
  const std::vector<GroundPoint> w{{10, 0}, {20, 0}, {30, 0}};
  const SprayPlan closed = plan_nearest_neighbor(kRef, w);
  EXPECT_EQ(closed.order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(closed.length, 60.0);
  const SprayPlan open = plan_nearest_neighbor(kRef, w, Closure::Open);
  EXPECT_EQ(open.order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(open.length, 30.0);
  EXPECT_FALSE(open.closed);
}

TEST(NearestNeighbor, SingleWeed) {
  const std::vector<GroundPoint> w{{5, 5}};
  const SprayPlan p = plan_nearest_neighbor(kRef, w);
  EXPECT_EQ(p.order, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(p.length, 2.0 * std::sqrt(50.0));
}

TEST(NearestNeighbor, TiesGoToLowestIndex) {
  const std::vector<GroundPoint> w{{-5, 0}, {5, 0}, {0, 5}};
  const SprayPlan p = plan_nearest_neighbor(kRef, w);
  EXPECT_EQ(p.order.front(), 0u);
  EXPECT_EQ(p.algorithm, Algorithm::NearestNeighbor);
}

TEST(NearestNeighbor, NeverBeatsOracle) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_weed_instance(kFp, 8, rng);
    EXPECT_GE(plan_nearest_neighbor(kRef, w).length,
              plan_optimal_heldkarp(kRef, w).length - 1e-9);
  }
}

TEST(Christofides, TriangleIsPerimeter) {
  const std::vector<GroundPoint> w{{3, 0}, {0, 4}};
  const SprayPlan p = plan_christofides(kRef, w);
  EXPECT_DOUBLE_EQ(p.length, 12.0);
  EXPECT_EQ(p.algorithm, Algorithm::Christofides);
}

TEST(Christofides, UnitSquare) {
  const std::vector<GroundPoint> w{{1, 0}, {1, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(plan_optimal_heldkarp(kRef, w).length, 4.0);
  const SprayPlan p = plan_christofides(kRef, w);
  EXPECT_DOUBLE_EQ(p.length, 4.0);
  EXPECT_EQ(p.matching, Matching::Exact);
}

TEST(Christofides, WithinOneAndAHalfOfOptimal) {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 3 + rng.next() % 10;
    const auto w = random_weed_instance(kFp, n, rng);
    const SprayPlan c = plan_christofides(kRef, w);
    ASSERT_EQ(c.matching, Matching::Exact);
    EXPECT_LE(c.length, 1.5 * plan_optimal_heldkarp(kRef, w).length + 1e-9);
  }
}

TEST(Christofides, EmptyAndSingle) {
  EXPECT_EQ(plan_christofides(kRef, {}).length, 0.0);
  const std::vector<GroundPoint> w{{5, 5}};
  EXPECT_DOUBLE_EQ(plan_christofides(kRef, w).length, 2.0 * std::sqrt(50.0));
}

TEST(HeldKarp, CollinearIsForced) {
  const std::vector<GroundPoint> w{{10, 0}, {20, 0}, {30, 0}};
  EXPECT_DOUBLE_EQ(plan_optimal_heldkarp(kRef, w).length, 60.0);
  EXPECT_DOUBLE_EQ(plan_optimal_heldkarp(kRef, w, Closure::Open).length, 30.0);
}

TEST(HeldKarp, EqualsBruteForce) {
  Rng rng(1234);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng.next() % 8;
    const auto w = random_weed_instance(kFp, n, rng);
    const GroundPoint ref = footprint_center(kFp);
    EXPECT_EQ(plan_optimal_heldkarp(ref, w).length, brute_force(ref, w, true));
    EXPECT_NEAR(plan_optimal_heldkarp(ref, w, Closure::Open).length, brute_force(ref, w, false),
                1e-9);
  }
}

TEST(HeldKarp, RefusesAboveLimit) {
  Rng rng(3);
  const auto w16 = random_weed_instance(kFp, 16, rng);
  EXPECT_THROW(plan_optimal_heldkarp(kRef, w16), SizeError);
  const std::vector<GroundPoint> w15(w16.begin(), w16.begin() + 15);
  EXPECT_NO_THROW(plan_optimal_heldkarp(kRef, w15));
}

TEST(Hybrid, SingleWeedTieGoesToNearestNeighbor) {
  const std::vector<GroundPoint> w{{5, 5}};
  const SprayPlan p = plan_hybrid(kRef, w);
  EXPECT_EQ(p.algorithm, Algorithm::Hybrid);
  EXPECT_EQ(p.inner, Algorithm::NearestNeighbor);
}

TEST(Hybrid, PicksChristofidesWhenStrictlyShorter) {
  // Search seeded instances for one where Christofides wins.
  bool found = false;
  for (std::uint64_t s = 0; s < 500 && !found; ++s) {
    Rng rng(s);
    const auto w = random_weed_instance(kFp, 9, rng);
    const SprayPlan nn = plan_nearest_neighbor(kRef, w);
    const SprayPlan ch = plan_christofides(kRef, w);
    if (ch.length < nn.length) {
      found = true;
      const SprayPlan h = plan_hybrid(kRef, w);
      EXPECT_EQ(h.inner, Algorithm::Christofides);
      EXPECT_EQ(h.order, ch.order);
      EXPECT_DOUBLE_EQ(tour_length(h, w), ch.length);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Hybrid, ThresholdSelectsByCount) {
  Rng rng(4);
  const auto w3 = random_weed_instance(kFp, 3, rng);
  EXPECT_EQ(plan_hybrid(kRef, w3, HybridMode::threshold_at(10)).inner, Algorithm::NearestNeighbor);
  const auto w10 = random_weed_instance(kFp, 10, rng);
  EXPECT_EQ(plan_hybrid(kRef, w10, HybridMode::threshold_at(10)).inner, Algorithm::Christofides);
}

TEST(TourLength, EmptySquareAndValidation) {
  SprayPlan empty;
  EXPECT_EQ(tour_length(empty, {}), 0.0);
  const std::vector<GroundPoint> w{{1, 0}, {1, 1}, {0, 1}};
  SprayPlan sq;
  sq.order = {0, 1, 2};
  EXPECT_DOUBLE_EQ(tour_length(sq, w), 4.0);
  sq.order = {0, 0, 2};
  EXPECT_THROW(tour_length(sq, w), ValidationError);
  sq.order = {0, 1};
  EXPECT_THROW(tour_length(sq, w), ValidationError);
}

TEST(Planners, StoredLengthMatchesRecomputedAndOrderIsPermutation) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = rng.next() % 13;
    const auto w = random_weed_instance(kFp, n, rng);
    for (Closure c : {Closure::Closed, Closure::Open}) {
      for (const SprayPlan& p : {plan_nearest_neighbor(kRef, w, c), plan_christofides(kRef, w, c),
                                 plan_optimal_heldkarp(kRef, w, c),
                                 plan_hybrid(kRef, w, HybridMode::best_of_both(), c)}) {
        EXPECT_TRUE(is_permutation_of(p.order, n));
        EXPECT_NEAR(tour_length(p, w), p.length, 1e-9 * std::max(1.0, p.length));
      }
    }
  }
}

TEST(Planners, TranslationInvariantAndScaleEquivariant) {
  Rng rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto w = random_weed_instance(kFp, 7, rng);
    std::vector<GroundPoint> moved, scaled;
    for (const auto& p : w) {
      moved.push_back({p.x + 137.25, p.y - 42.5});
      scaled.push_back({p.x * 2.5, p.y * 2.5});
    }
    const GroundPoint ref_m{137.25, -42.5};
    const GroundPoint ref_s{0.0, 0.0};
    for (auto planner : {&plan_nearest_neighbor, &plan_christofides, &plan_optimal_heldkarp}) {
      const SprayPlan base = planner(kRef, w, Closure::Closed);
      const SprayPlan m = planner(ref_m, moved, Closure::Closed);
      const SprayPlan s = planner(ref_s, scaled, Closure::Closed);
      EXPECT_EQ(base.order, m.order);
      EXPECT_NEAR(base.length, m.length, 1e-9);
      EXPECT_EQ(base.order, s.order);
      EXPECT_NEAR(2.5 * base.length, s.length, 1e-9);
    }
  }
}

TEST(PhiScore, RatioArithmetic) {
  SprayPlan opt;
  opt.algorithm = Algorithm::Optimal;
  opt.order = {0};
  opt.length = 93.99;
  SprayPlan nn;
  nn.order = {0};
  nn.length = 100.0;
  EXPECT_NEAR(phi_score(nn, opt).value, 0.9399, 1e-12);
  EXPECT_EQ(phi_score(opt, opt).value, 1.0);
}

TEST(PhiScore, EmptyInstanceIsOne) {
  const SprayPlan opt = plan_optimal_heldkarp(kRef, {});
  EXPECT_EQ(phi_score(plan_nearest_neighbor(kRef, {}), opt).value, 1.0);
}

TEST(PhiScore, ConventionMismatchRejected) {
  const std::vector<GroundPoint> w{{10, 0}, {20, 5}};
  const SprayPlan opt = plan_optimal_heldkarp(kRef, w);
  EXPECT_THROW(phi_score(plan_nearest_neighbor(kRef, w, Closure::Open), opt), ValidationError);
  EXPECT_THROW(phi_score(plan_nearest_neighbor(kRef, w), plan_christofides(kRef, w)),
               ValidationError);
  const std::vector<GroundPoint> w1{{10, 0}};
  EXPECT_THROW(phi_score(plan_nearest_neighbor(kRef, w1), opt), ValidationError);
}

TEST(PhiScore, NeverExceedsOne) {
  Rng rng(55);
  for (int t = 0; t < 40; ++t) {
    const auto w = random_weed_instance(kFp, 2 + rng.next() % 10, rng);
    const SprayPlan opt = plan_optimal_heldkarp(kRef, w);
    EXPECT_LE(phi_score(plan_nearest_neighbor(kRef, w), opt).value, 1.0 + 1e-12);
    EXPECT_LE(phi_score(plan_christofides(kRef, w), opt).value, 1.0 + 1e-12);
    EXPECT_GT(phi_score(plan_christofides(kRef, w), opt).value, 0.0);
  }
}

}  // namespace
}  // namespace sparrow
