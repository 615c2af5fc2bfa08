// Copyright (c) 2026 the rdbounds authors.
// Licensed under the Apache License, Version 2.0.

#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "rdb/planes.hpp"
#include "rdb/rng.hpp"

using namespace rdb;

namespace {

HPoly<Complex> random_quadric(Rng& rng, unsigned nvars) {
  HPoly<Complex> f(nvars, 2);
  for (unsigned i = 0; i < nvars; ++i) {
    for (unsigned j = i; j < nvars; ++j) {
      std::vector<unsigned> e(nvars, 0);
      e[i] += 1;
      e[j] += 1;
      f.add_term(e, rng.complex_unit());
    }
  }
  return f;
}

}  // namespace

TEST_CASE("5-plane on one quadric", "[planes]") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Rng rng(seed);
    HSystem<Complex> V{11, {random_quadric(rng, 12)}};
    auto pts = quadric_k_plane(V, 5, std::nullopt, {seed * 31 + 1});
    REQUIRE(pts.size() == 6);
    CHECK(contains_plane(V, pts, 1e-6));
    CHECK(detail::plane_residual(V, pts) < 1e-6);
  }
}

TEST_CASE("2-plane on two quadrics", "[planes]") {
  for (std::uint64_t seed : {4u, 5u, 6u}) {
    Rng rng(seed);
    HSystem<Complex> V{8, {random_quadric(rng, 9), random_quadric(rng, 9)}};
    auto pts = quadric_k_plane(V, 2, std::nullopt, {seed * 31 + 7});
    REQUIRE(pts.size() == 3);
    CHECK(contains_plane(V, pts, 1e-6));
  }
}

TEST_CASE("quadric plane preconditions", "[planes]") {
  Rng rng(7);
  // Dimension below (k+1)*l + k is rejected.
  HSystem<Complex> small{10, {random_quadric(rng, 11)}};
  CHECK_THROWS_AS(quadric_k_plane(small, 5, std::nullopt, {1}), DomainError);
  // Non-quadric generators are rejected.
  HPoly<Complex> cubic(12, 3);
  cubic.add_term([] {
    std::vector<unsigned> e(12, 0);
    e[0] = 3;
    return e;
  }(), Complex(1.0));
  HSystem<Complex> bad{11, {cubic}};
  CHECK_THROWS_AS(quadric_k_plane(bad, 5, std::nullopt, {1}), DomainError);
  // k beyond desk scale is rejected.
  HSystem<Complex> wide{23, {random_quadric(rng, 24)}};
  CHECK_THROWS_AS(quadric_k_plane(wide, 6, std::nullopt, {1}), DomainError);
  // A base point off the quadrics is rejected.
  HSystem<Complex> V{11, {random_quadric(rng, 12)}};
  std::vector<Complex> off(12, Complex(0));
  off[0] = Complex(1.0);
  off[1] = Complex(1e6);
  CHECK_THROWS_AS(
      quadric_k_plane(V, 5, PPoint<Complex>(off), {1}), DomainError);
}

TEST_CASE("pipeline n=9 depth 1", "[planes]") {
  PipelineReport rep = run_pipeline(9, 1, {20260830});
  CHECK(rep.certified);
  CHECK(rep.plane_points.size() == 2);
  CHECK(rep.plane_residual < 1e-6);
  REQUIRE(rep.stages.size() == 2);
  CHECK(rep.stages[0].solve_degree == 6);
  CHECK(rep.stages[1].solve_degree == 12);
  for (const auto& st : rep.stages) CHECK(st.residual < 1e-6);
}

TEST_CASE("pipeline guards", "[planes]") {
  CHECK_THROWS_AS(run_pipeline(20, 1, {1}), DomainError);
  CHECK_THROWS_AS(run_pipeline(9, 3, {1}), DomainError);
  CHECK_THROWS_AS(run_pipeline(9, 2, {1}), DomainError);
  CHECK_THROWS_AS(run_pipeline(12, 1, {1}), DomainError);
}

// The depth-2 rehearsal takes a few seconds; tagged for the long suite.
TEST_CASE("pipeline n=19 depth 2", "[planes][.slow]") {
  PipelineReport rep = run_pipeline(19, 2, {20260831});
  CHECK(rep.certified);
  CHECK(rep.plane_points.size() == 3);
  CHECK(rep.plane_residual < 1e-6);
  REQUIRE(rep.stages.size() == 9);
  CHECK(rep.stages[0].solve_degree == 6);
  CHECK(rep.stages[1].solve_degree == 12);
  CHECK(rep.stages.back().solve_degree == 12);
}
