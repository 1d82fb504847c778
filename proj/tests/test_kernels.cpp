#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "laserspin/entanglement.hpp"
#include "laserspin/kernels.hpp"

using namespace laserspin;

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 2.0);
  CHECK(g[1] == 0.5);
  CHECK_THROWS(uniform_grid(1.0, 1));
}

TEST_CASE("parallel_for visits every index once") {
  for (int jobs : {1, 2, 4}) {
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), jobs, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) REQUIRE(h.load() == 1);
  }
}

TEST_CASE("parallel_for rethrows after the loop") {
  for (int jobs : {1, 3}) {
    std::atomic<int> done{0};
    CHECK_THROWS_AS(parallel_for(40, jobs,
                                 [&](std::size_t i) {
                                   if (i == 7) throw std::runtime_error("boom");
                                   ++done;
                                 }),
                    std::runtime_error);
    if (jobs > 1) CHECK(done.load() == 39);
  }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  const LaserParams laser{0.7, 0.25, 1.0};
  const auto kin = modulus_from_params(laser, 1.1);
  const auto grid = uniform_grid(30.0, 1001);
  for (auto dyn : {Dynamics::newtonian, Dynamics::relativistic}) {
    const auto s = residual_profile(grid, laser, kin, dyn, Execution::serial);
    const auto p = residual_profile(grid, laser, kin, dyn, Execution::parallel);
    REQUIRE(s == p);
  }

  BoundStateParams b;
  b.set_delta(1.5);
  b.g_coupling = 0.1;
  const SpinHamiltonianSource source({0.3, 0.0, 1.0}, modulus_from_params({0.3, 0.0, 1.0}, 1.0), b);
  const auto states = evolve_von_neumann(werner_state(0.7), source, uniform_grid(6.0, 64), 1e-10);
  const auto cs = concurrence_profile(states, Execution::serial);
  const auto cp = concurrence_profile(states, Execution::parallel);
  REQUIRE(cs == cp);
  for (std::size_t i = 0; i < states.size(); ++i) REQUIRE(cs[i] == wootters_concurrence(states[i]));
}
