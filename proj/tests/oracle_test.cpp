// Copyright 2026 The cvkernels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "cvk/kernels.hpp"
#include "cvk/oracle.hpp"
#include "test_oracles.hpp"

namespace cvk {
namespace {

using oracle::PhaseGrid;

TEST(ChooseCutoff, VacuumNeedsOneLevel) {
  EXPECT_EQ(oracle::choose_cutoff(StateSpec::coherent(), 0.0, 1e-8), 1u);
}

TEST(ChooseCutoff, ConvergedAndOrdered) {
  const std::size_t photon = oracle::choose_cutoff(StateSpec::single_photon(), 2.0, 1e-8);
  const std::size_t squeezed = oracle::choose_cutoff(StateSpec::squeezed(1.0), 2.0, 1e-8);
  EXPECT_GE(photon, 10u);
  EXPECT_LE(photon, 64u);
  EXPECT_GT(squeezed, photon);
  // the convergence criterion holds at the returned cutoff
  const DataPoint shift{2.0, 0.0};
  const FockState a = displace(make_fock_state(StateSpec::single_photon(), photon, 1.0), shift);
  const FockState b = displace(make_fock_state(StateSpec::single_photon(), 2 * photon, 1.0), shift);
  EXPECT_LT(std::abs(a.trace() - b.trace()), 1e-8);
  EXPECT_LT(std::abs(purity(a) - purity(b)), 1e-8);
}

TEST(ChooseCutoff, LimitAndBadArguments) {
  EXPECT_THROW(oracle::choose_cutoff(StateSpec::squeezed(1.0), 2.0, 1e-8, 8), CutoffError);
  EXPECT_THROW(oracle::choose_cutoff(StateSpec::coherent(), 1.0, 0.0), UsageError);
  EXPECT_THROW(oracle::choose_cutoff(StateSpec::coherent(), -1.0, 1e-8), UsageError);
}

TEST(KernelNumeric, CoherentAnchor) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const DataPoint x = testing::random_in_disc(rng, 1, 1.5), y = testing::random_in_disc(rng, 1, 1.5);
    EXPECT_NEAR(oracle::kernel_numeric(StateSpec::coherent(), x, y), std::exp(-distance_sq(x, y)), 1e-8);
  }
}

TEST(KernelNumeric, SinglePhotonExamples) {
  const DataPoint o{0.0, 0.0}, u{0.0, 1.0};
  EXPECT_NEAR(oracle::kernel_numeric(StateSpec::single_photon(1.0), o, u), 0.0, 1e-8);
  // purity on each side equals the 1 - 2 eta + 2 eta^2 normalizer
  const FockState s = displace(make_fock_state(StateSpec::single_photon(0.5), 40, 1e-12), u);
  EXPECT_NEAR(purity(s), 0.5, 1e-12);
}

TEST(KernelNumeric, MomentRouteAgrees) {
  std::mt19937_64 rng(31);
  for (const StateSpec& s : {StateSpec::squeezed(0.8, 0.6), StateSpec::thermal(1.2, 0.9), StateSpec::coherent(0.5)}) {
    for (int i = 0; i < 5; ++i) {
      const DataPoint x = testing::random_in_disc(rng, 1, 1.0), y = testing::random_in_disc(rng, 1, 1.0);
      EXPECT_NEAR(oracle::kernel_gaussian(s, x, y), oracle::kernel_numeric(s, x, y), 1e-9);
    }
  }
}

TEST(KernelViaOverlap, Examples) {
  const DataPoint o{0.0, 0.0}, u{1.0, 0.0};
  const PhaseGrid grid{6.0, 257};
  EXPECT_NEAR(oracle::kernel_via_overlap(StateSpec::coherent(), o, o, grid).value, 1.0, 1e-6);
  EXPECT_NEAR(oracle::kernel_via_overlap(StateSpec::coherent(), o, u, grid).value, std::exp(-1.0), 1e-6);
  EXPECT_NEAR(oracle::kernel_via_overlap(StateSpec::single_photon(), o, DataPoint{0.0, 1.0}, grid).value, 0.0, 1e-6);
}

TEST(KernelViaOverlap, VacuumPurityFixesTheOverlapConstant) {
  EXPECT_NEAR(oracle::purity_via_overlap(make_state(StateSpec::coherent()), PhaseGrid{6.0, 257}), 1.0, 1e-10);
}

TEST(KernelViaOverlap, SmallGridIsRejected) {
  EXPECT_THROW(oracle::kernel_via_overlap(StateSpec::squeezed(1.0), DataPoint{0.0, 0.0}, DataPoint{1.0, 0.0},
                                          PhaseGrid{3.0, 65}),
               GridError);
  EXPECT_THROW(PhaseGrid({1.0, 8}).validate(), UsageError);
}

TEST(KernelViaOverlap, AgreesWithNumberBasis) {
  const std::vector<DataPoint> deltas{DataPoint{0.0, 0.0}, DataPoint{1.0, 0.0}, DataPoint{-0.6, 1.2},
                                      DataPoint{0.0, -2.0}};
  for (double eta : {0.0, 0.5, 1.0}) {
    for (const StateSpec& s : {StateSpec::coherent(eta), StateSpec::squeezed(1.0, eta), StateSpec::single_photon(eta),
                               StateSpec::thermal(0.5, eta)}) {
      for (const DataPoint& d : deltas) {
        const DataPoint x = -0.5 * d, y = 0.5 * d;
        const oracle::OverlapResult q = oracle::kernel_via_overlap(s, x, y);
        EXPECT_NEAR(q.value, oracle::kernel_numeric(s, x, y), 1e-5) << to_string(s.family) << " eta=" << eta;
        EXPECT_LT(q.boundary_max, 1e-12);
      }
    }
  }
}

TEST(KernelViaOverlap, MultiModeUnsupported) {
  EXPECT_THROW(oracle::kernel_via_overlap(StateSpec::coherent(1.0, 2), DataPoint{0, 0, 0, 0}, DataPoint{0, 0, 0, 0}),
               UsageError);
}

TEST(WignerShift, DisplacedStateIsTheShiftedWigner) {
  std::mt19937_64 rng(77);
  const DataPoint x{0.6, -0.4};
  for (const StateSpec& s : {StateSpec::squeezed(0.7, 0.9), StateSpec::single_photon(0.8)}) {
    const State base = make_state(s, {60, 1e-12});
    const State moved = displace(base, x);
    for (int i = 0; i < 100; ++i) {
      const DataPoint a = testing::random_point(rng, 1, 2.5);
      EXPECT_NEAR(wigner(moved, a), wigner(base, a - x), 1e-8);
    }
  }
}

TEST(PhaseSpaceInequality, Examples) {
  const auto margin = [](const StateSpec& s, DataPoint a, DataPoint b) {
    return oracle::check_phase_space_inequality(s, a, b).margin;
  };
  EXPECT_NEAR(margin(StateSpec::coherent(), DataPoint{0.2, 0.1}, DataPoint{-0.5, 0.9}), 0.0, 1e-12);
  EXPECT_GT(margin(StateSpec::thermal(0.5), DataPoint{0.0, 0.0}, DataPoint{1.0, 0.0}), 0.0);
  // frozen by mpmath on (2/pi)(4|a|^2 - 1) e^{-2|a|^2}
  EXPECT_NEAR(margin(StateSpec::single_photon(), DataPoint{0.0, 0.0}, DataPoint{0.3, 0.0}), -0.0636760382205873, 1e-13);
}

TEST(PhaseSpaceInequality, DisplacedCoherentStatesSaturate) {
  std::mt19937_64 rng(13);
  const State coherent = displace(make_state(StateSpec::coherent()), DataPoint{0.8, -0.3});
  for (int i = 0; i < 100; ++i) {
    const auto m = oracle::check_phase_space_inequality(coherent, testing::random_point(rng, 1, 2.0),
                                                        testing::random_point(rng, 1, 2.0));
    EXPECT_LT(std::abs(m.margin), 1e-12);
    EXPECT_EQ(m.margin, m.left - m.right);
  }
}

TEST(PhaseSpaceInequality, ClassicalGaussiansNeverViolate) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    // thermal occupation or lossy coherent: covariance >= I/2
    const StateSpec s = i % 2 == 0 ? StateSpec::thermal(2.0 * u(rng), u(rng)) : StateSpec::coherent(u(rng));
    const State st = displace(make_state(s), testing::random_point(rng, 1, 1.0));
    const auto m = oracle::check_phase_space_inequality(st, testing::random_point(rng, 1, 2.0),
                                                        testing::random_point(rng, 1, 2.0));
    EXPECT_GE(m.margin, -1e-12);
  }
}

TEST(PhaseSpaceInequality, IntegratedFormReproducesWitnessSign) {
  // integrate W_x W_x' - e^{-|x-x'|^2} W_{(x+x')/2}^2 over the grid and compare
  // with the sign of the kernel witness
  const PhaseGrid grid{9.0, 181};
  const DataPoint x{-0.35, 0.0}, y{0.35, 0.0};
  const DataPoint mid = 0.5 * (x + y);
  for (const StateSpec& s : {StateSpec::squeezed(1.0), StateSpec::single_photon(), StateSpec::thermal(0.5),
                             StateSpec::squeezed(1.0, 0.2)}) {
    const State base = make_state(s, {40, 1e-12});
    const State a = displace(base, x), b = displace(base, y), c = displace(base, mid);
    double lhs = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < grid.resolution; ++i) {
      for (std::size_t j = 0; j < grid.resolution; ++j) {
        const DataPoint p{grid.node(i), grid.node(j)};
        const double wc = wigner(c, p);
        lhs += wigner(a, p) * wigner(b, p) - std::exp(-distance_sq(x, y)) * wc * wc;
        norm += wc * wc;
      }
    }
    const double integrated = lhs / norm;  // equals K(x, y) - e^{-|x-y|^2} for equal purities
    const double w = witness({s}, x, y);
    EXPECT_NEAR(integrated, w, 1e-8) << to_string(s.family);
    EXPECT_EQ(std::signbit(integrated), std::signbit(w)) << to_string(s.family);
  }
}

}  // namespace
}  // namespace cvk
