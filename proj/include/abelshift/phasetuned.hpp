// Copyright 2026 The abelshift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelshift/hiddenshift.hpp"

namespace abelshift {

// Free phases of the one-register oracles: theta on G, chi on the dual,
// both reduced mod 2 pi.
struct PhaseAssignment {
  std::vector<double> theta;
  std::vector<double> chi;

  static PhaseAssignment zero(std::size_t order);
  static PhaseAssignment random(std::size_t order, std::uint64_t seed, bool random_theta, bool random_chi);
};

// h_s(x) = e^{i theta(x+s)} sqrt(1 - |f(x)/R|^2), its transform and Z_s.
struct HsData {
  VectorFn hs;
  VectorFn hshat;
  Complex Zs;
};

HsData hs_data(const HiddenShiftInstance& instance, const PhaseAssignment& phases);

// Closed-form p(s) as the double sum over (x, phi).
double prob_one_register(const HiddenShiftInstance& instance, const PhaseAssignment& phases);
// The same value as |rhat/R + Z_s|^2.
double prob_one_register_zs(const HiddenShiftInstance& instance, const PhaseAssignment& phases);

// Simulates U_g, F, U_{1/fhat}, F^dagger on [G, (W,) a]; sim_prob is
// P(first = s, a = 0).
RunReport run_one_register(const HiddenShiftInstance& instance, const PhaseAssignment& phases,
                           const RunOptions& options = {});

struct CertaintyVerdict {
  bool holds = false;
  int branch = 0;  // 1: rhat = R, 2: flat |fhat| with matching hshat, 0: neither
  std::string witness;  // first failing condition when !holds
  std::optional<std::size_t> x0;
  std::optional<double> alpha;
};

// p(s) = 1 for the instance's own s.
CertaintyVerdict certainty_conditions(const HiddenShiftInstance& instance, const PhaseAssignment& phases,
                                      double tol = 1e-9);
// p(s) = 1 for every s; shift independent, so only f, window and phases matter.
CertaintyVerdict all_shift_certainty(const HiddenShiftInstance& instance, const PhaseAssignment& phases,
                                     double tol = 1e-9);

struct OptimalChi {
  PhaseAssignment phases;  // theta = 0, chi = arg hhat (0 where hhat vanishes)
  double p = 0.0;
};

OptimalChi optimal_chi_theta0(const HiddenShiftInstance& instance);
double expected_prob_random_chi(const HiddenShiftInstance& instance);
double expected_prob_random_both(const HiddenShiftInstance& instance);

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

// Mean of p(s) over random phases; theta stays 0 unless `random_theta`.
MonteCarloEstimate monte_carlo_prob(const HiddenShiftInstance& instance, bool random_theta, std::size_t samples,
                                    std::uint64_t seed);

// Fourier pairs on Z/2 and Z/3 with |fhat| flat, together with the window
// R = 1/rhat = |1 - eta| / sqrt(n) that makes them reach p = 1 for all s.
struct EtaFamily {
  VectorFn f;
  Window window;
};

EtaFamily eta_family(std::size_t n, Complex eta);

}  // namespace abelshift
