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
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelshift/abelian.hpp"
#include "abelshift/gfunc.hpp"
#include "abelshift/statevec.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

// Ground truth plus everything derived from it. Solvers only ever see the
// OracleViews built from an instance.
struct HiddenShiftInstance {
  VectorFn f;
  VectorFn fhat;
  GroupElement s;
  VectorFn g;  // f(x - s)
  BoundProfile profile;

  const GroupSpec& group() const { return f.group(); }
  std::size_t shift_index() const { return f.group().index_of(s); }
};

HiddenShiftInstance make_instance(VectorFn f, GroupElement s, const Window& window);

// What the oracles O_g and O_fhat reveal: values plus indicator sets A+s and
// Ahat, and the public window parameters.
struct OracleViews {
  GroupSpec group;
  VectorFn g;
  Subset g_indicator;
  VectorFn fhat;
  Subset fhat_indicator;
  double r = 0.0;
  double R = 0.0;
  double rhat = 0.0;
  double Rhat = kInfinity;
};

OracleViews make_oracles(const HiddenShiftInstance& instance);

struct QueryCounts {
  int g_calls = 0;
  int fhat_calls = 0;
  bool operator==(const QueryCounts&) const = default;
};

enum class Backend { dense, lazy };

struct RunOptions {
  Backend backend = Backend::dense;
  Completion completion = Completion::householder;
};

struct RunReport {
  std::string algorithm;
  double formula_prob = std::numeric_limits<double>::quiet_NaN();
  double sim_prob = 0.0;
  // Probability of reading y in the group register with every success
  // condition met, post-selection weights included.
  std::vector<double> sim_distribution;
  std::vector<double> postselect_probs;
  QueryCounts queries;
  std::size_t argmax = 0;
  bool fail_certain = false;
  std::optional<GroupElement> recovered;
  // Named side values (alternate formula variants, initial mass, ...).
  std::vector<std::pair<std::string, double>> extras;

  double extra(const std::string& name) const;
};

// Coefficient on |0> as a function of the oracle value: U1(w)|0> for the first
// encoder and U2(w)^dagger|0> for the second. nullopt makes the block the
// identity. |coefficient| must not exceed 1.
using Coefficient = std::function<std::optional<Complex>(Complex w)>;
struct Encoders {
  Coefficient first;
  Coefficient second;
};

Encoders standard_encoders(double R, double rhat);
Encoders mirrored_encoders(double r, double Rhat);

// Classical algorithm: reads g everywhere and fhat at the generators.
GroupElement classical_exact(const OracleViews& oracles, QueryCounts& counts);
RunReport run_classical(const HiddenShiftInstance& instance);

// F^dagger O_{1/fhat} F O_g with phase oracles. Requires f bent, d = 1.
RunReport simulate_exact_bent(const OracleViews& oracles, const RunOptions& options = {});
RunReport run_exact_bent(const HiddenShiftInstance& instance, const RunOptions& options = {});

double prob_formula_bounded(const HiddenShiftInstance& instance);
RunReport simulate_approx_bounded(const OracleViews& oracles, const RunOptions& options = {});
RunReport run_approx_bounded(const HiddenShiftInstance& instance, const RunOptions& options = {});

double prob_formula_subset(const HiddenShiftInstance& instance);
// Post-selected circuit with arbitrary encoders; `negate` adds the group
// negation after the second O_g call and after the final F^dagger.
RunReport simulate_subset(const OracleViews& oracles, const Encoders& encoders, bool negate,
                          const RunOptions& options = {});
RunReport run_approx_subset(const HiddenShiftInstance& instance, const RunOptions& options = {});

double prob_formula_mirrored(const HiddenShiftInstance& instance);
RunReport run_mirrored_subset(const HiddenShiftInstance& instance, const RunOptions& options = {});

RunReport simulate_exact_multidim(const OracleViews& oracles, const RunOptions& options = {});
RunReport run_exact_multidim(const HiddenShiftInstance& instance, const RunOptions& options = {});

// Two closed forms for the multidimensional success probability: the short
// one (phi(x), no conj phi(s), ||fhat|| denominator) and the full derivation
// (phi(x) conj phi(s), ||fhat||^2 denominator).
enum class MultidimVariant { statement, proof };
double prob_formula_multidim(const HiddenShiftInstance& instance, MultidimVariant variant);
// The variant reproduced by simulation; pinned by the tests.
inline constexpr MultidimVariant kMultidimVariant = MultidimVariant::proof;

RunReport simulate_approx_multidim(const OracleViews& oracles, const RunOptions& options = {});
RunReport run_approx_multidim(const HiddenShiftInstance& instance, const RunOptions& options = {});

// Amplitude amplification. `prepare` is the algorithm unitary A acting on the
// all-zero state of `layout`; `good` marks basis states of the good subspace.
struct AmplificationReport {
  double initial_prob = 0.0;   // measured good mass of A|0>
  double theta = 0.0;
  std::size_t iterations = 0;  // floor(pi / (4 theta))
  double predicted = 0.0;      // sin^2((2k+1) theta)
  double boosted = 0.0;        // measured good mass after k rounds of Q
  std::vector<double> good_distribution;  // over the group register, after Q^k
};

AmplificationReport amplitude_amplify(const Circuit& prepare, const RegisterLayout& layout,
                                      const std::function<bool(std::size_t index)>& good, double p,
                                      std::optional<std::size_t> report_register = std::nullopt);

enum class AmplifiedAlgorithm { approx_bounded, approx_subset, approx_multidim };

// Unitary version of an approximate algorithm with indicator checks copied
// into extra qubits instead of post-selection, ready for amplification.
struct AdaptedCircuit {
  Circuit circuit;
  RegisterLayout layout;
  std::size_t group_register = 0;
  std::function<bool(std::size_t index)> good;
};

AdaptedCircuit adapted_circuit(const OracleViews& oracles, AmplifiedAlgorithm algorithm,
                               Completion completion = Completion::householder);

// Builds the adapted circuit, measures its initial success mass and amplifies.
AmplificationReport amplify_algorithm(const OracleViews& oracles, AmplifiedAlgorithm algorithm);

}  // namespace abelshift
