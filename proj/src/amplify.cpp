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

#include <cmath>
#include <memory>
#include <numbers>

#include "abelshift/error.hpp"
#include "abelshift/hiddenshift.hpp"

namespace abelshift {

namespace {

double good_mass(const SimState& st, const std::function<bool(std::size_t)>& good) {
  double m = 0.0;
  const auto& a = st.amps();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (good(i)) m += std::norm(a[i]);
  }
  return m;
}

std::vector<double> good_over(const SimState& st, std::size_t reg, const std::function<bool(std::size_t)>& good) {
  const RegisterLayout& L = st.layout();
  std::vector<double> out(L.dim(reg), 0.0);
  const auto& a = st.amps();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (good(i)) out[L.digit(i, reg)] += std::norm(a[i]);
  }
  return out;
}

}  // namespace

AmplificationReport amplitude_amplify(const Circuit& prepare, const RegisterLayout& layout,
                                      const std::function<bool(std::size_t)>& good, double p,
                                      std::optional<std::size_t> report_register) {
  if (!(p > 0.0) || p > 1.0 + 1e-12) {
    throw DomainError("amplification needs 0 < p <= 1, got " + std::to_string(p));
  }
  AmplificationReport rep;
  rep.theta = std::asin(std::sqrt(std::min(p, 1.0)));
  rep.iterations = static_cast<std::size_t>(std::floor(std::numbers::pi / (4.0 * rep.theta)));
  rep.predicted = std::pow(std::sin((2.0 * static_cast<double>(rep.iterations) + 1.0) * rep.theta), 2);

  SimState st(layout);
  prepare.apply(st);
  rep.initial_prob = good_mass(st, good);
  auto& a = st.amps();
  for (std::size_t k = 0; k < rep.iterations; ++k) {
    // Q = -A S0 A^dagger S_chi
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (good(i)) a[i] = -a[i];
    }
    prepare.apply_adjoint(st);
    a[0] = -a[0];
    prepare.apply(st);
    for (auto& v : a) v = -v;
  }
  rep.boosted = good_mass(st, good);
  if (report_register) rep.good_distribution = good_over(st, *report_register, good);
  return rep;
}

AdaptedCircuit adapted_circuit(const OracleViews& o, AmplifiedAlgorithm alg, Completion completion) {
  const GroupSpec G = o.group;
  const std::size_t n = G.order();
  const std::size_t d = o.g.dim();
  if (alg != AmplifiedAlgorithm::approx_multidim && d != 1) {
    throw PreconditionError("scalar algorithm given a d > 1 function");
  }
  const bool checks = alg != AmplifiedAlgorithm::approx_bounded;
  const bool multidim = alg == AmplifiedAlgorithm::approx_multidim;
  const auto W = std::make_shared<ValueAlphabet>(ValueAlphabet::from({&o.g, &o.fhat}));
  enum : std::size_t { kG, kO, kW, kA, kB, kC1, kC2 };

  std::vector<Register> regs{{RegisterKind::dual, n},
                             {RegisterKind::indicator, 2},
                             {RegisterKind::value, W->size()},
                             {RegisterKind::ancilla, multidim ? d + 1 : std::size_t{2}},
                             {RegisterKind::ancilla, 2}};
  if (checks) {
    regs.push_back({RegisterKind::ancilla, 2});
    regs.push_back({RegisterKind::ancilla, 2});
  }
  AdaptedCircuit out;
  out.layout = RegisterLayout(regs);
  out.group_register = kG;

  const auto gmask = std::make_shared<Subset>(checks ? o.g_indicator : Subset(n));
  const auto fmask = std::make_shared<Subset>(checks ? o.fhat_indicator : Subset(n));
  const auto g = std::make_shared<VectorFn>(o.g);
  const auto fhat = std::make_shared<VectorFn>(o.fhat);
  const OracleRegs oregs{kG, kO, kW};
  const std::optional<std::size_t> c1 = checks ? std::optional<std::size_t>(kC1) : std::nullopt;
  const std::optional<std::size_t> c2 = checks ? std::optional<std::size_t>(kC2) : std::nullopt;
  const double R = o.R;
  const double rhat = o.rhat;

  Circuit& c = out.circuit;
  auto fourier = [G](bool inverse) {
    return [G, inverse](SimState& st) { apply_fourier_reg(st, kG, G, inverse); };
  };
  auto og = [=](SimState& st) { apply_oracle_g(st, *g, *gmask, *W, oregs); };
  auto of = [=](SimState& st) { apply_oracle_fhat(st, *fhat, *fmask, *W, oregs); };
  auto copy = [](std::size_t target) {
    return [target](SimState& st) { apply_cnot(st, kO, target); };
  };

  c.add(fourier(true), fourier(false));
  c.add_self_inverse(og);
  if (checks) c.add_self_inverse(copy(kC1));
  c.add([=](SimState& st) { apply_U1(st, *W, R, {kW, kA, c1}, completion); },
        [=](SimState& st) { apply_U1(st, *W, R, {kW, kA, c1}, completion, true); });
  c.add_self_inverse(og);
  c.add(fourier(false), fourier(true));
  c.add_self_inverse(of);
  if (checks) c.add_self_inverse(copy(kC2));
  if (multidim) {
    c.add([=](SimState& st) { apply_Vrot(st, *W, {kW, kA, c2}, completion); },
          [=](SimState& st) { apply_Vrot(st, *W, {kW, kA, c2}, completion, true); });
  }
  c.add([=](SimState& st) { apply_U2(st, *W, rhat, {kW, kB, c2}, completion, false, multidim); },
        [=](SimState& st) { apply_U2(st, *W, rhat, {kW, kB, c2}, completion, true, multidim); });
  c.add_self_inverse(of);
  c.add(fourier(true), fourier(false));

  const RegisterLayout L = out.layout;
  out.good = [L, checks](std::size_t i) {
    if (L.digit(i, kA) != 0 || L.digit(i, kB) != 0) return false;
    return !checks || (L.digit(i, kC1) == 1 && L.digit(i, kC2) == 1);
  };
  return out;
}

AmplificationReport amplify_algorithm(const OracleViews& o, AmplifiedAlgorithm alg) {
  AdaptedCircuit ac = adapted_circuit(o, alg);
  SimState probe(ac.layout);
  ac.circuit.apply(probe);
  double p = 0.0;
  const auto& a = probe.amps();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ac.good(i)) p += std::norm(a[i]);
  }
  if (p < 1e-14) throw DomainError("success mass is zero, nothing to amplify");
  return amplitude_amplify(ac.circuit, ac.layout, ac.good, std::min(p, 1.0), ac.group_register);
}

}  // namespace abelshift
