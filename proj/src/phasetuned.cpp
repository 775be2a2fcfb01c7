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

#include "abelshift/phasetuned.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "abelshift/error.hpp"

namespace abelshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce(double a) {
  double r = std::fmod(a, kTwoPi);
  return r < 0.0 ? r + kTwoPi : r;
}

// Distance between two angles on the circle.
double angle_gap(double a, double b) {
  const double d = reduce(a - b);
  return std::min(d, kTwoPi - d);
}

struct Checked {
  double R;
  double rhat;
};

Checked check(const HiddenShiftInstance& inst, const PhaseAssignment& ph) {
  const std::size_t n = inst.f.size();
  if (inst.f.dim() != 1) throw PreconditionError("one-register algorithm is for scalar functions");
  if (ph.theta.size() != n || ph.chi.size() != n) throw DimensionError("phase tables must have |G| entries");
  if (inst.profile.A.size() != n || inst.profile.Ahat.size() != n) {
    throw PreconditionError("one-register algorithm needs alpha = alphahat = 1");
  }
  if (!std::isfinite(inst.profile.R) || !(inst.profile.R > 0.0)) throw PreconditionError("R must be finite");
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (std::abs(inst.fhat(phi)) < 1e-12) throw DivisionError("fhat vanishes at index " + std::to_string(phi));
  }
  return {inst.profile.R, inst.profile.rhat};
}

// sqrt(1 - |rhat / fhat(phi)|^2)
double fhat_weight(const HiddenShiftInstance& inst, double rhat, std::size_t phi) {
  return gap_sqrt(rhat, std::abs(inst.fhat(phi)));
}

// sqrt(1 - |f(x) / R|^2)
double f_weight(const VectorFn& f, double R, std::size_t x) { return gap_sqrt(std::abs(f(x)), R); }

}  // namespace

PhaseAssignment PhaseAssignment::zero(std::size_t order) {
  return {std::vector<double>(order, 0.0), std::vector<double>(order, 0.0)};
}

PhaseAssignment PhaseAssignment::random(std::size_t order, std::uint64_t seed, bool random_theta, bool random_chi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  PhaseAssignment p = zero(order);
  if (random_theta) {
    for (double& t : p.theta) t = u(rng);
  }
  if (random_chi) {
    for (double& c : p.chi) c = u(rng);
  }
  return p;
}

HsData hs_data(const HiddenShiftInstance& inst, const PhaseAssignment& ph) {
  const auto [R, rhat] = check(inst, ph);
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const std::size_t s = inst.shift_index();
  VectorFn hs(G, 1);
  for (std::size_t x = 0; x < n; ++x) {
    hs(x) = std::polar(f_weight(inst.f, R, x), ph.theta[G.add_index(x, s)]);
  }
  VectorFn hshat = fourier(hs);
  Complex z = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    z += std::polar(fhat_weight(inst, rhat, phi), -ph.chi[phi]) * hshat(phi);
  }
  return {std::move(hs), std::move(hshat), z / static_cast<double>(n)};
}

double prob_one_register(const HiddenShiftInstance& inst, const PhaseAssignment& ph) {
  const auto [R, rhat] = check(inst, ph);
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const std::size_t s = inst.shift_index();
  Complex acc = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    const Complex b = std::polar(f_weight(inst.f, R, x), ph.theta[G.add_index(x, s)]);
    if (b == 0.0) continue;
    for (std::size_t phi = 0; phi < n; ++phi) {
      acc += G.eval_index(phi, x) * b * std::polar(fhat_weight(inst, rhat, phi), -ph.chi[phi]);
    }
  }
  return std::norm(rhat / R + acc / std::pow(static_cast<double>(n), 1.5));
}

double prob_one_register_zs(const HiddenShiftInstance& inst, const PhaseAssignment& ph) {
  const HsData h = hs_data(inst, ph);
  return std::norm(inst.profile.rhat / inst.profile.R + h.Zs);
}

RunReport run_one_register(const HiddenShiftInstance& inst, const PhaseAssignment& ph, const RunOptions& opt) {
  const auto [R, rhat] = check(inst, ph);
  const OracleViews o = make_oracles(inst);
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  RunReport rep;
  rep.algorithm = "one-register";
  rep.queries = opt.backend == Backend::dense ? QueryCounts{2, 2} : QueryCounts{1, 1};

  // U_g block: first column (g/R, e^{i theta} sqrt(1 - |g/R|^2)).
  auto ug = [&](std::size_t x, Complex w) {
    const Complex col[] = {w / R, std::polar(gap_sqrt(std::abs(w), R), ph.theta[x])};
    return complete_unitary(col, opt.completion);
  };
  // U_{1/fhat} block: first row (rhat/w, e^{-i chi} sqrt(1 - |rhat/w|^2)).
  auto uf = [&](std::size_t phi, Complex w) {
    const Complex a0 = rhat / w;
    const Complex a1 = std::polar(gap_sqrt(rhat, std::abs(w)), -ph.chi[phi]);
    const Complex col[] = {std::conj(a0), std::conj(a1)};
    return complete_unitary(col, opt.completion).adjoint();
  };

  RegisterLayout layout;
  std::size_t kA = 1;
  SimState st;
  std::optional<ValueAlphabet> W;
  if (opt.backend == Backend::dense) {
    W = ValueAlphabet::from({&o.g, &o.fhat});
    kA = 2;
    layout = RegisterLayout({{RegisterKind::dual, n}, {RegisterKind::value, W->size()}, {RegisterKind::ancilla, 2}});
  } else {
    layout = RegisterLayout({{RegisterKind::dual, n}, {RegisterKind::ancilla, 2}});
  }
  st = SimState(layout);
  apply_fourier_reg(st, 0, G, true);

  // Blocks indexed by the group register; the dense path reads the value
  // from the oracle's output register instead of the table.
  auto stage = [&](const VectorFn& table, const auto& make) {
    std::vector<std::optional<CMatrix>> cache(n);
    if (opt.backend == Backend::dense) {
      const Subset none(n);
      const OracleRegs regs{0, std::nullopt, 1};
      const bool on_group = &table == &o.g;
      auto call = [&] {
        if (on_group) {
          apply_oracle_g(st, o.g, none, *W, regs);
        } else {
          apply_oracle_fhat(st, o.fhat, none, *W, regs);
        }
      };
      call();
      const std::size_t controls[] = {0, 1};
      std::vector<std::vector<std::optional<CMatrix>>> grid(n, std::vector<std::optional<CMatrix>>(W->size()));
      apply_controlled(st, kA, controls, [&](std::span<const std::size_t> d) -> const CMatrix* {
        if (d[1] == ValueAlphabet::blank) return nullptr;
        auto& slot = grid[d[0]][d[1]];
        if (!slot) slot = make(d[0], W->value(d[1])[0]);
        return &*slot;
      });
      call();
    } else {
      const std::size_t controls[] = {0};
      apply_controlled(st, kA, controls, [&](std::span<const std::size_t> d) -> const CMatrix* {
        auto& slot = cache[d[0]];
        if (!slot) slot = make(d[0], table(d[0]));
        return &*slot;
      });
    }
  };

  stage(o.g, ug);
  apply_fourier_reg(st, 0, G);
  stage(o.fhat, uf);
  apply_fourier_reg(st, 0, G, true);

  std::vector<std::pair<std::size_t, std::size_t>> fixed{{kA, 0}};
  if (W) fixed.push_back({1, ValueAlphabet::blank});
  rep.sim_distribution = joint_distribution(st, 0, fixed);
  rep.sim_prob = rep.sim_distribution[inst.shift_index()];
  rep.formula_prob = prob_one_register(inst, ph);
  rep.argmax = static_cast<std::size_t>(
      std::max_element(rep.sim_distribution.begin(), rep.sim_distribution.end()) - rep.sim_distribution.begin());
  return rep;
}

CertaintyVerdict certainty_conditions(const HiddenShiftInstance& inst, const PhaseAssignment& ph, double tol) {
  const auto [R, rhat] = check(inst, ph);
  CertaintyVerdict v;
  if (std::abs(R - rhat) <= tol) {
    v.holds = true;
    v.branch = 1;
    return v;
  }
  const std::size_t n = inst.f.size();
  const double flat = std::sqrt(rhat * R);
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (std::abs(std::abs(inst.fhat(phi)) - flat) > tol) {
      v.witness = "|fhat| != sqrt(rhat R) at phi=" + std::to_string(phi);
      return v;
    }
  }
  const HsData h = hs_data(inst, ph);
  const double mag = clamped_sqrt(1.0 - rhat / R);
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (std::abs(h.hshat(phi) - std::polar(mag, ph.chi[phi])) > tol) {
      v.witness = "hshat != e^{i chi} sqrt(1 - rhat/R) at phi=" + std::to_string(phi);
      return v;
    }
  }
  v.holds = true;
  v.branch = 2;
  return v;
}

CertaintyVerdict all_shift_certainty(const HiddenShiftInstance& inst, const PhaseAssignment& ph, double tol) {
  const auto [R, rhat] = check(inst, ph);
  CertaintyVerdict v;
  if (std::abs(R - rhat) <= tol) {
    v.holds = true;
    v.branch = 1;
    return v;
  }
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const double q = rhat / R;
  if (q < 1.0 - 1.0 / static_cast<double>(n) - tol) {
    v.witness = "rhat/R below 1 - 1/|G|";
    return v;
  }
  const double flat = std::sqrt(rhat * R);
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (std::abs(std::abs(inst.fhat(phi)) - flat) > tol) {
      v.witness = "|fhat| != sqrt(rhat R) at phi=" + std::to_string(phi);
      return v;
    }
  }
  // x0 is the one point where |f| may drop below R.
  const double low = R * clamped_sqrt(1.0 - static_cast<double>(n) * (1.0 - q));
  std::optional<std::size_t> x0;
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(std::abs(inst.f(x)) - R) > tol) {
      if (x0) {
        v.witness = "|f| differs from R at two points";
        return v;
      }
      x0 = x;
    }
  }
  if (!x0) {
    // |f| = R everywhere would force rhat = R.
    v.witness = "|f| = R everywhere but rhat < R";
    return v;
  }
  if (std::abs(std::abs(inst.f(*x0)) - low) > tol) {
    v.witness = "|f(x0)| != R sqrt(1 - |G|(1 - rhat/R)) at x0=" + std::to_string(*x0);
    return v;
  }
  const double alpha = reduce(ph.theta[0]);
  for (std::size_t x = 0; x < n; ++x) {
    if (angle_gap(ph.theta[x], alpha) > tol) {
      v.witness = "theta is not constant (x=" + std::to_string(x) + ")";
      return v;
    }
  }
  for (std::size_t phi = 0; phi < n; ++phi) {
    const double want = alpha + std::arg(G.eval_index(phi, *x0));
    if (angle_gap(ph.chi[phi], want) > tol) {
      v.witness = "chi != alpha + arg phi(x0) at phi=" + std::to_string(phi);
      return v;
    }
  }
  v.holds = true;
  v.branch = 2;
  v.x0 = x0;
  v.alpha = alpha;
  return v;
}

namespace {

VectorFn h_theta0(const HiddenShiftInstance& inst, double R) {
  VectorFn h(inst.group(), 1);
  for (std::size_t x = 0; x < h.size(); ++x) h(x) = f_weight(inst.f, R, x);
  return h;
}

}  // namespace

OptimalChi optimal_chi_theta0(const HiddenShiftInstance& inst) {
  const std::size_t n = inst.f.size();
  OptimalChi out{PhaseAssignment::zero(n), 0.0};
  const auto [R, rhat] = check(inst, out.phases);
  const VectorFn hhat = fourier(h_theta0(inst, R));
  double acc = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    const Complex v = hhat(phi);
    out.phases.chi[phi] = std::abs(v) < 1e-12 ? 0.0 : reduce(std::arg(v));
    acc += fhat_weight(inst, rhat, phi) * std::abs(v);
  }
  const double t = rhat / R + acc / static_cast<double>(n);
  out.p = t * t;
  return out;
}

double expected_prob_random_chi(const HiddenShiftInstance& inst) {
  const std::size_t n = inst.f.size();
  const auto [R, rhat] = check(inst, PhaseAssignment::zero(n));
  const VectorFn hhat = fourier(h_theta0(inst, R));
  double acc = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    acc += (1.0 - std::norm(rhat / inst.fhat(phi))) * std::norm(hhat(phi));
  }
  const double q = rhat / R;
  return q * q + acc / static_cast<double>(n * n);
}

double expected_prob_random_both(const HiddenShiftInstance& inst) {
  const std::size_t n = inst.f.size();
  const auto [R, rhat] = check(inst, PhaseAssignment::zero(n));
  double a = 0.0, b = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) a += 1.0 - std::norm(rhat / inst.fhat(phi));
  for (std::size_t x = 0; x < n; ++x) b += 1.0 - std::norm(inst.f(x) / R);
  const double q = rhat / R;
  return q * q + a * b / std::pow(static_cast<double>(n), 3);
}

MonteCarloEstimate monte_carlo_prob(const HiddenShiftInstance& inst, bool random_theta, std::size_t samples,
                                    std::uint64_t seed) {
  if (samples < 2) throw DomainError("Monte Carlo needs at least two samples");
  const std::size_t n = inst.f.size();
  std::mt19937_64 seeds(seed);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double p = prob_one_register_zs(inst, PhaseAssignment::random(n, seeds(), random_theta, true));
    sum += p;
    sum2 += p * p;
  }
  const double m = sum / static_cast<double>(samples);
  const double var = (sum2 - static_cast<double>(samples) * m * m) / static_cast<double>(samples - 1);
  return {m, std::sqrt(std::max(var, 0.0) / static_cast<double>(samples)), samples};
}

EtaFamily eta_family(std::size_t n, Complex eta) {
  if (std::abs(std::abs(eta) - 1.0) > 1e-12) throw DomainError("eta must have modulus 1");
  const double rt = std::sqrt(static_cast<double>(n));
  GroupSpec G({static_cast<std::int64_t>(n)});
  std::vector<Complex> t;
  if (n == 2) {
    t = {(1.0 + eta) / rt, (1.0 - eta) / rt};
  } else if (n == 3) {
    t = {(1.0 + 2.0 * eta) / rt, (1.0 - eta) / rt, (1.0 - eta) / rt};
  } else {
    throw DomainError("eta families exist for n = 2 and n = 3");
  }
  const double R = std::abs(1.0 - eta) / rt;
  Window w;
  w.R = R;
  w.rhat = 1.0 / R;
  return {VectorFn::scalar(G, std::move(t)), w};
}

}  // namespace abelshift
