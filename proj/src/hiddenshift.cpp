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

#include "abelshift/hiddenshift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "abelshift/error.hpp"

namespace abelshift {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t argmax_of(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Group register starts as |phi_0> on the dual side; F^dagger makes it uniform.
SimState uniform_start(RegisterLayout layout, const GroupSpec& group) {
  layout.set_kind(0, RegisterKind::dual);
  SimState st(std::move(layout));
  apply_fourier_reg(st, 0, group, true);
  return st;
}

// Matrix on `target` selected by the digit of `by`; cached per digit.
void apply_by_digit(SimState& st, std::size_t by, std::size_t target,
                    const std::function<std::optional<CMatrix>(std::size_t)>& rule, bool adjoint = false) {
  const std::size_t n = st.layout().dim(by);
  std::vector<std::optional<CMatrix>> cache(n);
  std::vector<char> ready(n, 0);
  const std::size_t controls[] = {by};
  apply_controlled(
      st, target, controls,
      [&](std::span<const std::size_t> d) -> const CMatrix* {
        if (!ready[d[0]]) {
          cache[d[0]] = rule(d[0]);
          ready[d[0]] = 1;
        }
        return cache[d[0]] ? &*cache[d[0]] : nullptr;
      },
      adjoint);
}

ValueRule coefficient_rule(const Coefficient& coef, bool adjoint_defined, Completion completion) {
  return [coef, adjoint_defined, completion](std::span<const Complex> w) -> std::optional<CMatrix> {
    const std::optional<Complex> c = coef(w[0]);
    if (!c) return std::nullopt;
    return coefficient_matrix(*c, adjoint_defined, completion);
  };
}

RunReport empty_report(const std::string& id, std::size_t n) {
  RunReport rep;
  rep.algorithm = id;
  rep.sim_distribution.assign(n, 0.0);
  return rep;
}

void finish(RunReport& rep) { rep.argmax = argmax_of(rep.sim_distribution); }

void require_scalar(const OracleViews& o, const char* what) {
  if (o.g.dim() != 1) throw PreconditionError(std::string(what) + " needs a scalar function (d = 1)");
}

void require_unit_norms(const OracleViews& o, const char* what) {
  for (std::size_t x = 0; x < o.g.size(); ++x) {
    if (std::abs(o.g.norm(x) - 1.0) > kNormTolerance || std::abs(o.fhat.norm(x) - 1.0) > kNormTolerance) {
      throw PreconditionError(std::string(what) + " needs a bent function");
    }
  }
}

void fill_instance_fields(RunReport& rep, const HiddenShiftInstance& inst) {
  rep.sim_prob = rep.sim_distribution[inst.shift_index()];
}

}  // namespace

double RunReport::extra(const std::string& name) const {
  for (const auto& [k, v] : extras) {
    if (k == name) return v;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

HiddenShiftInstance make_instance(VectorFn f, GroupElement s, const Window& window) {
  HiddenShiftInstance inst;
  inst.s = f.group().element(s.coords);
  inst.fhat = fourier(f);
  inst.g = shift(f, inst.s);
  inst.profile = extract_bounds(f, inst.fhat, window);
  inst.f = std::move(f);
  return inst;
}

OracleViews make_oracles(const HiddenShiftInstance& inst) {
  OracleViews o;
  o.group = inst.group();
  o.g = inst.g;
  o.fhat = inst.fhat;
  const std::size_t s = inst.shift_index();
  o.g_indicator = Subset(inst.f.size());
  for (std::size_t x : inst.profile.A.members()) o.g_indicator.insert(o.group.add_index(x, s));
  o.fhat_indicator = inst.profile.Ahat;
  o.r = inst.profile.r;
  o.R = inst.profile.R;
  o.rhat = inst.profile.rhat;
  o.Rhat = inst.profile.Rhat;
  return o;
}

Encoders standard_encoders(double R, double rhat) {
  return {[R](Complex w) -> std::optional<Complex> { return R > 0.0 ? w / R : Complex(0.0); },
          [rhat](Complex w) -> std::optional<Complex> {
            if (w == 0.0) return std::nullopt;
            return rhat / std::conj(w);
          }};
}

Encoders mirrored_encoders(double r, double Rhat) {
  if (!(r > 0.0) || !std::isfinite(Rhat)) throw PreconditionError("mirrored variant needs r > 0 and finite Rhat");
  return {[r](Complex w) -> std::optional<Complex> {
            if (w == 0.0) return std::nullopt;
            return r / w;
          },
          [Rhat](Complex w) -> std::optional<Complex> { return std::conj(w) / Rhat; }};
}

// ---------------------------------------------------------------- classical

GroupElement classical_exact(const OracleViews& o, QueryCounts& counts) {
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  std::vector<Complex> table(o.g.table().begin(), o.g.table().end());
  counts.g_calls += static_cast<int>(n);
  const VectorFn ghat = fourier(VectorFn(G, o.g.dim(), std::move(table)));
  GroupElement s = G.zero();
  for (std::size_t j = 0; j < G.rank(); ++j) {
    std::vector<std::int64_t> e(G.rank(), 0);
    e[j] = 1;
    const std::size_t phi = G.index_of(G.character(e));
    counts.fhat_calls += 1;
    const auto fh = o.fhat[phi];
    const std::int64_t N = G.moduli()[j];
    if (N == 1) continue;
    // Largest coordinate carries the ratio ghat_i / fhat_i = phi_j(s).
    std::size_t best = 0;
    for (std::size_t i = 1; i < fh.size(); ++i) {
      if (std::abs(fh[i]) > std::abs(fh[best])) best = i;
    }
    if (std::abs(fh[best]) < 1e-12) {
      throw DivisionError("fhat vanishes at generator character " + std::to_string(j));
    }
    const Complex ratio = ghat(phi, best) / fh[best];
    const double t = static_cast<double>(N) * std::arg(ratio) / (2.0 * kPi);
    const double k = std::round(t);
    if (std::abs(t - k) > 0.25) throw DomainError("generator phase is not an N_j-th root of unity");
    s.coords[j] = ((static_cast<std::int64_t>(k) % N) + N) % N;
  }
  return s;
}

RunReport run_classical(const HiddenShiftInstance& inst) {
  RunReport rep = empty_report("classical", inst.f.size());
  const GroupElement s = classical_exact(make_oracles(inst), rep.queries);
  rep.recovered = s;
  rep.sim_distribution[inst.group().index_of(s)] = 1.0;
  finish(rep);
  fill_instance_fields(rep, inst);
  return rep;
}

// ---------------------------------------------------------------- exact bent

RunReport simulate_exact_bent(const OracleViews& o, const RunOptions& opt) {
  require_scalar(o, "exact-bent");
  require_unit_norms(o, "exact-bent");
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  RunReport rep = empty_report("exact-bent", n);
  std::vector<Complex> inv(n);
  for (std::size_t phi = 0; phi < n; ++phi) inv[phi] = 1.0 / o.fhat(phi);

  if (opt.backend == Backend::dense) {
    SimState st = uniform_start(RegisterLayout({{RegisterKind::group, n}}), G);
    apply_phase_oracle(st, 0, o.g.table());
    apply_fourier_reg(st, 0, G);
    apply_phase_oracle(st, 0, inv);
    apply_fourier_reg(st, 0, G, true);
    rep.sim_distribution = measure_distribution(st, 0);
  } else {
    // Function-level transforms, no register bookkeeping.
    std::vector<Complex> a(o.g.table().begin(), o.g.table().end());
    for (auto& v : a) v /= std::sqrt(static_cast<double>(n));
    VectorFn h = fourier(VectorFn::scalar(G, std::move(a)));
    for (std::size_t phi = 0; phi < n; ++phi) h(phi) *= inv[phi];
    const VectorFn out = inverse_fourier(h);
    for (std::size_t y = 0; y < n; ++y) rep.sim_distribution[y] = std::norm(out(y));
  }
  rep.queries = {1, 1};
  finish(rep);
  return rep;
}

RunReport run_exact_bent(const HiddenShiftInstance& inst, const RunOptions& opt) {
  if (!is_bent(inst.f, inst.fhat)) throw PreconditionError("exact-bent needs a bent function");
  RunReport rep = simulate_exact_bent(make_oracles(inst), opt);
  rep.formula_prob = 1.0;
  fill_instance_fields(rep, inst);
  return rep;
}

// ------------------------------------------------- two-encoder approximations

namespace {

// Shared driver for the bounded, subset and mirrored variants.
RunReport two_encoder_run(const std::string& id, const OracleViews& o, const Encoders& enc,
                          bool indicators, bool negate, const RunOptions& opt) {
  require_scalar(o, id.c_str());
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  RunReport rep = empty_report(id, n);
  rep.queries = {2, 2};

  if (opt.backend == Backend::lazy) {
    enum : std::size_t { kG, kA, kB };
    SimState st = uniform_start(
        RegisterLayout({{RegisterKind::group, n}, {RegisterKind::ancilla, 2}, {RegisterKind::ancilla, 2}}), G);
    if (indicators) {
      const PostselectResult p1 = postselect_subset(st, kG, o.g_indicator);
      rep.postselect_probs.push_back(p1.probability);
      if (p1.empty) {
        rep.fail_certain = true;
        return rep;
      }
    }
    apply_by_digit(st, kG, kA, [&](std::size_t x) -> std::optional<CMatrix> {
      const auto c = enc.first(o.g(x));
      if (!c) return std::nullopt;
      return coefficient_matrix(*c, false, opt.completion);
    });
    if (negate) apply_negation(st, kG, G);
    apply_fourier_reg(st, kG, G);
    if (indicators) {
      const PostselectResult p2 = postselect_subset(st, kG, o.fhat_indicator);
      rep.postselect_probs.push_back(p2.probability);
      if (p2.empty) {
        rep.fail_certain = true;
        return rep;
      }
    }
    apply_by_digit(st, kG, kB, [&](std::size_t phi) -> std::optional<CMatrix> {
      const auto c = enc.second(o.fhat(phi));
      if (!c) return std::nullopt;
      return coefficient_matrix(*c, true, opt.completion);
    });
    apply_fourier_reg(st, kG, G, true);
    if (negate) apply_negation(st, kG, G);
    const std::pair<std::size_t, std::size_t> fixed[] = {{kA, 0}, {kB, 0}};
    rep.sim_distribution = joint_distribution(st, kG, fixed);
  } else {
    const ValueAlphabet W = ValueAlphabet::from({&o.g, &o.fhat});
    enum : std::size_t { kG, kO, kW, kA, kB };
    SimState st = uniform_start(RegisterLayout({{RegisterKind::group, n},
                                                {RegisterKind::indicator, 2},
                                                {RegisterKind::value, W.size()},
                                                {RegisterKind::ancilla, 2},
                                                {RegisterKind::ancilla, 2}}),
                                G);
    // Without indicators the oracle still owns the O wire but never flips it.
    const Subset none(n);
    const Subset& gmask = indicators ? o.g_indicator : none;
    const Subset& fmask = indicators ? o.fhat_indicator : none;
    const OracleRegs regs{kG, kO, kW};

    apply_oracle_g(st, o.g, gmask, W, regs);
    if (indicators) {
      const PostselectResult p1 = postselect(st, kO, 1);
      rep.postselect_probs.push_back(p1.probability);
      if (p1.empty) {
        rep.fail_certain = true;
        return rep;
      }
    }
    apply_value_rule(st, W, {kW, kA, std::nullopt}, coefficient_rule(enc.first, false, opt.completion));
    apply_oracle_g(st, o.g, gmask, W, regs);
    if (negate) apply_negation(st, kG, G);
    apply_fourier_reg(st, kG, G);
    apply_oracle_fhat(st, o.fhat, fmask, W, regs);
    if (indicators) {
      const PostselectResult p2 = postselect(st, kO, 1);
      rep.postselect_probs.push_back(p2.probability);
      if (p2.empty) {
        rep.fail_certain = true;
        return rep;
      }
    }
    apply_value_rule(st, W, {kW, kB, std::nullopt}, coefficient_rule(enc.second, true, opt.completion));
    apply_oracle_fhat(st, o.fhat, fmask, W, regs);
    apply_fourier_reg(st, kG, G, true);
    if (negate) apply_negation(st, kG, G);
    const std::pair<std::size_t, std::size_t> fixed[] = {
        {kO, 0}, {kW, ValueAlphabet::blank}, {kA, 0}, {kB, 0}};
    rep.sim_distribution = joint_distribution(st, kG, fixed);
  }
  double weight = 1.0;
  for (double p : rep.postselect_probs) weight *= p;
  for (double& v : rep.sim_distribution) v *= weight;
  finish(rep);
  return rep;
}

}  // namespace

double prob_formula_bounded(const HiddenShiftInstance& inst) {
  const double q = inst.profile.rhat / inst.profile.R;
  return q * q;
}

RunReport simulate_approx_bounded(const OracleViews& o, const RunOptions& opt) {
  if (o.rhat < 1e-12) {
    RunReport rep = empty_report("approx-bounded", o.group.order());
    rep.queries = {2, 2};
    rep.fail_certain = true;
    return rep;
  }
  return two_encoder_run("approx-bounded", o, standard_encoders(o.R, o.rhat), false, false, opt);
}

RunReport run_approx_bounded(const HiddenShiftInstance& inst, const RunOptions& opt) {
  RunReport rep = simulate_approx_bounded(make_oracles(inst), opt);
  rep.formula_prob = prob_formula_bounded(inst);
  fill_instance_fields(rep, inst);
  return rep;
}

double prob_formula_subset(const HiddenShiftInstance& inst) {
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const std::size_t s = inst.shift_index();
  const BoundProfile& p = inst.profile;
  if (inst.f.dim() != 1) throw PreconditionError("subset formula is for scalar functions");
  Complex acc = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (!p.Ahat.contains(phi)) continue;
    const Complex fh = inst.fhat(phi);
    if (fh == 0.0) throw DivisionError("fhat vanishes on Ahat");
    const Complex conj_s = std::conj(G.eval_index(phi, s));
    for (std::size_t x = 0; x < n; ++x) {
      // x in A + s  <=>  x - s in A
      if (p.A.contains(G.sub_index(x, s))) continue;
      acc += G.eval_index(phi, x) * conj_s * inst.g(x) / fh;
    }
  }
  const Complex inner = p.alphahat.value() - acc / std::pow(static_cast<double>(n), 1.5);
  const double q = p.rhat / p.R;
  return q * q * std::norm(inner);
}

RunReport simulate_subset(const OracleViews& o, const Encoders& enc, bool negate, const RunOptions& opt) {
  return two_encoder_run(negate ? "mirrored" : "approx-subset", o, enc, true, negate, opt);
}

RunReport run_approx_subset(const HiddenShiftInstance& inst, const RunOptions& opt) {
  const OracleViews o = make_oracles(inst);
  RunReport rep = simulate_subset(o, standard_encoders(o.R, o.rhat), false, opt);
  rep.formula_prob = prob_formula_subset(inst);
  fill_instance_fields(rep, inst);
  return rep;
}

double prob_formula_mirrored(const HiddenShiftInstance& inst) {
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const std::size_t s = inst.shift_index();
  const std::size_t neg_s = G.neg_index(s);
  const BoundProfile& p = inst.profile;
  if (inst.f.dim() != 1) throw PreconditionError("mirrored formula is for scalar functions");
  Complex acc = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (p.Ahat.contains(phi)) continue;
    const Complex c = std::conj(G.eval_index(phi, neg_s)) * inst.fhat(phi);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t mx = G.neg_index(x);
      if (!p.A.contains(G.sub_index(mx, s))) continue;  // -x in A + s
      const Complex gv = inst.g(mx);
      if (gv == 0.0) throw DivisionError("g vanishes on -(A+s)");
      acc += G.eval_index(phi, x) * c / gv;
    }
  }
  const Complex inner = p.alpha.value() - acc / std::pow(static_cast<double>(n), 1.5);
  const double q = p.r / p.Rhat;
  return q * q * std::norm(inner);
}

RunReport run_mirrored_subset(const HiddenShiftInstance& inst, const RunOptions& opt) {
  const OracleViews o = make_oracles(inst);
  RunReport rep = simulate_subset(o, mirrored_encoders(o.r, o.Rhat), true, opt);
  rep.formula_prob = prob_formula_mirrored(inst);
  fill_instance_fields(rep, inst);
  return rep;
}

// ------------------------------------------------------------ multidimensional

RunReport simulate_exact_multidim(const OracleViews& o, const RunOptions& opt) {
  require_unit_norms(o, "exact-multidim");
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  const std::size_t d = o.g.dim();
  RunReport rep = empty_report("exact-multidim", n);
  rep.queries = {2, 2};
  // S(w)|0> = w.
  auto S = [&](std::span<const Complex> w) -> std::optional<CMatrix> {
    return complete_unitary(w, opt.completion);
  };

  if (opt.backend == Backend::lazy) {
    SimState st = uniform_start(RegisterLayout({{RegisterKind::group, n}, {RegisterKind::ancilla, d}}), G);
    apply_by_digit(st, 0, 1, [&](std::size_t x) { return S(o.g[x]); });
    apply_fourier_reg(st, 0, G);
    apply_by_digit(st, 0, 1, [&](std::size_t phi) { return S(o.fhat[phi]); }, true);
    apply_fourier_reg(st, 0, G, true);
    const std::pair<std::size_t, std::size_t> fixed[] = {{1, 0}};
    rep.sim_distribution = joint_distribution(st, 0, fixed);
  } else {
    const ValueAlphabet W = ValueAlphabet::from({&o.g, &o.fhat});
    enum : std::size_t { kG, kW, kA };
    SimState st = uniform_start(
        RegisterLayout({{RegisterKind::group, n}, {RegisterKind::value, W.size()}, {RegisterKind::ancilla, d}}), G);
    const Subset none(n);
    const OracleRegs regs{kG, std::nullopt, kW};
    apply_oracle_g(st, o.g, none, W, regs);
    apply_value_rule(st, W, {kW, kA, std::nullopt}, S);
    apply_oracle_g(st, o.g, none, W, regs);
    apply_fourier_reg(st, kG, G);
    apply_oracle_fhat(st, o.fhat, none, W, regs);
    apply_value_rule(st, W, {kW, kA, std::nullopt}, S, true);
    apply_oracle_fhat(st, o.fhat, none, W, regs);
    apply_fourier_reg(st, kG, G, true);
    const std::pair<std::size_t, std::size_t> fixed[] = {{kW, ValueAlphabet::blank}, {kA, 0}};
    rep.sim_distribution = joint_distribution(st, kG, fixed);
  }
  finish(rep);
  return rep;
}

RunReport run_exact_multidim(const HiddenShiftInstance& inst, const RunOptions& opt) {
  if (!is_bent(inst.f, inst.fhat)) throw PreconditionError("exact-multidim needs a bent function");
  RunReport rep = simulate_exact_multidim(make_oracles(inst), opt);
  rep.formula_prob = 1.0;
  fill_instance_fields(rep, inst);
  return rep;
}

double prob_formula_multidim(const HiddenShiftInstance& inst, MultidimVariant variant) {
  const GroupSpec& G = inst.group();
  const std::size_t n = G.order();
  const std::size_t d = inst.f.dim();
  const std::size_t s = inst.shift_index();
  const BoundProfile& p = inst.profile;
  Complex acc = 0.0;
  for (std::size_t phi = 0; phi < n; ++phi) {
    if (!p.Ahat.contains(phi)) continue;
    const double nf = inst.fhat.norm(phi);
    if (nf == 0.0) throw DivisionError("fhat vanishes on Ahat");
    const double denom = variant == MultidimVariant::proof ? nf * nf : nf;
    const Complex tw = variant == MultidimVariant::proof ? std::conj(G.eval_index(phi, s)) : Complex(1.0);
    for (std::size_t x = 0; x < n; ++x) {
      if (p.A.contains(G.sub_index(x, s))) continue;
      Complex dot = 0.0;
      for (std::size_t i = 0; i < d; ++i) dot += inst.g(x, i) * std::conj(inst.fhat(phi, i));
      acc += G.eval_index(phi, x) * tw * dot / denom;
    }
  }
  const Complex inner = p.alphahat.value() - acc / std::pow(static_cast<double>(n), 1.5);
  const double q = p.rhat / p.R;
  return q * q * std::norm(inner);
}

RunReport simulate_approx_multidim(const OracleViews& o, const RunOptions& opt) {
  const GroupSpec& G = o.group;
  const std::size_t n = G.order();
  const std::size_t d = o.g.dim();
  RunReport rep = empty_report("approx-multidim", n);
  rep.queries = {2, 2};
  auto fail = [&rep](const PostselectResult& p) {
    rep.postselect_probs.push_back(p.probability);
    if (p.empty) rep.fail_certain = true;
    return p.empty;
  };

  if (opt.backend == Backend::lazy) {
    enum : std::size_t { kG, kA, kB };
    SimState st = uniform_start(
        RegisterLayout({{RegisterKind::group, n}, {RegisterKind::ancilla, d + 1}, {RegisterKind::ancilla, 2}}), G);
    if (fail(postselect_subset(st, kG, o.g_indicator))) return rep;
    apply_by_digit(st, kG, kA, [&](std::size_t x) -> std::optional<CMatrix> {
      return u1_matrix(o.g[x], o.R, d + 1, opt.completion);
    });
    apply_fourier_reg(st, kG, G);
    if (fail(postselect_subset(st, kG, o.fhat_indicator))) return rep;
    apply_by_digit(st, kG, kA, [&](std::size_t phi) { return vrot_matrix(o.fhat[phi], d + 1, opt.completion); });
    apply_by_digit(st, kG, kB, [&](std::size_t phi) { return u2_matrix(o.fhat[phi], o.rhat, 2, opt.completion, true); });
    apply_fourier_reg(st, kG, G, true);
    const std::pair<std::size_t, std::size_t> fixed[] = {{kA, 0}, {kB, 0}};
    rep.sim_distribution = joint_distribution(st, kG, fixed);
  } else {
    const ValueAlphabet W = ValueAlphabet::from({&o.g, &o.fhat});
    enum : std::size_t { kG, kO, kW, kA, kB };
    SimState st = uniform_start(RegisterLayout({{RegisterKind::group, n},
                                                {RegisterKind::indicator, 2},
                                                {RegisterKind::value, W.size()},
                                                {RegisterKind::ancilla, d + 1},
                                                {RegisterKind::ancilla, 2}}),
                                G);
    const OracleRegs regs{kG, kO, kW};
    apply_oracle_g(st, o.g, o.g_indicator, W, regs);
    if (fail(postselect(st, kO, 1))) return rep;
    apply_U1(st, W, o.R, {kW, kA, std::nullopt}, opt.completion);
    apply_oracle_g(st, o.g, o.g_indicator, W, regs);
    apply_fourier_reg(st, kG, G);
    apply_oracle_fhat(st, o.fhat, o.fhat_indicator, W, regs);
    if (fail(postselect(st, kO, 1))) return rep;
    apply_Vrot(st, W, {kW, kA, std::nullopt}, opt.completion);
    apply_U2(st, W, o.rhat, {kW, kB, std::nullopt}, opt.completion, false, true);
    apply_oracle_fhat(st, o.fhat, o.fhat_indicator, W, regs);
    apply_fourier_reg(st, kG, G, true);
    const std::pair<std::size_t, std::size_t> fixed[] = {
        {kO, 0}, {kW, ValueAlphabet::blank}, {kA, 0}, {kB, 0}};
    rep.sim_distribution = joint_distribution(st, kG, fixed);
  }
  double weight = 1.0;
  for (double p : rep.postselect_probs) weight *= p;
  for (double& v : rep.sim_distribution) v *= weight;
  finish(rep);
  return rep;
}

RunReport run_approx_multidim(const HiddenShiftInstance& inst, const RunOptions& opt) {
  RunReport rep = simulate_approx_multidim(make_oracles(inst), opt);
  rep.formula_prob = prob_formula_multidim(inst, kMultidimVariant);
  rep.extras.emplace_back("formula_statement", prob_formula_multidim(inst, MultidimVariant::statement));
  rep.extras.emplace_back("formula_proof", prob_formula_multidim(inst, MultidimVariant::proof));
  fill_instance_fields(rep, inst);
  return rep;
}

}  // namespace abelshift
