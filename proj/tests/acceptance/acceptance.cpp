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


// Acceptance driver. One line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abelshift/analysis.hpp"
#include "abelshift/bentlib.hpp"
#include "abelshift/hiddenshift.hpp"
#include "abelshift/numchar.hpp"
#include "abelshift/phasetuned.hpp"
#include "abelshift/statevec.hpp"
#include "support/bent_pool.hpp"
#include "support/oracles.hpp"

namespace abelshift {
namespace {

const Complex I(0.0, 1.0);
const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
const RunOptions kDense{Backend::dense, Completion::householder};
const RunOptions kLazy{Backend::lazy, Completion::householder};

// Collects counts and the first failure.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << " want " << want;
    check(std::abs(got - want) <= tol, os.str());
  }
};

std::string at(const std::string& family, std::size_t s) { return family + " s=" + std::to_string(s); }

Window random_window(std::mt19937_64& rng, const VectorFn& f, const VectorFn& fhat) {
  auto pick = [&rng](const VectorFn& h, double& lo, double& hi) {
    std::vector<double> v(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) v[x] = h.norm(x);
    std::sort(v.begin(), v.end());
    std::uniform_int_distribution<std::size_t> u(0, v.size() - 1);
    std::size_t a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    lo = v[a];
    hi = v[b];
  };
  Window w;
  pick(f, w.r, w.R);
  pick(fhat, w.rhat, w.Rhat);
  return w;
}

GroupElement random_shift(std::mt19937_64& rng, const GroupSpec& g) {
  std::uniform_int_distribution<std::size_t> u(0, g.order() - 1);
  return g.element_at(u(rng));
}

std::vector<Complex> arc(std::size_t n, int count) {
  const double lo = n == 2 ? std::numbers::pi / 2.0 : 2.0 * std::numbers::pi / 3.0;
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) {
    const double t = lo + (2.0 * std::numbers::pi - 2.0 * lo) * k / (count - 1);
    out.push_back(std::polar(1.0, t));
  }
  return out;
}

double loglog_slope(const std::vector<double>& delta, const std::vector<double>& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const double x = std::log(delta[i]), y = std::log(err[i]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

VectorFn z3(Complex a, Complex b, Complex c) { return VectorFn::scalar(GroupSpec({3}), {a, b, c}); }

// AC1: exact recovery on bent functions, every shift.
Tally ac1() {
  Tally t;
  std::size_t multi = 0;
  for (const auto& [family, f] : oracle::bent_pool(50, 4242)) {
    for (std::size_t s = 0; s < f.size(); ++s) {
      const auto inst = make_instance(f, f.group().element_at(s), tight_window(f));
      if (f.dim() == 1) {
        for (const auto& opt : {kDense, kLazy}) {
          const auto rep = run_exact_bent(inst, opt);
          t.near(rep.sim_prob, 1.0, 1e-10, at(family, s));
          t.check(rep.argmax == s, at(family, s) + " argmax");
        }
      } else {
        ++multi;
        const auto rep = run_exact_multidim(inst, kDense);
        t.near(rep.sim_prob, 1.0, 1e-10, at(family, s));
        t.check(rep.argmax == s, at(family, s) + " argmax");
      }
    }
  }
  t.notes.push_back("50 functions, " + std::to_string(multi) + " vector-valued shifts");
  return t;
}

// AC2: bounded algorithm. The two-point example and random tight windows.
Tally ac2() {
  Tally t;
  GroupSpec z2({2});
  const VectorFn two = VectorFn::scalar(z2, {1.0, 2.0 * I});
  for (std::size_t s = 0; s < 2; ++s) {
    const auto inst = make_instance(two, z2.element_at(s), tight_window(two));
    t.near(prob_formula_bounded(inst), 5.0 / 8.0, 1e-12, "(1,2i) formula");
    for (const auto& opt : {kDense, kLazy}) t.near(run_approx_bounded(inst, opt).sim_prob, 5.0 / 8.0, 1e-10, "(1,2i) sim");
  }
  std::mt19937_64 rng(5150);
  for (int k = 0; k < 100; ++k) {
    const GroupSpec g = oracle::random_group(rng, 24);
    const VectorFn f = oracle::random_fn(rng, g);
    const auto inst = make_instance(f, random_shift(rng, g), tight_window(f));
    const auto dft = oracle::dft(g.moduli(), {f.table().begin(), f.table().end()}, 1, 1);
    double lo = kInfinity, hi = 0.0;
    for (auto v : dft) lo = std::min(lo, std::abs(v));
    for (auto v : f.table()) hi = std::max(hi, std::abs(v));
    const double want = (lo / hi) * (lo / hi);
    const std::string tag = "random #" + std::to_string(k);
    t.near(prob_formula_bounded(inst), want, 1e-9, tag + " formula");
    t.near(run_approx_bounded(inst, kDense).sim_prob, want, 1e-9, tag + " dense");
    t.near(run_approx_bounded(inst, kLazy).sim_prob, want, 1e-9, tag + " lazy");
  }
  return t;
}

// AC3: subset algorithm on number-theoretic characters.
Tally ac3() {
  Tally t;
  const Window unit{1.0, 1.0, 1.0, 1.0};
  std::size_t chars = 0;
  for (std::int64_t n : {3, 5, 7, 11, 13}) {
    for (std::size_t i = 0; i < dirichlet_count(n); ++i) {
      const auto c = dirichlet_character(n, i);
      if (!c.primitive) continue;
      ++chars;
      const double want = predicted_prob_dirichlet(c).p;
      const VectorFn f = c.function();
      for (std::size_t s = 0; s < f.size(); ++s) {
        const auto rep = run_approx_subset(make_instance(f, f.group().element_at(s), unit), kLazy);
        const std::string tag = "dirichlet n=" + std::to_string(n) + " i=" + std::to_string(i);
        t.near(rep.sim_prob, want, 1e-9, at(tag, s));
        t.check(rep.argmax == s, at(tag, s) + " argmax");
      }
    }
  }
  for (auto [p, k] : {std::pair<std::int64_t, std::size_t>{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const std::size_t q = static_cast<std::size_t>(std::llround(std::pow(p, k)));
    for (std::size_t idx = 1; idx + 1 < q; ++idx) {
      const auto c = ffield_character(p, k, {}, idx);
      ++chars;
      const double want = predicted_prob_ffield(c);
      const VectorFn f = c.function();
      for (std::size_t s = 0; s < q; ++s) {
        const auto rep = run_approx_subset(make_instance(f, f.group().element_at(s), unit), kLazy);
        t.near(rep.sim_prob, want, 1e-9, at("F" + std::to_string(q) + " i=" + std::to_string(idx), s));
      }
    }
  }
  t.notes.push_back(std::to_string(chars) + " characters");
  return t;
}

// AC4: approximate multidimensional algorithm follows the proof variant.
Tally ac4() {
  Tally t;
  std::mt19937_64 rng(4004);
  int proof = 0, statement = 0;
  for (int k = 0; k < 50; ++k) {
    const GroupSpec g = oracle::random_group(rng, 12);
    const VectorFn f = oracle::random_fn(rng, g, 2);
    const auto inst = make_instance(f, random_shift(rng, g), random_window(rng, f, fourier(f)));
    const auto dense = run_approx_multidim(inst, kDense);
    const auto lazy = run_approx_multidim(inst, kLazy);
    t.near(lazy.sim_prob, dense.sim_prob, 1e-10, "backends #" + std::to_string(k));
    const bool hit = std::abs(dense.sim_prob - dense.extra("formula_proof")) <= 1e-9;
    t.check(hit, "proof variant #" + std::to_string(k));
    proof += hit;
    statement += std::abs(dense.sim_prob - dense.extra("formula_statement")) <= 1e-9;
  }
  t.check(statement < 50, "statement variant matched every instance");
  t.check(kMultidimVariant == MultidimVariant::proof, "default variant");
  t.notes.push_back("proof " + std::to_string(proof) + "/50, statement " + std::to_string(statement) + "/50");
  return t;
}

// AC5: one-register algorithm with phase tuning.
Tally ac5() {
  Tally t;
  std::mt19937_64 rng(505);
  for (int k = 0; k < 100; ++k) {
    const GroupSpec g = oracle::random_group(rng, 16);
    const VectorFn f = oracle::random_fn(rng, g);
    const auto inst = make_instance(f, random_shift(rng, g), tight_window(f));
    const auto ph = PhaseAssignment::random(g.order(), rng(), true, true);
    const double p = prob_one_register(inst, ph);
    const std::string tag = "random phases #" + std::to_string(k);
    t.near(run_one_register(inst, ph, kDense).sim_prob, p, 1e-9, tag + " dense");
    t.near(run_one_register(inst, ph, kLazy).sim_prob, p, 1e-9, tag + " lazy");
  }
  for (std::size_t n : {2u, 3u}) {
    GroupSpec g({static_cast<std::int64_t>(n)});
    for (Complex eta : arc(n, 20)) {
      const EtaFamily fam = eta_family(n, eta);
      for (const auto& ph : {PhaseAssignment::zero(n), PhaseAssignment::random(n, rng(), true, true)}) {
        bool every = true;
        for (std::size_t s = 0; s < n; ++s) {
          const auto inst = make_instance(fam.f, g.element_at(s), fam.window);
          const bool one = std::abs(run_one_register(inst, ph, kDense).sim_prob - 1.0) <= 1e-9;
          std::ostringstream os;
          os << "eta " << eta << " n=" << n << " s=" << s;
          t.check(certainty_conditions(inst, ph).holds == one, os.str());
          every = every && one;
        }
        t.check(all_shift_certainty(make_instance(fam.f, g.zero(), fam.window), ph).holds == every, "eta all-shift");
      }
      t.check(all_shift_certainty(make_instance(fam.f, g.zero(), fam.window), PhaseAssignment::zero(n)).holds,
              "eta zero phases certain");
    }
  }
  for (int k = 0; k < 20; ++k) {
    const GroupSpec g = oracle::random_group(rng, 16);
    const VectorFn f = oracle::random_fn(rng, g);
    const OptimalChi best = optimal_chi_theta0(make_instance(f, g.zero(), tight_window(f)));
    for (std::size_t s = 0; s < g.order(); ++s) {
      const auto inst = make_instance(f, g.element_at(s), tight_window(f));
      t.near(run_one_register(inst, best.phases, kLazy).sim_prob, best.p, 1e-9, "optimal chi #" + std::to_string(k));
    }
  }
  for (int k = 0; k < 5; ++k) {
    const GroupSpec g = oracle::random_group(rng, 8);
    const VectorFn f = oracle::random_fn(rng, g);
    const auto inst = make_instance(f, random_shift(rng, g), tight_window(f));
    const auto chi = monte_carlo_prob(inst, false, 10000, rng());
    t.check(std::abs(chi.mean - expected_prob_random_chi(inst)) <= 4.0 * chi.stderr_, "monte carlo chi");
    const auto both = monte_carlo_prob(inst, true, 10000, rng());
    t.check(std::abs(both.mean - expected_prob_random_both(inst)) <= 4.0 * both.stderr_, "monte carlo both");
  }
  return t;
}

// AC6: amplitude amplification.
struct Toy {
  RegisterLayout layout;
  Circuit circuit;
  std::function<bool(std::size_t)> good;
};

Toy toy(double p) {
  Toy t;
  t.layout = RegisterLayout({{RegisterKind::ancilla, 2}});
  const CMatrix u = complete_unitary(std::vector<Complex>{std::sqrt(1.0 - p), std::sqrt(p)});
  auto run = [u](bool adj) {
    return [u, adj](SimState& st) {
      apply_controlled(st, 0, {}, [&u](std::span<const std::size_t>) { return &u; }, adj);
    };
  };
  t.circuit.add(run(false), run(true));
  t.good = [](std::size_t i) { return i == 1; };
  return t;
}

double closed_form(double p) {
  const double theta = std::asin(std::sqrt(p));
  const double k = std::floor(std::numbers::pi / (4.0 * theta));
  return std::pow(std::sin((2.0 * k + 1.0) * theta), 2);
}

Tally ac6() {
  Tally t;
  for (double p : {0.1, 0.25, 5.0 / 8.0}) {
    const Toy c = toy(p);
    const auto rep = amplitude_amplify(c.circuit, c.layout, c.good, p);
    t.near(rep.boosted, closed_form(p), 1e-9, "toy p=" + std::to_string(p));
  }
  GroupSpec z2({2});
  const VectorFn two = VectorFn::scalar(z2, {1.0, 2.0 * I});
  for (std::size_t s = 0; s < 2; ++s) {
    const auto o = make_oracles(make_instance(two, z2.element_at(s), tight_window(two)));
    const auto rep = amplify_algorithm(o, AmplifiedAlgorithm::approx_bounded);
    t.near(rep.initial_prob, 5.0 / 8.0, 1e-10, "(1,2i) initial");
    t.near(rep.boosted, closed_form(5.0 / 8.0), 1e-9, "(1,2i) boosted");
  }
  const auto c5 = dirichlet_character(5, 1);
  const VectorFn f5 = c5.function();
  for (std::size_t s = 0; s < 5; ++s) {
    const auto o = make_oracles(make_instance(f5, f5.group().element_at(s), Window{1.0, 1.0, 1.0, 1.0}));
    const auto rep = amplify_algorithm(o, AmplifiedAlgorithm::approx_subset);
    t.near(rep.boosted, rep.predicted, 1e-9, "dirichlet 5 boosted");
  }
  return t;
}

// AC7: quantization error bound and its first-order scaling.
Tally ac7() {
  Tally t;
  std::mt19937_64 rng(7007);
  std::vector<VectorFn> fs;
  for (int i = 0; i < 10; ++i) {
    const GroupSpec g = oracle::random_group(rng, 32);
    std::vector<Complex> tab(g.order());
    for (auto& v : tab) v = oracle::random_complex(rng) + 0.3 * oracle::random_phase(rng);
    fs.push_back(VectorFn::scalar(g, std::move(tab)));
  }
  std::vector<double> deltas, errs;
  for (int n = 6; n <= 16; ++n) {
    const auto sc = QuantizationScheme::with_bits(n);
    double worst = 0.0;
    for (const auto& f : fs) {
      for (std::size_t s = 0; s < f.size(); ++s) {
        const auto r = quantized_run(make_instance(f, f.group().element_at(s), tight_window(f)), sc, kLazy);
        t.check(r.error <= r.bound, "bound at n=" + std::to_string(n));
        worst = std::max(worst, r.error);
      }
    }
    deltas.push_back(sc.delta());
    errs.push_back(worst);
  }
  const double slope = loglog_slope(deltas, errs);
  std::ostringstream os;
  os << "slope " << slope << ", C " << kQuantizationC;
  t.check(slope >= 0.8 && slope <= 1.2, os.str());
  t.notes.push_back(os.str());
  return t;
}

// AC8: the Z/3 catalogue.
Tally ac8() {
  Tally t;
  const auto found = enumerate_B1_Z3();
  t.check(found.size() == 6, "six members");
  std::vector<std::pair<Complex, Complex>> grid;
  const int n = 720;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex z1 = std::polar(1.0, 2.0 * std::numbers::pi * i / n);
      const Complex z2 = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
      if (std::abs(z1 + std::conj(z2) + std::conj(z1) * z2) < 1e-9) grid.emplace_back(z1, z2);
    }
  }
  t.check(grid.size() == 6, "grid has six solutions");
  for (const auto& [z1, z2] : grid) {
    bool hit = false;
    for (const auto& f : found) hit = hit || (std::abs(f(1) - z1) < 1e-9 && std::abs(f(2) - z2) < 1e-9);
    t.check(hit, "grid point enumerated");
  }
  for (double a : {0.0, 0.1, 0.25, 0.6}) {
    const GramMatrix m = z3_rank2_gram(a);
    auto ev = gram_eigenvalues(m);
    std::sort(ev.begin(), ev.end());
    const std::string tag = "rank-2 a=" + std::to_string(a);
    t.check(ev.size() == 3, tag + " size");
    if (ev.size() == 3) {
      for (std::size_t i = 0; i < 3; ++i) t.near(ev[i], static_cast<double>(i), 1e-9, tag + " eigenvalue");
    }
    t.check(!is_concatenated_Z3_d2(m), tag + " decomposed");
  }
  for (double w : {0.3, 0.5, 0.9}) {
    const std::vector<Complex> u{std::sqrt(w), std::sqrt(1.0 - w)};
    const VectorFn f = concatenate({z3(1.0, kOmega, 1.0), z3(1.0, kOmega * kOmega, 1.0)}, u);
    const auto dec = is_concatenated_Z3_d2(gram_of(f));
    t.check(dec.has_value(), "concatenation found");
    if (dec) {
      const bool in_order = std::abs(found[dec->first](1) - kOmega) < 1e-9;
      t.near(dec->t, in_order ? w : 1.0 - w, 1e-9, "weight");
    }
  }
  return t;
}

// AC9: forrelation of a shifted bent function against its transform.
Tally ac9() {
  Tally t;
  for (const auto& [family, f] : oracle::bent_pool(100, 909)) {
    const VectorFn fh = fourier(f);
    for (std::size_t s = 0; s < f.size(); ++s) {
      const Complex phi = forrelation(shift(f, f.group().element_at(s)), fh);
      t.near(std::abs(phi - (s == 0 ? 1.0 : 0.0)), 0.0, 1e-10, at(family, s));
    }
  }
  return t;
}

// AC10: structural identities on random inputs.
Tally ac10() {
  Tally t;
  std::mt19937_64 rng(1010);
  std::size_t parseval = 0, ortho = 0, conv = 0, autoc = 0, oracle_inv = 0, completion = 0;

  for (int k = 0; k < 120; ++k, ++parseval) {
    const GroupSpec g = oracle::random_group(rng, 64);
    const VectorFn f = oracle::random_fn(rng, g, 1 + rng() % 3);
    const VectorFn fh = fourier(f);
    double a = 0.0, b = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) a += f.norm(x) * f.norm(x), b += fh.norm(x) * fh.norm(x);
    t.near(b, a, 1e-9 * a, "parseval");
  }

  for (int k = 0; k < 120; ++k, ++ortho) {
    const GroupSpec g = oracle::random_group(rng, 32);
    const std::size_t n = g.order();
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Complex sum = 0.0;
        for (std::size_t x = 0; x < n; ++x) sum += g.eval_index(a, x) * std::conj(g.eval_index(b, x));
        worst = std::max(worst, std::abs(sum - (a == b ? static_cast<double>(n) : 0.0)));
      }
    }
    t.near(worst, 0.0, 1e-9, "orthogonality");
  }

  for (int k = 0; k < 120; ++k, ++conv) {
    const GroupSpec g = oracle::random_group(rng, 32);
    const VectorFn f = oracle::random_fn(rng, g);
    const GroupElement s = random_shift(rng, g);
    const std::size_t si = g.index_of(s);
    const VectorFn lhs = fourier(shift(f, s));
    const VectorFn fh = fourier(f);
    double worst = 0.0;
    for (std::size_t a = 0; a < g.order(); ++a) {
      worst = std::max(worst, std::abs(lhs(a) - oracle::chi(g.moduli(), a, si) * fh(a)));
    }
    t.near(worst, 0.0, 1e-9, "shift rule");
  }

  // Unit-norm functions: bent iff every nonzero autocorrelation vanishes.
  std::vector<VectorFn> unit;
  for (const auto& nb : oracle::bent_pool(60, 1011)) unit.push_back(nb.f);
  for (int k = 0; k < 60; ++k) unit.push_back(oracle::random_unimodular(rng, oracle::random_group(rng, 24)));
  for (const auto& f : unit) {
    ++autoc;
    const GroupSpec& g = f.group();
    const std::size_t n = g.order();
    bool vanish = true;
    for (std::size_t a = 1; a < n; ++a) {
      Complex sum = 0.0;
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t y = oracle::sub(g.moduli(), x, g.neg_index(a));
        for (std::size_t i = 0; i < f.dim(); ++i) sum += std::conj(f(x, i)) * f(y, i);
      }
      vanish = vanish && std::abs(sum) < 1e-9;
      t.check((std::abs(autocorrelation(f, g.element_at(a))) < 1e-9) == (std::abs(sum) < 1e-9), "autocorrelation");
    }
    const auto dft = oracle::dft(g.moduli(), {f.table().begin(), f.table().end()}, f.dim(), 1);
    bool flat = true;
    for (std::size_t a = 0; a < n; ++a) {
      double nn = 0.0;
      for (std::size_t i = 0; i < f.dim(); ++i) nn += std::norm(dft[a * f.dim() + i]);
      flat = flat && std::abs(nn - 1.0) < 1e-9;
    }
    t.check(vanish == flat && is_bent(f) == flat, "bent iff autocorrelation vanishes");
  }

  constexpr std::size_t kG = 0, kO = 1, kW = 2;
  for (int k = 0; k < 120; ++k, ++oracle_inv) {
    const GroupSpec g = oracle::random_group(rng, 16);
    const VectorFn f = oracle::random_fn(rng, g);
    const VectorFn fh = fourier(f);
    const ValueAlphabet w = ValueAlphabet::from({&f, &fh});
    Subset A(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (rng() % 2) A.insert(x);
    }
    RegisterLayout layout({{RegisterKind::group, g.order()}, {RegisterKind::indicator, 2}, {RegisterKind::value, w.size()}});
    std::vector<Complex> amps(layout.total_dim());
    for (auto& v : amps) v = oracle::random_complex(rng);
    const SimState s0(layout, amps);
    SimState s = s0;
    apply_oracle_g(s, f, A, w, {kG, kO, kW});
    apply_oracle_g(s, f, A, w, {kG, kO, kW});
    t.check(s.amps() == s0.amps(), "oracle applied twice");
  }

  for (int k = 0; k < 120; ++k, ++completion) {
    const GroupSpec g = oracle::random_group(rng, 12);
    const VectorFn f = oracle::random_fn(rng, g);
    const auto inst = make_instance(f, random_shift(rng, g), random_window(rng, f, fourier(f)));
    const auto a = run_approx_subset(inst, {Backend::dense, Completion::householder});
    const auto b = run_approx_subset(inst, {Backend::dense, Completion::alternate});
    double worst = 0.0;
    for (std::size_t y = 0; y < a.sim_distribution.size(); ++y)
      worst = std::max(worst, std::abs(a.sim_distribution[y] - b.sim_distribution[y]));
    t.near(worst, 0.0, 1e-10, "completion");
  }

  std::ostringstream os;
  os << "parseval " << parseval << ", orthogonality " << ortho << ", shift " << conv << ", autocorrelation " << autoc
     << ", oracle " << oracle_inv << ", completion " << completion;
  t.notes.push_back(os.str());
  for (std::size_t c : {parseval, ortho, conv, autoc, oracle_inv, completion}) t.check(c >= 100, "too few cases");
  return t;
}

}  // namespace
}  // namespace abelshift

int main() {
  using namespace abelshift;
  const std::vector<std::pair<const char*, std::function<Tally()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && t.failures == 0;
    failed += !ok;
    std::printf("%s %s %zu checks", name, ok ? "PASS" : "FAIL", t.cases);
    for (const auto& n : t.notes) std::printf("; %s", n.c_str());
    if (!error.empty()) std::printf("; exception: %s", error.c_str());
    if (t.failures) std::printf("; %zu failures, first: %s", t.failures, t.first.c_str());
    std::printf(" (%.1f s)\n", secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
