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

#include "abelshift/gfunc.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "abelshift/error.hpp"
#include "gtest/gtest.h"
#include "support/oracles.hpp"

namespace abelshift {
namespace {

const Complex I(0.0, 1.0);
const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

TEST(Shift, Examples) {
  GroupSpec z2({2});
  const VectorFn g = shift(VectorFn::scalar(z2, {1.0, I}), z2.element({1}));
  EXPECT_EQ(g(0), I);
  EXPECT_EQ(g(1), Complex(1.0));

  GroupSpec z3({3});
  const VectorFn f = VectorFn::scalar(z3, {1.0, kOmega, 1.0});
  EXPECT_EQ(max_abs_diff(shift(f, z3.zero()), f), 0.0);
  const VectorFn h = shift(f, z3.element({1}));
  EXPECT_EQ(h(0), Complex(1.0));
  EXPECT_EQ(h(1), Complex(1.0));
  EXPECT_EQ(h(2), kOmega);
}

TEST(Shift, InverseShiftRestores) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const GroupSpec g = oracle::random_group(rng, 64);
    const VectorFn f = oracle::random_fn(rng, g, 2);
    const GroupElement s = g.element_at(static_cast<std::size_t>(t) % g.order());
    EXPECT_EQ(max_abs_diff(shift(shift(f, s), g.neg(s)), f), 0.0);
  }
}

TEST(IsBent, Examples) {
  EXPECT_TRUE(is_bent(VectorFn::scalar(GroupSpec({2}), {1.0, I})));
  EXPECT_TRUE(is_bent(VectorFn::scalar(GroupSpec({3}), {1.0, kOmega, 1.0})));
  EXPECT_FALSE(is_bent(VectorFn::scalar(GroupSpec({2}), {1.0, 2.0 * I})));
}

TEST(Autocorrelation, Examples) {
  GroupSpec z2({2});
  EXPECT_NEAR(std::abs(autocorrelation(VectorFn::scalar(z2, {1.0, I}), z2.element({1}))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(autocorrelation(VectorFn::scalar(z2, {1.0, 1.0}), z2.element({1})) - 2.0), 0.0,
              1e-15);
  std::mt19937_64 rng(1);
  const GroupSpec g({5, 2});
  const VectorFn u = oracle::random_unimodular(rng, g);
  EXPECT_NEAR(std::abs(autocorrelation(u, g.zero()) - 10.0), 0.0, 1e-12);
}

// Curated catalog: bent and non-bent functions with unit norm everywhere.
std::vector<VectorFn> unit_norm_catalog() {
  std::vector<VectorFn> out;
  std::mt19937_64 rng(17);
  for (auto moduli : {std::vector<std::int64_t>{2}, {3}, {4}, {5}, {2, 2}, {3, 3}, {2, 3}, {7}, {4, 2}}) {
    const GroupSpec g(moduli);
    // Additive characters have a delta transform: unit norm, never bent.
    for (std::size_t a = 0; a < g.order(); a += 2) {
      out.push_back(oracle::twisted_character(g, a, oracle::random_phase(rng)));
    }
    out.push_back(oracle::quadratic_bent(g, 1, oracle::random_phase(rng)));
    out.push_back(oracle::random_unimodular(rng, g));
    out.push_back(oracle::random_unimodular(rng, g));
  }
  out.push_back(oracle::quadratic_bent(GroupSpec({5}), 2));
  out.push_back(oracle::quadratic_bent(GroupSpec({3, 3}), 1));
  out.push_back(VectorFn::scalar(GroupSpec({2}), {1.0, I}));
  out.push_back(VectorFn::scalar(GroupSpec({4}), {1.0, 1.0, 1.0, -1.0}));
  out.push_back(VectorFn::scalar(GroupSpec({2, 2}), {1.0, 1.0, 1.0, -1.0}));
  return out;
}

TEST(Bentness, AutocorrelationCriterionOnCatalog) {
  int bent = 0;
  int non_bent = 0;
  for (const VectorFn& f : unit_norm_catalog()) {
    bool flat = true;
    for (std::size_t a = 1; a < f.size(); ++a) {
      flat = flat && std::abs(autocorrelation(f, f.group().element_at(a))) < 1e-9;
    }
    EXPECT_EQ(is_bent(f), flat);
    (flat ? bent : non_bent)++;
  }
  EXPECT_GT(bent, 10);
  EXPECT_GT(non_bent, 10);
}

TEST(Bentness, ShiftPreservesBentness) {
  for (const VectorFn& f : unit_norm_catalog()) {
    if (!is_bent(f)) continue;
    for (std::size_t s = 0; s < f.size(); ++s) EXPECT_TRUE(is_bent(shift(f, f.group().element_at(s))));
  }
}

TEST(ExtractBounds, Examples) {
  const VectorFn f = VectorFn::scalar(GroupSpec({2}), {1.0, 2.0 * I});
  const BoundProfile p = extract_bounds(f, {0.0, 2.0, std::sqrt(2.5), kInfinity});
  EXPECT_EQ(p.alpha, (Rational{1, 1}));
  EXPECT_EQ(p.alphahat, (Rational{1, 1}));
  EXPECT_EQ(p.R, 2.0);

  const VectorFn b = VectorFn::scalar(GroupSpec({2}), {1.0, I});
  const BoundProfile pb = extract_bounds(b, {1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(pb.A.size(), 2u);
  EXPECT_EQ(pb.Ahat.size(), 2u);

  const VectorFn dir = VectorFn::scalar(GroupSpec({3}), {0.0, 1.0, -1.0});
  const VectorFn dh = fourier(dir);
  EXPECT_NEAR(std::abs(dh(0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dh(1) - I), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(dh(2) + I), 0.0, 1e-15);
  const BoundProfile pd = extract_bounds(dir, {1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(pd.A.members(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(pd.Ahat.members(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(pd.alpha, (Rational{2, 3}));
  EXPECT_EQ(pd.alphahat, (Rational{2, 3}));
}

TEST(ExtractBounds, WitnessSetsAreMaximal) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const GroupSpec g = oracle::random_group(rng, 64);
    const VectorFn f = oracle::random_fn(rng, g);
    const VectorFn fh = fourier(f);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    const double r = u(rng) * 0.5;
    const double rh = u(rng) * 0.5;
    const BoundProfile p = extract_bounds(f, {r, r + u(rng), rh, rh + u(rng)});
    for (std::size_t x = 0; x < g.order(); ++x) {
      EXPECT_EQ(p.A.contains(x), f.norm(x) >= p.r - kNormTolerance && f.norm(x) <= p.R + kNormTolerance);
      EXPECT_EQ(p.Ahat.contains(x),
                fh.norm(x) >= p.rhat - kNormTolerance && fh.norm(x) <= p.Rhat + kNormTolerance);
    }
    EXPECT_EQ(p.alpha, make_rational(static_cast<std::int64_t>(p.A.size()), static_cast<std::int64_t>(g.order())));
  }
}

TEST(ExtractBounds, ShiftMovesWitnessSet) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const GroupSpec g = oracle::random_group(rng, 64);
    const VectorFn f = oracle::random_fn(rng, g);
    const Window w{0.5, 1.5, 0.3, 2.0};
    const BoundProfile p = extract_bounds(f, w);
    const std::size_t s = static_cast<std::size_t>(t) % g.order();
    const BoundProfile q = extract_bounds(shift(f, g.element_at(s)), w);
    EXPECT_EQ(q.alpha, p.alpha);
    EXPECT_EQ(q.Ahat, p.Ahat);
    for (std::size_t x = 0; x < g.order(); ++x) EXPECT_EQ(q.A.contains(g.add_index(x, s)), p.A.contains(x));
  }
}

TEST(ExtractBounds, RejectsBadWindow) {
  const VectorFn f = VectorFn::scalar(GroupSpec({2}), {1.0, 1.0});
  EXPECT_THROW(extract_bounds(f, {2.0, 1.0, 0.0, 1.0}), DomainError);
}

TEST(BoundedProps, Examples) {
  const VectorFn f = VectorFn::scalar(GroupSpec({2}), {1.0, 2.0 * I});
  const BoundProfile p = extract_bounds(f, {0.0, 2.0, std::sqrt(2.5), kInfinity});
  EXPECT_TRUE(check_bounded_props(f, p).ok);

  const VectorFn b = VectorFn::scalar(GroupSpec({2}), {1.0, I});
  EXPECT_TRUE(check_bounded_props(b, extract_bounds(b, {1.0, 1.0, 1.0, 1.0})).ok);

  // Unit modulus on Z/4, not bent.
  const VectorFn u = VectorFn::scalar(GroupSpec({4}), {1.0, 1.0, 1.0, I});
  const Window w = tight_window(u);
  EXPECT_NEAR(w.R, 1.0, 1e-15);
  EXPECT_LT(w.rhat, w.R - 0.1);
  EXPECT_TRUE(check_bounded_props(u, extract_bounds(u, w)).ok);
}

TEST(BoundedProps, ReportsViolation) {
  const VectorFn f = VectorFn::scalar(GroupSpec({2}), {1.0, 2.0 * I});
  BoundProfile p = extract_bounds(f, {0.0, 2.0, std::sqrt(2.5), kInfinity});
  p.R = 1.5;
  const PropertyReport rep = check_bounded_props(f, p);
  EXPECT_FALSE(rep.ok);
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_NE(rep.violations.front().find("x=1"), std::string::npos);
}

TEST(BoundedProps, RandomFunctionsSatisfyProposition) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const GroupSpec g = oracle::random_group(rng, 64);
    const VectorFn f = oracle::random_fn(rng, g, 1 + t % 2);
    const PropertyReport rep = check_bounded_props(f, extract_bounds(f, tight_window(f)), t, 4);
    EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations.front());
  }
}

}  // namespace
}  // namespace abelshift
