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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "abelshift/abelian.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Absolute slack on norms for bentness and window membership.
inline constexpr double kNormTolerance = 1e-9;

// Exact fraction |A| / |G|.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// Subset of G or of its dual, as a membership mask over element indices.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe, bool full = false);
  static Subset from_indices(std::size_t universe, const std::vector<std::size_t>& members);

  bool contains(std::size_t i) const { return mask_[i] != 0; }
  void insert(std::size_t i);
  std::size_t size() const { return count_; }
  std::size_t universe() const { return mask_.size(); }
  std::vector<std::size_t> members() const;
  bool operator==(const Subset&) const = default;

 private:
  std::vector<char> mask_;
  std::size_t count_ = 0;
};

// Norm window [r, R] x [rhat, Rhat]; Rhat may be infinite.
struct Window {
  double r = 0.0;
  double R = kInfinity;
  double rhat = 0.0;
  double Rhat = kInfinity;
};

struct BoundProfile {
  double r = 0.0;
  double R = 0.0;
  double rhat = 0.0;
  double Rhat = kInfinity;
  Rational alpha;
  Rational alphahat;
  Subset A;
  Subset Ahat;
};

// g(x) = f(x - s).
VectorFn shift(const VectorFn& f, const GroupElement& s);

bool is_bent(const VectorFn& f, double tol = kNormTolerance);
// Same test with a precomputed transform.
bool is_bent(const VectorFn& f, const VectorFn& fhat, double tol = kNormTolerance);

// sum_x <f(x), f(x+a)> = sum_x sum_i f_i(x) conj f_i(x+a).
Complex autocorrelation(const VectorFn& f, const GroupElement& a);

// Maximal witness sets: A = {x : ||f(x)|| in [r, R]}, Ahat likewise for fhat.
BoundProfile extract_bounds(const VectorFn& f, const Window& window);
BoundProfile extract_bounds(const VectorFn& f, const VectorFn& fhat, const Window& window);

// Tight (R, rhat) window: R = max ||f||, rhat = min ||fhat||, everything else open.
Window tight_window(const VectorFn& f);

struct PropertyReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks rhat <= R, flatness when rhat == R, and that shifted copies stay
// (R, rhat)-bounded, for `samples` random shifts drawn from `seed`.
PropertyReport check_bounded_props(const VectorFn& f, const BoundProfile& profile,
                                   std::uint64_t seed = 1, std::size_t samples = 16);

}  // namespace abelshift
