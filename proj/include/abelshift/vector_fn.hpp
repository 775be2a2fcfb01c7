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
#include <span>
#include <vector>

#include "abelshift/abelian.hpp"

namespace abelshift {

// Functions on G live in the group domain, their transforms on the dual.
enum class Domain { group, dual };

// Table of complex d-vectors indexed by element (or character) index.
// Storage is row-major: entry (x, i) sits at x * dim + i.
class VectorFn {
 public:
  VectorFn() = default;
  VectorFn(GroupSpec group, std::size_t dim, Domain domain = Domain::group);
  VectorFn(GroupSpec group, std::size_t dim, std::vector<Complex> table,
           Domain domain = Domain::group);

  static VectorFn scalar(GroupSpec group, std::vector<Complex> values,
                         Domain domain = Domain::group);

  const GroupSpec& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return group_.order(); }
  Domain domain() const { return domain_; }

  std::span<const Complex> operator[](std::size_t x) const {
    return {table_.data() + x * dim_, dim_};
  }
  std::span<Complex> operator[](std::size_t x) { return {table_.data() + x * dim_, dim_}; }
  Complex operator()(std::size_t x, std::size_t i = 0) const { return table_[x * dim_ + i]; }
  Complex& operator()(std::size_t x, std::size_t i = 0) { return table_[x * dim_ + i]; }

  double norm(std::size_t x) const;
  const std::vector<Complex>& table() const { return table_; }

  // Coordinate function i as a scalar VectorFn.
  VectorFn component(std::size_t i) const;

 private:
  GroupSpec group_;
  std::size_t dim_ = 1;
  Domain domain_ = Domain::group;
  std::vector<Complex> table_;
};

// fhat(phi) = |G|^{-1/2} sum_x phi(x) f(x), coordinate-wise for d > 1.
VectorFn fourier(const VectorFn& f);
// h check(x) = |G|^{-1/2} sum_phi conj phi(x) h(phi).
VectorFn inverse_fourier(const VectorFn& h);

// Largest entrywise distance; throws DimensionError on shape mismatch.
double max_abs_diff(const VectorFn& a, const VectorFn& b);

}  // namespace abelshift
