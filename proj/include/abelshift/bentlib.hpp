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
#include <optional>
#include <span>
#include <vector>

#include "abelshift/abelian.hpp"
#include "abelshift/gfunc.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

// u_1 f1(x) (+) ... (+) u_n fn(x); every part bent, ||u|| = 1.
VectorFn concatenate(const std::vector<VectorFn>& parts, std::span<const Complex> u);

// f(x) = e_x, a |G|-dimensional bent function.
VectorFn disjoint_support(const GroupSpec& group);

// |G| x |G| matrix M_xy = <f(x), f(y)> together with the dimension bound d.
struct GramMatrix {
  GroupSpec group;
  std::size_t dim_bound = 1;
  std::vector<Complex> entries;  // row-major

  std::size_t size() const { return group.order(); }
  Complex operator()(std::size_t x, std::size_t y) const { return entries[x * size() + y]; }
  Complex& operator()(std::size_t x, std::size_t y) { return entries[x * size() + y]; }
};

GramMatrix gram_of(const VectorFn& f);

// Eigenvalues in ascending order (M must be hermitian).
std::vector<double> gram_eigenvalues(const GramMatrix& m);
// Singular values above 1e-8 of the largest.
std::size_t gram_rank(const GramMatrix& m);
// Membership in C_d(G): hermitian, PSD, unit diagonal, zero shifted traces,
// rank <= d.
PropertyReport check_gram(const GramMatrix& m);

// Inverse of gram_of up to the unitary action; eigenvectors are normalized so
// that their first nonzero entry is real positive. Throws MembershipError.
VectorFn function_from_gram(const GramMatrix& m);

bool equivalent(const VectorFn& f, const VectorFn& g, double tol = 1e-8);

// Solutions (1, z1, z2) of the unit-modulus system on Z/3, found by a grid
// scan plus Newton refinement. Sorted by the angles of (z1, z2).
std::vector<VectorFn> enumerate_B1_Z3();

struct Concatenation {
  std::size_t first = 0;   // indices into enumerate_B1_Z3()
  std::size_t second = 0;
  double t = 1.0;          // M = t M_first + (1 - t) M_second
};

// Searches the 36 ordered pairs of rank-one members; requires M in C_2(Z/3).
std::optional<Concatenation> is_concatenated_Z3_d2(const GramMatrix& m, double tol = 1e-9);

// Two-dimensional bent function on Z/3 whose coordinates are not bent
// individually.
VectorFn z3_two_dim_example();
// Rank-two member of C_2(Z/3) with off-diagonal entries e^{+-2 pi i a}/sqrt 2
// and a zero, and a function realizing it.
GramMatrix z3_rank2_gram(double a);
VectorFn z3_rank2_function(double a);

}  // namespace abelshift
