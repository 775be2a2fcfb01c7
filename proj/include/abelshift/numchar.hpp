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
#include <vector>

#include "abelshift/abelian.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

// Multiplicative character of (Z/n)*, extended by zero to Z/n.
// Characters are numbered in mixed radix over the CRT generators of the unit
// group (primitive roots for odd prime powers, -1 and 5 for powers of two),
// smallest prime first. Index 0 is the trivial character.
struct DirichletChar {
  std::int64_t n = 1;
  std::size_t index = 0;
  std::vector<Complex> values;
  bool primitive = false;
  // Smallest n1 | n with f(x) = f1(x mod n1) on units; n when primitive.
  std::int64_t conductor = 1;

  VectorFn function() const;
  // The additive identification y -> phi_y with phi_y(x) = e^{2 pi i xy/n}.
  std::size_t dual_index(std::size_t y) const { return y; }
};

std::int64_t euler_phi(std::int64_t n);
// Number of characters mod n, which is phi(n).
std::size_t dirichlet_count(std::int64_t n);
// Throws ConstructionError for n < 2 or index >= phi(n).
DirichletChar dirichlet_character(std::int64_t n, std::size_t index);

struct PredictedProb {
  double p = 0.0;
  // Set for n = 2 where the unit group is trivial and only the trivial
  // character exists; the value is the bare formula.
  bool degenerate = false;
};

// (phi(n)/n)^2. Throws PreconditionError for imprimitive characters (n > 2).
PredictedProb predicted_prob_dirichlet(const DirichletChar& chi);

// F_p[T]/(poly). Elements are coefficient vectors (c_0, ..., c_{k-1}) and are
// indexed as elements of GroupSpec({p, ..., p}).
class FiniteField {
 public:
  // poly lists coefficients from the constant term up, degree k. It is made
  // monic. Throws ConstructionError when p is not prime or poly is reducible.
  FiniteField(std::int64_t p, std::vector<std::int64_t> poly);

  std::int64_t p() const { return p_; }
  std::size_t k() const { return k_; }
  std::size_t q() const { return q_; }
  const std::vector<std::int64_t>& poly() const { return poly_; }
  const GroupSpec& additive_group() const { return group_; }

  std::vector<std::int64_t> coeffs(std::size_t x) const;
  std::size_t index(const std::vector<std::int64_t>& c) const;

  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t mul(std::size_t x, std::size_t y) const;
  std::size_t pow(std::size_t x, std::uint64_t e) const;
  std::size_t one() const;
  // T^j reduced.
  std::size_t monomial(std::size_t j) const;

  // sum_j x^{p^j}; throws DomainError if the result is not in F_p (cannot
  // happen for an irreducible modulus).
  std::int64_t trace(std::size_t x) const;
  // Smallest element in table order whose multiplicative order is q - 1.
  std::size_t generator() const { return generator_; }

 private:
  std::vector<std::int64_t> mul_coeffs(const std::vector<std::int64_t>& a,
                                       const std::vector<std::int64_t>& b) const;

  std::int64_t p_;
  std::size_t k_;
  std::size_t q_;
  std::vector<std::int64_t> poly_;
  GroupSpec group_;
  std::size_t generator_ = 0;
};

bool is_prime(std::int64_t p);
bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly);
// Smallest monic irreducible of degree k, constant coefficient varying
// fastest. Only offered for p^k <= 1024; throws ConstructionError above.
std::vector<std::int64_t> default_irreducible(std::int64_t p, std::size_t k);

// Character g^j -> exp(2 pi i j index / (q-1)) with g = field.generator(),
// and f(0) = 0.
struct FiniteFieldChar {
  FiniteField field;
  std::size_t index = 0;
  std::vector<Complex> values;
  // dual[y] is the index of phi_y(x) = e^{2 pi i Tr(xy)/p} among the
  // characters of the additive group.
  std::vector<std::size_t> dual;

  bool trivial() const { return index == 0; }
  VectorFn function() const;
};

// Empty poly selects default_irreducible(p, k). Throws ConstructionError for
// a reducible poly, degree mismatch, or index >= q - 1.
FiniteFieldChar ffield_character(std::int64_t p, std::size_t k, std::vector<std::int64_t> poly,
                                 std::size_t index);

// (1 - 1/q)^2. Throws PreconditionError for the trivial character.
double predicted_prob_ffield(const FiniteFieldChar& chi);

}  // namespace abelshift
