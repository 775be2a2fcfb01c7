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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace abelshift {

using Complex = std::complex<double>;

// Residues x_j with 0 <= x_j < N_j.
struct GroupElement {
  std::vector<std::int64_t> coords;
  bool operator==(const GroupElement&) const = default;
};

// Exponent vector a of the character x -> prod_j exp(2 pi i a_j x_j / N_j).
struct Character {
  std::vector<std::int64_t> exponents;
  bool operator==(const Character&) const = default;
};

// G = Z/N_1 x ... x Z/N_l. Elements and characters are enumerated
// lexicographically with the last coordinate varying fastest.
class GroupSpec {
 public:
  GroupSpec() : GroupSpec(std::vector<std::int64_t>{1}) {}
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t order() const { return order_; }
  // lcm of the moduli; all character phases are multiples of 2 pi / exponent.
  std::int64_t exponent() const { return exponent_; }

  // Reduces each coordinate mod N_j (negative inputs allowed).
  GroupElement element(std::vector<std::int64_t> coords) const;
  Character character(std::vector<std::int64_t> exponents) const;

  GroupElement element_at(std::size_t index) const;
  Character character_at(std::size_t index) const;
  std::size_t index_of(const GroupElement& x) const;
  std::size_t index_of(const Character& chi) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement zero() const;

  // Index arithmetic without materializing coordinate vectors.
  std::size_t add_index(std::size_t i, std::size_t j) const;
  std::size_t sub_index(std::size_t i, std::size_t j) const;
  std::size_t neg_index(std::size_t i) const;

  // Exact phase numerator k with chi(x) = exp(2 pi i k / exponent()).
  std::int64_t phase(const Character& chi, const GroupElement& x) const;
  std::int64_t phase_index(std::size_t chi, std::size_t x) const;
  Complex eval_index(std::size_t chi, std::size_t x) const;

  bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }

 private:
  void check_shape(std::size_t n) const;

  std::vector<std::int64_t> moduli_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> weights_;  // exponent / N_j
  std::size_t order_ = 1;
  std::int64_t exponent_ = 1;
};

// phi_a(x). Throws DimensionError when shapes disagree.
Complex char_eval(const GroupSpec& group, const Character& chi, const GroupElement& x);

// exp(2 pi i k / n) with k reduced first, so quarter turns come out exact.
Complex root_of_unity(std::int64_t k, std::int64_t n);

namespace detail {

// Transforms the group axis of data viewed as [outer][|G|][inner], in place,
// as a product of per-factor cyclic DFTs. sign = +1 uses phi(x), sign = -1 uses
// conj phi(x). Normalized by |G|^{-1/2}.
void transform_group_axis(std::span<Complex> data, const GroupSpec& group, std::size_t inner,
                          int sign);

}  // namespace detail

// Dense |G| x |G| Fourier matrix, row-major, entry (phi, x) = phi(x) / |G|^{1/2}.
// Kept as a cross-check for the factored transform.
std::vector<Complex> fourier_matrix(const GroupSpec& group);

}  // namespace abelshift
