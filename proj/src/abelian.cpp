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

#include "abelshift/abelian.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "abelshift/error.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// DFT twiddles exp(sign 2 pi i m / n).
std::vector<Complex> twiddles(std::int64_t n, int sign) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) w[m] = root_of_unity(sign * m, n);
  return w;
}

}  // namespace

Complex root_of_unity(std::int64_t k, std::int64_t n) {
  k = mod(k, n);
  // Exact values on the axes; the rest goes through cos/sin of a reduced angle.
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DimensionError("group needs at least one cyclic factor");
  strides_.assign(moduli_.size(), 1);
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    if (moduli_[j] < 1) throw DimensionError("cyclic modulus must be >= 1");
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(moduli_[j]);
    exponent_ = std::lcm(exponent_, moduli_[j]);
  }
  weights_.resize(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) weights_[j] = exponent_ / moduli_[j];
}

void GroupSpec::check_shape(std::size_t n) const {
  if (n != moduli_.size()) {
    throw DimensionError("expected " + std::to_string(moduli_.size()) + " coordinates, got " +
                         std::to_string(n));
  }
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  check_shape(coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) coords[j] = mod(coords[j], moduli_[j]);
  return {std::move(coords)};
}

Character GroupSpec::character(std::vector<std::int64_t> exponents) const {
  return {element(std::move(exponents)).coords};
}

GroupElement GroupSpec::element_at(std::size_t index) const {
  if (index >= order_) throw DimensionError("element index out of range");
  GroupElement x{std::vector<std::int64_t>(moduli_.size())};
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    x.coords[j] = static_cast<std::int64_t>((index / strides_[j]) % moduli_[j]);
  }
  return x;
}

Character GroupSpec::character_at(std::size_t index) const { return {element_at(index).coords}; }

std::size_t GroupSpec::index_of(const GroupElement& x) const {
  check_shape(x.coords.size());
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (x.coords[j] < 0 || x.coords[j] >= moduli_[j]) throw DimensionError("residue out of range");
    idx += static_cast<std::size_t>(x.coords[j]) * strides_[j];
  }
  return idx;
}

std::size_t GroupSpec::index_of(const Character& chi) const {
  return index_of(GroupElement{chi.exponents});
}

GroupElement GroupSpec::add(const GroupElement& x, const GroupElement& y) const {
  check_shape(x.coords.size());
  check_shape(y.coords.size());
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = x.coords[j] + y.coords[j];
  return element(std::move(c));
}

GroupElement GroupSpec::sub(const GroupElement& x, const GroupElement& y) const {
  return add(x, neg(y));
}

GroupElement GroupSpec::neg(const GroupElement& x) const {
  check_shape(x.coords.size());
  std::vector<std::int64_t> c(x.coords.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = -x.coords[j];
  return element(std::move(c));
}

GroupElement GroupSpec::zero() const {
  return {std::vector<std::int64_t>(moduli_.size(), 0)};
}

std::size_t GroupSpec::add_index(std::size_t i, std::size_t j) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    const auto n = static_cast<std::size_t>(moduli_[k]);
    const std::size_t a = (i / strides_[k]) % n;
    const std::size_t b = (j / strides_[k]) % n;
    out += ((a + b) % n) * strides_[k];
  }
  return out;
}

std::size_t GroupSpec::neg_index(std::size_t i) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) {
    const auto n = static_cast<std::size_t>(moduli_[k]);
    const std::size_t a = (i / strides_[k]) % n;
    out += ((n - a) % n) * strides_[k];
  }
  return out;
}

std::size_t GroupSpec::sub_index(std::size_t i, std::size_t j) const {
  return add_index(i, neg_index(j));
}

std::int64_t GroupSpec::phase(const Character& chi, const GroupElement& x) const {
  check_shape(chi.exponents.size());
  check_shape(x.coords.size());
  std::int64_t k = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const std::int64_t a = mod(chi.exponents[j], moduli_[j]);
    const std::int64_t b = mod(x.coords[j], moduli_[j]);
    // a*b < N_j^2 and the weight brings it to a multiple of exponent/N_j.
    k = mod(k + mod(a * b, moduli_[j]) * weights_[j], exponent_);
  }
  return k;
}

std::int64_t GroupSpec::phase_index(std::size_t chi, std::size_t x) const {
  std::int64_t k = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const auto a = static_cast<std::int64_t>((chi / strides_[j]) % moduli_[j]);
    const auto b = static_cast<std::int64_t>((x / strides_[j]) % moduli_[j]);
    k = mod(k + ((a * b) % moduli_[j]) * weights_[j], exponent_);
  }
  return k;
}

Complex GroupSpec::eval_index(std::size_t chi, std::size_t x) const {
  return root_of_unity(phase_index(chi, x), exponent_);
}

Complex char_eval(const GroupSpec& group, const Character& chi, const GroupElement& x) {
  return root_of_unity(group.phase(chi, x), group.exponent());
}

namespace detail {

void transform_group_axis(std::span<Complex> data, const GroupSpec& group, std::size_t inner,
                          int sign) {
  const std::size_t order = group.order();
  if (data.size() % (order * inner) != 0) throw DimensionError("transform axis mismatch");
  const std::size_t outer = data.size() / (order * inner);
  std::vector<Complex> line;
  std::vector<Complex> out;
  std::size_t after = order;  // product of moduli from factor j onwards
  for (std::size_t j = 0; j < group.rank(); ++j) {
    const auto n = static_cast<std::size_t>(group.moduli()[j]);
    after /= n;
    if (n == 1) continue;
    const std::vector<Complex> w = twiddles(static_cast<std::int64_t>(n), sign);
    const std::size_t stride = after * inner;
    const std::size_t before = order / (after * n);
    line.resize(n);
    out.resize(n);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t hi = 0; hi < before; ++hi) {
        const std::size_t block = (o * order + hi * n * after) * inner;
        for (std::size_t lo = 0; lo < stride; ++lo) {
          const std::size_t base = block + lo;
          for (std::size_t x = 0; x < n; ++x) line[x] = data[base + x * stride];
          for (std::size_t k = 0; k < n; ++k) {
            Complex acc = 0.0;
            std::size_t m = 0;
            for (std::size_t x = 0; x < n; ++x) {
              acc += w[m] * line[x];
              m += k;
              if (m >= n) m -= n;
            }
            out[k] = acc;
          }
          for (std::size_t k = 0; k < n; ++k) data[base + k * stride] = out[k];
        }
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(order));
  for (Complex& v : data) v *= scale;
}

}  // namespace detail

std::vector<Complex> fourier_matrix(const GroupSpec& group) {
  const std::size_t n = group.order();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<Complex> m(n * n);
  for (std::size_t phi = 0; phi < n; ++phi) {
    for (std::size_t x = 0; x < n; ++x) m[phi * n + x] = group.eval_index(phi, x) * scale;
  }
  return m;
}

VectorFn fourier(const VectorFn& f) {
  if (f.domain() != Domain::group) throw DimensionError("fourier expects a function on G");
  std::vector<Complex> t = f.table();
  detail::transform_group_axis(t, f.group(), f.dim(), +1);
  return VectorFn(f.group(), f.dim(), std::move(t), Domain::dual);
}

VectorFn inverse_fourier(const VectorFn& h) {
  if (h.domain() != Domain::dual) throw DimensionError("inverse_fourier expects a function on the dual");
  std::vector<Complex> t = h.table();
  detail::transform_group_axis(t, h.group(), h.dim(), -1);
  return VectorFn(h.group(), h.dim(), std::move(t), Domain::group);
}

}  // namespace abelshift
