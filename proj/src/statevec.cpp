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

#include "abelshift/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abelshift/error.hpp"

namespace abelshift {

RegisterLayout::RegisterLayout(std::vector<Register> regs) : regs_(std::move(regs)) {
  strides_.assign(regs_.size(), 1);
  for (std::size_t r = regs_.size(); r-- > 0;) {
    if (regs_[r].dim == 0) throw DimensionError("register dimension must be >= 1");
    strides_[r] = total_;
    total_ *= regs_[r].dim;
  }
}

std::size_t RegisterLayout::index(std::span<const std::size_t> digits) const {
  if (digits.size() != regs_.size()) throw DimensionError("digit count != register count");
  std::size_t idx = 0;
  for (std::size_t r = 0; r < regs_.size(); ++r) {
    if (digits[r] >= regs_[r].dim) throw DimensionError("digit out of range for register");
    idx += digits[r] * strides_[r];
  }
  return idx;
}

CMatrix CMatrix::identity(std::size_t size) {
  CMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = std::conj((*this)(j, i));
  }
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (o.n != n) throw DimensionError("matrix size mismatch");
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex v = (*this)(i, k);
      if (v == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) m(i, j) += v * o(k, j);
    }
  }
  return m;
}

Complex CMatrix::determinant() const {
  // Gaussian elimination with partial pivoting; sizes here are tiny.
  std::vector<Complex> m = a;
  Complex det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(m[r * n + c]) > std::abs(m[p * n + c])) p = r;
    }
    if (m[p * n + c] == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = m[r * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

double CMatrix::unitarity_defect() const {
  const CMatrix p = adjoint() * (*this);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::abs(p(i, j) - (i == j ? 1.0 : 0.0)));
  }
  return d;
}

double clamped_sqrt(double x) {
  if (x >= 0.0) return std::sqrt(x);
  if (x >= -1e-12) return 0.0;
  throw EncodingError("amplitude radicand " + std::to_string(x) + " is negative");
}

double gap_sqrt(double a, double b) {
  if (!std::isfinite(b)) return 1.0;
  if (!(b > 0.0)) throw EncodingError("gap_sqrt needs a positive bound");
  const double gap = b - a;
  if (gap < 0.0) {
    if (-gap <= kNormTolerance * b) return 0.0;
    throw EncodingError("value " + std::to_string(a) + " exceeds bound " + std::to_string(b));
  }
  if (gap <= 1e-14 * b) return 0.0;
  return std::sqrt(gap * (b + a)) / b;
}

CMatrix complete_unitary(std::span<const Complex> v, Completion completion) {
  const std::size_t n = v.size();
  if (n == 0) throw DimensionError("cannot complete an empty column");
  double nv = 0.0;
  for (const Complex& c : v) nv += std::norm(c);
  if (std::abs(nv - 1.0) > 1e-9) throw DomainError("column to complete is not a unit vector");
  if (n == 1) {
    CMatrix m(1);
    m(0, 0) = v[0];
    return m;
  }
  const double psi = v[0] == 0.0 ? 0.0 : std::arg(v[0]);
  const Complex e = std::polar(1.0, psi);
  // Reflection along u = -(v + e e_0) sends -e e_0 to v; |u| >= 1, so no
  // cancellation when v is close to e e_0.
  std::vector<Complex> u(v.begin(), v.end());
  for (Complex& c : u) c = -c;
  u[0] -= e;
  double nu = 0.0;
  for (const Complex& c : u) nu += std::norm(c);

  // U = H * diag(-e, 1, ..., 1), det U = e before the fix below.
  CMatrix U = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) U(i, j) -= 2.0 * u[i] * std::conj(u[j]) / nu;
  }
  for (std::size_t i = 0; i < n; ++i) U(i, 0) *= -e;
  const Complex fix = std::conj(e);
  for (std::size_t i = 0; i < n; ++i) U(i, n - 1) *= fix;

  if (completion == Completion::alternate) {
    // Right-multiply by diag(1, V), V a phased cyclic shift on the other columns.
    CMatrix D(n);
    D(0, 0) = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t to = k + 1 < n ? k + 1 : 1;
      D(to, k) = std::polar(1.0, 0.7 * static_cast<double>(k));
    }
    U = U * D;
  }
  return U;
}

ValueAlphabet ValueAlphabet::from(std::initializer_list<const VectorFn*> fns) {
  std::size_t dim = 0;
  for (const VectorFn* f : fns) {
    if (dim != 0 && f->dim() != dim) throw DimensionError("alphabet sources differ in dimension");
    dim = f->dim();
  }
  ValueAlphabet a(dim == 0 ? 1 : dim);
  for (const VectorFn* f : fns) {
    for (std::size_t x = 0; x < f->size(); ++x) a.add((*f)[x]);
  }
  return a;
}

std::vector<double> ValueAlphabet::key(std::span<const Complex> w) const {
  if (w.size() != dim_) throw DimensionError("value has wrong dimension for alphabet");
  std::vector<double> k;
  k.reserve(2 * dim_);
  for (const Complex& c : w) {
    k.push_back(c.real() + 0.0);  // folds -0.0 into 0.0
    k.push_back(c.imag() + 0.0);
  }
  return k;
}

std::size_t ValueAlphabet::add(std::span<const Complex> w) {
  auto k = key(w);
  auto it = lookup_.find(k);
  if (it != lookup_.end()) return it->second;
  const std::size_t idx = keys_.size() + 1;
  lookup_.emplace(k, idx);
  keys_.push_back(std::move(k));
  values_.insert(values_.end(), w.begin(), w.end());
  return idx;
}

std::size_t ValueAlphabet::index_of(std::span<const Complex> w) const {
  auto it = lookup_.find(key(w));
  if (it == lookup_.end()) throw AlphabetError("value is not in the register alphabet");
  return it->second;
}

std::span<const Complex> ValueAlphabet::value(std::size_t index) const {
  if (index == blank || index > keys_.size()) throw AlphabetError("no value for this symbol");
  return {values_.data() + (index - 1) * dim_, dim_};
}

SimState::SimState(RegisterLayout layout) : layout_(std::move(layout)), amps_(layout_.total_dim()) {
  amps_[0] = 1.0;
}

SimState::SimState(RegisterLayout layout, std::vector<Complex> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
  if (amps_.size() != layout_.total_dim()) throw DimensionError("amplitude count != layout dimension");
}

SimState SimState::basis(RegisterLayout layout, std::span<const std::size_t> digits) {
  SimState s(std::move(layout));
  s.amps_[0] = 0.0;
  s.amps_[s.layout_.index(digits)] = 1.0;
  return s;
}

double SimState::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

namespace {

void expect_kind(const SimState& st, std::size_t reg, RegisterKind kind, const char* what) {
  if (reg >= st.layout().count() || st.layout().kind(reg) != kind) {
    throw DimensionError(std::string("register ") + std::to_string(reg) + " is not a " + what);
  }
}

}  // namespace

void apply_oracle(SimState& state, const VectorFn& values, const Subset& mask,
                  const ValueAlphabet& alphabet, const OracleRegs& regs) {
  const RegisterLayout& L = state.layout();
  if (L.dim(regs.input) != values.size()) throw DimensionError("oracle table size != input register");
  if (L.dim(regs.value) != alphabet.size()) throw DimensionError("value register != alphabet size");
  if (regs.indicator && L.dim(*regs.indicator) != 2) throw DimensionError("indicator must be a qubit");
  if (mask.universe() != values.size()) throw DimensionError("indicator set has wrong universe");
  std::vector<std::size_t> sym(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) sym[x] = alphabet.index_of(values[x]);

  const std::size_t sv = L.stride(regs.value);
  const std::size_t sa = regs.indicator ? L.stride(*regs.indicator) : 0;
  std::vector<Complex> out(state.amps().size());
  const auto& in = state.amps();
  for (std::size_t idx = 0; idx < in.size(); ++idx) {
    const std::size_t x = L.digit(idx, regs.input);
    const std::size_t b = L.digit(idx, regs.value);
    std::size_t nb = b;
    if (b == ValueAlphabet::blank) {
      nb = sym[x];
    } else if (b == sym[x]) {
      nb = ValueAlphabet::blank;
    }
    std::size_t to = idx + nb * sv - b * sv;
    if (regs.indicator && mask.contains(x)) {
      const std::size_t a = L.digit(idx, *regs.indicator);
      to = a ? to - sa : to + sa;
    }
    out[to] = in[idx];
  }
  state.amps() = std::move(out);
}

void apply_oracle_g(SimState& state, const VectorFn& g, const Subset& shifted_A,
                    const ValueAlphabet& alphabet, const OracleRegs& regs) {
  expect_kind(state, regs.input, RegisterKind::group, "group register");
  apply_oracle(state, g, shifted_A, alphabet, regs);
}

void apply_oracle_fhat(SimState& state, const VectorFn& fhat, const Subset& Ahat,
                       const ValueAlphabet& alphabet, const OracleRegs& regs) {
  expect_kind(state, regs.input, RegisterKind::dual, "dual register");
  apply_oracle(state, fhat, Ahat, alphabet, regs);
}

void apply_phase_oracle(SimState& state, std::size_t reg, std::span<const Complex> values) {
  const RegisterLayout& L = state.layout();
  if (L.dim(reg) != values.size()) throw DimensionError("phase table size != register dimension");
  for (const Complex& v : values) {
    if (std::abs(std::abs(v) - 1.0) > 1e-9) throw DomainError("phase oracle value is not unit modulus");
  }
  auto& a = state.amps();
  for (std::size_t idx = 0; idx < a.size(); ++idx) a[idx] *= values[L.digit(idx, reg)];
}

void apply_fourier_reg(SimState& state, std::size_t reg, const GroupSpec& group, bool inverse) {
  RegisterLayout& L = state.layout();
  if (L.dim(reg) != group.order()) throw DimensionError("register dimension != |G|");
  expect_kind(state, reg, inverse ? RegisterKind::dual : RegisterKind::group,
              inverse ? "dual register" : "group register");
  detail::transform_group_axis(state.amps(), group, L.stride(reg), inverse ? -1 : +1);
  L.set_kind(reg, inverse ? RegisterKind::group : RegisterKind::dual);
}

void apply_controlled(SimState& state, std::size_t target, std::span<const std::size_t> controls,
                      const BlockSelector& select, bool adjoint) {
  const RegisterLayout& L = state.layout();
  const std::size_t dt = L.dim(target);
  const std::size_t st = L.stride(target);
  const std::size_t outer = L.total_dim() / (dt * st);
  auto& amps = state.amps();
  std::vector<Complex> in(dt);
  std::vector<Complex> out(dt);
  std::vector<std::size_t> digits(controls.size());
  for (std::size_t hi = 0; hi < outer; ++hi) {
    for (std::size_t lo = 0; lo < st; ++lo) {
      const std::size_t base = hi * dt * st + lo;
      bool nonzero = false;
      for (std::size_t k = 0; k < dt; ++k) {
        in[k] = amps[base + k * st];
        nonzero = nonzero || in[k] != 0.0;
      }
      if (!nonzero) continue;
      for (std::size_t c = 0; c < controls.size(); ++c) digits[c] = L.digit(base, controls[c]);
      const CMatrix* m = select(digits);
      if (m == nullptr) continue;
      if (m->n != dt) throw DimensionError("controlled matrix size != target register");
      for (std::size_t i = 0; i < dt; ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < dt; ++j) {
          acc += (adjoint ? std::conj((*m)(j, i)) : (*m)(i, j)) * in[j];
        }
        out[i] = acc;
      }
      for (std::size_t k = 0; k < dt; ++k) amps[base + k * st] = out[k];
    }
  }
}

void apply_value_rule(SimState& state, const ValueAlphabet& alphabet, const EncoderRegs& regs,
                      const ValueRule& rule, bool adjoint) {
  if (state.layout().dim(regs.value) != alphabet.size()) {
    throw DimensionError("value register != alphabet size");
  }
  std::vector<std::optional<CMatrix>> cache(alphabet.size());
  std::vector<char> ready(alphabet.size(), 0);
  std::vector<std::size_t> controls{regs.value};
  if (regs.control) controls.push_back(*regs.control);
  apply_controlled(
      state, regs.ancilla, controls,
      [&](std::span<const std::size_t> d) -> const CMatrix* {
        if (d[0] == ValueAlphabet::blank) return nullptr;
        if (d.size() > 1 && d[1] != 1) return nullptr;
        if (!ready[d[0]]) {
          cache[d[0]] = rule(alphabet.value(d[0]));
          ready[d[0]] = 1;
        }
        return cache[d[0]] ? &*cache[d[0]] : nullptr;
      },
      adjoint);
}

namespace {

double sq_norm(std::span<const Complex> w) {
  double s = 0.0;
  for (const Complex& c : w) s += std::norm(c);
  return s;
}

}  // namespace

CMatrix u1_matrix(std::span<const Complex> w, double R, std::size_t levels, Completion completion) {
  const std::size_t d = w.size();
  if (levels != d + 1) throw DimensionError("U1 ancilla must have d+1 levels");
  const double nw = sq_norm(w);
  std::vector<Complex> col(d + 1);
  if (R <= 0.0) {
    if (nw > 0.0) throw EncodingError("U1: nonzero value with R = 0");
    col[d] = 1.0;
  } else {
    for (std::size_t i = 0; i < d; ++i) col[i] = w[i] / R;
    col[d] = gap_sqrt(std::sqrt(nw), R);
  }
  return complete_unitary(col, completion);
}

std::optional<CMatrix> u2_matrix(std::span<const Complex> w, double rhat, std::size_t levels,
                                 Completion completion, bool magnitude) {
  if (levels < 2) throw DimensionError("U2 ancilla needs at least two levels");
  const double nw = sq_norm(w);
  if (nw == 0.0) return std::nullopt;
  std::vector<Complex> col(levels);
  col[0] = w.size() == 1 && !magnitude ? rhat / std::conj(w[0]) : Complex(rhat / std::sqrt(nw));
  col[1] = gap_sqrt(rhat, std::sqrt(nw));
  return complete_unitary(col, completion).adjoint();
}

std::optional<CMatrix> vrot_matrix(std::span<const Complex> w, std::size_t levels,
                                   Completion completion) {
  const std::size_t d = w.size();
  if (levels < d) throw DimensionError("V_rot ancilla needs at least d levels");
  const double nw = std::sqrt(sq_norm(w));
  if (nw == 0.0) return std::nullopt;
  std::vector<Complex> col(w.begin(), w.end());
  for (Complex& c : col) c /= nw;
  const CMatrix v = complete_unitary(col, completion).adjoint();
  CMatrix m = CMatrix::identity(levels);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = v(i, j);
  }
  return m;
}

CMatrix coefficient_matrix(Complex c, bool adjoint_defined, Completion completion) {
  const std::vector<Complex> col{c, gap_sqrt(std::abs(c), 1.0)};
  CMatrix U = complete_unitary(col, completion);
  return adjoint_defined ? U.adjoint() : U;
}

void apply_U1(SimState& state, const ValueAlphabet& alphabet, double R, const EncoderRegs& regs,
              Completion completion, bool adjoint) {
  const std::size_t k = state.layout().dim(regs.ancilla);
  apply_value_rule(
      state, alphabet, regs,
      [&](std::span<const Complex> w) -> std::optional<CMatrix> { return u1_matrix(w, R, k, completion); },
      adjoint);
}

void apply_U2(SimState& state, const ValueAlphabet& alphabet, double rhat, const EncoderRegs& regs,
              Completion completion, bool adjoint, bool magnitude) {
  const std::size_t k = state.layout().dim(regs.ancilla);
  apply_value_rule(
      state, alphabet, regs,
      [&](std::span<const Complex> w) { return u2_matrix(w, rhat, k, completion, magnitude); }, adjoint);
}

void apply_Vrot(SimState& state, const ValueAlphabet& alphabet, const EncoderRegs& regs,
                Completion completion, bool adjoint) {
  const std::size_t k = state.layout().dim(regs.ancilla);
  apply_value_rule(
      state, alphabet, regs, [&](std::span<const Complex> w) { return vrot_matrix(w, k, completion); },
      adjoint);
}

PostselectResult postselect_subset(SimState& state, std::size_t reg, const Subset& members) {
  const RegisterLayout& L = state.layout();
  if (members.universe() != L.dim(reg)) throw DimensionError("post-selection set has wrong universe");
  auto& a = state.amps();
  double p = 0.0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (members.contains(L.digit(idx, reg))) {
      p += std::norm(a[idx]);
    } else {
      a[idx] = 0.0;
    }
  }
  PostselectResult res{p, p == 0.0};
  if (res.empty) {
    state.mark_empty();
    return res;
  }
  const double scale = 1.0 / std::sqrt(p);
  for (Complex& c : a) c *= scale;
  return res;
}

PostselectResult postselect(SimState& state, std::size_t reg, std::size_t outcome) {
  return postselect_subset(state, reg, Subset::from_indices(state.layout().dim(reg), {outcome}));
}

std::vector<double> measure_distribution(const SimState& state, std::size_t reg) {
  return joint_distribution(state, reg, {});
}

std::vector<double> joint_distribution(const SimState& state, std::size_t reg,
                                       std::span<const std::pair<std::size_t, std::size_t>> fixed) {
  const RegisterLayout& L = state.layout();
  std::vector<double> p(L.dim(reg));
  const auto& a = state.amps();
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    bool keep = true;
    for (const auto& [r, v] : fixed) keep = keep && L.digit(idx, r) == v;
    if (keep) p[L.digit(idx, reg)] += std::norm(a[idx]);
  }
  return p;
}

void apply_cnot(SimState& state, std::size_t control, std::size_t target) {
  const RegisterLayout& L = state.layout();
  if (L.dim(control) != 2 || L.dim(target) != 2) throw DimensionError("CNOT acts on qubits");
  auto& a = state.amps();
  const std::size_t st = L.stride(target);
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (L.digit(idx, control) == 1 && L.digit(idx, target) == 0) std::swap(a[idx], a[idx + st]);
  }
}

void apply_negation(SimState& state, std::size_t reg, const GroupSpec& group) {
  const RegisterLayout& L = state.layout();
  if (L.dim(reg) != group.order()) throw DimensionError("register dimension != |G|");
  const std::size_t s = L.stride(reg);
  std::vector<Complex> out(state.amps().size());
  const auto& in = state.amps();
  for (std::size_t idx = 0; idx < in.size(); ++idx) {
    const std::size_t x = L.digit(idx, reg);
    out[idx + group.neg_index(x) * s - x * s] = in[idx];
  }
  state.amps() = std::move(out);
}

void Circuit::apply(SimState& state) const {
  for (const auto& step : steps_) step.first(state);
}

void Circuit::apply_adjoint(SimState& state) const {
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) it->second(state);
}

}  // namespace abelshift
