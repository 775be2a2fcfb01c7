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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "abelshift/abelian.hpp"
#include "abelshift/gfunc.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

enum class RegisterKind { group, dual, indicator, value, ancilla };

struct Register {
  RegisterKind kind;
  std::size_t dim;
};

// Product of registers, first register most significant.
class RegisterLayout {
 public:
  RegisterLayout() = default;
  explicit RegisterLayout(std::vector<Register> regs);

  std::size_t count() const { return regs_.size(); }
  std::size_t total_dim() const { return total_; }
  std::size_t dim(std::size_t r) const { return regs_.at(r).dim; }
  std::size_t stride(std::size_t r) const { return strides_.at(r); }
  RegisterKind kind(std::size_t r) const { return regs_.at(r).kind; }
  void set_kind(std::size_t r, RegisterKind k) { regs_.at(r).kind = k; }

  std::size_t digit(std::size_t index, std::size_t r) const {
    return (index / strides_[r]) % regs_[r].dim;
  }
  std::size_t index(std::span<const std::size_t> digits) const;

 private:
  std::vector<Register> regs_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

// Small dense square matrix, row-major.
struct CMatrix {
  std::size_t n = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  explicit CMatrix(std::size_t size) : n(size), a(size * size) {}
  static CMatrix identity(std::size_t size);

  Complex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& other) const;
  Complex determinant() const;
  double unitarity_defect() const;  // max |U^dagger U - I|
};

enum class Completion {
  householder,  // reflection plus phase, determinant fixed to 1
  alternate,    // householder * diag(1, V) for a fixed V; same first column
};

// Unitary whose first column is `column` (unit norm). For size 2 this is the
// SU(2) matrix [[a, -conj b], [b, conj a]].
CMatrix complete_unitary(std::span<const Complex> column, Completion completion = Completion::householder);

// sqrt(max(x, 0)) for x >= -1e-12; anything more negative is an EncodingError.
double clamped_sqrt(double x);

// sqrt(1 - (a/b)^2) for 0 <= a <= b, evaluated as sqrt((b-a)(b+a))/b. Gaps
// below 1e-14 b count as zero so that rounding in a or b cannot leak ~1e-8
// through the square root; a may overshoot b by the window slack. b = inf
// gives 1.
double gap_sqrt(double a, double b);

// Symbols of the value register: index 0 is the blank, the rest are distinct
// d-vectors.
class ValueAlphabet {
 public:
  static constexpr std::size_t blank = 0;

  explicit ValueAlphabet(std::size_t dim = 1) : dim_(dim) {}
  static ValueAlphabet from(std::initializer_list<const VectorFn*> fns);

  std::size_t add(std::span<const Complex> w);
  std::size_t index_of(std::span<const Complex> w) const;
  std::span<const Complex> value(std::size_t index) const;
  std::size_t size() const { return 1 + keys_.size(); }  // including the blank
  std::size_t dim() const { return dim_; }

 private:
  std::vector<double> key(std::span<const Complex> w) const;

  std::size_t dim_;
  std::map<std::vector<double>, std::size_t> lookup_;
  std::vector<std::vector<double>> keys_;
  std::vector<Complex> values_;
};

class SimState {
 public:
  SimState() = default;
  // |0 ... 0>.
  explicit SimState(RegisterLayout layout);
  SimState(RegisterLayout layout, std::vector<Complex> amps);
  static SimState basis(RegisterLayout layout, std::span<const std::size_t> digits);

  const RegisterLayout& layout() const { return layout_; }
  RegisterLayout& layout() { return layout_; }
  const std::vector<Complex>& amps() const { return amps_; }
  std::vector<Complex>& amps() { return amps_; }
  Complex amplitude(std::span<const std::size_t> digits) const { return amps_[layout_.index(digits)]; }

  double norm_squared() const;
  // Set when a post-selection had probability zero.
  bool empty() const { return empty_; }
  void mark_empty() { empty_ = true; }

 private:
  RegisterLayout layout_;
  std::vector<Complex> amps_;
  bool empty_ = false;
};

// Register roles for a reversible oracle; the indicator is optional.
struct OracleRegs {
  std::size_t input;
  std::optional<std::size_t> indicator;
  std::size_t value;
};

// |x, a, b> -> |x, a xor [x in mask], b swapped blank <-> values(x)>.
void apply_oracle(SimState& state, const VectorFn& values, const Subset& mask,
                  const ValueAlphabet& alphabet, const OracleRegs& regs);
// Same, checking the input register holds group (resp. dual) elements.
void apply_oracle_g(SimState& state, const VectorFn& g, const Subset& shifted_A,
                    const ValueAlphabet& alphabet, const OracleRegs& regs);
void apply_oracle_fhat(SimState& state, const VectorFn& fhat, const Subset& Ahat,
                       const ValueAlphabet& alphabet, const OracleRegs& regs);

// Diagonal |x> -> values[x] |x>. Values must have unit modulus.
void apply_phase_oracle(SimState& state, std::size_t reg, std::span<const Complex> values);

// F on a group register (turns it into a dual register), or F^dagger.
void apply_fourier_reg(SimState& state, std::size_t reg, const GroupSpec& group, bool inverse = false);

// For each setting of the control registers, applies the returned matrix to the
// target register; nullptr means identity. The selector is only consulted for
// blocks carrying nonzero amplitude.
using BlockSelector = std::function<const CMatrix*(std::span<const std::size_t> controls)>;
void apply_controlled(SimState& state, std::size_t target, std::span<const std::size_t> controls,
                      const BlockSelector& select, bool adjoint = false);

// Matrix to apply for value-register content w (never called for the blank).
// nullopt means identity.
using ValueRule = std::function<std::optional<CMatrix>(std::span<const Complex> w)>;

struct EncoderRegs {
  std::size_t value;
  std::size_t ancilla;
  std::optional<std::size_t> control;  // acts only where this qubit is 1
};

void apply_value_rule(SimState& state, const ValueAlphabet& alphabet, const EncoderRegs& regs,
                      const ValueRule& rule, bool adjoint = false);

// Block matrices behind the encoders below, for a single value w. `levels`
// is the ancilla dimension.
CMatrix u1_matrix(std::span<const Complex> w, double R, std::size_t levels,
                  Completion completion = Completion::householder);
// `magnitude` forces rhat / ||w|| also for d = 1 (the phase is then left to V_rot).
std::optional<CMatrix> u2_matrix(std::span<const Complex> w, double rhat, std::size_t levels,
                                 Completion completion = Completion::householder, bool magnitude = false);
std::optional<CMatrix> vrot_matrix(std::span<const Complex> w, std::size_t levels,
                                   Completion completion = Completion::householder);
// Qubit unitary with first column (c, sqrt(1 - |c|^2)); its adjoint when
// `adjoint_defined` (so that U^dagger|0> has that column).
CMatrix coefficient_matrix(Complex c, bool adjoint_defined,
                           Completion completion = Completion::householder);

// U1(w)|0> = sum_i (w_i / R)|i> + sqrt(1 - ||w||^2 / R^2)|d>.
void apply_U1(SimState& state, const ValueAlphabet& alphabet, double R, const EncoderRegs& regs,
              Completion completion = Completion::householder, bool adjoint = false);
// U2(w)^dagger |0> = (rhat / conj w)|0> + sqrt(1 - rhat^2/|w|^2)|1> for d = 1;
// for d > 1 the first entry is rhat / ||w|| and the rest goes to level 1.
// w = 0 acts as the identity. `magnitude` as for u2_matrix.
void apply_U2(SimState& state, const ValueAlphabet& alphabet, double rhat, const EncoderRegs& regs,
              Completion completion = Completion::householder, bool adjoint = false, bool magnitude = false);
// V_rot(w)^dagger |0> = w / ||w|| on the first d ancilla levels, identity on
// the rest; w = 0 is the identity.
void apply_Vrot(SimState& state, const ValueAlphabet& alphabet, const EncoderRegs& regs,
                Completion completion = Completion::householder, bool adjoint = false);

struct PostselectResult {
  double probability = 0.0;
  bool empty = false;
};

// Projects onto reg = outcome and renormalizes.
PostselectResult postselect(SimState& state, std::size_t reg, std::size_t outcome);
// Projects onto reg in `members`.
PostselectResult postselect_subset(SimState& state, std::size_t reg, const Subset& members);

std::vector<double> measure_distribution(const SimState& state, std::size_t reg);
// P(reg = v and every (r, d) in `fixed`) for each v.
std::vector<double> joint_distribution(const SimState& state, std::size_t reg,
                                       std::span<const std::pair<std::size_t, std::size_t>> fixed);

// CNOT between two qubit-sized registers.
void apply_cnot(SimState& state, std::size_t control, std::size_t target);
// |x> -> |-x> on a group register.
void apply_negation(SimState& state, std::size_t reg, const GroupSpec& group);

// Straight-line reversible circuit with an explicit adjoint per step.
class Circuit {
 public:
  using Op = std::function<void(SimState&)>;

  void add(Op forward, Op adjoint) { steps_.push_back({std::move(forward), std::move(adjoint)}); }
  void add_self_inverse(const Op& op) { steps_.push_back({op, op}); }
  void apply(SimState& state) const;
  void apply_adjoint(SimState& state) const;
  std::size_t size() const { return steps_.size(); }

 private:
  std::vector<std::pair<Op, Op>> steps_;
};

}  // namespace abelshift
