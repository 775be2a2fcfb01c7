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

#include <cstdint>
#include <vector>

#include "abelshift/hiddenshift.hpp"
#include "abelshift/vector_fn.hpp"

namespace abelshift {

// (1/|G|) sum_x sum_i g_i(x) conj(hcheck_i(x)), hcheck = inverse_fourier(h).
// Throws DimensionError on mismatched groups or dimensions.
Complex forrelation(const VectorFn& g, const VectorFn& h);

// Polar fixed point: modulus on the grid delta * Z inside [0, 1], argument on
// 2 pi delta * Z, both rounded half to even. `exact` turns rounding off.
struct QuantizationScheme {
  int bits = 16;
  bool exact = false;

  double delta() const;
  static QuantizationScheme with_bits(int bits);
  static QuantizationScheme none() { return {0, true}; }
};

// Per-value perturbation is at most (1/2 + pi) * delta.
inline constexpr double kQuantizationC1 = 0.5 + 3.14159265358979323846;

// Throws PreconditionError if |w| > 1 (beyond rounding slack).
Complex quantize_value(Complex w, const QuantizationScheme& scheme);
VectorFn quantize(const VectorFn& f, const QuantizationScheme& scheme);

// Encoders whose coefficients g/R and rhat/conj(fhat) are quantized.
Encoders quantized_encoders(double R, double rhat, const QuantizationScheme& scheme);

struct QuantizedRun {
  double p_e = 0.0;    // with quantized oracle outputs
  double p = 0.0;      // same circuit, exact tables
  double error = 0.0;  // |p_e - p|
  double bound = 0.0;  // kQuantizationC * |G|^{1/2} * delta
};

// The post-selected subset algorithm with quantized oracle outputs. Scalar
// functions only.
QuantizedRun quantized_run(const HiddenShiftInstance& instance, const QuantizationScheme& scheme,
                           const RunOptions& options = {});

// Fixed calibration functions: random scalar tables, moduli in [0.2, 1], on
// the group shapes of order <= 32 listed in the source.
std::vector<VectorFn> calibration_suite();
// max over the suite with tight windows, every shift and bits 6..16 of error / (|G|^{1/2} delta).
double calibration_ratio();
// Twice calibration_ratio(), rounded up at the second significant digit and
// frozen. The tests recompute the ratio and check it against this value.
inline constexpr double kQuantizationC = 0.55;

}  // namespace abelshift
