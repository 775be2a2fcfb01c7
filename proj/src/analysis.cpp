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


#include "abelshift/analysis.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <numbers>
#include <random>

#include "abelshift/error.hpp"

namespace abelshift {

Complex forrelation(const VectorFn& g, const VectorFn& h) {
  if (!(g.group() == h.group())) throw DimensionError("forrelation: groups differ");
  if (g.dim() != h.dim()) throw DimensionError("forrelation: dimensions differ");
  const VectorFn hc = inverse_fourier(h);
  Complex acc = 0.0;
  for (std::size_t k = 0; k < g.table().size(); ++k) acc += g.table()[k] * std::conj(hc.table()[k]);
  return acc / static_cast<double>(g.size());
}

double QuantizationScheme::delta() const { return exact ? 0.0 : std::ldexp(1.0, -bits); }

QuantizationScheme QuantizationScheme::with_bits(int bits) {
  if (bits < 0 || bits > 52) throw DomainError("quantization bits must lie in [0, 52]");
  return {bits, false};
}

Complex quantize_value(Complex w, const QuantizationScheme& scheme) {
  const double m = std::abs(w);
  if (m > 1.0 + 1e-12) throw PreconditionError("quantize: modulus exceeds 1; normalize first");
  if (scheme.exact) return w;
  const double delta = scheme.delta();
  // nearbyint honours the current rounding mode, which is to-nearest-even by default.
  const double qm = std::clamp(std::nearbyint(m / delta) * delta, 0.0, 1.0);
  const double step = 2.0 * std::numbers::pi * delta;
  const double qa = std::nearbyint(std::arg(w) / step) * step;
  return std::polar(qm, qa);
}

VectorFn quantize(const VectorFn& f, const QuantizationScheme& scheme) {
  std::vector<Complex> t(f.table());
  for (auto& v : t) v = quantize_value(v, scheme);
  return VectorFn(f.group(), f.dim(), std::move(t), f.domain());
}

Encoders quantized_encoders(double R, double rhat, const QuantizationScheme& scheme) {
  const Encoders base = standard_encoders(R, rhat);
  return {[base, scheme](Complex w) -> std::optional<Complex> {
            const auto c = base.first(w);
            if (!c) return c;
            return quantize_value(*c, scheme);
          },
          [base, scheme](Complex w) -> std::optional<Complex> {
            const auto c = base.second(w);
            if (!c) return c;
            return quantize_value(*c, scheme);
          }};
}

QuantizedRun quantized_run(const HiddenShiftInstance& inst, const QuantizationScheme& scheme,
                           const RunOptions& options) {
  if (inst.f.dim() != 1) throw PreconditionError("quantized_run is for scalar functions");
  const OracleViews o = make_oracles(inst);
  QuantizedRun out;
  const std::size_t s = inst.shift_index();
  out.p = simulate_subset(o, standard_encoders(o.R, o.rhat), false, options).sim_distribution[s];
  out.p_e = simulate_subset(o, quantized_encoders(o.R, o.rhat, scheme), false, options).sim_distribution[s];
  out.error = std::abs(out.p_e - out.p);
  out.bound = kQuantizationC * std::sqrt(static_cast<double>(inst.group().order())) * scheme.delta();
  return out;
}

std::vector<VectorFn> calibration_suite() {
  const std::vector<std::vector<std::int64_t>> shapes{
      {2}, {3}, {4}, {5}, {6}, {2, 2}, {7}, {8}, {2, 4}, {9}, {3, 3}, {10}, {12}, {2, 6},
      {2, 2, 3}, {15}, {16}, {4, 4}, {2, 8}, {2, 2, 2, 2}, {18}, {20}, {24}, {25}, {27}, {3, 9}, {32}, {2, 16}};
  // Raw mt19937_64 bits keep the suite identical across standard libraries.
  std::mt19937_64 rng(20240611);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<VectorFn> out;
  for (const auto& m : shapes) {
    const GroupSpec G(m);
    std::vector<Complex> t(G.order());
    for (auto& v : t) v = std::polar(0.2 + 0.8 * unit(), 2.0 * std::numbers::pi * unit());
    out.push_back(VectorFn::scalar(G, std::move(t)));
  }
  return out;
}

double calibration_ratio() {
  const RunOptions lazy{Backend::lazy, Completion::householder};
  double worst = 0.0;
  for (const auto& f : calibration_suite()) {
    const GroupSpec& G = f.group();
    const double root = std::sqrt(static_cast<double>(G.order()));
    const Window w = tight_window(f);
    for (std::size_t s = 0; s < G.order(); ++s) {
      const auto inst = make_instance(f, G.element_at(s), w);
      for (int bits = 6; bits <= 16; ++bits) {
        const auto scheme = QuantizationScheme::with_bits(bits);
        worst = std::max(worst, quantized_run(inst, scheme, lazy).error / (root * scheme.delta()));
      }
    }
  }
  return worst;
}

}  // namespace abelshift
