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

// Mixed pool of bent functions shared by the forrelation tests and the
// acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "abelshift/bentlib.hpp"
#include "support/oracles.hpp"

namespace abelshift::oracle {

struct NamedBent {
  std::string family;
  VectorFn f;
};

// Character-twisted chirp: multiplying by phi_a moves the transform, so the
// product stays bent.
inline VectorFn twisted_chirp(std::mt19937_64& rng, const GroupSpec& g) {
  const VectorFn c = quadratic_bent(g, 1, random_phase(rng));
  const std::size_t a = rng() % g.order();
  std::vector<Complex> t(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) t[x] = c(x) * chi(g.moduli(), a, x);
  return VectorFn::scalar(g, std::move(t));
}

// Cycles through: character-twisted chirps, shifted chirps, B1(Z/3) members,
// two-part concatenations of chirps, disjoint-support functions, and the
// two-dimensional Z/3 example. Groups have order <= max_order.
inline std::vector<NamedBent> bent_pool(std::size_t count, std::uint64_t seed, std::size_t max_order = 24) {
  std::mt19937_64 rng(seed);
  const auto b1 = enumerate_B1_Z3();
  std::vector<NamedBent> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const GroupSpec g = random_group(rng, max_order);
    switch (i % 6) {
      case 0:
        out.push_back({"twisted-chirp", twisted_chirp(rng, g)});
        break;
      case 1:
        out.push_back({"chirp", shift(quadratic_bent(g, 1, random_phase(rng)), g.element_at(rng() % g.order()))});
        break;
      case 2:
        out.push_back({"B1(Z/3)", b1[rng() % b1.size()]});
        break;
      case 3: {
        const Complex a = random_complex(rng), b = random_complex(rng);
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        const std::vector<Complex> u{a / n, b / n};
        const VectorFn p = shift(quadratic_bent(g, 1, random_phase(rng)), g.element_at(rng() % g.order()));
        const VectorFn q = twisted_chirp(rng, g);
        out.push_back({"concatenation", concatenate({p, q}, u)});
        break;
      }
      case 4:
        out.push_back({"disjoint-support", disjoint_support(random_group(rng, 12))});
        break;
      default:
        out.push_back({"z3-two-dim", apply_unitary(random_unitary(rng, 2), z3_two_dim_example())});
        break;
    }
  }
  return out;
}

}  // namespace abelshift::oracle
