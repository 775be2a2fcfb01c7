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


#include "abelshift/numchar.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "abelshift/error.hpp"

namespace abelshift {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::int64_t mult_order(std::int64_t g, std::int64_t m) {
  std::int64_t x = g % m, k = 1;
  while (x != 1 % m) x = x * g % m, ++k;
  return k;
}

struct UnitGen {
  std::int64_t g;
  std::int64_t order;
};

// Generators of (Z/n)* as a direct product, each lifted by CRT to be 1 on the
// other prime powers.
std::vector<UnitGen> unit_generators(std::int64_t n) {
  std::vector<UnitGen> gens;
  for (const auto& [p, e] : factor(n)) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const std::int64_t rest = n / pe;
    auto lift = [&](std::int64_t local) {
      for (std::int64_t x = mod(local, pe); x < n; x += pe)
        if (x % rest == 1 % rest) return x;
      throw ConstructionError("CRT lift failed");
    };
    if (p == 2) {
      if (e >= 2) gens.push_back({lift(-1), 2});
      if (e >= 3) gens.push_back({lift(5), pe / 4});
      continue;
    }
    const std::int64_t phi = pe / p * (p - 1);
    std::int64_t root = 2;
    while (root % p == 0 || mult_order(root, pe) != phi) ++root;
    gens.push_back({lift(root), phi});
  }
  return gens;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw DomainError("euler_phi needs n >= 1");
  std::int64_t r = n;
  for (const auto& [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

std::size_t dirichlet_count(std::int64_t n) { return static_cast<std::size_t>(euler_phi(n)); }

VectorFn DirichletChar::function() const { return VectorFn::scalar(GroupSpec({n}), values); }

DirichletChar dirichlet_character(std::int64_t n, std::size_t index) {
  if (n < 2) throw ConstructionError("Dirichlet characters need n >= 2");
  if (index >= dirichlet_count(n))
    throw ConstructionError("character index " + std::to_string(index) + " out of range mod " +
                            std::to_string(n));
  const auto gens = unit_generators(n);
  std::int64_t L = 1;
  for (const auto& g : gens) L = std::lcm(L, g.order);

  // Mixed-radix digits of the index, last generator fastest.
  std::vector<std::int64_t> k(gens.size());
  std::size_t rest = index;
  for (std::size_t j = gens.size(); j-- > 0;) {
    k[j] = static_cast<std::int64_t>(rest % gens[j].order);
    rest /= gens[j].order;
  }

  DirichletChar c;
  c.n = n;
  c.index = index;
  c.values.assign(static_cast<std::size_t>(n), Complex(0.0));
  std::vector<std::int64_t> e(gens.size(), 0);
  while (true) {
    std::int64_t x = 1 % n, ph = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      x = x * powmod(gens[j].g, e[j], n) % n;
      ph += k[j] * e[j] * (L / gens[j].order);
    }
    c.values[static_cast<std::size_t>(x)] = root_of_unity(ph, L);
    std::size_t j = gens.size();
    while (j > 0 && ++e[j - 1] == gens[j - 1].order) e[--j] = 0;
    if (j == 0) break;
  }

  // f factors through Z/n1 iff it is 1 on every unit congruent to 1 mod n1.
  c.conductor = n;
  for (std::int64_t n1 = 1; n1 < n; ++n1) {
    if (n % n1) continue;
    bool through = true;
    for (std::int64_t x = 1; x < n && through; x += n1)
      if (std::gcd(x, n) == 1 && std::abs(c.values[static_cast<std::size_t>(x)] - 1.0) > 1e-9)
        through = false;
    if (through) {
      c.conductor = n1;
      break;
    }
  }
  c.primitive = c.conductor == n;
  return c;
}

PredictedProb predicted_prob_dirichlet(const DirichletChar& chi) {
  const double a = static_cast<double>(euler_phi(chi.n)) / static_cast<double>(chi.n);
  if (chi.n == 2) return {a * a, true};
  if (!chi.primitive)
    throw PreconditionError("character mod " + std::to_string(chi.n) + " is induced from modulus " +
                            std::to_string(chi.conductor));
  return {a * a, false};
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Remainder of a modulo monic b over F_p; coefficient vectors low to high.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = mod(a[i], p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
  }
  a.resize(std::min(a.size(), db));
  for (auto& v : a) v = mod(v, p);
  return a;
}

std::vector<std::int64_t> make_monic(std::vector<std::int64_t> poly, std::int64_t p) {
  for (auto& c : poly) c = mod(c, p);
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.size() < 2) throw ConstructionError("modulus polynomial must have degree >= 1");
  const std::int64_t inv = powmod(poly.back(), p - 2, p);
  for (auto& c : poly) c = c * inv % p;
  return poly;
}

}  // namespace

bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly_in) {
  if (!is_prime(p)) throw ConstructionError(std::to_string(p) + " is not prime");
  const auto poly = make_monic(poly_in, p);
  const std::size_t k = poly.size() - 1;
  // Trial division by every monic polynomial of degree <= k/2.
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::vector<std::int64_t> div(d + 1, 0);
    div[d] = 1;
    while (true) {
      const auto r = poly_rem(poly, div, p);
      bool zero = true;
      for (auto v : r) zero = zero && v == 0;
      if (zero) return false;
      std::size_t j = 0;
      while (j < d && ++div[j] == p) div[j++] = 0;
      if (j == d) break;
    }
  }
  return true;
}

std::vector<std::int64_t> default_irreducible(std::int64_t p, std::size_t k) {
  if (!is_prime(p)) throw ConstructionError(std::to_string(p) + " is not prime");
  if (k == 0) throw ConstructionError("field degree must be >= 1");
  std::int64_t q = 1;
  for (std::size_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 1024) throw ConstructionError("no built-in modulus for q > 1024; pass a polynomial");
  }
  std::vector<std::int64_t> poly(k + 1, 0);
  poly[k] = 1;
  while (true) {
    if (is_irreducible(p, poly)) return poly;
    std::size_t j = 0;
    while (j < k && ++poly[j] == p) poly[j++] = 0;
    if (j == k) break;
  }
  throw ConstructionError("no irreducible polynomial found");
}

FiniteField::FiniteField(std::int64_t p, std::vector<std::int64_t> poly) : p_(p) {
  if (!is_prime(p)) throw ConstructionError(std::to_string(p) + " is not prime");
  poly_ = make_monic(std::move(poly), p);
  if (!is_irreducible(p, poly_)) throw ConstructionError("modulus polynomial is reducible");
  k_ = poly_.size() - 1;
  group_ = GroupSpec(std::vector<std::int64_t>(k_, p));
  q_ = group_.order();

  const std::size_t n = q_ - 1;
  std::vector<std::size_t> primes;
  for (const auto& [l, e] : factor(static_cast<std::int64_t>(n))) primes.push_back(static_cast<std::size_t>(l));
  for (std::size_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto l : primes) ok = ok && pow(g, n / l) != one();
    if (ok) {
      generator_ = g;
      return;
    }
  }
  if (n == 1) generator_ = one();
}

std::vector<std::int64_t> FiniteField::coeffs(std::size_t x) const { return group_.element_at(x).coords; }

std::size_t FiniteField::index(const std::vector<std::int64_t>& c) const {
  return group_.index_of(group_.element(c));
}

std::size_t FiniteField::add(std::size_t x, std::size_t y) const { return group_.add_index(x, y); }

std::vector<std::int64_t> FiniteField::mul_coeffs(const std::vector<std::int64_t>& a,
                                                  const std::vector<std::int64_t>& b) const {
  std::vector<std::int64_t> prod(2 * k_ - 1, 0);
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  auto r = poly_rem(std::move(prod), poly_, p_);
  r.resize(k_, 0);
  return r;
}

std::size_t FiniteField::mul(std::size_t x, std::size_t y) const {
  return index(mul_coeffs(coeffs(x), coeffs(y)));
}

std::size_t FiniteField::one() const { return monomial(0); }

std::size_t FiniteField::monomial(std::size_t j) const {
  std::vector<std::int64_t> c(k_, 0);
  if (j < k_) {
    c[j] = 1;
    return index(c);
  }
  std::vector<std::int64_t> big(j + 1, 0);
  big[j] = 1;
  c = poly_rem(std::move(big), poly_, p_);
  c.resize(k_, 0);
  return index(c);
}

std::size_t FiniteField::pow(std::size_t x, std::uint64_t e) const {
  std::size_t r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::int64_t FiniteField::trace(std::size_t x) const {
  std::size_t t = 0, y = x;
  for (std::size_t j = 0; j < k_; ++j) {
    t = add(t, y);
    y = pow(y, static_cast<std::uint64_t>(p_));
  }
  const auto c = coeffs(t);
  for (std::size_t j = 1; j < k_; ++j)
    if (c[j] != 0) throw DomainError("trace left F_p");
  return c[0];
}

VectorFn FiniteFieldChar::function() const { return VectorFn::scalar(field.additive_group(), values); }

FiniteFieldChar ffield_character(std::int64_t p, std::size_t k, std::vector<std::int64_t> poly,
                                 std::size_t index) {
  if (poly.empty()) poly = default_irreducible(p, k);
  FiniteFieldChar c{FiniteField(p, std::move(poly)), index, {}, {}};
  const FiniteField& F = c.field;
  if (F.k() != k)
    throw ConstructionError("modulus has degree " + std::to_string(F.k()) + ", expected " +
                            std::to_string(k));
  const std::size_t n = F.q() - 1;
  if (index >= n)
    throw ConstructionError("character index " + std::to_string(index) + " out of range for q = " +
                            std::to_string(F.q()));

  c.values.assign(F.q(), Complex(0.0));
  std::size_t x = F.one();
  for (std::size_t j = 0; j < n; ++j) {
    c.values[x] = root_of_unity(static_cast<std::int64_t>(j * index % n), static_cast<std::int64_t>(n));
    x = F.mul(x, F.generator());
  }

  // phi_y has exponents a_j = Tr(y T^j), since Tr(xy) = sum_j x_j Tr(y T^j).
  const GroupSpec& G = F.additive_group();
  c.dual.resize(F.q());
  std::vector<std::size_t> basis(k);
  for (std::size_t j = 0; j < k; ++j) basis[j] = F.monomial(j);
  for (std::size_t y = 0; y < F.q(); ++y) {
    std::vector<std::int64_t> a(k);
    for (std::size_t j = 0; j < k; ++j) a[j] = F.trace(F.mul(y, basis[j]));
    c.dual[y] = G.index_of(G.character(a));
  }
  return c;
}

double predicted_prob_ffield(const FiniteFieldChar& chi) {
  if (chi.trivial()) throw PreconditionError("trivial character has no flat transform");
  const double a = 1.0 - 1.0 / static_cast<double>(chi.field.q());
  return a * a;
}

}  // namespace abelshift
