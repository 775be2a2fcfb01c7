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

#include "abelshift/bentlib.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abelshift/error.hpp"

namespace abelshift {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd to_eigen(const GramMatrix& m) {
  const std::size_t n = m.size();
  Eigen::MatrixXcd e(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) e(x, y) = m(x, y);
  }
  return e;
}

std::string at(std::size_t x, std::size_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

}  // namespace

VectorFn concatenate(const std::vector<VectorFn>& parts, std::span<const Complex> u) {
  if (parts.empty() || parts.size() != u.size()) throw PreconditionError("need one weight per part");
  double nu = 0.0;
  for (Complex c : u) nu += std::norm(c);
  if (std::abs(nu - 1.0) > 1e-9) throw PreconditionError("weight vector must have unit norm");
  const GroupSpec& G = parts.front().group();
  std::size_t d = 0;
  for (const VectorFn& p : parts) {
    if (p.group().moduli() != G.moduli()) throw PreconditionError("parts live on different groups");
    if (!is_bent(p)) throw PreconditionError("concatenation part is not bent");
    d += p.dim();
  }
  VectorFn out(G, d);
  std::size_t off = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (std::size_t x = 0; x < G.order(); ++x) {
      for (std::size_t i = 0; i < parts[k].dim(); ++i) out(x, off + i) = u[k] * parts[k](x, i);
    }
    off += parts[k].dim();
  }
  return out;
}

VectorFn disjoint_support(const GroupSpec& group) {
  const std::size_t n = group.order();
  VectorFn f(group, n);
  for (std::size_t x = 0; x < n; ++x) f(x, x) = 1.0;
  return f;
}

GramMatrix gram_of(const VectorFn& f) {
  GramMatrix m{f.group(), f.dim(), std::vector<Complex>(f.size() * f.size())};
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < f.dim(); ++i) acc += f(x, i) * std::conj(f(y, i));
      m(x, y) = acc;
    }
  }
  return m;
}

std::vector<double> gram_eigenvalues(const GramMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::size_t gram_rank(const GramMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) r += sv(i) > 1e-8 * sv(0);
  return r;
}

PropertyReport check_gram(const GramMatrix& m) {
  PropertyReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const std::size_t n = m.size();
  if (m.entries.size() != n * n) {
    fail("entry count " + std::to_string(m.entries.size()) + " != |G|^2");
    return rep;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      if (std::abs(m(x, y) - std::conj(m(y, x))) > 1e-10) {
        fail("not hermitian at " + at(x, y));
        return rep;
      }
    }
  }
  const auto ev = gram_eigenvalues(m);
  if (!ev.empty() && ev.front() < -1e-9) fail("negative eigenvalue " + std::to_string(ev.front()));
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(m(x, x) - 1.0) > 1e-9) fail("diagonal entry at x=" + std::to_string(x) + " is not 1");
  }
  const GroupSpec& G = m.group;
  for (std::size_t a = 1; a < n; ++a) {
    Complex acc = 0.0;
    for (std::size_t x = 0; x < n; ++x) acc += m(x, G.add_index(x, a));
    if (std::abs(acc) > 1e-9) fail("shifted trace nonzero at a=" + std::to_string(a));
  }
  const std::size_t r = gram_rank(m);
  if (r > m.dim_bound) fail("rank " + std::to_string(r) + " exceeds d=" + std::to_string(m.dim_bound));
  return rep;
}

VectorFn function_from_gram(const GramMatrix& m) {
  const PropertyReport rep = check_gram(m);
  if (!rep.ok) throw MembershipError("not in C_d(G): " + rep.violations.front());
  const std::size_t n = m.size();
  const std::size_t d = m.dim_bound;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
  const auto& ev = es.eigenvalues();
  const auto& V = es.eigenvectors();
  VectorFn f(m.group, d);
  // Largest eigenvalues first; the rest of the rows stay zero.
  const double top = ev(ev.size() - 1);
  for (std::size_t i = 0; i < std::min(d, n); ++i) {
    const Eigen::Index k = static_cast<Eigen::Index>(n - 1 - i);
    if (ev(k) <= 1e-8 * top) break;
    Complex phase = 1.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (std::abs(V(static_cast<Eigen::Index>(x), k)) > 1e-12) {
        phase = std::conj(V(static_cast<Eigen::Index>(x), k)) / std::abs(V(static_cast<Eigen::Index>(x), k));
        break;
      }
    }
    const double s = std::sqrt(ev(k));
    for (std::size_t x = 0; x < n; ++x) f(x, i) = s * phase * V(static_cast<Eigen::Index>(x), k);
  }
  return f;
}

bool equivalent(const VectorFn& f, const VectorFn& g, double tol) {
  if (f.group().moduli() != g.group().moduli() || f.dim() != g.dim()) return false;
  const GramMatrix a = gram_of(f);
  const GramMatrix b = gram_of(g);
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (std::abs(a.entries[k] - b.entries[k]) > tol) return false;
  }
  return true;
}

std::vector<VectorFn> enumerate_B1_Z3() {
  // Bentness of (1, z1, z2) on Z/3: z1 + conj z2 + conj z1 z2 = 0 with
  // z1 = e^{ia}, z2 = e^{ib}.
  auto F = [](double a, double b) {
    return std::polar(1.0, a) + std::polar(1.0, -b) + std::polar(1.0, b - a);
  };
  const int grid = 360;
  std::vector<std::pair<double, double>> roots;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      double a = kTwoPi * i / grid, b = kTwoPi * j / grid;
      if (std::abs(F(a, b)) > 0.1) continue;
      for (int it = 0; it < 50; ++it) {
        const Complex v = F(a, b);
        const Complex da = Complex(0, 1) * (std::polar(1.0, a) - std::polar(1.0, b - a));
        const Complex db = Complex(0, 1) * (std::polar(1.0, b - a) - std::polar(1.0, -b));
        const double det = da.real() * db.imag() - db.real() * da.imag();
        if (std::abs(det) < 1e-14) break;
        const double sa = (v.real() * db.imag() - db.real() * v.imag()) / det;
        const double sb = (da.real() * v.imag() - v.real() * da.imag()) / det;
        a -= sa;
        b -= sb;
        if (std::abs(sa) + std::abs(sb) < 1e-16) break;
      }
      if (std::abs(F(a, b)) > 1e-12) continue;
      a = std::fmod(std::fmod(a, kTwoPi) + kTwoPi, kTwoPi);
      b = std::fmod(std::fmod(b, kTwoPi) + kTwoPi, kTwoPi);
      const bool seen = std::any_of(roots.begin(), roots.end(), [&](const auto& r) {
        return std::abs(std::polar(1.0, r.first) - std::polar(1.0, a)) < 1e-6 &&
               std::abs(std::polar(1.0, r.second) - std::polar(1.0, b)) < 1e-6;
      });
      if (!seen) roots.emplace_back(a, b);
    }
  }
  // angles within 1e-9 of 2 pi sort as 0
  auto key = [](double t) { return t > kTwoPi - 1e-9 ? 0.0 : t; };
  std::sort(roots.begin(), roots.end(), [&](const auto& p, const auto& q) {
    if (std::abs(key(p.first) - key(q.first)) > 1e-9) return key(p.first) < key(q.first);
    return key(p.second) < key(q.second);
  });
  const GroupSpec z3({3});
  std::vector<VectorFn> out;
  for (const auto& [a, b] : roots) out.push_back(VectorFn::scalar(z3, {1.0, std::polar(1.0, a), std::polar(1.0, b)}));
  return out;
}

std::optional<Concatenation> is_concatenated_Z3_d2(const GramMatrix& m, double tol) {
  if (m.group.moduli() != std::vector<std::int64_t>{3}) throw MembershipError("expected a matrix over Z/3");
  GramMatrix probe = m;
  probe.dim_bound = 2;
  const PropertyReport rep = check_gram(probe);
  if (!rep.ok) throw MembershipError("not in C_2(Z/3): " + rep.violations.front());
  std::vector<GramMatrix> ones;
  for (const VectorFn& f : enumerate_B1_Z3()) ones.push_back(gram_of(f));
  auto matches = [&](const GramMatrix& a, const GramMatrix& b, double t) {
    for (std::size_t k = 0; k < 9; ++k) {
      if (std::abs(t * a.entries[k] + (1.0 - t) * b.entries[k] - m.entries[k]) > tol) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < ones.size(); ++i) {
    if (matches(ones[i], ones[i], 1.0)) return Concatenation{i, i, 1.0};
  }
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = 0; j < ones.size(); ++j) {
      if (i == j) continue;
      const GramMatrix& a = ones[i];
      const GramMatrix& b = ones[j];
      // t from the entry where the two members differ most
      std::size_t k = 0;
      for (std::size_t q = 1; q < 9; ++q) {
        if (std::abs(a.entries[q] - b.entries[q]) > std::abs(a.entries[k] - b.entries[k])) k = q;
      }
      const Complex diff = a.entries[k] - b.entries[k];
      double t = 1.0;
      if (std::abs(diff) > tol) {
        const Complex tc = (m.entries[k] - b.entries[k]) / diff;
        if (std::abs(tc.imag()) > tol) continue;
        t = tc.real();
      }
      if (t < -tol || t > 1.0 + tol) continue;
      t = std::clamp(t, 0.0, 1.0);
      if (matches(a, b, t)) return Concatenation{i, j, t};
    }
  }
  return std::nullopt;
}

VectorFn z3_two_dim_example() {
  const Complex w = std::polar(1.0, kTwoPi / 3.0);
  VectorFn f(GroupSpec({3}), 2);
  f(0, 0) = 1.0;
  f(1, 0) = (w + w * w) / 2.0;
  f(1, 1) = (w - w * w) / 2.0;
  f(2, 0) = 1.0;
  return f;
}

GramMatrix z3_rank2_gram(double a) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex p = std::polar(h, kTwoPi * a);
  GramMatrix m{GroupSpec({3}), 2, std::vector<Complex>(9, 0.0)};
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(0, 1) = p;
  m(1, 0) = std::conj(p);
  m(0, 2) = -std::conj(p);
  m(2, 0) = -p;
  return m;
}

VectorFn z3_rank2_function(double a) {
  const double h = 1.0 / std::sqrt(2.0);
  VectorFn f(GroupSpec({3}), 2);
  f(0, 0) = 1.0;
  f(1, 0) = std::polar(h, -kTwoPi * a);
  f(1, 1) = std::polar(h, -kTwoPi * a);
  f(2, 0) = -std::polar(h, kTwoPi * a);
  f(2, 1) = std::polar(h, kTwoPi * a);
  return f;
}

}  // namespace abelshift
