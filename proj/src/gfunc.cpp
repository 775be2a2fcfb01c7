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

#include "abelshift/gfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "abelshift/error.hpp"

namespace abelshift {

VectorFn::VectorFn(GroupSpec group, std::size_t dim, Domain domain)
    : group_(std::move(group)), dim_(dim), domain_(domain), table_(group_.order() * dim) {
  if (dim_ == 0) throw DimensionError("function dimension must be >= 1");
}

VectorFn::VectorFn(GroupSpec group, std::size_t dim, std::vector<Complex> table, Domain domain)
    : group_(std::move(group)), dim_(dim), domain_(domain), table_(std::move(table)) {
  if (dim_ == 0) throw DimensionError("function dimension must be >= 1");
  if (table_.size() != group_.order() * dim_) {
    throw DimensionError("table length " + std::to_string(table_.size() / dim_) +
                         " != |G| = " + std::to_string(group_.order()));
  }
}

VectorFn VectorFn::scalar(GroupSpec group, std::vector<Complex> values, Domain domain) {
  return VectorFn(std::move(group), 1, std::move(values), domain);
}

double VectorFn::norm(std::size_t x) const {
  double s = 0.0;
  for (const Complex& v : (*this)[x]) s += std::norm(v);
  return std::sqrt(s);
}

VectorFn VectorFn::component(std::size_t i) const {
  if (i >= dim_) throw DimensionError("component index out of range");
  std::vector<Complex> t(size());
  for (std::size_t x = 0; x < size(); ++x) t[x] = (*this)(x, i);
  return VectorFn(group_, 1, std::move(t), domain_);
}

double max_abs_diff(const VectorFn& a, const VectorFn& b) {
  if (!(a.group() == b.group()) || a.dim() != b.dim()) {
    throw DimensionError("functions have different shapes");
  }
  double m = 0.0;
  for (std::size_t k = 0; k < a.table().size(); ++k) {
    m = std::max(m, std::abs(a.table()[k] - b.table()[k]));
  }
  return m;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("rational needs a positive denominator");
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Subset::Subset(std::size_t universe, bool full)
    : mask_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

Subset Subset::from_indices(std::size_t universe, const std::vector<std::size_t>& members) {
  Subset s(universe);
  for (std::size_t i : members) s.insert(i);
  return s;
}

void Subset::insert(std::size_t i) {
  if (i >= mask_.size()) throw DimensionError("subset member out of range");
  if (!mask_[i]) {
    mask_[i] = 1;
    ++count_;
  }
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(i);
  }
  return out;
}

VectorFn shift(const VectorFn& f, const GroupElement& s) {
  const GroupSpec& G = f.group();
  const std::size_t si = G.index_of(s);
  VectorFn g(G, f.dim(), f.domain());
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto src = f[G.sub_index(x, si)];
    std::copy(src.begin(), src.end(), g[x].begin());
  }
  return g;
}

bool is_bent(const VectorFn& f, const VectorFn& fhat, double tol) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (std::abs(f.norm(x) - 1.0) > tol || std::abs(fhat.norm(x) - 1.0) > tol) return false;
  }
  return true;
}

bool is_bent(const VectorFn& f, double tol) { return is_bent(f, fourier(f), tol); }

Complex autocorrelation(const VectorFn& f, const GroupElement& a) {
  const GroupSpec& G = f.group();
  const std::size_t ai = G.index_of(a);
  Complex acc = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    const auto u = f[x];
    const auto v = f[G.add_index(x, ai)];
    for (std::size_t i = 0; i < f.dim(); ++i) acc += u[i] * std::conj(v[i]);
  }
  return acc;
}

namespace {

bool in_window(double v, double lo, double hi) {
  return v >= lo - kNormTolerance && v <= hi + kNormTolerance;
}

}  // namespace

BoundProfile extract_bounds(const VectorFn& f, const VectorFn& fhat, const Window& w) {
  if (w.r < 0 || w.r > w.R || w.rhat < 0 || w.rhat > w.Rhat) {
    throw DomainError("window needs 0 <= r <= R and 0 <= rhat <= Rhat");
  }
  BoundProfile p;
  p.r = w.r;
  p.R = w.R;
  p.rhat = w.rhat;
  p.Rhat = w.Rhat;
  const std::size_t n = f.size();
  p.A = Subset(n);
  p.Ahat = Subset(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (in_window(f.norm(x), w.r, w.R)) p.A.insert(x);
    if (in_window(fhat.norm(x), w.rhat, w.Rhat)) p.Ahat.insert(x);
  }
  p.alpha = make_rational(static_cast<std::int64_t>(p.A.size()), static_cast<std::int64_t>(n));
  p.alphahat =
      make_rational(static_cast<std::int64_t>(p.Ahat.size()), static_cast<std::int64_t>(n));
  return p;
}

BoundProfile extract_bounds(const VectorFn& f, const Window& window) {
  return extract_bounds(f, fourier(f), window);
}

Window tight_window(const VectorFn& f) {
  const VectorFn fh = fourier(f);
  Window w;
  w.R = 0.0;
  w.rhat = kInfinity;
  for (std::size_t x = 0; x < f.size(); ++x) {
    w.R = std::max(w.R, f.norm(x));
    w.rhat = std::min(w.rhat, fh.norm(x));
  }
  return w;
}

PropertyReport check_bounded_props(const VectorFn& f, const BoundProfile& profile,
                                   std::uint64_t seed, std::size_t samples) {
  PropertyReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  const VectorFn fh = fourier(f);
  const double R = profile.R;
  const double rhat = profile.rhat;
  const double tol = kNormTolerance;

  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.norm(x) > R + tol) fail("||f(x)|| > R at x=" + std::to_string(x));
    if (fh.norm(x) < rhat - tol) fail("||fhat(phi)|| < rhat at phi=" + std::to_string(x));
  }
  if (rhat > R + tol) {
    std::ostringstream os;
    os << "rhat = " << rhat << " exceeds R = " << R;
    fail(os.str());
  }
  if (std::abs(rhat - R) <= tol) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (std::abs(f.norm(x) - R) > tol) fail("rhat = R but ||f(x)|| != R at x=" + std::to_string(x));
      if (std::abs(fh.norm(x) - rhat) > tol) {
        fail("rhat = R but ||fhat(phi)|| != rhat at phi=" + std::to_string(x));
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t s = pick(rng);
    const VectorFn g = shift(f, f.group().element_at(s));
    const VectorFn gh = fourier(g);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (g.norm(x) > R + tol) fail("shift s=" + std::to_string(s) + " breaks ||g|| <= R");
      if (gh.norm(x) < rhat - tol) fail("shift s=" + std::to_string(s) + " breaks ||ghat|| >= rhat");
    }
  }
  return rep;
}

}  // namespace abelshift
