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


#include "cli/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "abelshift/bentlib.hpp"
#include "abelshift/error.hpp"
#include "abelshift/numchar.hpp"

namespace abelshift::cli {
namespace {

std::string at(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& field) {
  if (!obj.is_object()) throw InputError(field, "expected an object");
  if (!obj.contains(key)) throw InputError(at(field, key), "missing");
  return obj.at(key);
}

std::int64_t get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InputError(field, "expected an integer");
  return v.get<std::int64_t>();
}

double get_double(const json& v, const std::string& field) {
  if (!v.is_number()) throw InputError(field, "expected a number");
  return v.get<double>();
}

std::vector<std::int64_t> get_int_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError(field, "expected a list of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_int(v[i], idx(field, i)));
  return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& field) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw InputError(at(field, k), "unknown field");
}

// Entries are [re, im] (scalar shorthand) or a list of d such pairs.
std::vector<Complex> parse_entry(const json& e, const std::string& field) {
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) return {parse_complex(e, field)};
  if (!e.is_array() || e.empty()) throw InputError(field, "expected [re, im] or a list of [re, im] pairs");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(parse_complex(e[i], idx(field, i)));
  return out;
}

VectorFn parse_table(const json& t, const GroupSpec& G, const std::string& field) {
  if (!t.is_array()) throw InputError(field, "expected a list");
  if (t.size() != G.order())
    throw InputError(field, "table length ≠ |G| (" + std::to_string(t.size()) + " entries, |G| = " +
                                std::to_string(G.order()) + ")");
  std::vector<Complex> values;
  std::size_t d = 0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto e = parse_entry(t[x], idx(field, x));
    if (x == 0) d = e.size();
    if (e.size() != d)
      throw InputError(idx(field, x), "entry has " + std::to_string(e.size()) + " coordinates, expected " +
                                          std::to_string(d));
    values.insert(values.end(), e.begin(), e.end());
  }
  return VectorFn(G, d, std::move(values));
}

const Window kUnitWindow{1.0, 1.0, 1.0, 1.0};

void require_group(const GroupSpec& G, const std::vector<std::int64_t>& want, const std::string& builder) {
  if (G.moduli() == want) return;
  std::string s = "[";
  for (std::size_t i = 0; i < want.size(); ++i) s += (i ? ", " : "") + std::to_string(want[i]);
  throw InputError("group", builder + " needs group " + s + "]");
}

Complex optional_phase(const json& c, const std::string& field) {
  return c.contains("phase") ? parse_complex(c["phase"], at(field, "phase")) : Complex(1.0);
}

BuiltFunction build_construct(const json& c, const GroupSpec& G, const std::string& field);

BuiltFunction build_spec(const json& spec, const GroupSpec& G, const std::string& field) {
  if (!spec.is_object()) throw InputError(field, "expected an object with \"table\" or \"construct\"");
  const bool has_table = spec.contains("table"), has_construct = spec.contains("construct");
  if (has_table == has_construct) throw InputError(field, "exactly one of \"table\" or \"construct\" is required");
  check_keys(spec, {"table", "construct"}, field);
  if (has_table) {
    VectorFn f = parse_table(spec["table"], G, at(field, "table"));
    const Window w = tight_window(f);
    return {std::move(f), w};
  }
  try {
    return build_construct(spec["construct"], G, at(field, "construct"));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(at(field, "construct"), e.what());
  }
}

BuiltFunction build_construct(const json& c, const GroupSpec& G, const std::string& field) {
  const json& name_v = require(c, "name", field);
  if (!name_v.is_string()) throw InputError(at(field, "name"), "expected a string");
  const std::string name = name_v.get<std::string>();

  if (name == "character") {
    check_keys(c, {"name", "exponents", "phase"}, field);
    const auto a = get_int_list(require(c, "exponents", field), at(field, "exponents"));
    if (a.size() != G.rank()) throw InputError(at(field, "exponents"), "one exponent per cyclic factor expected");
    const std::size_t chi = G.index_of(G.character(a));
    const Complex ph = optional_phase(c, field);
    std::vector<Complex> t(G.order());
    for (std::size_t x = 0; x < G.order(); ++x) t[x] = ph * G.eval_index(chi, x);
    VectorFn f = VectorFn::scalar(G, std::move(t));
    const Window w = tight_window(f);
    return {std::move(f), w};
  }
  if (name == "chirp") {
    check_keys(c, {"name", "c", "phase"}, field);
    const std::int64_t k = get_int(require(c, "c", field), at(field, "c"));
    const Complex ph = optional_phase(c, field);
    std::vector<Complex> t(G.order());
    for (std::size_t x = 0; x < G.order(); ++x) {
      Complex v = ph;
      const auto e = G.element_at(x);
      for (std::size_t j = 0; j < G.rank(); ++j) {
        const std::int64_t n = G.moduli()[j], y = e.coords[j];
        v *= n % 2 == 0 ? root_of_unity(k * y * y, 2 * n) : root_of_unity(k * y * y, n);
      }
      t[x] = v;
    }
    VectorFn f = VectorFn::scalar(G, std::move(t));
    const Window w = tight_window(f);
    return {std::move(f), w};
  }
  if (name == "dirichlet") {
    check_keys(c, {"name", "n", "index"}, field);
    const std::int64_t n = get_int(require(c, "n", field), at(field, "n"));
    const std::int64_t i = get_int(require(c, "index", field), at(field, "index"));
    if (i < 0) throw InputError(at(field, "index"), "must be >= 0");
    const auto chi = dirichlet_character(n, static_cast<std::size_t>(i));
    require_group(G, {n}, "dirichlet");
    json notes{{"primitive", chi.primitive}, {"conductor", chi.conductor}};
    return {chi.function(), kUnitWindow, notes};
  }
  if (name == "ffield") {
    check_keys(c, {"name", "p", "k", "poly", "index"}, field);
    const std::int64_t p = get_int(require(c, "p", field), at(field, "p"));
    const std::int64_t k = get_int(require(c, "k", field), at(field, "k"));
    const std::int64_t i = get_int(require(c, "index", field), at(field, "index"));
    if (k < 1) throw InputError(at(field, "k"), "must be >= 1");
    if (i < 0) throw InputError(at(field, "index"), "must be >= 0");
    std::vector<std::int64_t> poly;
    if (c.contains("poly")) poly = get_int_list(c["poly"], at(field, "poly"));
    const auto chi = ffield_character(p, static_cast<std::size_t>(k), poly, static_cast<std::size_t>(i));
    require_group(G, std::vector<std::int64_t>(static_cast<std::size_t>(k), p), "ffield");
    json notes{{"q", chi.field.q()},
               {"poly", chi.field.poly()},
               {"generator", chi.field.generator()},
               {"dual_index", chi.dual}};
    return {chi.function(), kUnitWindow, notes};
  }
  if (name == "concatenate") {
    check_keys(c, {"name", "parts", "weights"}, field);
    const json& parts_v = require(c, "parts", field);
    const json& weights_v = require(c, "weights", field);
    if (!parts_v.is_array() || parts_v.empty()) throw InputError(at(field, "parts"), "expected a non-empty list");
    if (!weights_v.is_array() || weights_v.size() != parts_v.size())
      throw InputError(at(field, "weights"), "expected one [re, im] weight per part");
    std::vector<VectorFn> parts;
    std::vector<Complex> u;
    for (std::size_t i = 0; i < parts_v.size(); ++i) {
      parts.push_back(build_spec(parts_v[i], G, idx(at(field, "parts"), i)).f);
      u.push_back(parse_complex(weights_v[i], idx(at(field, "weights"), i)));
    }
    VectorFn f = concatenate(parts, u);
    const Window w = tight_window(f);
    return {std::move(f), w};
  }
  if (name == "disjoint") {
    check_keys(c, {"name"}, field);
    VectorFn f = disjoint_support(G);
    const Window w = tight_window(f);
    return {std::move(f), w};
  }
  if (name == "eta-family") {
    check_keys(c, {"name", "n", "eta"}, field);
    const std::int64_t n = get_int(require(c, "n", field), at(field, "n"));
    if (n < 1) throw InputError(at(field, "n"), "must be positive");
    const Complex eta = parse_complex(require(c, "eta", field), at(field, "eta"));
    auto fam = eta_family(static_cast<std::size_t>(n), eta);
    require_group(G, {n}, "eta-family");
    return {std::move(fam.f), fam.window};
  }
  throw InputError(at(field, "name"), "unknown builder \"" + name + "\"");
}

json window_value(double v) { return std::isinf(v) ? json(nullptr) : json(v); }

double parse_bound(const json& w, const std::string& key, double fallback, bool may_be_inf,
                   const std::string& field) {
  if (!w.contains(key)) return fallback;
  const json& v = w[key];
  if (v.is_null()) {
    if (!may_be_inf) throw InputError(at(field, key), "must be a finite number");
    return kInfinity;
  }
  const double d = get_double(v, at(field, key));
  if (d < 0.0) throw InputError(at(field, key), "must be >= 0");
  return d;
}

void check_phase_table(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array() || v.size() != n)
    throw InputError(field, "expected " + std::to_string(n) + " angles, one per group element");
  for (std::size_t i = 0; i < v.size(); ++i) get_double(v[i], idx(field, i));
}

}  // namespace

Complex parse_complex(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw InputError(field, "expected [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

InstanceFile parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("(root)", "expected a JSON object");
  check_keys(doc, {"group", "dim", "function", "shift", "window", "phases", "seed"}, "");
  InstanceFile file;
  file.group = get_int_list(require(doc, "group", ""), "group");
  if (file.group.empty()) throw InputError("group", "needs at least one modulus");
  for (std::size_t i = 0; i < file.group.size(); ++i)
    if (file.group[i] < 1) throw InputError(idx("group", i), "moduli must be >= 1");
  const GroupSpec G(file.group);

  file.function = require(doc, "function", "");
  const BuiltFunction built = build_spec(file.function, G, "function");
  file.dim = built.f.dim();
  if (doc.contains("dim")) {
    const std::int64_t d = get_int(doc["dim"], "dim");
    if (d < 1 || static_cast<std::size_t>(d) != file.dim)
      throw InputError("dim", "declared " + std::to_string(d) + " but the function has dimension " +
                                  std::to_string(file.dim));
  }

  file.shift.assign(G.rank(), 0);
  if (doc.contains("shift")) {
    file.shift = get_int_list(doc["shift"], "shift");
    if (file.shift.size() != G.rank()) throw InputError("shift", "one coordinate per cyclic factor expected");
    for (std::size_t j = 0; j < G.rank(); ++j)
      if (file.shift[j] < 0 || file.shift[j] >= file.group[j])
        throw InputError(idx("shift", j), "must lie in [0, " + std::to_string(file.group[j]) + ")");
  }

  if (doc.contains("window")) {
    const json& w = doc["window"];
    if (!w.is_object()) throw InputError("window", "expected an object");
    check_keys(w, {"r", "R", "rhat", "Rhat"}, "window");
    Window win;
    win.r = parse_bound(w, "r", 0.0, false, "window");
    win.R = parse_bound(w, "R", kInfinity, true, "window");
    win.rhat = parse_bound(w, "rhat", 0.0, false, "window");
    win.Rhat = parse_bound(w, "Rhat", kInfinity, true, "window");
    if (win.r > win.R) throw InputError("window", "r exceeds R");
    if (win.rhat > win.Rhat) throw InputError("window", "rhat exceeds Rhat");
    file.window = win;
  }

  if (doc.contains("phases")) {
    const json& p = doc["phases"];
    if (!p.is_object()) throw InputError("phases", "expected an object");
    if (p.contains("theta") || p.contains("chi")) {
      check_keys(p, {"theta", "chi"}, "phases");
      check_phase_table(require(p, "theta", "phases"), G.order(), "phases.theta");
      check_phase_table(require(p, "chi", "phases"), G.order(), "phases.chi");
    } else {
      check_keys(p, {"random_theta", "random_chi"}, "phases");
      for (const char* k : {"random_theta", "random_chi"})
        if (p.contains(k) && !p[k].is_boolean()) throw InputError(at("phases", k), "expected true or false");
    }
    file.phases = p;
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !(doc["seed"].is_number_integer() && doc["seed"].get<std::int64_t>() >= 0))
      throw InputError("seed", "expected a non-negative integer");
    file.seed = doc["seed"].get<std::uint64_t>();
  }
  return file;
}

json to_json(const InstanceFile& file) {
  json doc;
  doc["group"] = file.group;
  doc["dim"] = file.dim;
  doc["function"] = file.function;
  doc["shift"] = file.shift;
  if (file.window) {
    doc["window"] = {{"r", window_value(file.window->r)},
                     {"R", window_value(file.window->R)},
                     {"rhat", window_value(file.window->rhat)},
                     {"Rhat", window_value(file.window->Rhat)}};
  }
  if (!file.phases.is_null()) doc["phases"] = file.phases;
  doc["seed"] = file.seed;
  return doc;
}

std::string serialize(const InstanceFile& file) { return to_json(file).dump(2) + "\n"; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path, std::string("invalid JSON: ") + e.what());
  }
}

InstanceFile read_instance(const std::string& path) { return parse_instance(read_json(path)); }

BuiltFunction build_function(const InstanceFile& file) {
  return build_spec(file.function, GroupSpec(file.group), "function");
}

Materialized materialize(const InstanceFile& file) {
  BuiltFunction built = build_function(file);
  const GroupSpec G(file.group);
  const Window window = file.window.value_or(built.window);
  Materialized m{make_instance(std::move(built.f), G.element(file.shift), window), PhaseAssignment::zero(G.order()),
                 std::move(built.notes)};
  const json& p = file.phases;
  if (p.is_object() && p.contains("theta")) {
    m.phases.theta = p["theta"].get<std::vector<double>>();
    m.phases.chi = p["chi"].get<std::vector<double>>();
  } else if (p.is_object()) {
    m.phases = PhaseAssignment::random(G.order(), file.seed, p.value("random_theta", false),
                                       p.value("random_chi", false));
  }
  return m;
}

}  // namespace abelshift::cli
