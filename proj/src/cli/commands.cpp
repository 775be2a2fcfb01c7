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


#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "abelshift/analysis.hpp"
#include "abelshift/bentlib.hpp"
#include "abelshift/error.hpp"
#include "abelshift/phasetuned.hpp"
#include "cli/report_io.hpp"

namespace abelshift::cli {
namespace {

struct Common {
  std::string instance;
  std::string algorithm;
  std::string out_path;
  std::string format = "json";
  std::string backend = "auto";
  double threshold = 0.5;
  std::optional<std::uint64_t> seed;
  std::optional<int> quant_bits;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("--out", "cannot write " + path);
  f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

RunOptions options_for(const Common& c, const GroupSpec& G) {
  RunOptions opt;
  if (c.backend == "auto") opt.backend = auto_backend(G);
  else if (c.backend == "dense") opt.backend = Backend::dense;
  else if (c.backend == "lazy") opt.backend = Backend::lazy;
  else throw InputError("--backend", "expected auto, dense or lazy");
  return opt;
}

InstanceFile load(const Common& c) {
  InstanceFile file = read_instance(c.instance);
  if (c.seed) file.seed = *c.seed;
  return file;
}

QuantizationScheme scheme_for(int bits) {
  try {
    return QuantizationScheme::with_bits(bits);
  } catch (const Error& e) {
    throw InputError("--quant-bits", e.what());
  }
}

std::string coords_text(const GroupElement& e) {
  std::string s;
  for (std::size_t j = 0; j < e.coords.size(); ++j) s += (j ? ";" : "") + std::to_string(e.coords[j]);
  return s;
}

// Quantized approx-subset as a report row; p_e goes in sim_prob.
RunReport quantized_row(const Materialized& m, int bits, const RunOptions& opt) {
  const auto scheme = scheme_for(bits);
  const QuantizedRun q = quantized_run(m.instance, scheme, opt);
  RunReport rep;
  rep.algorithm = "approx-subset-quantized";
  rep.sim_prob = q.p_e;
  rep.argmax = m.instance.shift_index();
  rep.queries = {1, 1};
  rep.extras = {{"bits", bits}, {"p_exact", q.p}, {"error", q.error}, {"bound", q.bound}};
  return rep;
}

int cmd_run(const Common& c, std::ostream& out) {
  const InstanceFile file = load(c);
  const Materialized m = materialize(file);
  const GroupSpec& G = m.instance.group();
  const RunOptions opt = options_for(c, G);
  std::vector<RunReport> runs;
  for (const auto& id : split(c.algorithm.empty() ? "approx-subset" : c.algorithm, ','))
    runs.push_back(run_algorithm(id, m, opt));
  if (c.quant_bits) runs.push_back(quantized_row(m, *c.quant_bits, opt));

  if (c.format == "json") emit(report_json(file, m.notes, runs, c.threshold).dump(2) + "\n", c.out_path, out);
  else if (c.format == "csv") emit(report_csv(runs, G, c.threshold), c.out_path, out);
  else throw InputError("--format", "expected json or csv");

  for (const auto& r : runs)
    if (below_threshold(r, c.threshold)) return 2;
  return 0;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o;
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
        arr.push_back(o);
      }
      return arr.dump(2) + "\n";
    }
    if (format != "csv") throw InputError("--format", "expected json or csv");
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
    s += "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        if (r[i].is_number_float()) s += format_double(r[i].get<double>());
        else if (r[i].is_string()) s += r[i].get<std::string>();
        else if (!r[i].is_null()) s += r[i].dump();
      }
      s += "\n";
    }
    return s;
  }
};

json prob_cell(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

int cmd_scan(const Common& c, const std::string& sweep, std::ostream& out) {
  InstanceFile file = load(c);
  const GroupSpec G(file.group);
  const RunOptions opt = options_for(c, G);
  Table t;

  auto range = [&sweep](const std::string& key) -> std::optional<std::string> {
    if (sweep.rfind(key + "=", 0) != 0) return std::nullopt;
    return sweep.substr(key.size() + 1);
  };
  auto to_int = [](const std::string& s, const std::string& field) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return static_cast<int>(v);
    } catch (const std::exception&) {
      throw InputError(field, "expected an integer, got \"" + s + "\"");
    }
  };

  if (sweep == "s") {
    const std::string id = c.algorithm.empty() ? "approx-subset" : c.algorithm;
    t.header = {"s", "formula_prob", "sim_prob", "argmax"};
    for (std::size_t s = 0; s < G.order(); ++s) {
      file.shift = G.element_at(s).coords;
      const Materialized m = materialize(file);
      const RunReport r = run_algorithm(id, m, opt);
      t.rows.push_back({coords_text(G.element_at(s)), prob_cell(r.formula_prob), r.sim_prob,
                        coords_text(G.element_at(r.argmax))});
    }
  } else if (auto bits = range("bits")) {
    const auto ends = split(*bits, '.');
    if (ends.size() != 2) throw InputError("sweep", "expected bits=LO..HI");
    const int lo = to_int(ends[0], "sweep"), hi = to_int(ends[1], "sweep");
    if (lo > hi) throw InputError("sweep", "empty bit range");
    const Materialized m = materialize(file);
    t.header = {"bits", "delta", "p", "p_e", "error", "bound"};
    for (int n = lo; n <= hi; ++n) {
      const auto scheme = scheme_for(n);
      const QuantizedRun q = quantized_run(m.instance, scheme, opt);
      t.rows.push_back({n, scheme.delta(), q.p, q.p_e, q.error, q.bound});
    }
  } else if (auto seeds = range("seeds")) {
    const int count = to_int(*seeds, "sweep");
    if (count < 1) throw InputError("sweep", "need at least one seed");
    const std::string id = c.algorithm.empty() ? "one-register" : c.algorithm;
    if (id != "one-register") throw InputError("--algorithm", "seed sweeps draw random phases; use one-register");
    const bool rtheta = file.phases.is_object() && file.phases.value("random_theta", false);
    const bool rchi = !file.phases.is_object() || file.phases.contains("theta") ||
                      file.phases.value("random_chi", false);
    const std::uint64_t base = file.seed;
    const Materialized m = materialize(file);
    t.header = {"seed", "formula_prob", "sim_prob"};
    for (int i = 0; i < count; ++i) {
      const std::uint64_t seed = base + static_cast<std::uint64_t>(i);
      const auto phases = PhaseAssignment::random(G.order(), seed, rtheta, rchi);
      const RunReport r = run_one_register(m.instance, phases, opt);
      t.rows.push_back({seed, prob_cell(r.formula_prob), r.sim_prob});
    }
  } else {
    throw InputError("sweep", "expected s, bits=LO..HI or seeds=N");
  }
  emit(t.render(c.format), c.out_path, out);
  return 0;
}

GramMatrix gram_from_file(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("matrix")) return gram_of(build_function(read_instance(path)).f);
  if (!doc.contains("group")) throw InputError("group", "missing");
  std::vector<std::int64_t> moduli;
  try {
    moduli = doc["group"].get<std::vector<std::int64_t>>();
  } catch (const json::exception&) {
    throw InputError("group", "expected a list of integers");
  }
  GramMatrix m{GroupSpec(moduli), 1, {}};
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_unsigned()) throw InputError("dim", "expected a positive integer");
    m.dim_bound = doc["dim"].get<std::size_t>();
  }
  const json& rows = doc["matrix"];
  const std::size_t n = m.group.order();
  if (!rows.is_array() || rows.size() != n) throw InputError("matrix", "expected |G| rows");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rf = "matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) throw InputError(rf, "expected |G| entries");
    for (std::size_t j = 0; j < n; ++j) m.entries.push_back(parse_complex(rows[i][j], rf + "[" + std::to_string(j) + "]"));
  }
  return m;
}

int cmd_bent(const std::string& sub, const std::vector<std::string>& files, const std::string& out_path,
             std::ostream& out) {
  auto need = [&](std::size_t k) {
    if (files.size() != k)
      throw InputError("bent " + sub, "expects " + std::to_string(k) + " file argument" + (k == 1 ? "" : "s"));
  };
  std::ostringstream text;
  text.precision(12);
  if (sub == "check") {
    need(1);
    const VectorFn f = build_function(read_instance(files[0])).f;
    text << "bent: " << (is_bent(f) ? "true" : "false") << "\n";
  } else if (sub == "gram") {
    need(1);
    const GramMatrix m = gram_from_file(files[0]);
    const PropertyReport rep = check_gram(m);
    text << "member: " << (rep.ok ? "true" : "false") << "\n";
    for (const auto& v : rep.violations) text << "violation: " << v << "\n";
    text << "rank: " << gram_rank(m) << "\n";
    text << "eigenvalues:";
    for (double e : gram_eigenvalues(m)) text << ' ' << (std::abs(e) < 1e-12 ? 0.0 : e);
    text << "\n";
  } else if (sub == "equivalent") {
    need(2);
    const VectorFn a = build_function(read_instance(files[0])).f;
    const VectorFn b = build_function(read_instance(files[1])).f;
    text << "equivalent: " << (equivalent(a, b) ? "true" : "false") << "\n";
  } else if (sub == "b1z3") {
    need(0);
    for (const VectorFn& f : enumerate_B1_Z3()) {
      json row = json::array();
      for (std::size_t x = 0; x < f.size(); ++x) row.push_back(complex_json(f(x)));
      text << row.dump() << "\n";
    }
  } else if (sub == "concat-check") {
    need(1);
    const auto res = is_concatenated_Z3_d2(gram_from_file(files[0]));
    if (!res) {
      text << "concatenated: false\n";
    } else {
      text << "concatenated: true first=" << res->first << " second=" << res->second << " t=" << res->t << "\n";
    }
  } else {
    throw InputError("bent", "unknown subcommand " + sub);
  }
  emit(text.str(), out_path, out);
  return 0;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("instance", c.instance, "instance file (JSON)")->required();
  cmd->add_option("--algorithm", c.algorithm, "algorithm id, comma separated for several");
  cmd->add_option("--out", c.out_path, "write the report here instead of stdout");
  cmd->add_option("--format", c.format, "json or csv");
  cmd->add_option("--backend", c.backend, "auto, dense or lazy");
  cmd->add_option("--seed", c.seed, "overrides the seed in the instance file");
}

}  // namespace

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{"classical",      "exact-bent",      "approx-bounded",
                                            "approx-subset",  "mirrored",        "exact-multidim",
                                            "approx-multidim", "one-register"};
  return ids;
}

Backend auto_backend(const GroupSpec& group) { return group.order() <= 64 ? Backend::dense : Backend::lazy; }

RunReport run_algorithm(const std::string& id, const Materialized& m, const RunOptions& opt) {
  const HiddenShiftInstance& inst = m.instance;
  if (id == "classical") return run_classical(inst);
  if (id == "exact-bent") return run_exact_bent(inst, opt);
  if (id == "approx-bounded") return run_approx_bounded(inst, opt);
  if (id == "approx-subset") return run_approx_subset(inst, opt);
  if (id == "mirrored") return run_mirrored_subset(inst, opt);
  if (id == "exact-multidim") return run_exact_multidim(inst, opt);
  if (id == "approx-multidim") return run_approx_multidim(inst, opt);
  if (id == "one-register") return run_one_register(inst, m.phases, opt);
  std::string known;
  for (const auto& a : algorithm_ids()) known += (known.empty() ? "" : ", ") + a;
  throw InputError("--algorithm", "unknown algorithm \"" + id + "\" (known: " + known + ")");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hidden-shift algorithms on finite abelian groups: closed forms and simulation."};
  app.name("abelshift");
  app.require_subcommand(1);

  Common run_opts;
  CLI::App* run = app.add_subcommand("run", "run algorithms on one instance and write a report");
  add_common(run, run_opts);
  run->add_option("--threshold", run_opts.threshold, "exit 2 when a run's probability is below this");
  run->add_option("--quant-bits", run_opts.quant_bits, "also run approx-subset with quantized oracle outputs");

  Common scan_opts;
  scan_opts.format = "csv";
  std::string sweep;
  CLI::App* scan = app.add_subcommand("scan", "sweep shifts, quantization bits or phase seeds");
  add_common(scan, scan_opts);
  scan->add_option("sweep", sweep, "s | bits=LO..HI | seeds=N")->required();

  std::string bent_out;
  std::vector<std::string> bent_files;
  CLI::App* bent = app.add_subcommand("bent", "bent-function toolkit");
  bent->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> bent_subs{
      {"check", "is the instance's function bent"},
      {"gram", "Gram matrix membership, rank and spectrum (instance or matrix file)"},
      {"equivalent", "unitary equivalence of two instance functions"},
      {"b1z3", "print the six normalized scalar bent functions on Z/3"},
      {"concat-check", "decompose a member of C_2(Z/3) as a concatenation"}};
  for (const auto& [name, help] : bent_subs) {
    CLI::App* sub = bent->add_subcommand(name, help);
    sub->add_option("files", bent_files);
    sub->add_option("--out", bent_out, "write output here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*run) return cmd_run(run_opts, out);
    if (*scan) return cmd_scan(scan_opts, sweep, out);
    for (CLI::App* sub : bent->get_subcommands()) return cmd_bent(sub->get_name(), bent_files, bent_out, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace abelshift::cli
