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


#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "abelshift/phasetuned.hpp"
#include "cli/commands.hpp"
#include "cli/instance_io.hpp"
#include "gtest/gtest.h"

namespace abelshift::cli {
namespace {

const std::string kData = ABELSHIFT_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "abelshift");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

TEST(InstanceIo, CanonicalFilesRoundTrip) {
  for (const char* name : {"dirichlet5.json", "bent_z2.json", "bounded_z2.json", "chirp_z6.json", "eta_z3.json",
                           "ffield8.json", "z3_two_dim.json"}) {
    const std::string text = slurp(data(name));
    EXPECT_EQ(serialize(parse_instance(json::parse(text))), text) << name;
  }
}

TEST(InstanceIo, DiagnosticsNameTheField) {
  auto field_of = [](const json& doc) {
    try {
      parse_instance(doc);
    } catch (const InputError& e) {
      return e.field();
    }
    return std::string("(none)");
  };
  const json ok = json::parse(slurp(data("bent_z2.json")));
  json d = ok;
  d.erase("group");
  EXPECT_EQ(field_of(d), "group");
  d = ok;
  d["dim"] = 2;
  EXPECT_EQ(field_of(d), "dim");
  d = ok;
  d["shift"] = {5};
  EXPECT_EQ(field_of(d), "shift[0]");
  d = ok;
  d["colour"] = 1;
  EXPECT_EQ(field_of(d), "colour");
  d = ok;
  d["function"]["table"][1] = {1.0, 2.0, 3.0};
  EXPECT_EQ(field_of(d), "function.table[1][0]");
  d = ok;
  d["function"] = {{"construct", {{"name", "nope"}}}};
  EXPECT_EQ(field_of(d), "function.construct.name");
  d = ok;
  d["function"] = {{"construct", {{"name", "dirichlet"}, {"n", 5}, {"index", 1}}}};
  EXPECT_EQ(field_of(d), "group");
  d = ok;
  d["window"] = {{"r", -1.0}};
  EXPECT_EQ(field_of(d), "window.r");
  d = ok;
  d["phases"] = {{"theta", {0.0}}, {"chi", {0.0, 0.0}}};
  EXPECT_EQ(field_of(d), "phases.theta");
}

TEST(Run, DirichletFive) {
  const auto r = cli({"run", data("dirichlet5.json"), "--algorithm", "approx-subset"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = json::parse(r.out);
  EXPECT_NEAR(rep["runs"][0]["sim_prob"].get<double>(), 0.64, 1e-9);
  EXPECT_NEAR(rep["runs"][0]["formula_prob"].get<double>(), 0.64, 1e-9);
  EXPECT_TRUE(rep["runs"][0]["agree"].get<bool>());
  EXPECT_EQ(rep["runs"][0]["argmax"], json({2}));
  EXPECT_TRUE(rep["notes"]["primitive"].get<bool>());
  EXPECT_EQ(rep["instance"], to_json(read_instance(data("dirichlet5.json"))));
}

TEST(Run, ExactBentAndSeveralAlgorithms) {
  const auto r = cli({"run", data("bent_z2.json"), "--algorithm", "exact-bent,classical,approx-bounded"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = json::parse(r.out);
  ASSERT_EQ(rep["runs"].size(), 3u);
  for (const auto& row : rep["runs"]) {
    EXPECT_NEAR(row["sim_prob"].get<double>(), 1.0, 1e-10) << row["algorithm"];
    EXPECT_EQ(row["argmax"], json({1}));
  }
  // Only the classical algorithm reports a deterministic recovery.
  EXPECT_EQ(rep["runs"][1]["recovered"], json({1}));
  EXPECT_TRUE(rep["runs"][0]["recovered"].is_null());
}

TEST(Run, BoundedFiveEighthsAndCsv) {
  const auto r = cli({"run", data("bounded_z2.json"), "--algorithm", "approx-bounded", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0].rfind("algorithm,formula_prob,sim_prob,agree", 0), 0u);
  EXPECT_EQ(ls[1].rfind("approx-bounded,0.62", 0), 0u) << ls[1];
  EXPECT_NE(ls[1].find(",true,"), std::string::npos);
}

TEST(Run, FiniteFieldReportsDualIdentification) {
  const auto r = cli({"run", data("ffield8.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = json::parse(r.out);
  EXPECT_NEAR(rep["runs"][0]["sim_prob"].get<double>(), 49.0 / 64.0, 1e-9);
  EXPECT_EQ(rep["notes"]["dual_index"].size(), 8u);
  EXPECT_EQ(rep["notes"]["poly"], json({1, 1, 0, 1}));
}

TEST(Run, ExitCodes) {
  const auto bad = cli({"run", data("bad_length.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("table length ≠ |G|"), std::string::npos) << bad.err;
  EXPECT_NE(bad.err.find("function.table"), std::string::npos);

  EXPECT_EQ(cli({"run", data("dirichlet5.json"), "--threshold", "0.7"}).code, 2);
  EXPECT_EQ(cli({"run", data("dirichlet5.json"), "--threshold", "0.6"}).code, 0);
  const auto unk = cli({"run", data("dirichlet5.json"), "--algorithm", "grover"});
  EXPECT_EQ(unk.code, 1);
  EXPECT_NE(unk.err.find("--algorithm"), std::string::npos);
  EXPECT_EQ(cli({"run", data("missing.json")}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({"run", data("dirichlet5.json"), "--format", "xml"}).code, 1);
  // Precondition failures from the library are input errors too.
  EXPECT_EQ(cli({"run", data("bounded_z2.json"), "--algorithm", "exact-bent"}).code, 1);
}

TEST(Run, ReproducibleAndWritesOut) {
  const std::string path = ::testing::TempDir() + "abelshift_report.json";
  const auto a = cli({"run", data("eta_z3.json"), "--algorithm", "one-register", "--out", path});
  ASSERT_NE(a.code, 1) << a.err;
  EXPECT_TRUE(a.out.empty());
  const std::string first = slurp(path);
  cli({"run", data("eta_z3.json"), "--algorithm", "one-register", "--out", path});
  EXPECT_EQ(slurp(path), first);
  EXPECT_FALSE(first.empty());
  // A different seed draws different phases.
  const auto c = cli({"run", data("eta_z3.json"), "--algorithm", "one-register", "--seed", "8"});
  EXPECT_NE(c.out, first);
}

TEST(Run, QuantizedRow) {
  const auto r = cli({"run", data("dirichlet5.json"), "--quant-bits", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = json::parse(r.out);
  ASSERT_EQ(rep["runs"].size(), 2u);
  const json& q = rep["runs"][1];
  EXPECT_EQ(q["algorithm"], "approx-subset-quantized");
  EXPECT_LE(q["extras"]["error"].get<double>(), q["extras"]["bound"].get<double>());
  EXPECT_EQ(cli({"run", data("dirichlet5.json"), "--quant-bits", "-3"}).code, 1);
}

TEST(Scan, ShiftsAreCovariant) {
  const auto r = cli({"scan", data("chirp_z6.json"), "s"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "s,formula_prob,sim_prob,argmax");
  for (std::size_t s = 0; s < 6; ++s) {
    std::stringstream row(ls[s + 1]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[0], std::to_string(s));
    EXPECT_NEAR(std::stod(cells[2]), 1.0, 1e-10);
    EXPECT_EQ(cells[3], cells[0]);
  }
}

TEST(Scan, QuantizationBits) {
  const auto r = cli({"scan", data("bounded_z2.json"), "bits=6..16", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0]["bits"], 6);
  for (const auto& row : rows) EXPECT_LE(row["error"].get<double>(), row["bound"].get<double>());
  EXPECT_LT(rows[10]["error"].get<double>(), rows[0]["error"].get<double>());
  EXPECT_EQ(cli({"scan", data("bounded_z2.json"), "bits=9..3"}).code, 1);
  EXPECT_EQ(cli({"scan", data("bounded_z2.json"), "everything"}).code, 1);
}

TEST(Scan, RandomChiSeedsMatchClosedForm) {
  const auto r = cli({"scan", data("eta_z3.json"), "seeds=100", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 100u);
  double sum = 0, sq = 0;
  for (const auto& row : rows) {
    const double p = row["sim_prob"].get<double>();
    EXPECT_NEAR(p, row["formula_prob"].get<double>(), 1e-9);
    sum += p, sq += p * p;
  }
  const double mean = sum / 100.0;
  const double se = std::sqrt((sq / 100.0 - mean * mean) / 99.0);
  const double want = expected_prob_random_chi(materialize(read_instance(data("eta_z3.json"))).instance);
  EXPECT_LE(std::abs(mean - want), 4.0 * se + 1e-12);
  EXPECT_EQ(cli({"scan", data("eta_z3.json"), "seeds=5", "--algorithm", "approx-subset"}).code, 1);
}

TEST(Bent, Subcommands) {
  EXPECT_EQ(cli({"bent", "check", data("bent_z2.json")}).out, "bent: true\n");
  EXPECT_EQ(cli({"bent", "check", data("bounded_z2.json")}).out, "bent: false\n");
  EXPECT_EQ(lines(cli({"bent", "b1z3"}).out).size(), 6u);

  const auto cc = cli({"bent", "concat-check", data("z3_rank2_gram.json")});
  EXPECT_EQ(cc.code, 0) << cc.err;
  EXPECT_EQ(cc.out, "concatenated: false\n");
  const auto ct = cli({"bent", "concat-check", data("z3_two_dim.json")});
  EXPECT_EQ(ct.out.rfind("concatenated: true", 0), 0u) << ct.out << ct.err;
  EXPECT_NE(ct.out.find("t=0.36"), std::string::npos) << ct.out;

  const auto g = lines(cli({"bent", "gram", data("z3_rank2_gram.json")}).out);
  ASSERT_GE(g.size(), 3u);
  EXPECT_EQ(g[0], "member: true");
  EXPECT_EQ(g[1], "rank: 2");
  EXPECT_EQ(g[2], "eigenvalues: 0 1 2");

  EXPECT_EQ(cli({"bent", "equivalent", data("z3_two_dim.json"), data("z3_two_dim.json")}).out,
            "equivalent: true\n");
  EXPECT_EQ(cli({"bent", "equivalent", data("bent_z2.json")}).code, 1);
  EXPECT_EQ(cli({"bent", "concat-check", data("bent_z2.json")}).code, 1);
}

// The installed executable maps the same codes onto the process status.
TEST(Executable, ProcessExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string("\"") + ABELSHIFT_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("run \"" + data("dirichlet5.json") + "\""), 0);
  EXPECT_EQ(status("run \"" + data("dirichlet5.json") + "\" --threshold 0.9"), 2);
  EXPECT_EQ(status("run \"" + data("bad_length.json") + "\""), 1);
  EXPECT_EQ(status("--help"), 0);
}

}  // namespace
}  // namespace abelshift::cli
