// Copyright 2026 The Tangle Authors
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tangle/cli.hpp"

using namespace tangle;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tangle");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tangle_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("eval prints value, modulus and degree") {
  const Result r = run({"eval", "--filter", "F4_2", "--state", "phi1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("modulus: 9.99999999999") + r.out.find("modulus: 1.0000000000") !=
        2 * std::string::npos);
  CHECK(r.out.find("degree: 8") != std::string::npos);
  CHECK(r.err.find("tangle 0.1.0") != std::string::npos);
  CHECK(r.err.find("seed=") != std::string::npos);

  const Result j = run({"eval", "--filter", "F4_1", "--state", "phi5", "--json", "--method", "brute"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["modulus"].get<double>() == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(doc["run"]["version"] == kVersion);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "--filter", "F4_2"}).code == 2);
  CHECK(run({"eval", "--filter", "F4_2", "--state", "phi1", "--bogus"}).code == 2);
  CHECK(run({"eval", "--filter", "NOPE", "--state", "phi1"}).code == 2);
  CHECK(run({"eval", "--filter", "F4_2", "--state", "nope"}).code == 2);
  CHECK(run({"eval", "--filter", "F4_2", "--state", "ghz3"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"concurrence"}).code == 2);
  CHECK(run({"eval", "--filter", "F2_1", "--state", "bell", "--kernel", "neon"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("table csv columns and rows") {
  const Result r = run({"table", "--format", "csv"});
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "filter,state,length,computed_re,computed_im,computed_abs,expected_abs,abs_error");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3 * 3 + 4 * 4 + 2 * 7);
}

TEST_CASE("table md shows the length-5 row") {
  const Result r = run({"table"});
  const auto pos = r.out.find("| 5 |");
  REQUIRE(pos != std::string::npos);
  const std::string row = r.out.substr(pos, r.out.find('\n', pos) - pos);
  CHECK(row.find("0.888888888889 (8/9)") != std::string::npos);
  CHECK(row.find("0.263374485597 (64/243)") != std::string::npos);
}

TEST_CASE("table json: every mismatch is on the length-7 F6_2 entry") {
  const Result r = run({"table", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  int matched = 0;
  for (const auto& row : doc["rows"]) {
    if (row["informational"].get<bool>()) continue;
    if (row["match"].get<bool>()) {
      ++matched;
    } else {
      CHECK(row["filter"] == "F6_2");
      CHECK(row["length"] == 7);
    }
  }
  CHECK(matched >= 3 * 3 + 4 * 4 + 2 * 6 - 2);
  CHECK(r.code == (doc["pass"].get<bool>() ? 0 : 1));
}

TEST_CASE("checks") {
  const Result p = run({"check", "product", "--filter", "F6_1", "--samples", "500", "--seed", "7"});
  CHECK(p.code == 0);
  const auto doc = nlohmann::json::parse(p.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["seed"] == 7);

  const Result s = run({"check", "slocc", "--filter", "F3_1", "--samples", "20", "--seed", "3"});
  CHECK(s.code == 0);
  const Result q = run({"check", "perm", "--filter", "F3_2", "--state", "w3"});
  CHECK(q.code == 0);
  const Result bad = run({"check", "perm", "--filter", "F3_2", "--state", "bell"});
  CHECK(bad.code == 2);
}

TEST_CASE("output is byte-identical for identical argv") {
  const std::vector<std::string> argv = {"check", "slocc", "--filter", "F4_3", "--samples", "10",
                                         "--seed", "11"};
  CHECK(run(argv).out == run(argv).out);
  CHECK(run({"table", "--format", "csv"}).out == run({"table", "--format", "csv"}).out);
}

TEST_CASE("TANGLE_SEED fallback") {
  ::setenv("TANGLE_SEED", "123", 1);
  const Result r = run({"check", "product", "--filter", "F2_1", "--samples", "5"});
  CHECK(nlohmann::json::parse(r.out)["seed"] == 123);
  ::setenv("TANGLE_SEED", "abc", 1);
  CHECK(run({"check", "product", "--filter", "F2_1", "--samples", "5"}).code == 2);
  ::unsetenv("TANGLE_SEED");
}

TEST_CASE("classify, concurrence, tangle3") {
  const Result c = run({"classify", "--state", "phi4"});
  CHECK(c.code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["condition_i"]["pass"] == true);
  CHECK(doc["condition_ii_p2"]["pairs"].size() == 6);

  const Result conc = run({"concurrence", "--state", "bell"});
  CHECK(conc.code == 0);
  CHECK(nlohmann::json::parse(conc.out)["pure_value"].get<double>() == doctest::Approx(1.0));

  const std::string rho = write_temp("werner.rho",
                                     "qubits: 2\n0 0 0.25 0\n1 1 0.25 0\n2 2 0.25 0\n3 3 0.25 0\n");
  const Result m = run({"concurrence", "--rho", "@" + rho});
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out)["mixed_value"].get<double>() == 0.0);

  const Result t = run({"tangle3", "--state", "ghz3"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["via_cayley"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("state and filter files") {
  const std::string st = write_temp("bell.state", "qubits: 2\n00 1 0\n11 1 0\n");
  const std::string fl = write_temp(
      "two.flt",
      "filter A { qubits: 2; prefactor: 1/1; block [y, y] }\n"
      "filter B { qubits: 2; prefactor: 1/3; block [m, n] block [^m, ^n] }\n");
  CHECK(run({"eval", "--filter", "@" + fl, "--state", "@" + st}).code == 2);
  const Result r = run({"eval", "--filter", "@" + fl + ":B", "--state", "@" + st, "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["modulus"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("parse subcommand") {
  const std::string good = write_temp("good.flt", "filter G { qubits: 2; prefactor: 2/6; block [y, y] }\n");
  const Result ok = run({"parse", "@" + good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("prefactor: 1/3") != std::string::npos);

  const std::string bad = write_temp("bad.flt", "filter G { qubits: 2; prefactor: 1/1;\n block [m, y]\n block [y, y]\n}\n");
  const Result no = run({"parse", "@" + bad});
  CHECK(no.code == 1);
  CHECK(no.err.find(":2:9: UnpairedLabel") != std::string::npos);
}
