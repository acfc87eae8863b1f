// Copyright 2026 The cpc-codes Authors
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


#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpc/circuit.h"
#include "cpc/code.h"
#include "cpc/fixtures.h"
#include "cpc/logical.h"
#include "cpc/stabilizers.h"

namespace cpc::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
  return std::string(CPC_FIXTURES_DIR) + "/" + name;
}

fs::path scratch_dir(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("cpc_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path &p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, NoArgumentsPrintsUsage) {
  Outcome r = run_cli({});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE((r.out + r.err).find("verify"), std::string::npos);
}

TEST(Cli, UnknownSubcommandOrFlag) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"verify", fixture("11-3-3.cpc"), "--bogus"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"verify"}).code, kExitInputError);
}

TEST(Cli, MissingOrMalformedFile) {
  Outcome r = run_cli({"verify", "/nonexistent/code.cpc"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  fs::path dir = scratch_dir("bad");
  std::ofstream(dir / "bad.cpc") << "CPC split\ndata 1\nbit 1\nphase 0\nB\n1a\n";
  r = run_cli({"verify", (dir / "bad.cpc").string()});
  EXPECT_EQ(r.code, kExitInputError);
}

TEST(Cli, VerifyCorrectingCode) {
  Outcome r = run_cli({"verify", fixture("11-3-3.cpc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "single-error correcting: yes, distance: 3\n");
}

TEST(Cli, VerifyDegenerateCodePrintsCertificate) {
  Outcome r = run_cli({"verify", fixture("11-3-1.cpc")});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.out.find("single-error correcting: no"), std::string::npos);
  EXPECT_NE(r.out.find("Z b1 ~ Z b2 -> {p4}"), std::string::npos) << r.out;
}

TEST(Cli, VerifyOtherFixtures) {
  EXPECT_EQ(run_cli({"verify", fixture("10-3-3.cpc")}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", fixture("12-4-3.cpc")}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", fixture("6-3-1.cpc")}).code, kExitFailed);
  Outcome r = run_cli({"verify", fixture("11-3-3-cnot.cpc"), "--cnot", "cnot:1,2", "--effective"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("cnot-compatible: yes"), std::string::npos);
  EXPECT_NE(r.out.find("bit code"), std::string::npos);
  EXPECT_NE(r.out.find("phase code"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", fixture("11-3-3.cpc"), "--cnot", "cnot:1,9"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"verify", fixture("11-3-3.cpc"), "--cnot", "1,2"}).code, kExitInputError);
}

TEST(Cli, Stabilizers) {
  Outcome r = run_cli({"stabilizers", fixture("11-3-3.cpc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Z d1 d2 b1 p2 p4\n"), std::string::npos);
  EXPECT_NE(r.out.find("X b1 b2 b3 b4 p4\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  r = run_cli({"stabilizers", fixture("11-3-3.cpc"), "--symplectic"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("G_Z\n", 0), 0u);
  EXPECT_NE(r.out.find("G_X\n"), std::string::npos);
}

TEST(Cli, LogicalsAndDistance) {
  Outcome r = run_cli({"logicals", fixture("11-3-3.cpc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("X1: "), std::string::npos);
  EXPECT_NE(r.out.find("Z3: "), std::string::npos);
  EXPECT_EQ(run_cli({"distance", fixture("12-4-3.cpc")}).out, "distance: 3\n");
  EXPECT_EQ(run_cli({"distance", fixture("11-3-3.cpc"), "--max-weight", "2"}).out, "distance: >2\n");
}

TEST(Cli, ErrorTable) {
  Outcome r = run_cli({"error-table", fixture("11-3-3.cpc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("error\tsyndrome\tclass\n", 0), 0u);
  EXPECT_NE(r.out.find("X d1\t10100000\tharmful\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Z d3\t00000110\tharmful\n"), std::string::npos) << r.out;
}

TEST(Cli, DecodeTable) {
  Outcome r = run_cli({"decode-table", fixture("11-3-3.cpc")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("error\tsyndrome\tclass\tcorrection\n", 0), 0u);
  EXPECT_NE(r.out.find("\tcorrected\t"), std::string::npos);
  r = run_cli({"decode-table", fixture("11-3-1.cpc")});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_NE(r.err.find("{p4}"), std::string::npos);
  EXPECT_EQ(run_cli({"decode-table", fixture("11-3-1.cpc"), "--best-effort"}).code, kExitOk);
}

TEST(Cli, CssConversions) {
  Outcome r = run_cli({"css-to-cpc", fixture("steane.css")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("# input columns in qubit order: ", 0), 0u);
  CpcCode code = std::get<CpcCode>(parse_code(r.out));
  EXPECT_EQ(code.k, 1u);
  EXPECT_EQ(code_distance(code, 3), std::optional<size_t>(3));

  r = run_cli({"cpc-to-css", fixture("11-3-3.cpc")});
  ASSERT_EQ(r.code, kExitOk);
  CssCode css = parse_css(r.out);
  EXPECT_EQ(css.g_z.rows() + css.g_x.rows(), 8u);
  EXPECT_EQ(run_cli({"cpc-to-css", fixture("10-3-3.cpc")}).code, kExitInputError);
}

TEST(Cli, Ising) {
  Outcome r = run_cli({"ising", fixture("6-3-1.cpc"), "--syndrome", "000", "--species", "bit"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("field 0 "), std::string::npos);
  EXPECT_NE(r.out.find("bit errors: none\ncheck errors: none\n"), std::string::npos);
  r = run_cli({"ising", fixture("6-3-1.cpc"), "--syndrome", "0101", "--species", "bit"});
  EXPECT_EQ(r.code, kExitInputError);
  r = run_cli({"ising", fixture("6-3-1.cpc"), "--syndrome", "000", "--p", "1.5"});
  EXPECT_EQ(r.code, kExitInputError);
}

TEST(Cli, SimulateAndFit) {
  fs::path dir = scratch_dir("sim");
  std::vector<std::string> args = {"--seed", "4", "simulate", fixture("6-3-1.cpc"), "--eps-bit", "0.05",
                                   "--eps-phase", "0.02", "--rate", "10", "--t-max", "100", "--samples", "11",
                                   "--trials", "50"};
  Outcome a = run_cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out.rfind("time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err\n", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 12);
  EXPECT_EQ(run_cli(args).out, a.out);

  std::string csv = (dir / "run.csv").string();
  args.insert(args.begin(), {"--out", csv});
  ASSERT_EQ(run_cli(args).code, kExitOk);
  EXPECT_EQ(slurp(csv), a.out);
  Outcome f = run_cli({"fit", csv});
  EXPECT_EQ(f.code, kExitOk) << f.err;
  EXPECT_EQ(f.out.rfind("lambda_half: ", 0), 0u);
  EXPECT_NE(f.out.find("F_inf: "), std::string::npos);
  EXPECT_EQ(run_cli({"fit", csv, "--column", "Fplus"}).code, kExitOk);
  EXPECT_EQ(run_cli({"fit", csv, "--column", "F9"}).code, kExitInputError);

  EXPECT_EQ(run_cli({"simulate", fixture("6-3-1.cpc"), "--engine", "statevector", "--trials", "5", "--samples",
                     "3", "--t-max", "1", "--rate", "10"})
                .code,
            kExitOk);
  EXPECT_EQ(run_cli({"simulate", fixture("6-3-1.cpc"), "--engine", "magic"}).code, kExitInputError);
}

TEST(Cli, FitFlagsConstantSeries) {
  fs::path dir = scratch_dir("fit");
  std::string csv = (dir / "flat.csv").string();
  std::ofstream(csv) << "time_s,F0,F0_err,Fplus,Fplus_err,Frand,Frand_err\n"
                        "0,1,0,1,0,1,0\n1,1,0,1,0,1,0\n2,1,0,1,0,1,0\n3,1,0,1,0,1,0\n";
  Outcome r = run_cli({"fit", csv});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lambda_half: inf s\n"), std::string::npos);
  EXPECT_NE(r.out.find("degenerate: constant series\n"), std::string::npos);
}

TEST(Cli, SearchWritesCodes) {
  fs::path dir = scratch_dir("search");
  std::vector<std::string> args = {"--seed", "3", "--out", dir.string(), "search", "--data", "1", "--bit", "4",
                                   "--phase", "4", "--budget", "3000"};
  Outcome r = run_cli(args);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("trials: 3000, successes: ", 0), 0u);
  size_t files = 0;
  for (const auto &entry : fs::directory_iterator(dir)) {
    AnyCode code = load_code_file(entry.path().string());
    EXPECT_EQ(std::get<CpcCode>(code).k, 1u);
    files++;
  }
  EXPECT_GT(files, 0u);
  EXPECT_NE(r.out.find("written: " + std::to_string(files) + "\n"), std::string::npos);

  args.insert(args.begin(), {"--threads", "3"});
  EXPECT_EQ(run_cli(args).out, r.out);
}

TEST(Cli, SearchWithoutSuccessExitsOne) {
  Outcome r = run_cli({"search", "--data", "3", "--bit", "4", "--phase", "4", "--budget", "0"});
  EXPECT_EQ(r.code, kExitFailed);
  EXPECT_EQ(r.out, "trials: 0, successes: 0, success rate: 0, written: 0\n");
  EXPECT_EQ(run_cli({"search", "--data", "2", "--bit", "4", "--phase", "4", "--budget", "10", "--require",
                     "cnot:1,3"})
                .code,
            kExitInputError);
}

TEST(Cli, LogicalGatesAndCircuits) {
  CpcCode c = fixtures::code_11_3_3();
  Outcome r = run_cli({"logical-h", fixture("11-3-3.cpc"), "--qubit", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_circuit(r.out, c.qubit_count()), logical_hadamard_circuit(c, 0));
  EXPECT_EQ(run_cli({"logical-h", fixture("11-3-3.cpc"), "--qubit", "0"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"logical-h", fixture("11-3-3.cpc"), "--qubit", "4"}).code, kExitInputError);

  r = run_cli({"logical-cnot", fixture("11-3-3.cpc"), "--control", "1", "--target", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_circuit(r.out, c.qubit_count()), logical_cnot_circuit(c, 0, 1));
  EXPECT_EQ(run_cli({"logical-cnot", fixture("11-3-3.cpc"), "--control", "2", "--target", "2"}).code,
            kExitInputError);

  r = run_cli({"emit-circuit", fixture("11-3-3.cpc")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(parse_circuit(r.out, c.qubit_count()), encode_circuit(c));
  EXPECT_NE(r.out.find("CNOT 0 3\n"), std::string::npos);
  r = run_cli({"emit-circuit", fixture("11-3-3.cpc"), "--decode"});
  EXPECT_EQ(parse_circuit(r.out, c.qubit_count()), decode_circuit(c));
}

}  // namespace
}  // namespace cpc::cli
