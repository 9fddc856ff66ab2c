/*
 * Copyright 2026 The orbitcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"

using namespace orbitcode;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "orbitcode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("orbitcode_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(CodeFile, RoundTrip) {
  CounterRng rng(103);
  for (int i = 0; i < 20; ++i) {
    const LinearCode c = testutil::random_code(5 + rng.uniform(60), rng.uniform(8), rng);
    EXPECT_EQ(io::code_from_string(io::code_to_string(c)), c);
  }
  const LinearCode e = ebch(5, 1, Field(5));
  EXPECT_EQ(io::code_from_string(io::code_to_string(e)), e);
}

TEST(CodeFile, RejectsMalformedInput) {
  EXPECT_THROW(io::code_from_string("L=7 domain=nonzero rank=2\n7f\n"), ParseError);
  EXPECT_THROW(io::code_from_string("L=7 domain=nonzero rank=2\n7f\n7f\n"), ParseError);
  EXPECT_THROW(io::code_from_string("L=7 domain=elsewhere rank=0\n"), ParseError);
  EXPECT_THROW(io::code_from_string("L=7 domain=nonzero rank=1\nzz\n"), ParseError);
  const LinearCode ok = io::code_from_string("# comment\nL=7 domain=nonzero rank=1\n7f\n");
  EXPECT_EQ(ok.rank(), 1u);
}

TEST(Certificate, JsonRoundTrip) {
  for (unsigned n : {3u, 5u}) {
    const Field f(n);
    for (BchFlavor fl : {BchFlavor::Cyclic, BchFlavor::Extended}) {
      const LinearCode target = bch({n, 1, fl}, f);
      const auto r = find_single_orbit_generator(target, 4, group_of(fl), f);
      ASSERT_TRUE(r.certificate);
      const auto j = io::certificate_to_json(*r.certificate, f);
      const auto [back, g] = io::certificate_from_json(j);
      EXPECT_EQ(back.generator, r.certificate->generator);
      EXPECT_EQ(back.kind, r.certificate->kind);
      EXPECT_EQ(back.k, r.certificate->k);
      EXPECT_EQ(g.modulus(), f.modulus());
      EXPECT_TRUE(reverify(back, target, g));
      EXPECT_EQ(io::certificate_to_json(back, g).dump(), j.dump());
    }
  }
}

TEST(Certificate, FieldMismatchRejected) {
  const Field f(3);
  const auto r = find_single_orbit_generator(bch({3, 1}, f), 4, GroupKind::Cyclic, f);
  auto j = io::certificate_to_json(*r.certificate, f);
  j["field"]["modulus_hex"] = "d";
  EXPECT_ANY_THROW(io::certificate_from_json(j));
}

TEST_F(CliTest, BuildFamilies) {
  auto r = invoke({"build", "dual-bch", "--n", "3", "--t", "1", "-o", path("d.code")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli::load_code(path("d.code")).rank(), 4u);
  r = invoke({"build", "trace-code", "--n", "3", "--degrees", "1,7", "--domain", "nonzero", "-o", path("t.code")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli::load_code(path("t.code")), cli::load_code(path("d.code")));
  r = invoke({"build", "trace-code", "--n", "3", "--degrees", "9"});
  EXPECT_EQ(r.code, cli::kDataError);
  EXPECT_NE(r.err.find("exceeds N-1"), std::string::npos);
  r = invoke({"build", "ebch", "--n", "5", "--t", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::code_from_string(r.out).rank(), 26u);
  EXPECT_EQ(invoke({"build", "nonsense"}).code, cli::kUsage);
}

TEST_F(CliTest, FindOrbitExitCodes) {
  ASSERT_EQ(invoke({"build", "bch", "--n", "3", "--t", "1", "-o", path("b3.code")}).code, 0);
  ASSERT_EQ(invoke({"build", "bch", "--n", "5", "--t", "1", "-o", path("b5.code")}).code, 0);
  auto r = invoke({"find-orbit", "--code", path("b3.code"), "--k-max", "4", "-o", path("c.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("c.json")));
  EXPECT_EQ(invoke({"find-orbit", "--code", path("b3.code"), "--k-max", "3"}).code, cli::kRefuted);
  EXPECT_EQ(invoke({"find-orbit", "--code", path("b5.code"), "--exhaustive-limit", "0", "--budget", "0"}).code, cli::kBudget);
  EXPECT_EQ(invoke({"find-orbit", "--code", path("missing.code")}).code, cli::kNoInput);
}

TEST_F(CliTest, VerifyAndTest) {
  ASSERT_EQ(invoke({"build", "bch", "--n", "5", "--t", "1", "-o", path("b.code")}).code, 0);
  ASSERT_EQ(invoke({"build", "dual-bch", "--n", "5", "--t", "1", "-o", path("d.code")}).code, 0);
  ASSERT_EQ(invoke({"find-orbit", "--code", path("b.code"), "-o", path("c.json")}).code, 0);
  auto r = invoke({"verify", "--cert", path("c.json"), "--code", path("b.code")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["intersection_rank"], 25);
  EXPECT_EQ(invoke({"verify", "--cert", path("c.json"), "--code", path("d.code")}).code, cli::kVerifyFailed);

  auto j = nlohmann::json::parse(cli::read_file(path("c.json")));
  auto gen = Codeword::from_hex(DomainKind::Nonzero, 31, j["generator_hex"].get<std::string>());
  gen.flip(gen.support().front());
  j["generator_hex"] = gen.to_hex();
  cli::write_file(path("bad.json"), j.dump());
  EXPECT_EQ(invoke({"verify", "--cert", path("bad.json"), "--code", path("b.code")}).code, cli::kVerifyFailed);

  r = invoke({"--format", "text", "test", "--word", "00000000", "--cert", path("c.json"), "--code", path("d.code"),
              "--trials", "0", "--exact"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "accept, p_reject = 0\n");
  r = invoke({"test", "--word", "00000001", "--cert", path("c.json"), "--exact", "--trials", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = nlohmann::json::parse(r.out)["result"];
  EXPECT_EQ(t["verdict"], "reject");
  EXPECT_LE(t["max_queries"].get<int>(), t["k"].get<int>());
}

TEST_F(CliTest, SoundnessCharsumCountDegreesProfile) {
  ASSERT_EQ(invoke({"build", "dual-bch", "--n", "3", "--t", "1", "-o", path("d.code")}).code, 0);
  ASSERT_EQ(invoke({"build", "bch", "--n", "3", "--t", "1", "-o", path("b.code")}).code, 0);
  ASSERT_EQ(invoke({"find-orbit", "--code", path("d.code"), "--k-max", "7", "-o", path("c.json")}).code, 0);
  auto r = invoke({"--format", "csv", "soundness", "--cert", path("c.json"), "--code", path("b.code")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("distance,relative_distance"), std::string::npos);

  r = invoke({"--format", "text", "charsum", "--n", "3", "--poly", "1*x^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");  // x -> x^3 permutes GF(8) since gcd(3, 7) = 1
  r = invoke({"charsum", "--n", "5", "--poly", "1*x^3 + 2*x^5", "--epsilon", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["result"]["conditions"]["all_pass"].get<bool>());

  r = invoke({"count", "--code", path("b.code"), "--k", "3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = nlohmann::json::parse(r.out)["result"]["rows"];
  EXPECT_EQ(rows[0]["exact"], "7");  // weight-3 words of the [7,4] dual

  r = invoke({"--format", "text", "degrees", "--code", path("d.code")});
  EXPECT_EQ(r.out, "1,7\n");
  r = invoke({"profile", "--code", path("d.code")});
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["min_weight"], 3);
}

TEST_F(CliTest, OutputIsReproducible) {
  ASSERT_EQ(invoke({"build", "bch", "--n", "5", "--t", "2", "-o", path("b.code")}).code, 0);
  const auto a = invoke({"find-orbit", "--code", path("b.code"), "--t", "2"});
  const auto b = invoke({"--jobs", "4", "find-orbit", "--code", path("b.code"), "--t", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = invoke({"find-orbit", "--code", path("b.code"), "--t", "2"});
  EXPECT_EQ(a.out, c.out);
}
