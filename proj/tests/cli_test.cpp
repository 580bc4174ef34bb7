// Copyright 2026 The PCE Channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pce/cli.hpp"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "pce/io.hpp"

using namespace pce;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return oracle::data_path(name); }

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(cli_check, unclosed_set_is_not_a_channel) {
    const Result r = run({"check", data("q2_not_closed.json")});
    ASSERT_EQ(r.code, kExitDomainFailure);
    ASSERT_NE(r.out.find("is_channel: false"), std::string::npos);
    ASSERT_NE(r.out.find("witness: 02 + 10 = 12"), std::string::npos);
    const Result j = run({"check", data("q2_not_closed.json"), "--format", "json"});
    const auto doc = io::Json::parse(j.out);
    ASSERT_EQ(doc["witness"]["pair"], io::Json::array({"02", "10"}));
    ASSERT_EQ(doc["witness"]["missing_sum"], "12");
    ASSERT_EQ(doc["oracle"]["agrees"], true);
}

TEST(cli_check, identity_channel) {
    const Result r = run({"--format", "json", "check", data("q2_identity.json")});
    ASSERT_EQ(r.code, kExitOk);
    const auto doc = io::Json::parse(r.out);
    ASSERT_EQ(doc["is_channel"], true);
    ASSERT_EQ(doc["K"], 4);
    ASSERT_EQ(doc["popcount"], 16);
    ASSERT_EQ(doc["lambda_sum"], 4.0);
}

TEST(cli_check, bloch_disk_map) {
    const Result r = run({"check", data("q1_bloch_disk.json"), "--format", "json"});
    ASSERT_EQ(r.code, kExitDomainFailure);
    const auto doc = io::Json::parse(r.out);
    ASSERT_EQ(doc["is_channel"], false);
    ASSERT_EQ(doc["is_pce"], true);
    ASSERT_EQ(doc["lambda_min"], -0.5);
    ASSERT_EQ(doc["oracle"]["completely_positive"], false);
}

TEST(cli_check, large_and_non_trace_preserving) {
    const Result big = run({"check", data("n4_identity.json"), "--format", "json"});
    const auto doc = io::Json::parse(big.out);
    ASSERT_EQ(big.code, kExitDomainFailure);
    ASSERT_FALSE(doc.contains("spectrum"));
    ASSERT_FALSE(doc.contains("oracle"));
    ASSERT_TRUE(doc.contains("lambda_min"));
    const std::string no_trace = write_temp("no_trace.json", R"({"n": 1, "preserved": ["3"]})");
    const Result r = run({"check", no_trace, "--format", "json"});
    ASSERT_EQ(r.code, kExitDomainFailure);
    ASSERT_EQ(io::Json::parse(r.out)["is_pce"], false);
    const std::string wide = write_temp("wide.json", R"({"n": 16, "basis": []})");
    const Result w = run({"check", wide});
    ASSERT_EQ(w.code, kExitOk);
    ASSERT_NE(w.out.find("K: 0"), std::string::npos);
}

TEST(cli_check, malformed_input_is_a_usage_error) {
    ASSERT_EQ(run({"check", write_temp("bad.json", "{not json")}).code, kExitUsage);
    ASSERT_EQ(run({"check", write_temp("bad2.json", R"({"n": 1, "preserved": ["7"]})")}).code, kExitUsage);
    ASSERT_EQ(run({"check", "/nonexistent.json"}).code, kExitUsage);
    ASSERT_EQ(run({"check"}).code, kExitUsage);
    ASSERT_EQ(run({}).code, kExitUsage);
    ASSERT_EQ(run({"frobnicate"}).code, kExitUsage);
    ASSERT_EQ(run({"--format", "yaml", "census", "1"}).code, kExitUsage);
    ASSERT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli_census, tables) {
    const Result one = run({"census", "1"});
    ASSERT_EQ(one.code, kExitOk);
    ASSERT_EQ(one.out,
              "    K  formula  enumerated\n"
              "    0        1           1\n"
              "    1        3           3\n"
              "    2        1           1\n"
              "total        5           5\n"
              "symmetric: yes\n"
              "formula matches enumeration: yes\n");
    const auto two = io::Json::parse(run({"census", "2", "--format", "json"}).out);
    std::vector<std::string> counts;
    for (const auto& row : two["rows"]) {
        counts.push_back(row["formula"]);
        ASSERT_EQ(row["formula"], row["enumerated"]);
    }
    ASSERT_EQ(counts, (std::vector<std::string>{"1", "15", "35", "15", "1"}));
    const auto three = io::Json::parse(run({"census", "3", "--format", "json"}).out);
    ASSERT_EQ(three["total"], "2825");
    ASSERT_EQ(three["formula_matches_enumeration"], true);
    const auto big = io::Json::parse(run({"census", "16", "--format", "json"}).out);
    ASSERT_FALSE(big.contains("formula_matches_enumeration"));
    ASSERT_EQ(big["symmetric"], true);
    ASSERT_EQ(run({"census", "17"}).code, kExitUsage);
    ASSERT_EQ(run({"census", "0"}).code, kExitUsage);
}

TEST(cli_diagram, goldens_and_determinism) {
    for (const char* name : {"q1_identity", "q1_dephasing", "q1_depolarizing", "q1_bloch_disk", "q2_depolarizing", "q2_four_components", "q2_generator_10", "q2_generator_32", "q2_generator_22", "q2_identity"}) {
        const std::string input = data(std::string(name) + ".json");
        const Result a = run({"diagram", input});
        ASSERT_EQ(a.code, kExitOk);
        ASSERT_EQ(a.out, oracle::slurp(oracle::golden_path(std::string(name) + ".txt"))) << name;
        ASSERT_EQ(run({"diagram", input}).out, a.out);
        const Result svg = run({"diagram", input, "--style", "svg"});
        ASSERT_EQ(svg.out, oracle::slurp(oracle::golden_path(std::string(name) + ".svg"))) << name;
    }
    const Result big = run({"diagram", data("n4_identity.json")});
    ASSERT_EQ(big.code, kExitUsage);
    ASSERT_NE(big.err.find("JSON"), std::string::npos);
    ASSERT_EQ(run({"diagram", data("q1_identity.json"), "--style", "png"}).code, kExitUsage);
}

TEST(cli_decompose, examples) {
    const Result id = run({"decompose", data("q2_identity.json")});
    ASSERT_EQ(id.code, kExitOk);
    ASSERT_EQ(id.out, "generators (0):\nrecompose check: OK\n");
    const auto b = io::Json::parse(run({"decompose", data("q2_four_components.json"), "--format", "json"}).out);
    ASSERT_EQ(b["generators"].size(), 2u);
    ASSERT_EQ(b["recompose_check"], "OK");
    const auto dep = io::Json::parse(run({"decompose", data("q2_depolarizing.json"), "--format", "json"}).out);
    ASSERT_EQ(dep["generators"].size(), 4u);
    const Result bad = run({"decompose", data("q2_not_closed.json")});
    ASSERT_EQ(bad.code, kExitDomainFailure);
    ASSERT_NE(bad.err.find("02 + 10 = 12"), std::string::npos);
}

TEST(cli_evolve, trajectory) {
    const std::string process = data("process_two_term.json");
    const std::string state = data("state_plus_plus.json");
    const Result zero = run({"evolve", process, state, "--time", "0", "--steps", "1"});
    ASSERT_EQ(zero.code, kExitOk);
    std::istringstream lines(zero.out);
    std::string header, first, second, last;
    std::getline(lines, header);
    std::getline(lines, first);
    std::getline(lines, second);
    std::getline(lines, last);
    ASSERT_EQ(header.substr(0, 14), "t,r_00,r_01,r_");
    ASSERT_EQ(first, "0,1,1,0,0,1,1,0,0,0,0,0,0,0,0,0,0");
    ASSERT_EQ(second, first);
    ASSERT_EQ(last, "# fixed_point_distance=1");

    const auto doc = io::Json::parse(run({"evolve", process, state, "--time", "60", "--steps", "30", "--format", "json"}).out);
    ASSERT_LT(doc["fixed_point_distance"].get<double>(), 1e-10);
    ASSERT_EQ(doc["fixed_point"]["11"], 0.0);
    ASSERT_EQ(doc["fixed_point"]["00"], 1.0);
    double previous = 2;
    for (const auto& row : doc["samples"]) {
        const double r11 = row["r"]["11"];
        ASSERT_LT(r11, previous);
        previous = r11;
    }
    ASSERT_EQ(run({"evolve", process, state, "--time", "-1"}).code, kExitUsage);
    ASSERT_EQ(run({"evolve", process, data("q1_identity.json"), "--time", "1"}).code, kExitUsage);
    ASSERT_EQ(run({"evolve", process, state}).code, kExitUsage);
}

TEST(cli_collide, schedule) {
    const std::string state = data("state_plus_plus.json");
    const Result r = run({"collide", state, "--schedule", "03,33"});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_EQ(r.out.substr(0, 8), "index,r\n");
    ASSERT_NE(r.out.find("\n00,1\n"), std::string::npos);
    ASSERT_NE(r.out.find("\n11,0\n"), std::string::npos);
    ASSERT_EQ(r.out, run({"collide", state, "--schedule", "33,03"}).out);
    ASSERT_EQ(run({"collide", state, "--schedule", "3"}).code, kExitUsage);
    ASSERT_EQ(run({"collide", state, "--schedule", "0x"}).code, kExitUsage);
}

TEST(cli_verify, exhaustive_and_sampled) {
    ASSERT_EQ(run({"verify", "1", "--exhaustive"}).out, "maps checked: 8\ncompletely positive: 5\ndisagreements: 0\n");
    const Result two = run({"verify", "2", "--exhaustive"});
    ASSERT_EQ(two.code, kExitOk);
    ASSERT_EQ(two.out, "maps checked: 32768\ncompletely positive: 67\ndisagreements: 0\n");
    const Result sampled = run({"verify", "3", "--samples", "200", "--seed", "5", "--format", "json"});
    ASSERT_EQ(sampled.code, kExitOk);
    ASSERT_EQ(io::Json::parse(sampled.out)["disagreements"], 0);
    ASSERT_EQ(sampled.out, run({"verify", "3", "--samples", "200", "--seed", "5", "--format", "json"}).out);
    ASSERT_EQ(run({"verify", "3", "--exhaustive"}).code, kExitUsage);
    ASSERT_EQ(run({"verify", "2"}).code, kExitUsage);
    ASSERT_EQ(run({"verify", "4", "--samples", "3"}).code, kExitUsage);
}
