// Copyright 2026 The QPA Calculator Authors
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


#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qpa");
    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = qpa::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result &r) {
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, SectorExamples) {
    Result a = run({"sector", "--shape", "2,0", "--k", "1", "--m", "2", "--spectrum", "3/4,1/4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(parse(a)["fidelity"], "9/13");
    Result b = run({"sector", "--shape", "1,1", "--k", "1", "--m", "1", "--spectrum", "1/2,1/2"});
    ASSERT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("p_k differs"), std::string::npos);
    Result c = run({"sector", "--shape", "1,1", "--k", "1", "--m", "1", "--spectrum", "2/3,1/3"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(parse(c)["fidelity"], "1/2");
}

TEST(Cli, SectorDecimalsAreExact) {
    Result a = run({"sector", "--shape", "2,0", "--m", "2", "--spectrum", "0.75,0.25"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(parse(a)["fidelity"], "9/13");
    EXPECT_EQ(parse(a)["spectrum"][0], "3/4");
}

TEST(Cli, SectorFloatMode) {
    Result a = run({"sector", "--shape", "2,0", "--m", "2", "--spectrum", "3/4,1/4", "--float"});
    ASSERT_EQ(a.code, 0);
    EXPECT_NEAR(parse(a)["fidelity"].get<double>(), 9.0 / 13.0, 1e-15);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"sector", "--shape", "2,0", "--m", "2"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    Result bad = run({"sector", "--shape", "2,0", "--spectrum", "3/4,x"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("column 5"), std::string::npos) << bad.err;
    Result strip = run({"sector", "--shape", "1,1", "--removal", "1,0", "--spectrum", "3/4,1/4"});
    EXPECT_EQ(strip.code, 2);
    EXPECT_NE(strip.err.find("admissible"), std::string::npos);
    EXPECT_EQ(run({"overall", "--n", "1", "--m", "2", "--spectrum", "3/4,1/4"}).code, 2);
}

TEST(Cli, OverallExamples) {
    Result a = run({"overall", "--n", "1", "--m", "1", "--k", "2", "--spectrum", "1/2,1/3,1/6"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(parse(a)["overall"], "1/3");
    Result b = run({"overall", "--n", "2", "--m", "1", "--spectrum", "3/4,1/4", "--sectors"});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(parse(b)["overall"], "3/4");
    EXPECT_EQ(parse(b)["sectors"].size(), 2u);
    Result c = run({"overall", "--n", "2", "--m", "4", "--spectrum", "1,0,0", "--allow-cloning"});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_EQ(parse(c)["overall"], "2/5");
}

TEST(Cli, Asymptote) {
    Result a = run({"asymptote", "--spectrum", "3/4,1/4", "--n", "100", "--rate", "0.25"});
    ASSERT_EQ(a.code, 0) << a.err;
    auto j = parse(a);
    EXPECT_NEAR(j["intensive_risk"].get<double>(), 0.01, 1e-15);
    EXPECT_NEAR(j["extensive_fidelity"].get<double>(), 0.8, 1e-12);
    EXPECT_FALSE(j["all_site_bound"]["valid"].get<bool>());
}

TEST(Cli, PhaseDiagramCsv) {
    Result a = run({"phase-diagram", "--family", "depolarized", "--d", "3", "--k", "1"});
    ASSERT_EQ(a.code, 0) << a.err;
    std::istringstream lines(a.out);
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "lambda,R,fidelity,phase");
    long rows = 0;
    for (std::string line; std::getline(lines, line);) {
        rows++;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3) << line;
    }
    // lambda = 1 is the maximally mixed state and is skipped.
    EXPECT_EQ(rows, 20 * 20);
    EXPECT_NE(a.err.find("skipped"), std::string::npos);
    Result inf = run({"phase-diagram", "--d", "inf", "--mode", "one", "--format", "json"});
    ASSERT_EQ(inf.code, 0) << inf.err;
    EXPECT_EQ(parse(inf).size(), 21u * 20u);
}

TEST(Cli, VerifyExitCodesAndDeterminism) {
    Result a = run({"verify", "--suite", "f-symbols", "--max-n", "7"});
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(parse(a)["passed"].get<bool>());
    Result b = run({"verify", "--suite", "monotonicity", "--cases", "200", "--seed", "7"});
    Result c = run({"verify", "--suite", "monotonicity", "--cases", "200", "--seed", "7", "--workers", "3"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, c.out);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
}
