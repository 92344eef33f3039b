// Copyright 2026 The swapchain Authors
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

#include "swapchain/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "swapchain/chain_spec.h"

using namespace swapchain;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string chain_file(const std::string &name) {
    return std::string(SWAPCHAIN_CHAINS_DIR) + "/" + name;
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

class TempFile {
   public:
    explicit TempFile(const std::string &name, const std::string &content = "")
        : path_(std::filesystem::temp_directory_path() / name) {
        if (!content.empty()) {
            std::ofstream(path_) << content;
        }
    }
    ~TempFile() {
        std::filesystem::remove(path_);
    }
    std::string str() const {
        return path_.string();
    }

   private:
    std::filesystem::path path_;
};

}  // namespace

TEST(cli, emax_table) {
    auto r = run_cli({"emax", chain_file("two_qubit.chain")});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(contains(r.out, "1     0.4    0.6  0.4")) << r.out;
}

TEST(cli, chain_summary) {
    auto r = run_cli({"chain", chain_file("three_weak_qubits.chain")});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(contains(r.out, "average E^max = 0.056")) << r.out;
    EXPECT_TRUE(contains(r.out, "weakest link E^max = 0.2")) << r.out;
}

TEST(cli, csv_quotes_and_line_endings) {
    auto r = run_cli({"--csv", "chain", chain_file("three_weak_qubits.chain")});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out.rfind("gamma,records,probability,lambda_0,lambda_1\r\n", 0), 0u) << r.out;
    EXPECT_TRUE(contains(r.out, "\"(0,1)\",4,0.09,0.9,0.1\r\n")) << r.out;
}

TEST(cli, swap_needs_two_links) {
    auto ok = run_cli({"swap", chain_file("two_qubit.chain")});
    EXPECT_EQ(ok.code, cli::kExitOk);
    EXPECT_TRUE(contains(ok.out, "0.31")) << ok.out;
    auto bad = run_cli({"swap", chain_file("three_weak_qubits.chain")});
    EXPECT_EQ(bad.code, cli::kExitInvalid);
    EXPECT_TRUE(contains(bad.err, "InvalidArgument")) << bad.err;
    EXPECT_TRUE(bad.out.empty());
}

TEST(cli, condition_report) {
    auto weak = run_cli({"condition", chain_file("three_weak_qubits.chain")});
    EXPECT_EQ(weak.code, cli::kExitOk);
    EXPECT_EQ(weak.out.rfind("holds: false, witness (0,1,1) vs (1,0,0)", 0), 0u) << weak.out;
    auto mis = run_cli({"condition", chain_file("misordered_pair.chain")});
    EXPECT_TRUE(contains(mis.out, "permutation variant: (2,1)")) << mis.out;
}

TEST(cli, ghz) {
    auto r = run_cli({"ghz", chain_file("ghz_pair.chain")});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(contains(r.out, "0.54")) << r.out;
    EXPECT_TRUE(contains(r.out, "0.6")) << r.out;
}

TEST(cli, verify_every_bundled_chain) {
    for (const auto &entry : std::filesystem::directory_iterator(SWAPCHAIN_CHAINS_DIR)) {
        auto r = run_cli({"verify", entry.path().string()});
        EXPECT_EQ(r.code, cli::kExitOk) << entry.path() << "\n" << r.out << r.err;
    }
}

TEST(cli, diagram_formats) {
    auto ascii = run_cli({"diagram", chain_file("two_qubit.chain"), "--format", "ascii"});
    EXPECT_EQ(ascii.code, cli::kExitOk);
    EXPECT_TRUE(contains(ascii.out, "gamma=(0)")) << ascii.out;
    EXPECT_TRUE(contains(ascii.out, "sum")) << ascii.out;

    TempFile svg("swapchain_cli_test.svg");
    auto written = run_cli({"diagram", chain_file("two_qubit.chain"), "--format", "svg", "-o", svg.str()});
    EXPECT_EQ(written.code, cli::kExitOk);
    std::ifstream in(svg.str());
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first.rfind("<?xml", 0), 0u);

    auto bad = run_cli({"diagram", chain_file("two_qubit.chain"), "--format", "png"});
    EXPECT_EQ(bad.code, cli::kExitInvalid);
}

TEST(cli, family_round_trip) {
    TempFile out("swapchain_cli_family.chain");
    auto r = run_cli({"family", "-m", "3", "-n", "3", "-b", "e", "-o", out.str()});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(read_chain_spec(out.str()).links.size(), 3u);
    auto cond = run_cli({"condition", out.str()});
    EXPECT_EQ(cond.out.rfind("holds: true", 0), 0u) << cond.out;
}

TEST(cli, family_rejects_flat_eta) {
    auto r = run_cli({"family", "-m", "2", "-n", "3", "--eta", "1,1,1"});
    EXPECT_EQ(r.code, cli::kExitInvalid);
    EXPECT_TRUE(contains(r.err, "InadmissibleProfile")) << r.err;

    TempFile out("swapchain_cli_flat.chain");
    auto unchecked = run_cli({"family", "-m", "2", "-n", "3", "--eta", "1,1,1", "--unchecked", "-o", out.str()});
    ASSERT_EQ(unchecked.code, cli::kExitOk) << unchecked.err;
    EXPECT_EQ(run_cli({"condition", out.str()}).out.rfind("holds: false", 0), 0u);
}

TEST(cli, counterexample_is_deterministic) {
    std::vector<std::string> args = {"counterexample", "-m", "2", "-n", "3", "--trials", "100", "--seed", "7"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    EXPECT_EQ(a.code, cli::kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(contains(a.out, "found = true")) << a.out;

    auto none = run_cli({"counterexample", "-m", "2", "-n", "2", "--trials", "50", "--seed", "7"});
    EXPECT_TRUE(contains(none.out, "found = false")) << none.out;
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run_cli({}).code, cli::kExitInvalid);
    EXPECT_EQ(run_cli({"emax", "/nonexistent/file.chain"}).code, cli::kExitInvalid);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitInvalid);

    TempFile bad("swapchain_cli_bad.chain", "m: 2\nlinks:\n0.5 0.6\n");
    auto r = run_cli({"emax", bad.str()});
    EXPECT_EQ(r.code, cli::kExitInvalid);
    EXPECT_TRUE(contains(r.err, "NotNormalized")) << r.err;

    std::string long_chain = "m: 2\nlinks:\n";
    for (int i = 0; i < 22; ++i) {
        long_chain += "0.5 0.5\n";
    }
    TempFile big("swapchain_cli_big.chain", long_chain);
    EXPECT_EQ(run_cli({"chain", big.str()}).code, cli::kExitTooLarge);
}
