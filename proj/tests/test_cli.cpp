// Copyright 2026 The skelwatch authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the installed command, covering the synth and run
// subcommands and their wiring (CLI_BINARY is injected by the build).

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "support/tempdir.hpp"

namespace skelwatch {
namespace {

using testing::TempDir;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Cli, SynthThenRunProducesReportAndAlerts) {
    TempDir dir("cli");
    ASSERT_EQ(run_cli("synth --kind right_walk --frames 4 --step 8 --size 320x240 --out " +
                      dir.str("seq")),
              0);
    ASSERT_EQ(run_cli("run --background " + dir.str("seq/background.pgm") +
                      " --frames " + dir.str("seq/frames") + " --out " +
                      dir.str("report.csv") + " --alerts " + dir.str("alerts.log")),
              0);

    const std::string csv = slurp(dir.str("report.csv"));
    EXPECT_NE(csv.find("frame_no,changed,final_score,cgx,cgy,cgx_prev,cgx_new,"
                       "cgx_diff,direction"),
              std::string::npos);
    EXPECT_NE(csv.find("NIL,FIRST_FRAME"), std::string::npos);
    EXPECT_NE(csv.find("RIGHT"), std::string::npos);

    const std::string alerts = slurp(dir.str("alerts.log"));
    EXPECT_NE(alerts.find("frame=2 direction=RIGHT cgx_diff="), std::string::npos);
    EXPECT_NE(alerts.find("frame=4 direction=RIGHT"), std::string::npos);
}

TEST(Cli, RunHonorsConfigAndDumpFlags) {
    TempDir dir("cli");
    ASSERT_EQ(run_cli("synth --kind left_walk --frames 3 --step 7 --size 320x240 --out " +
                      dir.str("seq")),
              0);
    {
        std::ofstream out(dir.str("tune.cfg"));
        out << "movement_threshold = 6.5\n";
    }
    ASSERT_EQ(run_cli("run --background " + dir.str("seq/background.pgm") +
                      " --frames " + dir.str("seq/frames") + " --out " +
                      dir.str("report.csv") + " --alerts " + dir.str("alerts.log") +
                      " --config " + dir.str("tune.cfg") +
                      " --dump-intermediates " + dir.str("dump")),
              0);
    EXPECT_NE(slurp(dir.str("alerts.log")).find("direction=LEFT"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(dir.str("dump/skeleton_001.pgm")));
}

TEST(Cli, FailsCleanlyOnBadInputs) {
    TempDir dir("cli");
    EXPECT_NE(run_cli("run --background " + dir.str("absent.pgm") + " --frames " +
                      dir.str("nowhere") + " --out " + dir.str("r.csv") +
                      " --alerts " + dir.str("a.log")),
              0);
    EXPECT_NE(run_cli("synth --kind diagonal_walk --out " + dir.str("seq")), 0);
    {
        std::ofstream out(dir.str("bad.cfg"));
        out << "min_blob_aera = 10\n";
    }
    ASSERT_EQ(run_cli("synth --kind static --frames 1 --size 320x240 --out " +
                      dir.str("seq2")),
              0);
    EXPECT_NE(run_cli("run --background " + dir.str("seq2/background.pgm") +
                      " --frames " + dir.str("seq2/frames") + " --out " +
                      dir.str("r.csv") + " --alerts " + dir.str("a.log") +
                      " --config " + dir.str("bad.cfg")),
              0);
}

} // namespace
} // namespace skelwatch
