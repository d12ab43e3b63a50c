// End-to-end checks of the command-line binary: exit codes, report routing,
// matrix validation. The binary path arrives through HHOP_CLI_PATH.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

#ifndef HHOP_CLI_PATH
#error "HHOP_CLI_PATH must point at the hh-opverify binary"
#endif

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HHOP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

TEST(Cli, PassingSuiteExitsZero) {
    EXPECT_EQ(run_cli("run --suite scalar-oracles --fn square --trials 1"), 0);
    EXPECT_EQ(run_cli("run --suite chain --eta convex --fn square --dims 1,2 "
                      "--trials 5 --seed 3"),
              0);
}

TEST(Cli, UnexpectedViolationsExitTwo) {
    EXPECT_EQ(run_cli("run --suite preinvex --eta eta1 --fn 'affine(5,2)' --dims 1 "
                      "--trials 50 --seed 1"),
              2);
}

TEST(Cli, MissingFalsificationExitsThree) {
    EXPECT_EQ(run_cli("run --suite falsify --eta convex --fn square --dims 1,2 "
                      "--trials 20 --seed 1"),
              3);
}

TEST(Cli, UsageErrorsExitSixtyFour) {
    EXPECT_EQ(run_cli("run --suite nonsense --trials 1"), 64);
    EXPECT_EQ(run_cli("run --suite chain --fn septic --trials 1"), 64);
    EXPECT_EQ(run_cli("run --suite chain --dims 0 --trials 1"), 64);
    EXPECT_EQ(run_cli("run"), 64); // --suite is required
    EXPECT_EQ(run_cli("frobnicate"), 64);
}

TEST(Cli, ReportGoesToFile) {
    const std::filesystem::path out = temp_file("hhop_cli_report.jsonl");
    std::filesystem::remove(out);
    EXPECT_EQ(run_cli("run --suite scalar-oracles --fn square --trials 1 "
                      "--format jsonl --out " +
                      out.string()),
              0);
    std::ifstream in(out);
    ASSERT_TRUE(in.good());
    std::string line;
    int lines = 0;
    bool saw_summary = false;
    while (std::getline(in, line)) {
        ++lines;
        if (line.find("\"record\":\"summary\"") != std::string::npos) saw_summary = true;
    }
    EXPECT_EQ(lines, 2);
    EXPECT_TRUE(saw_summary);
    std::filesystem::remove(out);
}

TEST(Cli, MatrixCheckAcceptsHermitianRejectsOthers) {
    const std::filesystem::path good = temp_file("hhop_cli_good.txt");
    {
        std::ofstream f(good);
        f << "dim 2\n1.5 1+2i\n1-2i -0.25\n";
    }
    EXPECT_EQ(run_cli("matrix check " + good.string()), 0);
    std::filesystem::remove(good);

    const std::filesystem::path bad = temp_file("hhop_cli_bad.txt");
    {
        std::ofstream f(bad);
        f << "dim 2\n0 1+2i\n1+2i 0\n";
    }
    EXPECT_EQ(run_cli("matrix check " + bad.string()), 2);
    std::filesystem::remove(bad);

    EXPECT_EQ(run_cli("matrix check /nonexistent/nowhere.txt"), 2);
    EXPECT_EQ(run_cli("matrix check"), 64); // file argument required
}

TEST(Cli, ThreadEnvironmentVariableIsHonored) {
    const std::string base = "run --suite chain --eta convex --fn square --dims 1,2 "
                             "--trials 8 --seed 5 --format text --out ";
    const std::filesystem::path one = temp_file("hhop_cli_t1.txt");
    const std::filesystem::path eight = temp_file("hhop_cli_t8.txt");
    const std::string cli = HHOP_CLI_PATH;
    ASSERT_EQ(WEXITSTATUS(std::system(
                  ("HH_OPVERIFY_THREADS=1 " + cli + " " + base + one.string() +
                   " > /dev/null 2>&1")
                      .c_str())),
              0);
    ASSERT_EQ(WEXITSTATUS(std::system(
                  ("HH_OPVERIFY_THREADS=8 " + cli + " " + base + eight.string() +
                   " > /dev/null 2>&1")
                      .c_str())),
              0);

    auto read_stripped = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::string all, line;
        while (std::getline(in, line))
            if (line.rfind("wall_ms", 0) != 0) all += line + "\n";
        return all;
    };
    EXPECT_EQ(read_stripped(one), read_stripped(eight));
    std::filesystem::remove(one);
    std::filesystem::remove(eight);
}

} // namespace
