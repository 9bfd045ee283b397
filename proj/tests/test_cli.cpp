#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(QBOREL_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST(Cli, ClassifyA2) {
    const CliRun r = run("classify --type A2 --word 1,2,1");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"].size(), 3u);
    EXPECT_EQ(j["totals"]["Tw"], 3);
    EXPECT_EQ(j["word"], nlohmann::json::array({1, 2, 1}));
}

TEST(Cli, ClassifyA1) {
    const CliRun r = run("classify --type A1 --word 1");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["rows"].size(), 2u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("classify --type A2 --word 1,1").code, 2);
    EXPECT_EQ(run("verify --type Z9").code, 2);
    EXPECT_EQ(run("ls --type A2 --i 3 --j 1").code, 2);
    EXPECT_EQ(run("classify --type A2 --word 1,x").code, 2);
    EXPECT_EQ(run("classify --type A2 --word 3").code, 2);
    EXPECT_EQ(run("classify --type A2 --format xml").code, 2);
    EXPECT_EQ(run("verify --type A2 --suite nope").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, LsOutput) {
    EXPECT_EQ(run("ls --type A2 --i 1 --j 2 --format tsv").out, "0\n");
    const CliRun r = run("ls --type A2 --i 1 --j 3");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["terms"].size(), 1u);
}

TEST(Cli, VerifySuites) {
    EXPECT_EQ(run("verify --type B2 --suite strata").code, 0);
    EXPECT_EQ(run("verify --type A2 --suite ls").code, 0);
}

TEST(Cli, DeterministicOutput) {
    for (const char* args : {"classify --type B2 --format tsv", "strata --type G2", "weyl --type A3", "roots --type B3"}) {
        const CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, CartanFile) {
    const std::string path = std::string(QBOREL_TEST_TMP) + "/b2.json";
    FILE* f = fopen(path.c_str(), "w");
    fputs("[[2,-1],[-2,2]]", f);
    fclose(f);
    const CliRun a = run("roots --cartan-file " + path);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(nlohmann::json::parse(a.out)["positive_roots"].size(), 4u);
    EXPECT_EQ(run("roots --cartan-file " + path + " --type A2").code, 2);
    EXPECT_EQ(run("roots --cartan-file /nonexistent.json").code, 2);
}
