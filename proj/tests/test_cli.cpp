#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary end to end; FLAGK_CLI_PATH comes from the
// build system.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + FLAGK_CLI_PATH + " " + args +
                      " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/flagk-cli-test-XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("expand golden case over the wire") {
    auto r = run_cli("expand --type G2 --rank 2 --lambda 0,1 --word 1,2,1,2 "
                     "--format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("type") == "G");
    CHECK(j.at("paths") == 13);
    REQUIRE(j.at("coeffs").size() == 7);
    int total = 0;
    for (const auto& row : j.at("coeffs")) total += row.at("mult").get<int>();
    CHECK(total == 13);
    CHECK(j.at("coeffs")[6] ==
          json{{"v_word", {1, 2, 1, 2}}, {"mult", 1}});
}

TEST_CASE("expand text output shows both presentations") {
    auto r = run_cli("expand --type G2 --lambda 0,1 --word 1,2,1,2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("paths 13") != std::string::npos);
    CHECK(r.out.find("s1 s2 | s2 s1 | 2") != std::string::npos);
    CHECK(r.out.find("s1 s2 s1 s2 | s2 s1 s2 s1 | 1") != std::string::npos);
}

TEST_CASE("identity absorption via an omitted word") {
    auto r = run_cli("expand --type B2 --lambda 1,1 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("paths") == 1);
    CHECK(j.at("coeffs") ==
          json::array({{{"v_word", json::array()}, {"mult", 1}}}));
}

TEST_CASE("character dimension on the smallest module") {
    auto r = run_cli("character --type A1 --rank 1 --lambda 1 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("character").size() == 2);
}

TEST_CASE("weyl element report") {
    auto r = run_cli("weyl --type G2 --word 2,1,2,1,2,1 --format json");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("length") == 6);
    CHECK(j.at("reduced") == true);
    // the longest element is stored under its lexicographically least word
    CHECK(j.at("canonical_word") == json({1, 2, 1, 2, 1, 2}));
}

TEST_CASE("paths as DOT") {
    auto r = run_cli("paths --type A1 --rank 1 --lambda 1 --format dot");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("digraph") != std::string::npos);
    CHECK(r.out.find("p0 -> p1 [label=\"1\"]") != std::string::npos);
}

TEST_CASE("verify suite exit codes") {
    auto ok = run_cli("verify --suite g2golden");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("4/4 checks passed") != std::string::npos);

    auto json_run = run_cli("verify --suite g2golden --format json --seed 7");
    REQUIRE(json_run.exit_code == 0);
    json j = json::parse(json_run.out);
    CHECK(j.at("ok") == true);
    CHECK(j.at("seed") == 7);

    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("expand --type A9 --lambda 1").exit_code == 2);
    CHECK(run_cli("expand --type A2").exit_code == 2);           // missing lambda
    CHECK(run_cli("expand --type A --lambda 1,0").exit_code == 2);  // missing rank
    CHECK(run_cli("expand --type A3 --rank 2 --lambda 1,0").exit_code == 2);
    CHECK(run_cli("character --type A2 --lambda -1,0").exit_code == 2);
    CHECK(run_cli("paths --type A2 --lambda 1,0 --format yaml").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cache round trips byte for byte") {
    TempDir dir;
    std::string args = "expand --type G2 --lambda 0,1 --word 1,2,1,2 --format json "
                       "--cache-dir " + dir.path;
    auto cold = run_cli(args);
    REQUIRE(cold.exit_code == 0);
    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir.path)) {
        ++files;
        CHECK(e.path().extension() == ".json");
    }
    CHECK(files == 1);
    auto warm = run_cli(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(warm.out == cold.out);

    // same job spelled differently hits the same entry
    auto fused = run_cli("expand --type g2 --rank 2 --lambda 0,1 --word 1,2,1,2 "
                         "--format json --cache-dir " + dir.path);
    CHECK(fused.out == cold.out);
    for (const auto& e : std::filesystem::directory_iterator(dir.path)) {
        std::ifstream in(e.path());
        json stored = json::parse(in);
        CHECK(stored.at("output").get<std::string>() == cold.out);
        CHECK(stored.at("job").at("command") == "expand");
    }
}

TEST_CASE("environment variable overrides the cache flag") {
    TempDir env_dir, flag_dir;
    auto r = run_cli("roots --type C3 --format json --cache-dir " + flag_dir.path,
                     "FLAGK_CACHE=" + env_dir.path);
    REQUIRE(r.exit_code == 0);
    CHECK(std::filesystem::is_empty(flag_dir.path));
    CHECK(!std::filesystem::is_empty(env_dir.path));
}

TEST_CASE("different formats cache separately") {
    TempDir dir;
    auto t = run_cli("weyl --type A2 --cache-dir " + dir.path);
    auto j = run_cli("weyl --type A2 --format json --cache-dir " + dir.path);
    REQUIRE(t.exit_code == 0);
    REQUIRE(j.exit_code == 0);
    CHECK(t.out != j.out);
    int files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path))
        ++files;
    CHECK(files == 2);
}
