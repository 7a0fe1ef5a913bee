#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef BAERLAB_CLI_PATH
#define BAERLAB_CLI_PATH "./baerlab"
#endif

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BAERLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kZ4 = R"('{"kind":"zmod","n":4}')";
const char* kZ6 = R"('{"kind":"zmod","n":6}')";

}  // namespace

TEST_CASE("ring-info verdicts") {
    auto r6 = run_cli(std::string("ring-info ") + kZ6);
    CHECK(r6.exit_code == 0);
    json j6 = json::parse(r6.out);
    CHECK(j6.at("is_baer").at("holds").get<bool>());
    CHECK(j6.at("order").get<int>() == 6);

    auto r4 = run_cli(std::string("ring-info ") + kZ4);
    CHECK(r4.exit_code == 0);
    json j4 = json::parse(r4.out);
    CHECK(!j4.at("is_right_rickart").at("holds").get<bool>());
    CHECK(j4.at("is_right_rickart").at("witness").at("a").get<int>() == 2);

    auto t2 = run_cli(
        R"(ring-info '{"kind":"upper_triangular","k":2,"base":{"kind":"prime_field","p":2}}')");
    CHECK(t2.exit_code == 0);
    CHECK(json::parse(t2.out).at("is_baer").at("holds").get<bool>());
}

TEST_CASE("module-check exit codes") {
    auto fail = run_cli(R"(module-check '{"ring":{"kind":"zmod","n":4}}' -p s_baer)");
    CHECK(fail.exit_code == 1);
    CHECK(!json::parse(fail.out).at("verdict").at("holds").get<bool>());

    auto pass = run_cli(R"(module-check '{"ring":{"kind":"zmod","n":6}}' -p s_baer)");
    CHECK(pass.exit_code == 0);

    auto zero = run_cli(
        R"(module-check '{"ring":{"kind":"zmod","n":4},"module":{"kind":"zero"}}' -p s_baer)");
    CHECK(zero.exit_code == 0);
}

TEST_CASE("module-check recheck replays its own certificate") {
    auto first = run_cli(R"(module-check '{"ring":{"kind":"zmod","n":4}}' -p s_rickart)");
    CHECK(first.exit_code == 1);
    std::string cert = json::parse(first.out).dump();
    auto replay = run_cli("module-check --recheck '" + cert + "'");
    CHECK(replay.exit_code == 0);
    CHECK(json::parse(replay.out).at("recheck").get<std::string>() == "ok");
}

TEST_CASE("radical command") {
    auto r = run_cli(R"(radical '{"ring":{"kind":"zmod","n":6}}')");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("classification").get<std::string>() == "torsion_free");
    CHECK(j.at("beta").size() == 1);

    auto replay = run_cli("radical --recheck '" + j.dump() + "'");
    CHECK(replay.exit_code == 0);

    auto z2 = run_cli(
        R"(radical '{"ring":{"kind":"zmod","n":4},"module":{"kind":"quotient","sub":[0,2]}}')");
    CHECK(z2.exit_code == 0);
    CHECK(json::parse(z2.out).at("classification").get<std::string>() == "torsion");
}

TEST_CASE("error exit codes") {
    CHECK(run_cli(R"(ring-info '{"kind":"nonsense"}')").exit_code == 2);
    CHECK(run_cli(R"(ring-info '{"kind":"zmod","n":100}' --cap 64)").exit_code == 3);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli(R"(module-check '{"ring":{"kind":"zmod","n":4}}' -p no_such)").exit_code == 2);
}

TEST_CASE("verify and search subcommands") {
    auto v = run_cli("verify -c simple_artinian --jobs 2");
    CHECK(v.exit_code == 0);
    json arr = json::parse(v.out);
    REQUIRE(arr.is_array());
    CHECK(arr[0].at("check").get<std::string>() == "simple_artinian");
    CHECK(arr[0].at("failures").empty());

    auto x = run_cli("verify -c simple_artinian --junit");
    CHECK(x.exit_code == 0);
    CHECK(x.out.find("<testsuite") != std::string::npos);

    auto s = run_cli("search -g SIP_without_SSIP_ring");
    CHECK(s.exit_code == 0);
    CHECK(json::parse(s.out).at("witness").at("exhausted").get<bool>());
}

TEST_CASE("corpus-dump is line-delimited and deterministic") {
    auto a = run_cli("corpus-dump");
    auto b = run_cli("corpus-dump");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    size_t lines = 0;
    for (char c : a.out) lines += c == '\n';
    CHECK(lines >= 30);
    CHECK(json::parse(a.out.substr(0, a.out.find('\n'))).contains("kind"));
}

TEST_CASE("stdin input") {
    std::string cmd = std::string("echo '") + R"({"kind":"zmod","n":6})" + "' | " +
                      BAERLAB_CLI_PATH + " ring-info - 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(json::parse(out).at("is_baer").at("holds").get<bool>());
}
