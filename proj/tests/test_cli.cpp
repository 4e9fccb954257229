// Drives the installed binary end to end through temp files.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli() { return SECG_CLI_PATH; }

std::string tmp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

int run(const std::string& args, const std::string& out_file = "") {
    std::string cmd = cli() + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen, solve, color, verify pipeline") {
    std::string graph = tmp_path("prism.secg");
    std::string cert = tmp_path("prism.cert");
    std::string out = tmp_path("out.txt");

    REQUIRE(run("gen prism -o " + graph) == 0);
    CHECK(run("solve -i " + graph + " --json -o " + cert, out) == 0);
    std::string solve_out = slurp(out);
    CHECK(solve_out.find("\"chi_s\": 9") != std::string::npos);

    CHECK(run("verify -i " + graph + " -c " + cert, out) == 0);
    CHECK(slurp(out).find("valid") != std::string::npos);

    // corrupt the certificate: verification fails with exit code 1
    {
        std::string text = slurp(cert);
        std::ofstream f(cert);
        f << text.substr(0, text.rfind(' ')) << " 1\n";
    }
    CHECK(run("verify -i " + graph + " -c " + cert, out) == 1);
    CHECK(slurp(out).find("invalid") != std::string::npos);
}

TEST_CASE("color auto respects the budget and verifies") {
    std::string graph = tmp_path("hex.secg");
    std::string out = tmp_path("color.txt");
    REQUIRE(run("gen hex --rings 3 -o " + graph) == 0);
    CHECK(run("color --mode auto -i " + graph + " --json", out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("\"budget\": 9") != std::string::npos);
    CHECK(text.find("\"valid\": true") != std::string::npos);
}

TEST_CASE("round trip through gen subdivide") {
    std::string graph = tmp_path("c6.secg");
    std::string sub = tmp_path("c7.secg");
    REQUIRE(run("gen hex --rings 1 -o " + graph) == 0);
    REQUIRE(run("gen subdivide -i " + graph + " --edge 0 1 --times 1 -o " + sub) == 0);
    std::string text = slurp(sub);
    CHECK(text.find("v 7") != std::string::npos);
}

TEST_CASE("bounds") {
    std::string out = tmp_path("bounds.txt");
    CHECK(run("bounds ckd --k 5 --d 5", out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("10") != std::string::npos);
    CHECK(text.find("13") != std::string::npos);
    CHECK(run("bounds erdos-nesetril --delta 5", out) == 0);
    CHECK(slurp(out).find("29") != std::string::npos);
    CHECK(run("bounds molloy-reed --delta 10 --json", out) == 0);
    CHECK(slurp(out).find("999/5") != std::string::npos);
}

TEST_CASE("discharge prints the audit") {
    std::string graph = tmp_path("patch.secg");
    std::string out = tmp_path("discharge.txt");
    REQUIRE(run("gen hex --rings 2 -o " + graph) == 0);
    CHECK(run("discharge --mode subcubic -i " + graph, out) == 0);
    std::string text = slurp(out);
    CHECK(text.find("totals: initial -12, final -12") != std::string::npos);
    CHECK(text.find("configuration S2") != std::string::npos);
    CHECK(text.find("PAPER-CONTRADICTION") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    std::string out = tmp_path("usage.txt");
    CHECK(run("solve -i does_not_exist.secg", out) == 1);  // runtime failure
    // girth precondition violation is a usage error
    std::string graph = tmp_path("prism2.secg");
    REQUIRE(run("gen prism -o " + graph) == 0);
    CHECK(run("color --mode subcubic -i " + graph, out) == 2);
    CHECK(run("nonsense-subcommand", out) != 0);
}

}  // TEST_SUITE
