#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("PREMON_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string src() {
    const char* s = std::getenv("PREMON_SRC");
    REQUIRE(s != nullptr);
    return s;
}

struct RunOut {
    int exit_code;
    std::string out;
};

RunOut run_cmd(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

// duration varies between runs; everything else must be byte-identical
std::string strip_durations(const std::string& text) {
    static const std::regex re("\"duration_ms\":[0-9.eE+-]+");
    return std::regex_replace(text, re, "\"duration_ms\":0");
}

} // namespace

TEST_CASE("check: ribbon config passes end to end") {
    auto r = run_cmd("check " + src() + "/configs/gl1_ribbon.cfg --expect-all-pass");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" 0 fail") != std::string::npos);
    CHECK(r.out.find(" 0 error") != std::string::npos);
}

TEST_CASE("check: pentagon config reports the designed failure") {
    auto r = run_cmd("check " + src() + "/configs/gl1_pentagon.cfg --format jsonlike");
    CHECK(r.exit_code == 0);  // failures are findings, not tool errors
    CHECK(r.out.find("\"check_id\":\"pentagon\"") != std::string::npos);
    CHECK(r.out.find("\"status\":\"fail\"") != std::string::npos);
    CHECK(r.out.find("[[\"-1\"]]") != std::string::npos);
    // but with --expect-all-pass the verdict drives the exit code
    auto strict = run_cmd("check " + src() + "/configs/gl1_pentagon.cfg --expect-all-pass");
    CHECK(strict.exit_code == 1);
}

TEST_CASE("check: jsonlike output is deterministic across runs and workers") {
    std::string cfg = src() + "/configs/gl1_ribbon.cfg";
    auto a = run_cmd("check " + cfg + " --format jsonlike");
    auto b = run_cmd("check " + cfg + " --format jsonlike");
    auto c = run_cmd("check " + cfg + " --format jsonlike --jobs 4");
    REQUIRE(a.exit_code == 0);
    CHECK(strip_durations(a.out) == strip_durations(b.out));
    CHECK(strip_durations(a.out) == strip_durations(c.out));
}

TEST_CASE("check: --out writes the report to a file") {
    std::string path = "premon_cli_report.txt";
    auto r = run_cmd("check " + src() + "/configs/gl1_ribbon.cfg --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(body.find("summary:") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("validate: good and bad configs") {
    auto good = run_cmd("validate " + src() + "/configs/gl1_ribbon.cfg");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("ok") != std::string::npos);

    // require_S_odd with an even K must be rejected
    std::string path = "premon_cli_bad.cfg";
    {
        std::ofstream out(path);
        out << "[algebra]\nname = gl1\n[modules]\ngl1_weights = [1]\n"
               "[twining]\nK = N^2\nrequire_S_odd = true\n"
               "[checks]\nrun = [ribbon]\n";
    }
    auto bad = run_cmd("validate " + path);
    CHECK(bad.exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("check: validation failure exits 2") {
    std::string path = "premon_cli_bad2.cfg";
    {
        std::ofstream out(path);
        out << "[algebra]\nname = sl2\n[modules]\nsl2_two_j = [1]\n"
               "[twining]\nK = (e*f + f*e + h^2/2)/4\n"
               "[checks]\nrun = [symmetry]\n";
    }
    auto r = run_cmd("check " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("3/8") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("config parse errors exit 2") {
    std::string path = "premon_cli_bad3.cfg";
    {
        std::ofstream out(path);
        out << "[nonsense]\nk = v\n";
    }
    auto r = run_cmd("check " + path);
    CHECK(r.exit_code == 2);
    std::remove(path.c_str());
    auto missing = run_cmd("check does_not_exist.cfg");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("oracle-gl1 prints the scalar story") {
    auto r = run_cmd("oracle-gl1 \"(N^3 + 5*N)/6\" 1 1 1 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("k(1) = 1") != std::string::npos);
    CHECK(r.out.find("pentagon exponent = 1") != std::string::npos);
    CHECK(r.out.find("q = gamma^1 = -1") != std::string::npos);
    CHECK(r.out.find("u(1) = gamma^-1 = -1") != std::string::npos);

    auto two = run_cmd("oracle-gl1 --gamma 2 \"(N^3 + 5*N)/6\" 1 1 1");
    CHECK(two.exit_code == 0);
    CHECK(two.out.find("hexagon(i) defect = gamma^2 = 4") != std::string::npos);
}

TEST_CASE("variant flag adds the permuted relation records") {
    std::string cfg = src() + "/configs/sl2_v1.cfg";
    auto base = run_cmd("check " + cfg + " --format jsonlike");
    auto var = run_cmd("check " + cfg + " --format jsonlike --variant-eq5");
    CHECK(base.out.find("fusion_right_variant") == std::string::npos);
    CHECK(var.out.find("fusion_right_variant") != std::string::npos);
}
