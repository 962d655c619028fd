#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "premon/config.hpp"
#include "premon/kexpr.hpp"
#include "premon/runner.hpp"
#include "premon/stext.hpp"

using namespace premon;

namespace {

const char* kSample =
    "[algebra]\n"
    "name = gl1\n"
    "\n"
    "[modules]\n"
    "gl1_weights = [-1, 0, 1]\n"
    "\n"
    "[twining]\n"
    "K = N^3\n"
    "gamma = -1\n"
    "require_S_odd = true\n"
    "\n"
    "[checks]\n"
    "run = [symmetry, ribbon]\n"
    "max_tuple_rank = 2\n";

} // namespace

TEST_CASE("config round trips through emit/parse") {
    RunConfig cfg = parse_config(kSample);
    CHECK(cfg.algebra_name == "gl1");
    CHECK(cfg.gl1_weights == std::vector<long>{-1, 0, 1});
    CHECK(cfg.k_expr == "N^3");
    CHECK(cfg.require_S_odd);
    CHECK(cfg.checks == std::vector<std::string>{"ribbon", "symmetry"});  // sorted
    CHECK(cfg.max_tuple_rank == 2);

    RunConfig again = parse_config(emit_config(cfg));
    CHECK(again == cfg);
}

TEST_CASE("config rejections") {
    CHECK_THROWS_AS(parse_config("[modules]\ngl1_weights = [1]\n"), ParseError);
    CHECK_THROWS_AS(
        parse_config("[algebra]\nname = gl1\n[twining]\nK = N\n[checks]\nrun = [symmetry]\n"),
        ParseError);  // no modules
    CHECK_THROWS_AS(parse_config("[algebra]\nname = e8\n[modules]\ngl1_weights = [1]\n"
                                 "[twining]\nK = N\n[checks]\nrun = [symmetry]\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_config("[algebra]\nname = gl1\n[modules]\ngl1_weights = [1]\n"
                                 "[twining]\nK = N\n[checks]\nrun = [sextagon]\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_config("[algebra]\nname = gl1\n[modules]\ngl1_weights = [1]\n"
                                 "[twining]\nK = N\n[checks]\nrun = [symmetry]\n"
                                 "max_tuple_rank = 7\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_config("[algebra]\nname = gl1\n[modules]\ngl1_weights = [1]\n"
                                 "[checks]\nrun = [symmetry]\n"),
                    ParseError);  // no K
}

TEST_CASE("parse_gamma covers rational and complex forms") {
    CHECK(parse_gamma("-1") == GammaValue::exact(Rat(-1)));
    CHECK(parse_gamma("2/3") == GammaValue::exact(Rat(2, 3)));
    CHECK(parse_gamma("i").complex_value() == std::complex<double>(0, 1));
    CHECK(parse_gamma("1+2i").complex_value() == std::complex<double>(1, 2));
    CHECK(parse_gamma("1-i").complex_value() == std::complex<double>(1, -1));
    CHECK(parse_gamma("(0.5, -0.25)").complex_value() ==
          std::complex<double>(0.5, -0.25));
    CHECK_THROWS(parse_gamma("0"));
}

TEST_CASE("K expression parser") {
    auto gl1 = builtin_gl1();
    auto p = parse_poly_expr("(N^3 + 5*N)/6", gl1);
    CHECK(!p.is_zero());
    CHECK(parse_poly_expr("N - N", gl1).is_zero());
    CHECK(parse_poly_expr("2*I", gl1) == NCPolynomial::constant(Rat(2)));
    // non-commuting order is preserved
    auto sl2 = builtin_sl2();
    CHECK(parse_poly_expr("e*f", sl2) != parse_poly_expr("f*e", sl2));

    CHECK_THROWS_AS(parse_poly_expr("N/0", gl1), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("N/N", gl1), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("x + 1", gl1), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("N^-1", gl1), ParseError);
    CHECK_THROWS_AS(parse_poly_expr("N +", gl1), ParseError);
}

TEST_CASE("build_instance materializes builtin modules") {
    RunConfig cfg = parse_config(kSample);
    Instance inst = build_instance(cfg);
    REQUIRE(inst.modules.size() == 3);
    CHECK(inst.modules[0].label() == "M(-1)");
    CHECK(inst.modules[2].label() == "M(1)");
    CHECK(inst.k == parse_poly_expr("N^3", inst.algebra));
}

TEST_CASE("modules file loads generic matrix actions") {
    std::string path = "premon_test_modules.json";
    {
        std::ofstream out(path);
        out << R"([{"label":"W","dim":2,"action":{"N":[["1","0"],["0","1/1"]]}}])";
    }
    RunConfig cfg = parse_config(
        "[algebra]\nname = gl1\n[modules]\nfile = " + path +
        "\n[twining]\nK = N\n[checks]\nrun = [symmetry]\nmax_tuple_rank = 2\n");
    Instance inst = build_instance(cfg);
    REQUIRE(inst.modules.size() == 1);
    CHECK(inst.modules[0].dim() == 2);
    CHECK(inst.modules[0].label() == "W");
    std::remove(path.c_str());
}

TEST_CASE("inline algebra presentations survive the round trip") {
    std::string text =
        "[algebra]\n"
        "basis = [a, b]\n"
        "bracket.\"a,b\" = {a: 1}\n"
        "\n"
        "[modules]\n"
        "file = unused.json\n"
        "\n"
        "[twining]\n"
        "K = a\n"
        "\n"
        "[checks]\n"
        "run = [symmetry]\n";
    RunConfig cfg = parse_config(text);
    CHECK(!cfg.algebra_inline.empty());
    RunConfig again = parse_config(emit_config(cfg));
    CHECK(again.algebra_inline == cfg.algebra_inline);
}

TEST_CASE("run(): small end-to-end pass and validation failure") {
    RunConfig cfg = parse_config(kSample);
    RunReport report = run(cfg);
    CHECK(report.validation.ok());
    CHECK(report.failed == 0);
    CHECK(report.errored == 0);
    CHECK(report.passed == report.results.size());
    // jsonlike emission has one record per result plus a summary line
    std::string body = emit_report(report, ReportFormat::JsonLike);
    std::size_t lines = std::count(body.begin(), body.end(), '\n');
    CHECK(lines == report.results.size() + 1);

    RunConfig bad = cfg;
    bad.k_expr = "N^2";  // S-even, contradicts require_S_odd
    Instance check_parse = build_instance(bad);
    (void)check_parse;
    CHECK_THROWS_AS(run(bad), ValidationFailure);
}

TEST_CASE("run(): rank caps suppress higher-arity suites") {
    RunConfig cfg = parse_config(kSample);
    cfg.checks = {"pentagon"};
    cfg.max_tuple_rank = 2;
    RunReport report = run(cfg);
    CHECK(report.results.empty());
}

TEST_CASE("run(): parallel results equal serial results") {
    RunConfig cfg = parse_config(
        "[algebra]\nname = gl1\n[modules]\ngl1_weights = [-1, 1, 2]\n"
        "[twining]\nK = (N^3 + 5*N)/6\ngamma = -1\n"
        "[checks]\nrun = [pentagon, hexagons, symmetry, quasi]\nmax_tuple_rank = 4\n");
    RunOptions serial, parallel;
    parallel.jobs = 4;
    RunReport a = run(cfg, serial);
    RunReport b = run(cfg, parallel);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].check_id == b.results[i].check_id);
        CHECK(a.results[i].objects == b.results[i].objects);
        CHECK(a.results[i].status == b.results[i].status);
    }
}
