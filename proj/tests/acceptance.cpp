// End-to-end acceptance gate: eight numbered criteria, one verdict line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "premon/kexpr.hpp"
#include "premon/runner.hpp"

using namespace premon;
using Status = CheckResult::Status;
using Clock = std::chrono::steady_clock;

#ifndef ACCEPTANCE_SRC_DIR
#define ACCEPTANCE_SRC_DIR "."
#endif

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& what) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

TwinedData make_gl1(const std::string& k_expr, const Rat& gamma,
                    CentralElement::SParity parity = CentralElement::SParity::Unchecked) {
    return TwinedData({parse_poly_expr(k_expr, builtin_gl1()), parity},
                      GammaValue::exact(gamma));
}

NCPolynomial sl2_k() { return parse_poly_expr("(e*f + f*e + h^2/2)/4", builtin_sl2()); }

std::string strip_durations(const std::string& text) {
    static const std::regex re("\"duration_ms\":[0-9.eE+-]+");
    return std::regex_replace(text, re, "\"duration_ms\":0");
}

// 1. pentagon failure with q-spectrum exactly {-1}, by both constructions, < 1 s
void criterion1() {
    auto t0 = Clock::now();
    auto t = make_gl1("(N^3 + 5*N)/6", Rat(-1));
    auto m = build_gl1_module(1);
    bool ok = true;
    auto results = check_pentagon(t, m, m, m, m);
    bool saw_pentagon = false, saw_methods = false;
    for (const auto& r : results) {
        if (r.check_id == "pentagon") {
            saw_pentagon = true;
            ok &= r.status == Status::Fail && r.defect &&
                  r.defect->kind == Defect::Kind::Spectrum &&
                  r.defect->values == std::vector<std::string>{"-1"};
        }
        if (r.check_id == "pentagon_methods") {
            saw_methods = true;
            ok &= r.status == Status::Pass;
        }
    }
    ok &= saw_pentagon && saw_methods;
    // independent scalar oracle agrees
    ok &= oracle::pentagon_exponent(oracle::k_cubic, 1, 1, 1, 1) == 1;
    double dt = seconds_since(t0);
    ok &= dt < 1.0;
    std::ostringstream os;
    os << "pentagon fails with q-spectrum {-1} by both constructions ("
       << dt << " s)";
    verdict(1, ok, os.str());
}

// 2. full symmetric coherence sweep over weights {-3..3}, < 30 s
void criterion2() {
    auto t0 = Clock::now();
    RunConfig cfg = parse_config(
        "[algebra]\nname = gl1\n"
        "[modules]\ngl1_weights = [-3, -2, -1, 0, 1, 2, 3]\n"
        "[twining]\nK = (N^3 + 5*N)/6\ngamma = -1\n"
        "[checks]\nrun = [hexagons, symmetry, q_square]\nmax_tuple_rank = 4\n");
    RunReport report = run(cfg);
    bool ok = !report.results.empty() && report.failed == 0 && report.errored == 0;
    double dt = seconds_since(t0);
    ok &= dt < 30.0;
    std::ostringstream os;
    os << "hexagons, sigma-compatibility, and sigma^2 = id all pass over {-3..3} ("
       << report.results.size() << " checks, " << dt << " s)";
    verdict(2, ok, os.str());
}

// 3. hexagon (i) violation at gamma = 2 with defect exactly 4
void criterion3() {
    auto t = make_gl1("(N^3 + 5*N)/6", Rat(2));
    auto m = build_gl1_module(1);
    auto r = check_hexagon_i(t, m, m, m);
    bool ok = r.status == Status::Fail && r.defect &&
              r.defect->values == std::vector<std::string>{"4"};
    ok &= oracle::hexagon_i_exponent(oracle::k_cubic, 1, 1, 1) == 2;
    verdict(3, ok, "hexagon (i) fails at gamma = 2 with defect ratio exactly 4");
}

// 4. ribbon construction for the S-odd cube
void criterion4() {
    auto t = make_gl1("N^3", Rat(-1), CentralElement::SParity::Odd);
    std::vector<ModuleRep> mods;
    for (long w : {-2L, -1L, 0L, 1L, 2L}) mods.push_back(build_gl1_module(w));
    std::vector<const ModuleRep*> ptrs;
    for (const auto& m : mods) ptrs.push_back(&m);
    bool ok = true;
    for (const auto& r : check_ribbon(t, ptrs, true)) ok &= r.status == Status::Pass;
    auto u1 = compute_u(t, mods[3], UMethod::SpectralExpansion);
    auto u2 = compute_u(t, mods[4], UMethod::SpectralExpansion);
    ok &= std::get<RationalMatrix>(u1).at(0, 0) == Rat(-1);
    ok &= std::get<RationalMatrix>(u2).at(0, 0) == Rat(1);
    verdict(4, ok,
            "ribbon element v = u = gamma^(-K^2): expansion matches closed form, "
            "conditions (i)-(iv) pass");
}

// 5. quasi-bialgebra relations; the fourth relation's verdicts are pinned in a
//    golden file rather than asserted from theory
void criterion5() {
    bool ok = true;
    std::ostringstream observed;

    auto record = [&](const TwinedData& t, const ModuleRep& a, const ModuleRep& b,
                      const ModuleRep& c) {
        ok &= check_quasi_coassoc(t, a, b, c).status == Status::Pass;
        ok &= check_fusion_left(t, a, b, c).status == Status::Pass;
        auto fourth = check_fusion_right(t, a, b, c);
        observed << fourth.check_id << " " << fourth.objects << " "
                 << CheckResult::status_name(fourth.status) << "\n";
    };

    auto tg = make_gl1("(N^3 + 5*N)/6", Rat(-1));
    std::vector<ModuleRep> gmods;
    for (long w : {-1L, 1L, 2L}) gmods.push_back(build_gl1_module(w));
    for (const auto& a : gmods)
        for (const auto& b : gmods) {
            ok &= check_quasi_triangular(tg, a, b).status == Status::Pass;
            for (const auto& c : gmods) record(tg, a, b, c);
        }

    TwinedData ts({sl2_k(), CentralElement::SParity::Unchecked},
                  GammaValue::exact(Rat(-1)));
    std::vector<ModuleRep> smods{build_sl2_module(0), build_sl2_module(2)};
    for (const auto& a : smods)
        for (const auto& b : smods) {
            ok &= check_quasi_triangular(ts, a, b).status == Status::Pass;
            for (const auto& c : smods) record(ts, a, b, c);
        }

    std::ifstream golden(std::string(ACCEPTANCE_SRC_DIR) +
                         "/tests/golden/eq5_fourth.txt");
    std::stringstream want;
    want << golden.rdbuf();
    bool golden_ok = golden.good() || !want.str().empty();
    if (want.str() != observed.str()) {
        golden_ok = false;
        std::cout << "  golden mismatch; observed fourth-relation verdicts:\n"
                  << observed.str();
    }
    verdict(5, ok && golden_ok,
            "first three quasi-bialgebra relations pass; fourth matches the "
            "golden record");
}

// 6. matrix-level sl(2) instance against the Clebsch-Gordan oracle, < 60 s
void criterion6() {
    auto t0 = Clock::now();
    TwinedData t({sl2_k(), CentralElement::SParity::Unchecked},
                 GammaValue::exact(Rat(-1)));
    auto v0 = build_sl2_module(0), v1 = build_sl2_module(2);
    bool ok = true;

    auto phi = build_phitilde(t, v1, v1, v1);
    const auto& m = std::get<RationalMatrix>(phi.op.matrix);
    ok &= m.rows() == 27 && (m * m).is_identity() && !m.is_identity();

    // kappa spectrum with multiplicities, exactly as the CG oracle predicts
    const Spectrum& s = t.exponent_spectrum(kappa_element(t.k_poly()), {&v1, &v1, &v1});
    auto want = oracle::sl2_kappa_spectrum(2, 2, 2);
    ok &= s.eigenvalues.size() == want.size();
    std::size_t odd_mult = 0;
    for (std::size_t i = 0; i < s.eigenvalues.size() && ok; ++i) {
        oracle::Q lam(s.eigenvalues[i]);
        Rat tr(0);
        for (std::size_t d = 0; d < s.projectors[i].rows(); ++d)
            tr += s.projectors[i].at(d, d);
        ok &= want.count(lam) == 1 && tr == Rat(static_cast<long>(want[lam]));
        if (s.eigenvalues[i] % 2 != 0) odd_mult += want[lam];
    }
    // the -1-eigenspace of the involution collects every odd kappa eigenvalue
    ok &= odd_mult == 24;
    Rat tr(0);
    for (std::size_t d = 0; d < 27; ++d) tr += m.at(d, d);
    ok &= tr == Rat(27 - 2 * 24);

    bool pentagon_failed = false;
    for (const auto& r : check_pentagon(t, v1, v1, v1, v1))
        if (r.check_id == "pentagon") pentagon_failed = r.status == Status::Fail;
    ok &= pentagon_failed;

    for (const ModuleRep* a : {&v0, &v1})
        for (const ModuleRep* b : {&v0, &v1}) {
            ok &= check_symmetry(t, *a, *b).status == Status::Pass;
            for (const ModuleRep* c : {&v0, &v1}) {
                ok &= check_hexagon_i(t, *a, *b, *c).status == Status::Pass;
                ok &= check_hexagon_ii(t, *a, *b, *c).status == Status::Pass;
            }
        }
    double dt = seconds_since(t0);
    ok &= dt < 60.0;
    std::ostringstream os;
    os << "sl(2) associator is a 27x27 involution with oracle spectrum "
          "{2:3, 1:9, -1:15}; pentagon fails, hexagons and symmetry pass ("
       << dt << " s)";
    verdict(6, ok, os.str());
}

// 7. precondition enforcement with exact witnesses
void criterion7() {
    auto vhalf = build_sl2_module(1);
    auto rep = validate_central(sl2_k(), {&vhalf}, false);
    bool ok = !rep.ok();
    bool witness = false;
    for (const auto& i : rep.issues)
        if (i.check == "NonIntegerSpectrum" && i.witness == "3/8") witness = true;
    ok &= witness;

    auto v1 = build_sl2_module(2);
    auto rep2 = validate_central(sl2_k(), {&v1}, true);
    bool parity = false;
    for (const auto& i : rep2.issues) parity |= i.check == "S_parity";
    ok &= !rep2.ok() && parity;
    verdict(7, ok,
            "V(1/2) raises NonIntegerSpectrum with witness 3/8; even K fails the "
            "S-parity requirement");
}

// 8. method agreement and report determinism
void criterion8() {
    RunConfig cfg = parse_config(
        "[algebra]\nname = gl1\n[modules]\ngl1_weights = [-2, -1, 1, 2]\n"
        "[twining]\nK = (N^3 + 5*N)/6\ngamma = -1\n"
        "[checks]\nrun = [pentagon, hexagons, symmetry]\nmax_tuple_rank = 4\n");
    RunOptions serial, parallel;
    parallel.jobs = 4;
    RunReport a = run(cfg, serial);
    RunReport b = run(cfg, serial);
    RunReport c = run(cfg, parallel);

    bool ok = true;
    std::size_t methods = 0;
    for (const auto& r : a.results)
        if (r.check_id == "pentagon_methods") {
            ++methods;
            ok &= r.status == Status::Pass;
        }
    ok &= methods == 256;  // every buildable quadruple

    std::string ja = strip_durations(emit_report(a, ReportFormat::JsonLike));
    std::string jb = strip_durations(emit_report(b, ReportFormat::JsonLike));
    std::string jc = strip_durations(emit_report(c, ReportFormat::JsonLike));
    ok &= ja == jb && ja == jc;
    std::ostringstream os;
    os << "q-composition agrees with xi on " << methods
       << "/256 quadruples; jsonlike reports identical across runs and workers";
    verdict(8, ok, os.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << (failures == 0 ? "all criteria passed" : "CRITERIA FAILED")
              << std::endl;
    return failures;
}
