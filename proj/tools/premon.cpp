// premon: config-driven runner plus a scalar oracle for quick cross-checks.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "premon/kexpr.hpp"
#include "premon/runner.hpp"
#include "premon/stext.hpp"

using namespace premon;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// gamma^e for a rational exponent: exact when possible, decimal otherwise.
std::string gamma_to(const GammaValue& g, const Rat& e) {
    if (g.is_exact() && is_integer(e))
        return rat_pow(g.rational(), e.get_num().get_si()).get_str();
    std::complex<double> base = g.complex_value();
    double ex = e.get_num().get_d() / e.get_den().get_d();
    std::complex<double> v = std::pow(base, ex);
    std::ostringstream os;
    os.precision(12);
    os << v.real();
    if (std::abs(v.imag()) > 1e-12) os << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

int run_oracle(const std::string& k_text, const std::vector<long>& weights,
               const std::string& gamma_text) {
    GammaValue gamma = parse_gamma(gamma_text);
    AlgebraPtr alg = builtin_gl1();
    NCPolynomial K = parse_poly_expr(k_text, alg);

    auto k = [&](long n) -> Rat {
        RationalMatrix m = evaluate(K, build_gl1_module(n));
        return m.at(0, 0);
    };
    auto D = [&](long v, long w) -> Rat { return k(v) + k(w) - k(v + w); };
    auto kappa = [&](long a, long b, long c) -> Rat { return k(a) * D(b, c); };

    std::cout << "gamma = " << gamma.str() << "\n";
    for (long w : weights) {
        Rat mk2 = Rat(-k(w) * k(w));
        std::cout << "k(" << w << ") = " << k(w).get_str() << "   u(" << w
                  << ") = gamma^" << mk2.get_str() << " = " << gamma_to(gamma, mk2)
                  << "\n";
    }

    if (weights.size() >= 2) {
        long a = weights[0], b = weights[1];
        Rat r = k(a) * k(b);
        std::cout << "R(" << a << "," << b << ") = gamma^" << r.get_str() << " = "
                  << gamma_to(gamma, r) << "\n";
    }
    if (weights.size() >= 3) {
        long a = weights[0], b = weights[1], c = weights[2];
        Rat kp = kappa(a, b, c);
        std::cout << "Phi(" << a << "," << b << "," << c << ") = gamma^" << kp.get_str()
                  << " = " << gamma_to(gamma, kp) << "\n";
        Rat hex1 = -2 * k(a) * D(b, c);
        std::cout << "hexagon(i) defect = gamma^" << hex1.get_str() << " = "
                  << gamma_to(gamma, hex1) << "\n";
        std::cout << "hexagon(ii) defect = 1\n";
    }
    if (weights.size() >= 4) {
        long a = weights[0], b = weights[1], c = weights[2], d = weights[3];
        Rat e = -kappa(a + b, c, d) + kappa(a, b, c) + kappa(a, b + c, d) +
                kappa(b, c, d) - kappa(a, b, c + d);
        std::cout << "pentagon exponent = " << e.get_str() << "   q = gamma^"
                  << e.get_str() << " = " << gamma_to(gamma, e) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twined monoidal structure workbench"};
    app.require_subcommand(1);

    std::string config_path, format = "text", out_path, gamma_text = "-1";
    unsigned jobs = 1;
    bool expect_all_pass = false, variant_eq5 = false;
    std::string k_text;
    std::vector<long> weights;

    auto* check = app.add_subcommand("check", "run the configured check suites");
    check->add_option("config", config_path, "config file")->required();
    check->add_option("--format", format, "text | jsonlike")
        ->check(CLI::IsMember({"text", "jsonlike"}));
    check->add_option("--out", out_path, "write the report to a file");
    check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    check->add_flag("--expect-all-pass", expect_all_pass,
                    "exit nonzero when any check fails or errors");
    check->add_flag("--variant-eq5", variant_eq5,
                    "also run the permuted fourth-relation variant");

    auto* validate = app.add_subcommand("validate", "only validate the central element");
    validate->add_option("config", config_path, "config file")->required();

    auto* oracle = app.add_subcommand("oracle-gl1",
                                      "scalar oracle values for gl(1) weight modules");
    oracle->add_option("K", k_text, "central element expression in N")->required();
    oracle->add_option("weights", weights, "2 to 4 weights")
        ->expected(2, 4)
        ->required();
    oracle->add_option("--gamma", gamma_text, "twining base (default -1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle->parsed()) return run_oracle(k_text, weights, gamma_text);

        RunConfig cfg = parse_config(slurp(config_path));
        if (validate->parsed()) {
            ValidationReport report = validate_only(cfg);
            std::cout << format_validation(report);
            return report.ok() ? 0 : 2;
        }

        RunOptions opts;
        opts.jobs = jobs;
        opts.eq5_variant = variant_eq5;
        RunReport report;
        try {
            report = run(cfg, opts);
        } catch (const ValidationFailure& vf) {
            std::cerr << "validation failed:\n" << format_validation(vf.report);
            return 2;
        }
        std::string text = emit_report(
            report, format == "jsonlike" ? ReportFormat::JsonLike : ReportFormat::Text);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << text;
        }
        if (expect_all_pass && (report.failed || report.errored)) return 1;
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
