#include "premon/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace premon {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool has_check(const RunConfig& cfg, const std::string& name) {
    return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

// One task produces one or more results; tasks may run on a worker pool.
using Task = std::function<std::vector<CheckResult>()>;

void for_each_tuple(std::size_t count, std::size_t rank,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(rank, 0);
    while (true) {
        fn(idx);
        std::size_t pos = rank;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < count) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
    }
}

} // namespace

ValidationReport validate_only(const RunConfig& cfg) {
    Instance inst = build_instance(cfg);
    std::vector<const ModuleRep*> mods;
    for (const auto& m : inst.modules) mods.push_back(&m);
    return validate_central(inst.k, mods, cfg.require_S_odd);
}

RunReport run(const RunConfig& cfg, const RunOptions& options) {
    Instance inst = build_instance(cfg);
    std::vector<const ModuleRep*> mods;
    for (const auto& m : inst.modules) mods.push_back(&m);

    RunReport report;
    report.config_echo = emit_config(cfg);
    report.validation = validate_central(inst.k, mods, cfg.require_S_odd);
    if (!report.validation.ok()) throw ValidationFailure(report.validation);

    CentralElement k{inst.k, cfg.require_S_odd ? CentralElement::SParity::Odd
                                               : CentralElement::SParity::Unchecked};
    TwinedData twined(k, cfg.gamma);
    const auto& t = twined;
    const std::size_t n = inst.modules.size();
    const int rank = cfg.max_tuple_rank;

    std::vector<Task> tasks;
    auto one = [](CheckResult r) { return std::vector<CheckResult>{std::move(r)}; };

    if (has_check(cfg, "symmetry") && rank >= 2)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)  // symmetric check: unordered pairs
                tasks.push_back([&, i, j] {
                    return one(check_symmetry(t, inst.modules[i], inst.modules[j]));
                });

    if (has_check(cfg, "hexagons") && rank >= 3)
        for_each_tuple(n, 3, [&](const std::vector<std::size_t>& ix) {
            auto i = ix[0], j = ix[1], l = ix[2];
            tasks.push_back([&, i, j, l] {
                return std::vector<CheckResult>{
                    check_hexagon_i(t, inst.modules[i], inst.modules[j], inst.modules[l]),
                    check_hexagon_ii(t, inst.modules[i], inst.modules[j], inst.modules[l])};
            });
        });

    if (has_check(cfg, "pentagon") && rank >= 4)
        for_each_tuple(n, 4, [&](const std::vector<std::size_t>& ix) {
            auto a = ix[0], b = ix[1], c = ix[2], d = ix[3];
            tasks.push_back([&, a, b, c, d] {
                return check_pentagon(t, inst.modules[a], inst.modules[b], inst.modules[c],
                                      inst.modules[d]);
            });
        });

    if (has_check(cfg, "q_square") && rank >= 4)
        for_each_tuple(n, 4, [&](const std::vector<std::size_t>& ix) {
            auto a = ix[0], b = ix[1], c = ix[2], d = ix[3];
            tasks.push_back([&, a, b, c, d] {
                return one(check_q_sigma_square(t, inst.modules[a], inst.modules[b],
                                                inst.modules[c], inst.modules[d]));
            });
        });

    if (has_check(cfg, "quasi")) {
        if (rank >= 2)
            for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ix) {
                auto i = ix[0], j = ix[1];
                tasks.push_back([&, i, j] {
                    return one(check_quasi_triangular(t, inst.modules[i], inst.modules[j]));
                });
            });
        if (rank >= 3)
            for_each_tuple(n, 3, [&](const std::vector<std::size_t>& ix) {
                auto i = ix[0], j = ix[1], l = ix[2];
                tasks.push_back([&, i, j, l] {
                    std::vector<CheckResult> rs{
                        check_quasi_coassoc(t, inst.modules[i], inst.modules[j],
                                            inst.modules[l]),
                        check_fusion_left(t, inst.modules[i], inst.modules[j],
                                          inst.modules[l]),
                        check_fusion_right(t, inst.modules[i], inst.modules[j],
                                           inst.modules[l])};
                    if (options.eq5_variant)
                        rs.push_back(check_fusion_right(t, inst.modules[i], inst.modules[j],
                                                        inst.modules[l], true));
                    return rs;
                });
            });
    }

    if (has_check(cfg, "twist") && rank >= 2)
        for_each_tuple(n, 2, [&](const std::vector<std::size_t>& ix) {
            auto i = ix[0], j = ix[1];
            tasks.push_back([&, i, j] {
                return one(check_drinfeld_twist_trivial(t, inst.modules[i], inst.modules[j]));
            });
        });

    if (has_check(cfg, "naturality") && rank >= 2)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto basis = intertwiner_basis(inst.modules[i], inst.modules[j]);
                if (basis.empty()) continue;
                for (std::size_t b = 0; b < basis.size(); ++b)
                    for (std::size_t filler = 0; filler < n; ++filler) {
                        if (rank >= 3)
                            for (std::size_t place = 0; place < 3; ++place)
                                tasks.push_back([&, i, j, b, filler, place] {
                                    std::vector<const ModuleRep*> fill{
                                        &inst.modules[filler], &inst.modules[filler]};
                                    return one(check_naturality(
                                        t, NaturalityKind::Associator,
                                        intertwiner_basis(inst.modules[i],
                                                          inst.modules[j])[b],
                                        inst.modules[i], inst.modules[j], place, fill));
                                });
                        for (std::size_t place = 0; place < 2; ++place)
                            tasks.push_back([&, i, j, b, filler, place] {
                                std::vector<const ModuleRep*> fill{&inst.modules[filler]};
                                return one(check_naturality(
                                    t, NaturalityKind::Braiding,
                                    intertwiner_basis(inst.modules[i], inst.modules[j])[b],
                                    inst.modules[i], inst.modules[j], place, fill));
                            });
                    }
            }

    if (has_check(cfg, "ribbon"))
        tasks.push_back([&] {
            bool s_odd_ok = cfg.require_S_odd;  // validation already passed when set
            return check_ribbon(t, mods, s_odd_ok);
        });

    // Execute, possibly on a worker pool; completion order never leaks into the
    // report because results are sorted afterwards.
    std::vector<std::vector<CheckResult>> buckets(tasks.size());
    unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            auto start = Clock::now();
            buckets[i] = tasks[i]();
            double ms = ms_since(start);
            for (auto& r : buckets[i]) r.duration_ms = ms / buckets[i].size();
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                auto start = Clock::now();
                buckets[i] = tasks[i]();
                double ms = ms_since(start);
                for (auto& r : buckets[i]) r.duration_ms = ms / buckets[i].size();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& bucket : buckets)
        for (auto& r : bucket) report.results.push_back(std::move(r));
    std::stable_sort(report.results.begin(), report.results.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.check_id != b.check_id) return a.check_id < b.check_id;
                         return a.objects < b.objects;
                     });
    for (const auto& r : report.results) {
        switch (r.status) {
            case CheckResult::Status::Pass: ++report.passed; break;
            case CheckResult::Status::Fail: ++report.failed; break;
            case CheckResult::Status::Error: ++report.errored; break;
        }
    }
    return report;
}

std::string format_validation(const ValidationReport& v) {
    std::ostringstream os;
    for (const auto& line : v.passed) os << "  ok   " << line << "\n";
    for (const auto& issue : v.issues)
        os << "  FAIL " << issue.check << " [" << issue.context << "]"
           << (issue.witness.empty() ? "" : ": " + issue.witness) << "\n";
    return os.str();
}

namespace {

std::string defect_summary(const Defect& d) {
    std::ostringstream os;
    os << (d.kind == Defect::Kind::Spectrum ? "spectrum {" : "maxdiff {");
    for (std::size_t i = 0; i < d.values.size(); ++i) os << (i ? ", " : "") << d.values[i];
    os << "}";
    return os.str();
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::ostringstream os;
        std::size_t w_id = 8, w_obj = 7;
        for (const auto& r : report.results) {
            w_id = std::max(w_id, r.check_id.size());
            w_obj = std::max(w_obj, r.objects.size());
        }
        os << "validation:\n" << format_validation(report.validation);
        os << "\n";
        os << std::left << std::setw(static_cast<int>(w_id) + 2) << "check"
           << std::setw(static_cast<int>(w_obj) + 2) << "objects"
           << std::setw(7) << "status" << "detail\n";
        for (const auto& r : report.results) {
            os << std::left << std::setw(static_cast<int>(w_id) + 2) << r.check_id
               << std::setw(static_cast<int>(w_obj) + 2) << r.objects
               << std::setw(7) << CheckResult::status_name(r.status);
            if (r.defect) os << defect_summary(*r.defect);
            if (!r.error_code.empty()) os << r.error_code;
            os << "\n";
        }
        os << "\nsummary: " << report.passed << " pass, " << report.failed << " fail, "
           << report.errored << " error (" << report.results.size() << " checks)\n";
        return os.str();
    }

    // jsonlike: one self-describing record per line, fixed field order
    std::ostringstream os;
    for (const auto& r : report.results) {
        nlohmann::ordered_json rec;
        rec["check_id"] = r.check_id;
        rec["objects"] = r.objects;
        rec["gamma"] = r.gamma.str();
        rec["status"] = CheckResult::status_name(r.status);
        if (r.defect) {
            rec["defect_kind"] =
                r.defect->kind == Defect::Kind::Spectrum ? "spectrum" : "maxdiff";
            rec["defect"] = nlohmann::ordered_json::array(
                {nlohmann::ordered_json(r.defect->values)});
        }
        if (r.witness) rec["witness"] = *r.witness;
        if (!r.error_code.empty()) rec["error"] = r.error_code;
        rec["duration_ms"] = r.duration_ms;
        os << rec.dump() << "\n";
    }
    nlohmann::ordered_json summary;
    summary["summary"] = {{"pass", report.passed},
                          {"fail", report.failed},
                          {"error", report.errored}};
    os << summary.dump() << "\n";
    return os.str();
}

} // namespace premon
