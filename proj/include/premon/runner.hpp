#ifndef PREMON_RUNNER_HPP
#define PREMON_RUNNER_HPP

#include <string>
#include <vector>

#include "premon/config.hpp"
#include "premon/verifier.hpp"

namespace premon {

struct ValidationFailure : std::runtime_error {
    ValidationReport report;
    explicit ValidationFailure(ValidationReport r)
        : std::runtime_error("central-element validation failed"), report(std::move(r)) {}
};

struct RunOptions {
    unsigned jobs = 1;
    bool eq5_variant = false;  // also run the exploratory fourth-relation variant
};

struct RunReport {
    std::string config_echo;
    ValidationReport validation;
    std::vector<CheckResult> results;  // deterministic order
    std::size_t passed = 0, failed = 0, errored = 0;
};

// Validates K, then runs every selected suite over all module tuples up to
// max_tuple_rank. Throws ValidationFailure when validation finds any issue.
RunReport run(const RunConfig& config, const RunOptions& options = {});

// Runs only validate_central for the config.
ValidationReport validate_only(const RunConfig& config);

enum class ReportFormat { Text, JsonLike };

std::string emit_report(const RunReport& report, ReportFormat format);
std::string format_validation(const ValidationReport& report);

} // namespace premon

#endif
