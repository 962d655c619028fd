#ifndef PREMON_CONFIG_HPP
#define PREMON_CONFIG_HPP

#include <set>
#include <string>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/spectrum.hpp"

namespace premon {

inline const std::set<std::string>& known_checks() {
    static const std::set<std::string> s{"pentagon", "hexagons",   "symmetry",
                                         "q_square", "quasi",      "naturality",
                                         "ribbon",   "twist"};
    return s;
}

struct RunConfig {
    // algebra: builtin name, file path, or inline presentation text
    std::string algebra_name;     // "gl1" / "sl2" when builtin
    std::string algebra_file;     // presentation file path, when set
    std::string algebra_inline;   // presentation text embedded in the config

    std::vector<long> gl1_weights;
    std::vector<long> sl2_two_j;
    std::string modules_file;     // generic matrices file (json), optional

    std::string k_expr;
    GammaValue gamma = GammaValue::exact(Rat(-1));
    bool require_S_odd = false;

    std::vector<std::string> checks;  // sorted, unique
    int max_tuple_rank = 4;

    bool operator==(const RunConfig& o) const {
        return algebra_name == o.algebra_name && algebra_file == o.algebra_file &&
               algebra_inline == o.algebra_inline && gl1_weights == o.gl1_weights &&
               sl2_two_j == o.sl2_two_j && modules_file == o.modules_file &&
               k_expr == o.k_expr && gamma == o.gamma &&
               require_S_odd == o.require_S_odd && checks == o.checks &&
               max_tuple_rank == o.max_tuple_rank;
    }
};

GammaValue parse_gamma(const std::string& text);

RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& config);

// Materializes the algebra and module list described by the config.
struct Instance {
    AlgebraPtr algebra;
    std::vector<ModuleRep> modules;
    NCPolynomial k;
};
Instance build_instance(const RunConfig& config);

} // namespace premon

#endif
