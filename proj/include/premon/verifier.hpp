#ifndef PREMON_VERIFIER_HPP
#define PREMON_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "premon/twined.hpp"

namespace premon {

// Defect witness for a failed check: spectrum of path1 * path2^-1 when that
// ratio is invertible with rational spectrum, max entry difference otherwise.
struct Defect {
    enum class Kind { Spectrum, MaxDiff } kind;
    std::vector<std::string> values;  // "p/q" strings, or decimals in complex mode
};

struct CheckResult {
    std::string check_id;
    std::string objects;
    GammaValue gamma;
    enum class Status { Pass, Fail, Error } status;
    std::optional<Defect> defect;
    std::optional<std::size_t> witness;  // basis vector index, when meaningful
    std::string error_code;              // set when status == Error
    double duration_ms = 0.0;

    static const char* status_name(Status s) {
        switch (s) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            case Status::Error: return "error";
        }
        return "?";
    }
};

struct RibbonData {
    std::map<std::string, OperatorMatrix> u_per_module;
    std::map<std::string, OperatorMatrix> v_per_module;
    NCPolynomial alpha = NCPolynomial::one();
    NCPolynomial beta = NCPolynomial::one();
};

// Pentagon defect q and the composition-vs-xi agreement, as two results.
std::vector<CheckResult> check_pentagon(const TwinedData& t, const ModuleRep& u,
                                        const ModuleRep& v, const ModuleRep& w,
                                        const ModuleRep& z);

CheckResult check_hexagon_i(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                            const ModuleRep& w);
CheckResult check_hexagon_ii(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                             const ModuleRep& w);
CheckResult check_q_sigma_square(const TwinedData& t, const ModuleRep& u,
                                 const ModuleRep& v, const ModuleRep& w,
                                 const ModuleRep& z);
CheckResult check_symmetry(const TwinedData& t, const ModuleRep& u, const ModuleRep& v);

enum class NaturalityKind { Associator, Braiding };

// f: from -> to must be an intertwiner; `placement` names the tensor slot it
// occupies, the rest are filled with `fillers` in order.
CheckResult check_naturality(const TwinedData& t, NaturalityKind kind,
                             const RationalMatrix& f, const ModuleRep& from,
                             const ModuleRep& to, std::size_t placement,
                             const std::vector<const ModuleRep*>& fillers);

enum class UMethod { SpectralExpansion, ClosedForm };

// The canonical element u on one module: closed form gamma^(-K^2), or the
// spectral expansion of sum S(b_j) a_j over the R-matrix legs.
OperatorMatrix compute_u(const TwinedData& t, const ModuleRep& v, UMethod method);

// Ribbon conditions (i)-(iv) plus the S^2 conjugation identity, per module.
// `s_odd_ok` gates the whole block: the expansion needs S(K) = -K.
std::vector<CheckResult> check_ribbon(const TwinedData& t,
                                      const std::vector<const ModuleRep*>& modules,
                                      bool s_odd_ok, RibbonData* data_out = nullptr);

CheckResult check_drinfeld_twist_trivial(const TwinedData& t, const ModuleRep& u,
                                         const ModuleRep& v);

// The four quasi-bialgebra relations.
CheckResult check_quasi_coassoc(const TwinedData& t, const ModuleRep& u,
                                const ModuleRep& v, const ModuleRep& w);
CheckResult check_quasi_triangular(const TwinedData& t, const ModuleRep& u,
                                   const ModuleRep& v);
CheckResult check_fusion_left(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                              const ModuleRep& w);
// `variant` swaps the second factor for a permuted non-inverse coassociator;
// exploratory only, the printed form is the default.
CheckResult check_fusion_right(const TwinedData& t, const ModuleRep& u,
                               const ModuleRep& v, const ModuleRep& w,
                               bool variant = false);

} // namespace premon

#endif
