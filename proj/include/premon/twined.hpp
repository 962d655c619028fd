#ifndef PREMON_TWINED_HPP
#define PREMON_TWINED_HPP

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "premon/algebra.hpp"
#include "premon/spectrum.hpp"

namespace premon {

// Central element candidate; centrality and S-parity are verified on the
// configured modules by validate_central, never assumed.
struct CentralElement {
    NCPolynomial poly;
    enum class SParity { Odd, Even, Unchecked } declared_S_parity = SParity::Unchecked;
};

// Exact operator on an ordered tensor product of modules.
struct TensorOperator {
    std::vector<std::size_t> leg_dims;
    OperatorMatrix matrix;

    std::size_t total_dim() const {
        std::size_t d = 1;
        for (auto l : leg_dims) d *= l;
        return d;
    }
};

// Matrix on a flat Kronecker space, tagged with source/target bracketing words.
struct Morphism {
    std::string source;
    std::string target;
    TensorOperator op;
};

struct ValidationIssue {
    std::string check;    // e.g. "centrality", "counit", "integer_spectrum", "S_parity"
    std::string context;  // module label / generator
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<std::string> passed;  // human-readable lines for checks that held
    bool ok() const { return issues.empty(); }
};

// kappa = K (x) (I (x) K + K (x) I - Delta(K)), a 3-leg element.
TensorElement kappa_element(const NCPolynomial& k);

// Twining data: the central element, gamma, and synchronized operator caches.
class TwinedData {
public:
    TwinedData(CentralElement k, GammaValue gamma)
        : k_(std::move(k)), gamma_(std::move(gamma)) {}

    const CentralElement& k() const { return k_; }
    const NCPolynomial& k_poly() const { return k_.poly; }
    const GammaValue& gamma() const { return gamma_; }

    // Spectrum of an evaluated exponent element, memoized by (element, modules).
    const Spectrum& exponent_spectrum(const TensorElement& exponent,
                                      const std::vector<const ModuleRep*>& modules) const;

    // gamma^(exponent evaluated on modules); set invert for the inverse operator.
    TensorOperator power(const TensorElement& exponent,
                         const std::vector<const ModuleRep*>& modules,
                         bool invert = false) const;

private:
    CentralElement k_;
    GammaValue gamma_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, Spectrum> spectra_;
};

ValidationReport validate_central(const NCPolynomial& k,
                                  const std::vector<const ModuleRep*>& modules,
                                  bool require_S_odd);

TensorOperator build_kappa(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                           const ModuleRep& w);

// The associator matrix a_{U,V,W} (and its inverse when invert is set).
Morphism build_phitilde(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                        const ModuleRep& w, bool invert = false);

TensorOperator build_rtilde(const TwinedData& t, const ModuleRep& u, const ModuleRep& v);

// sigma_{U,V} = flip after the R-matrix action.
Morphism braiding(const TwinedData& t, const ModuleRep& u, const ModuleRep& v);

// Five-factor product of coproduct-inserted twining powers on (U,V,W,Z).
TensorOperator build_xi(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                        const ModuleRep& w, const ModuleRep& z);

enum class QMethod { Composition, Xi };

Morphism q_morphism(const TwinedData& t, const ModuleRep& u, const ModuleRep& v,
                    const ModuleRep& w, const ModuleRep& z, QMethod method);

// (rho_U, lambda_U): identity matrices under the flat-space convention.
std::pair<Morphism, Morphism> unit_isos(const TwinedData& t, const ModuleRep& u);

// Permutation matrix sending u (x) v to v (x) u.
RationalMatrix flip_matrix(std::size_t dim_u, std::size_t dim_v);

} // namespace premon

#endif
