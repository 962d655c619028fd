#ifndef PREMON_ALGEBRA_HPP
#define PREMON_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "premon/matrix.hpp"
#include "premon/ncpoly.hpp"

namespace premon {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lie algebra by basis labels and structure constants.
class LieAlgebraPresentation {
public:
    // Brackets map ordered index pairs to sparse vectors {basis index -> coeff};
    // construction completes antisymmetrically and verifies the Jacobi identity.
    LieAlgebraPresentation(std::vector<std::string> basis,
                           std::map<std::pair<std::size_t, std::size_t>,
                                    std::map<std::size_t, Rat>> brackets);

    const std::vector<std::string>& basis() const { return basis_; }
    std::size_t index_of(const std::string& name) const;
    bool has_generator(const std::string& name) const;

    // [x_i, x_j] as a coefficient vector over the basis.
    std::vector<Rat> bracket(std::size_t i, std::size_t j) const;

private:
    void check_jacobi() const;

    std::vector<std::string> basis_;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rat>> brackets_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebraPresentation>;

// Finite-dimensional module: one exact matrix per basis element.
class ModuleRep {
public:
    ModuleRep(AlgebraPtr algebra, std::size_t dim,
              std::map<std::string, RationalMatrix> action, std::string label);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const RationalMatrix& action(const std::string& generator) const;

private:
    void check_brackets() const;

    AlgebraPtr algebra_;
    std::size_t dim_;
    std::map<std::string, RationalMatrix> action_;
    std::string label_;
};

// Parses the [algebra] presentation text format. Builtin names gl1/sl2 bypass it.
AlgebraPtr load_algebra(const std::string& presentation_text);
AlgebraPtr builtin_gl1();
AlgebraPtr builtin_sl2();

// 1-dimensional gl(1) weight module, N acting as n.
ModuleRep build_gl1_module(long n);
// Highest-weight sl(2) module of dimension two_j + 1, h diagonal.
ModuleRep build_sl2_module(unsigned long two_j);
// 1-dimensional module with all generators acting as 0.
ModuleRep trivial_module(const AlgebraPtr& algebra);
// Tensor product via Delta(x) = x (x) I + I (x) x.
ModuleRep tensor_modules(const ModuleRep& u, const ModuleRep& v);

RationalMatrix evaluate(const NCPolynomial& p, const ModuleRep& v);
RationalMatrix evaluate_legs(const TensorElement& t, const std::vector<const ModuleRep*>& modules);

// Basis of module maps U -> V commuting with every generator action.
std::vector<RationalMatrix> intertwiner_basis(const ModuleRep& u, const ModuleRep& v);

} // namespace premon

#endif
