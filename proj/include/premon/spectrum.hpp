#ifndef PREMON_SPECTRUM_HPP
#define PREMON_SPECTRUM_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "premon/matrix.hpp"

namespace premon {

struct SpectrumError : std::runtime_error {
    enum class Kind { NonIntegerSpectrum, NonSemisimple, ZeroGamma };
    Kind kind;
    std::string witness;
    SpectrumError(Kind k, std::string w)
        : std::runtime_error(describe(k) + (w.empty() ? "" : " (witness " + w + ")")),
          kind(k), witness(std::move(w)) {}
    static std::string describe(Kind k) {
        switch (k) {
            case Kind::NonIntegerSpectrum: return "NonIntegerSpectrum";
            case Kind::NonSemisimple: return "NonSemisimple";
            case Kind::ZeroGamma: return "ZeroGamma";
        }
        return "SpectrumError";
    }
};

// Integer eigenvalues with their spectral projectors.
struct Spectrum {
    std::vector<long> eigenvalues;           // distinct, ascending
    std::vector<RationalMatrix> projectors;  // matching order
};

// Decomposes a semisimple matrix with integer spectrum; throws SpectrumError
// otherwise. Projectors come from Lagrange interpolation on the eigenvalues.
Spectrum integer_spectrum(const RationalMatrix& m);

// All rational eigenvalues (distinct), or nothing if the characteristic
// polynomial has an irreducible non-linear factor. Defect reporting only.
std::optional<std::vector<Rat>> rational_eigenvalues(const RationalMatrix& m);

// The twining base gamma: exact nonzero rational, or an illustrative complex value.
class GammaValue {
public:
    static GammaValue exact(const Rat& v) {
        if (v == 0) throw SpectrumError(SpectrumError::Kind::ZeroGamma, "");
        return GammaValue(v);
    }
    static GammaValue approx(std::complex<double> v) {
        if (v == std::complex<double>(0.0, 0.0))
            throw SpectrumError(SpectrumError::Kind::ZeroGamma, "");
        return GammaValue(v);
    }

    bool is_exact() const { return std::holds_alternative<Rat>(value_); }
    const Rat& rational() const { return std::get<Rat>(value_); }
    std::complex<double> complex_value() const {
        if (is_exact()) {
            const Rat& r = rational();
            return {r.get_num().get_d() / r.get_den().get_d(), 0.0};
        }
        return std::get<std::complex<double>>(value_);
    }
    GammaValue reciprocal() const {
        if (is_exact()) return exact(Rat(1) / rational());
        return approx(1.0 / std::get<std::complex<double>>(value_));
    }
    std::string str() const;
    bool operator==(const GammaValue& o) const { return value_ == o.value_; }

private:
    explicit GammaValue(Rat v) : value_(std::move(v)) {}
    explicit GammaValue(std::complex<double> v) : value_(v) {}
    std::variant<Rat, std::complex<double>> value_;
};

// Dense complex matrix for the illustrative complex-gamma mode.
class ComplexMatrix {
public:
    static constexpr double kTol = 1e-9;

    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rational(const RationalMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::complex<double>& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const std::complex<double>& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    bool approx_equal(const ComplexMatrix& o, double tol = kTol) const;
    bool is_identity(double tol = kTol) const;
    double max_abs_diff(const ComplexMatrix& o) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::complex<double>> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& m);

// Exact matrix or complex matrix, depending on the gamma mode upstream.
using OperatorMatrix = std::variant<RationalMatrix, ComplexMatrix>;

OperatorMatrix op_mul(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_kron(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix op_inverse(const OperatorMatrix& m);
bool op_equal(const OperatorMatrix& a, const OperatorMatrix& b);
bool op_is_identity(const OperatorMatrix& m);
std::size_t op_rows(const OperatorMatrix& m);

// gamma^M = sum over eigenvalues of gamma^lambda P_lambda.
// Exact for rational gamma, complex otherwise; requires integer semisimple spectrum.
OperatorMatrix gamma_power(const RationalMatrix& m, const GammaValue& gamma);
OperatorMatrix gamma_power(const Spectrum& spec, const GammaValue& gamma);

} // namespace premon

#endif
