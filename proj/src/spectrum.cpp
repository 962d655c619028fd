#include "premon/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace premon {

namespace {

// Horner evaluation, coefficients highest degree first.
Rat poly_eval(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (const auto& c : coeffs) acc = acc * x + c;
    return acc;
}

// Divides by (x - root); returns quotient, assumes exact division.
std::vector<Rat> deflate(const std::vector<Rat>& coeffs, const Rat& root) {
    std::vector<Rat> q(coeffs.size() - 1);
    Rat carry(0);
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        carry = coeffs[i] + carry * root;
        q[i] = carry;
    }
    return q;
}

// Infinity-norm bound on eigenvalue magnitude.
long eigen_bound(const RationalMatrix& m) {
    Rat best(0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s(0);
        for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m.at(i, j));
        if (s > best) best = s;
    }
    mpz_class b = best.get_num() / best.get_den() + 1;
    return b.get_si();
}

// Divisors of |n| up to the value itself; witness search only, inputs stay small
// because denominators come from the configured K expressions.
std::vector<mpz_class> divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            ds.push_back(a / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

// Attempts to name a non-integer rational root of the residual factor.
std::string rational_root_witness(const std::vector<Rat>& coeffs) {
    // clear denominators
    mpz_class lcm(1);
    for (const auto& c : coeffs) {
        mpz_class d = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ic;
    ic.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rat s = c * Rat(lcm);
        ic.push_back(s.get_num());
    }
    while (ic.size() > 1 && ic.back() == 0) ic.pop_back();  // drop trailing zero roots
    if (ic.empty() || ic.front() == 0) return "";
    const mpz_class& lead = ic.front();
    const mpz_class& constant = ic.back();
    if (constant == 0) return "";
    auto ps = divisors(constant);
    auto qs = divisors(lead);
    for (const auto& q : qs) {
        if (q == 1) continue;  // integer candidates were already exhausted
        for (const auto& p : ps) {
            for (int sign : {1, -1}) {
                Rat cand(sign * p, q);
                cand.canonicalize();
                if (cand.get_den() == 1) continue;
                if (poly_eval(coeffs, cand) == 0) return rat_str(cand);
            }
        }
    }
    return "";
}

} // namespace

Spectrum integer_spectrum(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("integer_spectrum: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rat> cp = charpoly(m);
    long bound = eigen_bound(m);

    std::vector<long> eigenvalues;
    std::vector<Rat> residual = cp;
    for (long cand = -bound; cand <= bound; ++cand) {
        Rat x(cand);
        while (residual.size() > 1 && poly_eval(residual, x) == 0) {
            if (eigenvalues.empty() || eigenvalues.back() != cand)
                eigenvalues.push_back(cand);
            residual = deflate(residual, x);
        }
    }
    if (residual.size() > 1) {
        std::string w = rational_root_witness(residual);
        if (w.empty()) {
            std::ostringstream os;
            os << "irrational or complex root of residual charpoly factor of degree "
               << residual.size() - 1;
            w = os.str();
        }
        throw SpectrumError(SpectrumError::Kind::NonIntegerSpectrum, w);
    }

    // Semisimplicity: product of (M - lambda I) over distinct eigenvalues vanishes.
    RationalMatrix prod = RationalMatrix::identity(n);
    for (long ev : eigenvalues) prod = prod * (m - RationalMatrix::scalar(n, Rat(ev)));
    if (!prod.is_zero()) {
        std::ostringstream os;
        os << "minimal polynomial has a repeated factor; eigenvalues";
        for (long ev : eigenvalues) os << " " << ev;
        throw SpectrumError(SpectrumError::Kind::NonSemisimple, os.str());
    }

    Spectrum spec;
    spec.eigenvalues = eigenvalues;
    for (long ev : eigenvalues) {
        RationalMatrix p = RationalMatrix::identity(n);
        for (long mu : eigenvalues) {
            if (mu == ev) continue;
            p = p * (m - RationalMatrix::scalar(n, Rat(mu)));
            Rat inv(1, ev - mu);
            inv.canonicalize();  // mpq_class(a, b) does not canonicalize b < 0
            p = p * inv;
        }
        spec.projectors.push_back(std::move(p));
    }
    return spec;
}

std::optional<std::vector<Rat>> rational_eigenvalues(const RationalMatrix& m) {
    if (!m.square()) return std::nullopt;
    std::vector<Rat> residual = charpoly(m);
    std::vector<Rat> roots;
    long bound = eigen_bound(m);
    auto try_root = [&](const Rat& cand) {
        bool hit = false;
        while (residual.size() > 1 && poly_eval(residual, cand) == 0) {
            residual = deflate(residual, cand);
            hit = true;
        }
        if (hit) roots.push_back(cand);
        return hit;
    };
    for (long cand = -bound; cand <= bound; ++cand) try_root(Rat(cand));
    while (residual.size() > 1) {
        // rational-root theorem on the denominator-cleared residual
        mpz_class lcm(1);
        for (const auto& c : residual) {
            mpz_class d = c.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
        std::vector<mpz_class> ic;
        for (const auto& c : residual) ic.push_back(Rat(c * Rat(lcm)).get_num());
        if (ic.back() == 0) {
            try_root(Rat(0));
            continue;
        }
        bool found = false;
        for (const auto& q : divisors(ic.front())) {
            for (const auto& p : divisors(ic.back())) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * p, q);
                    cand.canonicalize();
                    if (try_root(cand)) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::string GammaValue::str() const {
    if (is_exact()) return rat_str(rational());
    std::ostringstream os;
    auto z = complex_value();
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rational(const RationalMatrix& r) {
    ComplexMatrix m(r.rows(), r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            m.at(i, j) = r.at(i, j).get_num().get_d() / r.at(i, j).get_den().get_d();
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("complex mul: shape mismatch");
    ComplexMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            auto aik = at(i, k);
            if (aik == std::complex<double>(0.0)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("complex add: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("complex sub: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return max_abs_diff(o) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        worst = std::max(worst, std::abs(data_[i] - o.data_[i]));
    return worst;
}

bool ComplexMatrix::is_identity(double tol) const {
    if (rows_ != cols_) return false;
    return approx_equal(identity(rows_), tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return r;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    ComplexMatrix a = m, inv = ComplexMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a.at(i, col)) > std::abs(a.at(piv, col))) piv = i;
        if (std::abs(a.at(piv, col)) < 1e-14)
            throw std::domain_error("inverse: singular complex matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        auto p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            auto f = a.at(i, col);
            if (f == std::complex<double>(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

ComplexMatrix promote(const OperatorMatrix& m) {
    if (std::holds_alternative<RationalMatrix>(m))
        return ComplexMatrix::from_rational(std::get<RationalMatrix>(m));
    return std::get<ComplexMatrix>(m);
}

bool both_exact(const OperatorMatrix& a, const OperatorMatrix& b) {
    return std::holds_alternative<RationalMatrix>(a) &&
           std::holds_alternative<RationalMatrix>(b);
}

} // namespace

OperatorMatrix op_mul(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (both_exact(a, b))
        return std::get<RationalMatrix>(a) * std::get<RationalMatrix>(b);
    return promote(a) * promote(b);
}

OperatorMatrix op_kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (both_exact(a, b))
        return kron(std::get<RationalMatrix>(a), std::get<RationalMatrix>(b));
    return kron(promote(a), promote(b));
}

OperatorMatrix op_inverse(const OperatorMatrix& m) {
    if (std::holds_alternative<RationalMatrix>(m))
        return inverse(std::get<RationalMatrix>(m));
    return inverse(std::get<ComplexMatrix>(m));
}

bool op_equal(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (both_exact(a, b))
        return std::get<RationalMatrix>(a) == std::get<RationalMatrix>(b);
    return promote(a).approx_equal(promote(b));
}

bool op_is_identity(const OperatorMatrix& m) {
    if (std::holds_alternative<RationalMatrix>(m))
        return std::get<RationalMatrix>(m).is_identity();
    return std::get<ComplexMatrix>(m).is_identity();
}

std::size_t op_rows(const OperatorMatrix& m) {
    if (std::holds_alternative<RationalMatrix>(m)) return std::get<RationalMatrix>(m).rows();
    return std::get<ComplexMatrix>(m).rows();
}

OperatorMatrix gamma_power(const Spectrum& spec, const GammaValue& gamma) {
    if (spec.projectors.empty())
        throw std::invalid_argument("gamma_power: empty spectrum");
    const std::size_t n = spec.projectors.front().rows();
    if (gamma.is_exact()) {
        RationalMatrix out(n, n);
        for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
            out = out + spec.projectors[i] * rat_pow(gamma.rational(), spec.eigenvalues[i]);
        return out;
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        auto w = std::pow(gamma.complex_value(),
                          std::complex<double>(double(spec.eigenvalues[i]), 0.0));
        ComplexMatrix p = ComplexMatrix::from_rational(spec.projectors[i]);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += w * p.at(r, c);
    }
    return out;
}

OperatorMatrix gamma_power(const RationalMatrix& m, const GammaValue& gamma) {
    return gamma_power(integer_spectrum(m), gamma);
}

} // namespace premon
