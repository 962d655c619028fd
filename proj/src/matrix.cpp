#include "premon/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace premon {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rat& value) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = value;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool RationalMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    Rat acc;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (bkj == 0) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rat& s) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rat& bkl = b.at(k, l);
                    if (bkl == 0) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    RationalMatrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat p = a.at(r, c);
        for (std::size_t j = 0; j < cols; ++j) a.at(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a.at(i, free_c);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Similarity reduction to upper Hessenberg form with exact pivoting.
RationalMatrix to_hessenberg(RationalMatrix h) {
    const std::size_t n = h.rows();
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && h.at(piv, c) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
        }
        Rat p = h.at(c + 1, c);
        for (std::size_t i = c + 2; i < n; ++i) {
            if (h.at(i, c) == 0) continue;
            Rat f = h.at(i, c) / p;
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= f * h.at(c + 1, j);
            for (std::size_t k = 0; k < n; ++k) h.at(k, c + 1) += f * h.at(k, i);
        }
    }
    return h;
}

} // namespace

std::vector<Rat> charpoly(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("charpoly: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {Rat(1)};
    RationalMatrix h = to_hessenberg(m);

    // p[k] = char poly of the leading k x k block, coefficients lowest degree first.
    std::vector<std::vector<Rat>> p(n + 1);
    p[0] = {Rat(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        // (x - h_{kk}) * p_{k-1}
        std::vector<Rat> cur(k + 1, Rat(0));
        const Rat& d = h.at(k - 1, k - 1);
        for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
            cur[i + 1] += p[k - 1][i];
            cur[i] -= d * p[k - 1][i];
        }
        // subdiagonal chain terms
        Rat chain(1);
        for (std::size_t i = k - 1; i >= 1; --i) {
            chain *= h.at(i, i - 1);
            if (chain == 0) break;
            Rat coef = h.at(i - 1, k - 1) * chain;
            if (coef == 0) continue;
            for (std::size_t j = 0; j < p[i - 1].size(); ++j) cur[j] -= coef * p[i - 1][j];
        }
        p[k] = std::move(cur);
    }
    std::vector<Rat> out(p[n].rbegin(), p[n].rend());
    return out;
}

} // namespace premon
