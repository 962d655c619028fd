#ifndef PREMON_MATRIX_HPP
#define PREMON_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "premon/rational.hpp"

namespace premon {

// Dense exact-rational matrix. Desk-scale dimensions only; no sparsity.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix scalar(std::size_t n, const Rat& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rat& s) const;
    RationalMatrix operator-() const { return *this * Rat(-1); }

    RationalMatrix transpose() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

// Throws std::domain_error on singular input.
RationalMatrix inverse(const RationalMatrix& m);

// Basis of the right nullspace, from the reduced row echelon form.
std::vector<std::vector<Rat>> nullspace(const RationalMatrix& m);

// Monic characteristic polynomial, coefficients highest degree first.
// Hessenberg reduction followed by the leading-minor recurrence.
std::vector<Rat> charpoly(const RationalMatrix& m);

} // namespace premon

#endif
