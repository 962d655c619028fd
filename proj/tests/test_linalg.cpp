#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "premon/matrix.hpp"
#include "premon/spectrum.hpp"

using namespace premon;

namespace {

RationalMatrix from_rows(std::vector<std::vector<long>> rows) {
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

// Brute-force det(xI - A) by cofactor expansion over polynomial entries.
// O(n!) but fine as an oracle for small n.
using Poly = std::vector<Rat>;  // ascending coefficients

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][j], det_poly(minor));
        if (j % 2) for (auto& c : term) c = -c;
        acc = poly_add(acc, term);
    }
    return acc;
}

Poly charpoly_oracle(const RationalMatrix& a) {
    std::size_t n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = Poly{-a.at(i, j)};
            if (i == j) m[i][j].push_back(Rat(1));
        }
    return det_poly(m);
}

void check_charpoly_against_oracle(const RationalMatrix& a) {
    Poly want = charpoly_oracle(a);  // ascending
    std::vector<Rat> got = charpoly(a);  // descending
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == want[want.size() - 1 - i]);
}

} // namespace

TEST_CASE("basic arithmetic and identities") {
    auto a = from_rows({{1, 2}, {3, 4}});
    auto b = from_rows({{0, 1}, {1, 0}});
    CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
    CHECK((a + b - b) == a);
    CHECK(RationalMatrix::identity(3).is_identity());
    CHECK(RationalMatrix(2, 2).is_zero());
    CHECK(a.transpose().transpose() == a);
    CHECK((a * Rat(1, 2)).at(0, 1) == Rat(1));
}

TEST_CASE("kron dimensions and mixed-product rule") {
    auto a = from_rows({{1, 2}, {3, 4}});
    auto b = from_rows({{0, 1, 0}, {2, 0, 1}, {0, 0, 3}});
    auto c = from_rows({{2, 0}, {1, 1}});
    auto d = from_rows({{1, 1, 0}, {0, 1, 0}, {1, 0, 1}});
    auto lhs = kron(a, b) * kron(c, d);
    auto rhs = kron(a * c, b * d);
    CHECK(lhs.rows() == 6);
    CHECK(lhs == rhs);
}

TEST_CASE("inverse round trip and singular detection") {
    auto a = from_rows({{2, 1, 0}, {1, 1, 1}, {0, 3, 1}});
    CHECK((a * inverse(a)).is_identity());
    CHECK((inverse(a) * a).is_identity());
    auto s = from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(inverse(s), std::domain_error);
}

TEST_CASE("nullspace spans the kernel") {
    auto m = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Rat s(0);
            for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
            CHECK(s == 0);
        }
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
}

TEST_CASE("charpoly matches the cofactor oracle") {
    check_charpoly_against_oracle(from_rows({{5}}));
    check_charpoly_against_oracle(from_rows({{1, 2}, {3, 4}}));
    check_charpoly_against_oracle(from_rows({{0, 1, 0}, {0, 0, 1}, {6, -11, 6}}));
    // random dense rationals
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Rat v(num(rng), den(rng));
                v.canonicalize();
                m.at(i, j) = v;
            }
        check_charpoly_against_oracle(m);
    }
}

TEST_CASE("charpoly of diagonal matrix factors through eigenvalues") {
    auto d = from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, -1}});
    // (x-2)^2 (x+1) = x^3 - 3x^2 + 4
    std::vector<Rat> want{Rat(1), Rat(-3), Rat(0), Rat(4)};
    CHECK(charpoly(d) == want);
}

TEST_CASE("integer_spectrum: projector algebra") {
    // diagonalizable, non-diagonal: eigenvalues 1 and 3
    auto m = from_rows({{2, 1}, {1, 2}});
    Spectrum s = integer_spectrum(m);
    REQUIRE(s.eigenvalues == std::vector<long>{1, 3});
    RationalMatrix sum(2, 2), rebuilt(2, 2);
    for (std::size_t i = 0; i < s.projectors.size(); ++i) {
        const auto& p = s.projectors[i];
        CHECK((p * p) == p);
        sum = sum + p;
        rebuilt = rebuilt + p * Rat(s.eigenvalues[i]);
        for (std::size_t j = 0; j < s.projectors.size(); ++j)
            if (i != j) CHECK((p * s.projectors[j]).is_zero());
    }
    CHECK(sum.is_identity());
    CHECK(rebuilt == m);
}

TEST_CASE("integer_spectrum: failure modes carry witnesses") {
    auto half = from_rows({{1, 0}, {0, 1}}) * Rat(3, 8);
    try {
        integer_spectrum(half);
        FAIL("expected NonIntegerSpectrum");
    } catch (const SpectrumError& e) {
        CHECK(e.kind == SpectrumError::Kind::NonIntegerSpectrum);
        CHECK(e.witness == "3/8");
    }
    auto jordan = from_rows({{1, 1}, {0, 1}});
    try {
        integer_spectrum(jordan);
        FAIL("expected NonSemisimple");
    } catch (const SpectrumError& e) {
        CHECK(e.kind == SpectrumError::Kind::NonSemisimple);
    }
}

TEST_CASE("rational_eigenvalues finds non-integer spectra") {
    auto m = from_rows({{1, 0}, {0, 1}}) * Rat(1, 2);
    auto vals = rational_eigenvalues(m);
    REQUIRE(vals.has_value());
    CHECK(*vals == std::vector<Rat>{Rat(1, 2)});
    // rotation matrix: no rational eigenvalues at all
    auto rot = from_rows({{0, -1}, {1, 0}});
    CHECK(!rational_eigenvalues(rot).has_value());
}

TEST_CASE("gamma_power: exact rational base") {
    auto m = from_rows({{2, 1}, {1, 2}});  // eigenvalues 1, 3
    GammaValue g = GammaValue::exact(Rat(-1));
    auto p = gamma_power(m, g);
    const auto& r = std::get<RationalMatrix>(p);
    // (-1)^1 P1 + (-1)^3 P3 = -I
    CHECK(r == RationalMatrix::scalar(2, Rat(-1)));

    GammaValue g2 = GammaValue::exact(Rat(2));
    const auto r2 = std::get<RationalMatrix>(gamma_power(m, g2));
    CHECK((r2 * r2) == std::get<RationalMatrix>(gamma_power(m * Rat(2), g2)));
}

TEST_CASE("gamma_power: negative eigenvalues invert exactly") {
    auto m = from_rows({{-2, 0}, {0, 3}});
    const auto r = std::get<RationalMatrix>(gamma_power(m, GammaValue::exact(Rat(2))));
    CHECK(r.at(0, 0) == Rat(1, 4));
    CHECK(r.at(1, 1) == Rat(8));
}

TEST_CASE("gamma_power: complex mode") {
    auto m = from_rows({{1, 0}, {0, 2}});
    GammaValue g = GammaValue::approx({0.0, 1.0});  // gamma = i
    const auto c = std::get<ComplexMatrix>(gamma_power(m, g));
    CHECK(std::abs(c.at(0, 0) - std::complex<double>(0, 1)) < 1e-9);
    CHECK(std::abs(c.at(1, 1) - std::complex<double>(-1, 0)) < 1e-9);
}

TEST_CASE("GammaValue invariants") {
    CHECK_THROWS_AS(GammaValue::exact(Rat(0)), SpectrumError);
    CHECK(GammaValue::exact(Rat(-1)).reciprocal() == GammaValue::exact(Rat(-1)));
    CHECK(GammaValue::exact(Rat(2, 3)).str() == "2/3");
}

TEST_CASE("operator variant helpers") {
    OperatorMatrix a = from_rows({{1, 1}, {0, 1}});
    OperatorMatrix b = from_rows({{1, -1}, {0, 1}});
    CHECK(op_is_identity(op_mul(a, b)));
    CHECK(op_equal(op_inverse(a), b));
    CHECK(op_rows(op_kron(a, b)) == 4);
}
