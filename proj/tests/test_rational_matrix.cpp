#include <doctest.h>

#include <random>
#include <vector>

#include "coxdp/errors.hpp"
#include "coxdp/matrix.hpp"
#include "coxdp/rational.hpp"

using coxdp::Rational;
using coxdp::RationalMatrix;

namespace {

// Plain rational Gaussian elimination, used only as a cross-check for
// the fraction-free path.
std::size_t naive_rank(RationalMatrix m)
{
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
        std::size_t piv = rk;
        while (piv < m.rows() && m.at(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        m.swap_rows(rk, piv);
        for (std::size_t i = rk + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col) / m.at(rk, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(rk, j);
        }
        ++rk;
    }
    return rk;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long num = static_cast<long>(rng() % 21) - 10;
            long den = static_cast<long>(rng() % 4) + 1;
            m.at(i, j) = Rational(num) / Rational(den);
        }
    return m;
}

} // namespace

TEST_CASE("parse_rational accepts canonical and reducible forms")
{
    CHECK(coxdp::parse_rational("3") == Rational(3));
    CHECK(coxdp::parse_rational("-7/2") == Rational(-7) / Rational(2));
    CHECK(coxdp::parse_rational("4/6") == Rational(2) / Rational(3));
    CHECK(coxdp::to_string(coxdp::parse_rational("4/6")) == "2/3");
    CHECK(coxdp::to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(coxdp::parse_rational("1/0"), coxdp::input_error);
    CHECK_THROWS_AS(coxdp::parse_rational("a"), coxdp::input_error);
    CHECK_THROWS_AS(coxdp::parse_rational(""), coxdp::input_error);
    CHECK_THROWS_AS(coxdp::parse_rational("1.5"), coxdp::input_error);
}

TEST_CASE("rank of identity and zero matrices")
{
    RationalMatrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        id.at(i, i) = 1;
    CHECK(coxdp::rank(id) == 4);

    RationalMatrix z(3, 5);
    CHECK(coxdp::rank(z) == 0);
}

TEST_CASE("rank of a Vandermonde matrix is full")
{
    // Nodes 1..4: determinant is a product of differences, nonzero.
    RationalMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        Rational x(static_cast<long>(i) + 1);
        Rational p(1);
        for (std::size_t j = 0; j < 4; ++j) {
            m.at(i, j) = p;
            p *= x;
        }
    }
    CHECK(coxdp::rank(m) == 4);
}

TEST_CASE("rank detects duplicated and combined rows")
{
    RationalMatrix m(3, 3);
    // Row 2 = row 0 + row 1.
    long a[2][3] = {{1, 2, 3}, {4, 5, 6}};
    for (std::size_t j = 0; j < 3; ++j) {
        m.at(0, j) = Rational(a[0][j]);
        m.at(1, j) = Rational(a[1][j]);
        m.at(2, j) = Rational(a[0][j] + a[1][j]);
    }
    CHECK(coxdp::rank(m) == 2);
}

TEST_CASE("fraction-free rank agrees with plain elimination on random input")
{
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 8;
        std::size_t cols = 1 + rng() % 8;
        RationalMatrix m = random_matrix(rng, rows, cols);
        // Mix in dependent rows half the time to exercise rank deficiency.
        if (rows >= 2 && rng() % 2 == 0)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(rows - 1, j) = m.at(0, j) + m.at(rows / 2, j);
        CHECK(coxdp::rank(m) == naive_rank(m));
    }
}

TEST_CASE("rref produces a reduced echelon form")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix m = random_matrix(rng, 4, 6);
        RationalMatrix r = coxdp::rref(m);
        REQUIRE(r.rows() == m.rows());
        REQUIRE(r.cols() == m.cols());
        // Pivots are 1, strictly right of the previous pivot, and alone
        // in their column.
        std::size_t prev = 0;
        bool first = true;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            std::size_t j = 0;
            while (j < r.cols() && r.at(i, j) == 0)
                ++j;
            if (j == r.cols())
                continue;
            CHECK(r.at(i, j) == 1);
            if (!first)
                CHECK(j > prev);
            prev = j;
            first = false;
            for (std::size_t k = 0; k < r.rows(); ++k)
                if (k != i)
                    CHECK(r.at(k, j) == 0);
        }
        CHECK(coxdp::rank(r) == coxdp::rank(m));
    }
}

TEST_CASE("kernel basis vectors annihilate the matrix")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 1 + rng() % 5;
        std::size_t cols = 1 + rng() % 7;
        RationalMatrix m = random_matrix(rng, rows, cols);
        auto ker = coxdp::kernel_basis(m);
        CHECK(ker.size() == cols - coxdp::rank(m));
        for (const auto& v : ker) {
            REQUIRE(v.size() == cols);
            for (std::size_t i = 0; i < rows; ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < cols; ++j)
                    s += m.at(i, j) * v[j];
                CHECK(s == 0);
            }
        }
        // Kernel vectors are independent: stack them and check rank.
        if (!ker.empty()) {
            RationalMatrix km(ker.size(), cols);
            for (std::size_t i = 0; i < ker.size(); ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    km.at(i, j) = ker[i][j];
            CHECK(coxdp::rank(km) == ker.size());
        }
    }
}

TEST_CASE("kernel of an invertible matrix is trivial")
{
    RationalMatrix m(3, 3);
    m.at(0, 0) = 2;
    m.at(1, 1) = Rational(1) / Rational(3);
    m.at(2, 2) = -5;
    m.at(0, 2) = 7;
    CHECK(coxdp::kernel_basis(m).empty());
}
