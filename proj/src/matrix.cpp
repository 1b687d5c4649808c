#include "coxdp/matrix.hpp"

#include <algorithm>
#include <limits>

namespace coxdp {

void RationalMatrix::swap_rows(std::size_t i, std::size_t k)
{
    if (i == k)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(i, j), at(k, j));
}

namespace {

// Row-wise denominator clearing. Scaling a row by a nonzero constant
// changes neither the rank nor the right null space.
std::vector<std::vector<Integer>> cleared_rows(const RationalMatrix& m)
{
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    Integer lcm, tmp;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            rows[i][j] = q.get_num() * tmp;
        }
    }
    return rows;
}

} // namespace

std::size_t rank(const RationalMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    auto a = cleared_rows(m);
    const std::size_t nr = m.rows(), nc = m.cols();

    std::size_t rk = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < nc && rk < nr; ++col) {
        // Smallest-bit-length nonzero pivot, lowest row on ties.
        std::size_t best = nr;
        std::size_t best_bits = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = rk; i < nr; ++i) {
            if (a[i][col] == 0)
                continue;
            std::size_t bits = bit_length(a[i][col]);
            if (bits < best_bits) {
                best_bits = bits;
                best = i;
            }
        }
        if (best == nr)
            continue;
        std::swap(a[rk], a[best]);

        // Even rows with a zero multiplier get the pivot/prev rescale; the
        // one-step Sylvester identity needs it to keep later divisions exact.
        const Integer& pivot = a[rk][col];
        Integer num;
        for (std::size_t i = rk + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                num = pivot * a[i][j] - a[i][col] * a[rk][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

RationalMatrix rref(const RationalMatrix& m)
{
    RationalMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < nc && lead < nr; ++col) {
        std::size_t piv = nr;
        for (std::size_t i = lead; i < nr; ++i) {
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nr)
            continue;
        a.swap_rows(lead, piv);

        Rational inv = 1 / a.at(lead, col);
        for (std::size_t j = col; j < nc; ++j)
            a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == lead || a.at(i, col) == 0)
                continue;
            Rational f = a.at(i, col);
            for (std::size_t j = col; j < nc; ++j)
                a.at(i, j) -= f * a.at(lead, j);
        }
        ++lead;
    }
    return a;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m)
{
    const std::size_t nc = m.cols();
    if (nc == 0)
        return {};
    RationalMatrix r = rref(m);

    // Pivot column of each nonzero row, in order.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (j < nc && r.at(i, j) == 0)
            ++j;
        if (j == nc)
            break;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(nc, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace coxdp
