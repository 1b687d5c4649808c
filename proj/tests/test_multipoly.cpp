#include <doctest.h>

#include "coxdp/errors.hpp"
#include "coxdp/multipoly.hpp"

using coxdp::MultiPoly;
using coxdp::Rational;

namespace {

MultiPoly x() { return MultiPoly::variable(2, 0); }
MultiPoly y() { return MultiPoly::variable(2, 1); }

} // namespace

TEST_CASE("construction and term bookkeeping")
{
    MultiPoly z(3);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);

    MultiPoly c = MultiPoly::constant(3, Rational(5));
    CHECK(c.term_count() == 1);
    CHECK(c.eval({Rational(0), Rational(0), Rational(0)}) == 5);

    MultiPoly m = MultiPoly::monomial(2, {1, 2}, Rational(-3));
    CHECK(m.eval({Rational(2), Rational(3)}) == Rational(-54));

    // Adding the negation of a term erases it.
    MultiPoly p = m;
    p.add_term({1, 2}, Rational(3));
    CHECK(p.is_zero());
}

TEST_CASE("binomial square and cube")
{
    MultiPoly s = x() + y();
    MultiPoly sq = s * s;
    CHECK(sq == s.pow(2));
    CHECK(sq.term_count() == 3);
    CHECK(sq.eval({Rational(2), Rational(3)}) == 25);

    MultiPoly cube = s.pow(3);
    CHECK(cube.term_count() == 4);
    // Coefficient of x*y^2 is 3.
    MultiPoly probe = cube - Rational(3) * MultiPoly::monomial(2, {1, 2}, Rational(1));
    CHECK(probe.term_count() == 3);
    CHECK(s.pow(0) == MultiPoly::constant(2, Rational(1)));
}

TEST_CASE("scalar multiplication and subtraction")
{
    MultiPoly p = Rational(2) * x() - Rational(7) * y();
    CHECK(p.eval({Rational(1), Rational(1)}) == -5);
    p *= Rational(1) / Rational(2);
    CHECK(p.eval({Rational(1), Rational(0)}) == 1);
    CHECK((p - p).is_zero());
}

TEST_CASE("substitution is a ring homomorphism")
{
    // p(x, y) with x -> x + 2y matches the evaluated identity.
    MultiPoly p = x().pow(2) + Rational(3) * x() * y() + y().pow(2);
    MultiPoly repl = x() + Rational(2) * y();
    MultiPoly q = p.substitute(0, repl);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            Rational xa(a), yb(b);
            CHECK(q.eval({xa, yb}) == p.eval({xa + 2 * yb, yb}));
        }
    // Substituting a variable by itself is the identity.
    CHECK(p.substitute(1, y()) == p);
}

TEST_CASE("extension keeps old variable meaning")
{
    MultiPoly p = x() * y();
    MultiPoly q = p.extended(4);
    CHECK(q.nvars() == 4);
    CHECK(q.eval({Rational(2), Rational(5), Rational(9), Rational(11)}) == 10);
}

TEST_CASE("shift and exact division invert each other")
{
    MultiPoly p = x().pow(2) * y() + Rational(4) * x() * y();
    MultiPoly shifted = p.shifted(1, 3);
    CHECK(shifted.divided_exact(1, 3) == p);
    CHECK(p.divided_exact(1, 1).shifted(1, 1) == p);
    CHECK_THROWS_AS(p.divided_exact(0, 2), coxdp::internal_error);
}

TEST_CASE("derivative follows the product rule")
{
    MultiPoly p = x().pow(3) * y().pow(2);
    MultiPoly dp = p.derivative(0);
    CHECK(dp == Rational(3) * x().pow(2) * y().pow(2));
    MultiPoly q = x() + y();
    MultiPoly prod = p * q;
    CHECK(prod.derivative(0) == dp * q + p * q.derivative(0));
    CHECK(MultiPoly::constant(2, Rational(9)).derivative(1).is_zero());
}

TEST_CASE("degree_in reports total degree over chosen variables")
{
    MultiPoly p = x().pow(2) * y() + y().pow(5);
    CHECK(p.degree_in({0, 1}) == 5);
    CHECK(p.degree_in({0}) == 2);
    CHECK(p.degree_in({1}) == 5);
    CHECK(MultiPoly(2).degree_in({0, 1}) == -1);
}

TEST_CASE("to_string renders signs and rational coefficients")
{
    // Terms print in exponent-map order, lowest exponent vector first.
    MultiPoly p = Rational(1) / Rational(2) * x().pow(2) - y();
    CHECK(p.to_string({"x", "y"}) == "-y + 1/2*x^2");
    CHECK(MultiPoly(2).to_string({"x", "y"}) == "0");
    CHECK((x() * y()).to_string({"x", "y"}) == "x*y");
}
