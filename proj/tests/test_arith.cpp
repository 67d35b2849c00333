#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "macqk/bipoly.hpp"
#include "macqk/ratfun.hpp"

using namespace macqk;

namespace {
const RationalFunction Q = RationalFunction(BiPoly::q_var());
const RationalFunction T = RationalFunction(BiPoly::t_var());
const RationalFunction one(1);
}  // namespace

TEST_CASE("rational numbers") {
    BigRational a(1, 2), b(1, 3);
    CHECK(a + b == BigRational(5, 6));
    CHECK(a * b == BigRational(1, 6));
    CHECK((a - b).abs() == BigRational(1, 6));
    CHECK(BigRational(-3, 6) == BigRational(-1, 2));
}

TEST_CASE("bivariate polynomial arithmetic") {
    BiPoly q = BiPoly::q_var(), t = BiPoly::t_var();
    CHECK(BiPoly::q_pow(3) == q * q * q);
    CHECK((q + t) * (q - t) == q * q - t * t);
    CHECK(BiPoly(1).is_one());
    CHECK((q * t).deg_q() == 1);
    CHECK((q * t).deg_t() == 1);
}

TEST_CASE("gcd and exact division") {
    BiPoly q = BiPoly::q_var();
    BiPoly a = BiPoly(1) - q * q;          // (1-q)(1+q)
    BiPoly b = BiPoly(1) - BiPoly::q_pow(3);  // (1-q)(1+q+q^2)
    BiPoly g = bipoly_gcd(a, b);
    CHECK(bipoly_divexact(a, g) * g == a);
    CHECK(bipoly_divexact(b, g) * g == b);
    // gcd is (1-q) up to normalization: degree 1 in q.
    CHECK(g.deg_q() == 1);
}

TEST_CASE("rational function canonicalization") {
    RationalFunction r = (one - Q * Q) / (one - Q);
    CHECK(r == one + Q);
    CHECK(r.is_polynomial());
    RationalFunction s = (one - T) / (one - Q);
    CHECK(!s.is_polynomial());
    CHECK(s * s.inverse() == one);
    CHECK(s.pow(2) == s * s);
    CHECK(s.pow(-1) == s.inverse());
}

TEST_CASE("specialize and swap parameters") {
    RationalFunction s = (one - T) / (one - Q);
    CHECK(s.specialize_t(2) == one + Q);
    CHECK(s.specialize_t(3) == one + Q + Q * Q);
    CHECK(s.swap_qt() == (one - Q) / (one - T));
    CHECK(s.swap_qt().swap_qt() == s);
    CHECK(s.evaluate(BigRational(2), BigRational(4)) == BigRational(3));
}

TEST_CASE("string round trip") {
    RationalFunction s = (one - Q * T) / ((one - Q) * (one - T * T));
    CHECK(RationalFunction::parse(s.to_string()) == s);
    CHECK(RationalFunction::parse(Q.to_string()) == Q);
}

TEST_CASE("q-integers and q-binomials") {
    CHECK(QInteger(3).value == BiPoly(1) + BiPoly::q_pow(1) + BiPoly::q_pow(2));
    CHECK(q_binomial(4, 0).value.is_one());
    CHECK(q_binomial(2, 3).value.is_zero());
    CHECK(q_binomial(-1, 0).value.is_zero());
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    BiPoly expect = BiPoly(1) + BiPoly::q_pow(1) + BiPoly::q_pow(2) * BiPoly(2) + BiPoly::q_pow(3) + BiPoly::q_pow(4);
    CHECK(q_binomial(4, 2).value == expect);
    // Symmetry [n choose p] = [n choose n-p].
    CHECK(q_binomial(7, 3).value == q_binomial(7, 4).value);
    // [n choose 1]_q = 1 + q + ... + q^{n-1}.
    CHECK(q_binomial(5, 1).value == QInteger(5).value);
}

TEST_CASE("quotient of q-binomial products by long division") {
    // ((1-q^5)(1-q^4)) / ((1-q)(1-q^2)) = 1 + q + 2q^2 + 2q^3 + 2q^4 + q^5 + q^6
    RationalFunction num = (one - Q.pow(5)) * (one - Q.pow(4));
    RationalFunction den = (one - Q) * (one - Q.pow(2));
    RationalFunction r = num / den;
    RationalFunction expect =
        one + Q + RationalFunction(2) * Q.pow(2) + RationalFunction(2) * Q.pow(3) + RationalFunction(2) * Q.pow(4) + Q.pow(5) + Q.pow(6);
    CHECK(r == expect);
    CHECK(rf_div(num, den) == r);
    CHECK(rf_mul(r, den) == num);
    CHECK(rf_add(r, -r) == RationalFunction(0));
}
