#include <doctest.h>

#include "gwdesc/error.hpp"
#include "gwdesc/linalg.hpp"
#include "gwdesc/novikov.hpp"
#include "gwdesc/rational.hpp"

using namespace gwdesc;

namespace {

NovikovTruncation line(std::int64_t bound) { return NovikovTruncation{{1}, bound}; }
CurveClass q(std::int64_t k) { return CurveClass(std::vector<std::int64_t>{k}); }

} // namespace

TEST_CASE("rationals stay in lowest terms")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(2, 3) == 0);
}

TEST_CASE("curve classes")
{
    const CurveClass a(std::vector<std::int64_t>{1, 2});
    const CurveClass b(std::vector<std::int64_t>{0, 1});
    CHECK((a - b) == CurveClass(std::vector<std::int64_t>{1, 1}));
    CHECK_THROWS(b - a);
    CHECK(to_string(a) == "[1,2]");
    // (0..1) x (0..2)
    CHECK(sub_classes(a).size() == 6);
    CHECK(sub_classes(CurveClass::zero(0)).size() == 1);
}

TEST_CASE("effective classes under a degree bound")
{
    const NovikovTruncation t{{1, 2}, 3};
    const auto classes = t.effective_classes();
    // (0,0) (1,0) (2,0) (0,1) (3,0) (1,1)
    CHECK(classes.size() == 6);
    CHECK(classes.front().is_zero());
    for (std::size_t i = 1; i < classes.size(); ++i) {
        CHECK(t.degree(classes[i - 1]) <= t.degree(classes[i]));
    }
}

TEST_CASE("series addition")
{
    const auto t = line(3);
    auto one = NovikovSeries::constant(t, 1);
    CHECK((one + NovikovSeries::constant(t, -1)).is_zero());
    const auto half = NovikovSeries::monomial(t, q(2), Rational(1, 2));
    CHECK(half + half == NovikovSeries::monomial(t, q(2), 1));
    CHECK(half + NovikovSeries(t) == half);
    CHECK_THROWS_AS(one + NovikovSeries::constant(line(2), 1), ConfigError);
}

TEST_CASE("series multiplication truncates")
{
    const auto t = line(2);
    CHECK(NovikovSeries::monomial(t, q(1), 1) * NovikovSeries::monomial(t, q(1), 1)
          == NovikovSeries::monomial(t, q(2), 1));
    auto a = NovikovSeries::constant(t, 1) + NovikovSeries::monomial(t, q(1), 1);
    auto b = NovikovSeries::constant(t, 1) - NovikovSeries::monomial(t, q(1), 1);
    CHECK(a * b == NovikovSeries::constant(t, 1) - NovikovSeries::monomial(t, q(2), 1));

    const auto t1 = line(1);
    auto c = NovikovSeries::constant(t1, 1) + NovikovSeries::monomial(t1, q(1), 1);
    CHECK(c * c == NovikovSeries::constant(t1, 1) + NovikovSeries::monomial(t1, q(1), 2));
    // terms past the bound are never stored
    CHECK(NovikovSeries::monomial(t1, q(2), 5).is_zero());
}

TEST_CASE("antiderivative")
{
    const auto t = line(3);
    const ClassPairing three = [](const CurveClass& b) { return Rational(3 * b.coords[0]); };
    CHECK(antiderivative_q(NovikovSeries::monomial(t, q(1), 2), three) == NovikovSeries::monomial(t, q(1), Rational(2, 3)));
    CHECK(antiderivative_q(NovikovSeries(t), three).is_zero());
    CHECK_THROWS_AS(antiderivative_q(NovikovSeries::constant(t, 5), three), DomainError);
    const ClassPairing zero = [](const CurveClass&) { return Rational(0); };
    CHECK_THROWS_AS(antiderivative_q(NovikovSeries::monomial(t, q(1), 1), zero), DomainError);

    auto s = NovikovSeries::monomial(t, q(1), 7) + NovikovSeries::monomial(t, q(3), Rational(-1, 2));
    CHECK(derivative_q(antiderivative_q(s, three), three) == s);
}

TEST_CASE("series printing")
{
    const auto t = line(3);
    auto s = NovikovSeries::monomial(t, q(1), 1) + NovikovSeries::monomial(t, q(2), -2);
    CHECK(to_string(s) == "1·q^[1] - 2·q^[2]");
    CHECK(to_string(NovikovSeries(t)) == "0");
}

TEST_CASE("exact linear algebra")
{
    RationalMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    CHECK(determinant(m) == 1);
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == RationalMatrix::identity(2));
    auto x = solve(m, {3, 2});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);

    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK_FALSE(inverse(singular));
    CHECK(determinant(singular) == 0);
    CHECK_FALSE(solve(singular, {1, 0}));
}
