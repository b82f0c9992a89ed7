#include <doctest.h>

#include "gwdesc/engine.hpp"
#include "gwdesc/error.hpp"
#include "gwdesc/fixtures.hpp"
#include "../oracles/oracles.hpp"

using namespace gwdesc;

namespace {

CurveClass deg(std::int64_t d) { return CurveClass(std::vector<std::int64_t>{d}); }

struct Loaded {
    FixtureModel fixture;
    Engine engine;

    explicit Loaded(const std::string& name, EngineOptions o = {})
        : fixture(load_fixture(name))
        , engine(fixture.model, fixture.table, std::move(o))
    {
    }
};

constexpr std::size_t one = 0;
constexpr std::size_t h = 1;
constexpr std::size_t h2 = 2;

} // namespace

TEST_CASE("primary three-point numbers")
{
    Loaded p1("P1");
    CHECK(p1.engine.primary3(deg(0), one, h, one) == 1);
    CHECK(p1.engine.primary3(deg(1), h, h, h) == 1);
    CHECK(p1.engine.primary3(deg(2), h, h, h) == 0);
    Loaded p2("P2");
    CHECK(p2.engine.primary3(deg(1), h2, h2, h) == 1);
    // <h2 h2 h2>_2 fails the dimension count (6 != 8)
    CHECK(p2.engine.primary3(deg(2), h2, h2, h2) == 0);
}

TEST_CASE("n-point primaries reconstruct plane curve counts")
{
    Loaded p2("P2");
    const auto counts = oracle::plane_curve_counts(5);
    for (int d = 2; d <= 5; ++d) {
        std::vector<std::size_t> points(static_cast<std::size_t>(3 * d - 1), h2);
        CHECK(p2.engine.primary(deg(d), points) == Rational(counts.at(d)));
    }
    // fundamental class and divisor axioms
    CHECK(p2.engine.primary(deg(1), {one, h2, h2, h}) == 0);
    CHECK(p2.engine.primary(deg(2), {h, h, h2, h2, h2, h2, h2}) == 4);
}

TEST_CASE("two-point correlators")
{
    Loaded p1("P1");
    CHECK(p1.engine.two_point(deg(1), tau(0, h), tau(0, h)) == 1);
    CHECK(p1.engine.two_point(deg(1), tau(1, one), tau(0, h)) == -1);
    for (int d = 0; d <= 3; ++d) {
        CHECK(p1.engine.two_point(deg(0), tau(d, h), tau(0, h)) == 0);
    }
    CHECK_THROWS_AS(p1.engine.two_point(deg(1), tau(0, 1, h), tau(0, h)), DomainError);
}

TEST_CASE("three-point descendants")
{
    Loaded p1("P1");
    CHECK(p1.engine.three_point_descendant(deg(1), {tau(1, h), tau(0, h), tau(0, one)}) == 1);
    CHECK(p1.engine.three_point_descendant(deg(1), {tau(0, h), tau(0, h), tau(0, h)}) == 1);
    CHECK(p1.engine.three_point_descendant(deg(1), {tau(3, h), tau(0, h), tau(0, h)}) == 0);
}

TEST_CASE("modified correlators")
{
    Loaded p1("P1");
    CHECK(p1.engine.modified_correlator(deg(1), {tau(0, 1, h), tau(0, h), tau(0, h)}) == 0);
    // β = 0: ψ = φ
    Loaded p2("P2");
    CHECK(p2.engine.modified_correlator(deg(0), {tau(0, 1, h), tau(0, h), tau(0, one), tau(0, one)})
          == p2.engine.descendant_correlator(0, deg(0), {tau(1, h), tau(0, h), tau(0, one), tau(0, one)}));

    Loaded pt("point");
    const auto zero = CurveClass::zero(0);
    CHECK(pt.engine.modified_correlator(zero, {tau(0, 1, 0), tau(0, 1, 0), tau(0, 1, 0), tau(0, 0), tau(0, 0), tau(0, 0)}) == 6);
}

TEST_CASE("generalized correlators")
{
    Loaded p1("P1");
    CHECK(p1.engine.generalized_correlator(deg(1), {tau(1, 0, h), tau(0, h), tau(0, one)}) == 1);
    Loaded p2("P2");
    const std::vector<Insertion> rest{tau(0, h), tau(0, one), tau(0, one), tau(0, one)};
    auto with = [&](Insertion x) {
        auto v = rest;
        v.push_back(x);
        return v;
    };
    const auto a = p2.engine.generalized_correlator(deg(0), with(tau(1, 1, h)));
    CHECK(a == p2.engine.generalized_correlator(deg(0), with(tau(0, 2, h))));
    CHECK(a == p2.engine.descendant_correlator(0, deg(0), with(tau(2, h))));
    CHECK(a == 1);
    CHECK_THROWS_AS(p2.engine.generalized_correlator(deg(1), {tau(0, h), tau(0, h)}), DomainError);
}

TEST_CASE("unstable range")
{
    Loaded p1("P1");
    CHECK(p1.engine.descendant_correlator(0, deg(1), {tau(0, h)}) == 1);
    CHECK(p1.engine.descendant_correlator(0, deg(1), {}) == 1);
    CHECK(p1.engine.descendant_correlator(0, deg(1), {tau(1, one), tau(0, h)}, UnstableRoute::Dilaton) == -1);

    // <τ_{(r+1)d-2} pt>_d = 1/(d!)^{r+1}, both routes
    for (int r = 1; r <= 3; ++r) {
        Loaded p("P" + std::to_string(r));
        const auto pt = static_cast<std::size_t>(r);
        for (int d = 1; d <= 3; ++d) {
            const auto expected = oracle::projective_one_point(r, d);
            const std::vector<Insertion> ins{tau((r + 1) * d - 2, pt)};
            CHECK(p.engine.descendant_correlator(0, deg(d), ins, UnstableRoute::Divisor) == expected);
            CHECK(p.engine.descendant_correlator(0, deg(d), ins, UnstableRoute::Dilaton) == expected);
        }
    }
}

TEST_CASE("scope and input checks")
{
    Loaded p1("P1");
    CHECK_THROWS_AS(p1.engine.descendant_correlator(1, deg(1), {tau(0, h)}), OutOfScope);
    CHECK_THROWS_AS(p1.engine.descendant_correlator(0, deg(1), {tau(0, 7)}), DomainError);
    CHECK_THROWS_AS(p1.engine.descendant_correlator(0, CurveClass::zero(2), {tau(0, h)}), DomainError);
    CHECK_THROWS_AS(p1.engine.descendant_correlator(1, deg(0), {tau(1, one)}), TableIncomplete);
    EngineOptions bad;
    bad.reduction_divisor = p1.fixture.model.unit();
    CHECK_THROWS_AS(Engine(p1.fixture.model, p1.fixture.table, bad), DomainError);
}

TEST_CASE("genus one at degree zero reads the tautological table")
{
    auto f = load_fixture("P1");
    TautTable t;
    t.insert(TautKey::make(1, {1}, {}), Rational(1, 24));
    t.insert(TautKey::make(1, {0}, {1}), Rational(1, 24));
    const Engine e(f.model, f.table, {}, t);
    // deg c_1(P^1) = 2
    CHECK(e.descendant_correlator(1, deg(0), {tau(1, one)}) == Rational(1, 12));
    CHECK(e.descendant_correlator(1, deg(0), {tau(0, h)}) == Rational(-1, 24));
}

TEST_CASE("divisor and dilaton equations")
{
    Loaded p1("P1");
    const auto hc = p1.fixture.model.basis_class(h);
    auto c = p1.engine.divisor_check(hc, deg(1), {tau(0, h), tau(0, h), tau(0, one)});
    CHECK(c.applicable);
    CHECK(c.holds());

    auto z = p1.engine.divisor_check(hc, deg(0), {tau(0, h), tau(0, one), tau(0, one)});
    CHECK(z.rhs == 0);
    CHECK(z.holds());
    CHECK_FALSE(p1.engine.divisor_check(hc, deg(0), {tau(0, h)}).applicable);

    auto d = p1.engine.dilaton_check(0, deg(1), {tau(0, h), tau(0, h), tau(0, h)});
    CHECK(d.lhs == 1);
    CHECK(d.rhs == 1);
    auto d2 = p1.engine.dilaton_check(0, deg(1), {tau(0, h), tau(0, h)});
    CHECK(d2.rhs == 0);
    CHECK(d2.lhs == 0);
}

TEST_CASE("reduction divisor does not change values")
{
    Loaded a("P2");
    EngineOptions o;
    o.reduction_divisor = Rational(3) * a.fixture.model.basis_class(h);
    Loaded b("P2", o);
    for (int d = 1; d <= 3; ++d) {
        for (int k = 0; k <= 3 * d; ++k) {
            for (std::size_t x = 0; x < 3; ++x) {
                for (std::size_t y = 0; y < 3; ++y) {
                    CHECK(a.engine.two_point(deg(d), tau(k, x), tau(0, y)) == b.engine.two_point(deg(d), tau(k, x), tau(0, y)));
                }
                CHECK(a.engine.descendant_correlator(0, deg(d), {tau(k, x)})
                      == b.engine.descendant_correlator(0, deg(d), {tau(k, x)}));
            }
        }
        CHECK(a.engine.descendant_correlator(0, deg(d), {}) == b.engine.descendant_correlator(0, deg(d), {}));
    }
}

TEST_CASE("cache is transparent")
{
    EngineOptions off;
    off.use_cache = false;
    Loaded a("P2");
    Loaded b("P2", off);
    const std::vector<Insertion> ins{tau(2, h2), tau(1, h), tau(0, h2), tau(0, h)};
    CHECK(a.engine.descendant_correlator(0, deg(2), ins) == b.engine.descendant_correlator(0, deg(2), ins));
    CHECK(a.engine.cache_size() > 0);
    CHECK(b.engine.cache_size() == 0);
    a.engine.clear_cache();
    CHECK(a.engine.cache_size() == 0);
}
