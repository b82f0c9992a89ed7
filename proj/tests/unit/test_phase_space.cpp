#include <doctest.h>

#include <algorithm>

#include "gwdesc/engine.hpp"
#include "gwdesc/fixtures.hpp"
#include "gwdesc/phase_space.hpp"

using namespace gwdesc;

namespace {

CurveClass deg(std::int64_t d) { return CurveClass(std::vector<std::int64_t>{d}); }

struct Setup {
    FixtureModel fixture;
    Engine engine;
    PhaseSpace ps;

    Setup(const std::string& name, TruncationPolicy policy)
        : fixture(load_fixture(name))
        , engine(fixture.model, fixture.table)
        , ps(engine, policy)
    {
    }

    NovikovSeries q(std::int64_t d, Rational c = 1) const { return NovikovSeries::monomial(ps.truncation(), deg(d), c); }
    NovikovSeries constant(Rational c) const { return NovikovSeries::constant(ps.truncation(), c); }
    CohClass cls(std::size_t a) const { return fixture.model.basis_class(a); }
};

constexpr std::size_t one = 0;
constexpr std::size_t h = 1;
constexpr std::size_t h2 = 2;

} // namespace

TEST_CASE("summed correlators")
{
    Setup p1("P1", {3, 4, 2});
    CHECK(p1.ps.summed_correlator({tau(0, h), tau(0, h), tau(0, h)}) == p1.q(1));
    CHECK(p1.ps.summed_correlator({tau(0, one), tau(0, one), tau(0, one)}).is_zero());
    Setup p2("P2", {3, 4, 2});
    CHECK(p2.ps.summed_correlator({tau(0, h2), tau(0, h2), tau(0, h)}) == p2.q(1));
}

TEST_CASE("small quantum product")
{
    Setup p1("P1", {3, 4, 2});
    auto hh = p1.ps.quantum_product(p1.cls(h), p1.cls(h));
    CHECK(hh[one] == p1.q(1));
    CHECK(hh[h].is_zero());
    const CohClass x(std::vector<Rational>{Rational(2), Rational(-5)});
    auto ux = p1.ps.quantum_product(p1.fixture.model.unit(), x);
    CHECK(ux[one] == p1.constant(2));
    CHECK(ux[h] == p1.constant(-5));

    Setup p2("P2", {3, 4, 2});
    auto p2hh = p2.ps.quantum_product(p2.cls(h), p2.cls(h));
    CHECK(p2hh[h2] == p2.constant(1));
    CHECK(p2hh[one].is_zero());
    CHECK(p2hh[h].is_zero());
}

TEST_CASE("U operators")
{
    Setup p1("P1", {3, 4, 3});
    auto u0 = p1.ps.U_operator(0, p1.cls(h));
    CHECK(u0[h] == p1.constant(1));
    CHECK(u0[one].is_zero());
    auto u1 = p1.ps.U_operator(1, p1.cls(h));
    CHECK(u1[one] == p1.q(1));
    CHECK(u1[h].is_zero());
    auto u2 = p1.ps.U_operator(2, p1.cls(h));
    CHECK(u2[h] == p1.q(1));
    CHECK(u2[one].is_zero());
}

TEST_CASE("two-point series through antiderivatives")
{
    Setup p1("P1", {3, 4, 3});
    CHECK(p1.ps.two_point_via_25(1, p1.cls(one), p1.cls(h)) == p1.q(1, -1));
    CHECK(p1.ps.two_point_via_25(2, p1.cls(h), CohClass(2)).is_zero());
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            CHECK(p1.ps.two_point_via_25(0, p1.cls(a), p1.cls(b)) == p1.ps.summed_two_point(0, p1.cls(a), 0, p1.cls(b)));
        }
    }
    Setup p2("P2", {3, 4, 3});
    for (int d = 0; d <= 4; ++d) {
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                CHECK(p2.ps.two_point_via_25(d, p2.cls(a), p2.cls(b)) == p2.ps.summed_two_point(d, p2.cls(a), 0, p2.cls(b)));
            }
        }
    }
}

TEST_CASE("transform T")
{
    Setup trivial("P1", {0, 4, 3});
    const auto t0 = trivial.ps.build_T();
    CHECK(t0 == TransformT::identity(t0.truncation, t0.indices));

    Setup p1("P1", {1, 4, 2});
    const auto t = p1.ps.build_T();
    // Δ^b = h for b = one
    CHECK(t.at({0, one}, {1, h}) == p1.q(1));
    CHECK(t.at({0, one}, {2, one}) == p1.q(1, -1));
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (i != j && t.indices[j].d <= t.indices[i].d) {
                CHECK(t.entries[i][j].is_zero());
            }
        }
    }
    const auto inv = PhaseSpace::invert_T(t);
    const auto id = TransformT::identity(t.truncation, t.indices);
    CHECK(t * inv == id);
    CHECK(PhaseSpace::invert_T(id) == id);

    auto single = id;
    single.entries[0][4] = p1.q(1, 5);
    auto expected = id;
    expected.entries[0][4] = p1.q(1, -5);
    CHECK(PhaseSpace::invert_T(single) == expected);
}

TEST_CASE("potentials")
{
    Setup p1("P1", {3, 4, 2});
    const auto f = p1.ps.potential_F_st();
    CHECK(f.coefficient({{0, h}, {0, h}, {0, h}}) == p1.q(1, Rational(1, 6)));
    CHECK(f.coefficient({{0, one}, {0, one}, {0, h}}) == p1.constant(Rational(1, 2)));
    // dimension mismatch
    CHECK(f.coefficient({{0, one}, {0, one}, {0, one}}).is_zero());
    CHECK(f.coefficient({{0, one}, {0, h}, {1, h}}) == p1.q(1));
    for (const auto& [key, value] : f.terms) {
        CHECK(key.size() >= 3);
        CHECK(key.size() <= 4);
        CHECK(std::is_sorted(key.begin(), key.end()));
    }

    const auto g = p1.ps.potential_G();
    // primary slice of G agrees with F
    for (const auto& [key, value] : f.terms) {
        if (std::all_of(key.begin(), key.end(), [](const PhaseIndex& p) { return p.d == 0; })) {
            CHECK(g.coefficient(key) == value);
        }
    }
    const auto phi = p1.ps.primary_potential_Phi();
    for (const auto& [key, value] : phi.terms) {
        CHECK(f.coefficient(key) == value);
    }
    CHECK(p1.ps.check_wdvv(phi).ok());
}

TEST_CASE("G on a point target is the psi-integral generating function")
{
    Setup pt("point", {0, 6, 3});
    const auto g = pt.ps.potential_G();
    // x_{1}^3 x_{0}^3 / (3! 3!) times ∫ψ1ψ2ψ3 over M̄_{0,6} = 6
    CHECK(g.coefficient({{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}}) == pt.constant(Rational(1, 6)));
    CHECK(g.coefficient({{0, 0}, {0, 0}, {0, 0}}) == pt.constant(Rational(1, 6)));
    CHECK(g == pt.ps.potential_F_st());
}

TEST_CASE("F_st equals G after the transform")
{
    Setup trivial("P1", {3, 4, 0});
    auto r0 = trivial.ps.verify_theorem22();
    CHECK(r0.ok());
    CHECK(trivial.ps.build_T() == TransformT::identity(trivial.ps.truncation(), trivial.ps.indices()));

    Setup p1("P1", {3, 4, 3});
    auto r = p1.ps.verify_theorem22();
    CHECK(r.ok());
    CHECK(r.coefficients_compared > 50);

    // Without T the identity fails, so the check has teeth.
    const auto t = p1.ps.build_T();
    const auto id = TransformT::identity(t.truncation, t.indices);
    CHECK_FALSE(PhaseSpace::compose(p1.ps.potential_G(), id) == p1.ps.potential_F_st());
    CHECK(PhaseSpace::compose(p1.ps.potential_G(), t) == p1.ps.potential_F_st());
}

TEST_CASE("index multisets")
{
    const std::vector<PhaseIndex> idx{{0, 0}, {0, 1}, {1, 0}};
    // sizes 1..2: 3 + 6
    CHECK(index_multisets(idx, 1, 2).size() == 9);
    CHECK(index_multisets(idx, 3, 3).size() == 10);
}
