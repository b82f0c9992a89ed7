#include <doctest.h>

#include <random>

#include "gwdesc/error.hpp"
#include "gwdesc/fixtures.hpp"
#include "gwdesc/geometry.hpp"
#include "gwdesc/symmetric.hpp"
#include "../oracles/oracles.hpp"

using namespace gwdesc;

namespace {

Rational evaluate(const MultiPoly& p, const std::vector<Rational>& values)
{
    Rational total = 0;
    for (const auto& [exps, c] : p) {
        Rational term = c;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (int k = 0; k < exps[i]; ++k) {
                term *= values[i];
            }
        }
        total += term;
    }
    return total;
}

// Q[h]/h^{dim+1} with Chern roots a_j h.
GeometryModel split_model(const std::vector<int>& roots)
{
    auto m = projective_space(static_cast<int>(roots.size()));
    std::vector<oracle::Q> a(roots.begin(), roots.end());
    for (std::size_t k = 0; k < m.chern_classes.size(); ++k) {
        m.chern_classes[k] = CohClass(m.rank());
        m.chern_classes[k].coeffs[k] = oracle::elementary_at(static_cast<int>(k), a);
    }
    return m;
}

} // namespace

TEST_CASE("cup and integral on projective spaces")
{
    const auto p1 = projective_space(1);
    const auto p2 = projective_space(2);
    const auto h1 = p1.basis_class(1);
    CHECK(cup(p1, p1.unit(), h1) == h1);
    CHECK(cup(p1, h1, h1).is_zero());
    CHECK(cup(p2, p2.basis_class(1), p2.basis_class(1)) == p2.basis_class(2));
    CHECK(integrate(p2, p2.basis_class(2)) == 1);
    CHECK(integrate(p2, p2.basis_class(1)) == 0);
    CHECK(integrate(p2, p2.unit()) == 0);
}

TEST_CASE("dual bases")
{
    const auto p1 = projective_space(1);
    auto d1 = dual_bases(p1);
    CHECK(d1.delta_dual[0] == p1.basis_class(1));
    CHECK(d1.delta_dual[1] == p1.basis_class(0));

    const auto p2 = projective_space(2);
    auto d2 = dual_bases(p2);
    CHECK(d2.delta_dual[0] == p2.basis_class(2));
    CHECK(d2.delta_dual[1] == p2.basis_class(1));
    CHECK(d2.delta_dual[2] == p2.basis_class(0));

    // Σ_a Δ_a η(Δ^a, x) = x
    const CohClass x(std::vector<Rational>{Rational(2), Rational(-1, 3), Rational(5)});
    CohClass back(p2.rank());
    for (std::size_t a = 0; a < p2.rank(); ++a) {
        back += pairing(p2, d2.delta_dual[a], x) * d2.delta[a];
    }
    CHECK(back == x);
}

TEST_CASE("Frobenius property of the pairing")
{
    const auto p3 = projective_space(3);
    for (std::size_t a = 0; a < p3.rank(); ++a) {
        for (std::size_t b = 0; b < p3.rank(); ++b) {
            CHECK(pairing(p3, p3.basis_class(a), p3.basis_class(b)) == pairing(p3, p3.basis_class(b), p3.basis_class(a)));
            for (std::size_t c = 0; c < p3.rank(); ++c) {
                CHECK(pairing(p3, cup(p3, p3.basis_class(a), p3.basis_class(b)), p3.basis_class(c))
                      == pairing(p3, p3.basis_class(a), cup(p3, p3.basis_class(b), p3.basis_class(c))));
            }
        }
    }
}

TEST_CASE("curve class pairing")
{
    const auto p1 = projective_space(1);
    const CurveClass three(std::vector<std::int64_t>{3});
    CHECK(beta_pairing(p1, p1.basis_class(1), three) == 3);
    CHECK(beta_pairing(p1, p1.basis_class(1), CurveClass::zero(1)) == 0);
    CHECK(beta_pairing(p1, Rational(2) * p1.basis_class(1), three) == 6);
    CHECK_THROWS_AS(beta_pairing(p1, p1.unit(), three), DomainError);
    CHECK(c1_pairing(projective_space(2), three) == 9);
}

TEST_CASE("validation flags broken models")
{
    for (int n = 0; n <= 3; ++n) {
        CHECK(validate_model(projective_space(n)).ok());
    }
    auto flat = projective_space(1);
    flat.integral = {0, 0};
    auto r = validate_model(flat);
    CHECK_FALSE(r.ok());
    REQUIRE(r.find("pairing-nondegenerate"));
    CHECK_FALSE(r.find("pairing-nondegenerate")->passed);

    // h·h = h + h2 on P^2 breaks the grading
    auto twisted = projective_space(2);
    twisted.cup_table[1][1] = twisted.basis_class(1) + twisted.basis_class(2);
    auto r2 = validate_model(twisted);
    CHECK_FALSE(r2.ok());
    REQUIRE(r2.find("grading"));
    CHECK_FALSE(r2.find("grading")->passed);
    CHECK_FALSE(r2.find("grading")->detail.empty());
}

TEST_CASE("symmetric to elementary")
{
    // m_2(v1) = e1^2
    auto p = to_elementary(monomial_symmetric({2}), 1);
    CHECK(p == MultiPoly{{{2}, 1}});
    // m_{1,1}(v1,v2) = e2
    CHECK(to_elementary(monomial_symmetric({1, 1}), 2) == MultiPoly{{{0, 1}, 1}});
    MultiPoly not_symmetric{{{1, 0}, 1}};
    CHECK_THROWS_AS(to_elementary(not_symmetric, 2), DomainError);
}

TEST_CASE("symmetric expansion agrees with brute force at numeric roots")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> root(-4, 4);
    std::uniform_int_distribution<int> expo(0, 4);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<int> lambda(n);
            for (auto& l : lambda) {
                l = expo(rng);
            }
            std::vector<oracle::Q> x(n);
            for (auto& v : x) {
                v = root(rng);
            }
            std::vector<Rational> e(n);
            for (std::size_t k = 1; k <= n; ++k) {
                e[k - 1] = oracle::elementary_at(static_cast<int>(k), x);
            }
            const auto expansion = to_elementary(monomial_symmetric(lambda), n);
            CHECK(evaluate(expansion, e) == oracle::monomial_symmetric_at(lambda, x));
        }
    }
}

TEST_CASE("chern symmetric functions")
{
    const auto p2 = projective_space(2);
    CHECK(chern_symmetric(p2, {2, 2}, 2) == p2.unit());
    // exponents (1,0): -(v1+v2) = -c1
    CHECK(chern_symmetric(p2, {0, 1}, 1) == Rational(-3) * p2.basis_class(1));

    // δ = 1: exponent 2 gives c1^2; on Q[h]/h^2 that vanishes, so check on a split model of rank 3 instead
    for (const auto& roots : std::vector<std::vector<int>>{{2}, {1, 2, -3}, {3, 1}, {1, 1, 1}}) {
        const auto m = split_model(roots);
        const int delta = m.dimension;
        std::vector<oracle::Q> neg;
        for (int r : roots) {
            neg.push_back(-r);
        }
        for (int g = 0; g <= 3; ++g) {
            std::vector<int> idx(static_cast<std::size_t>(delta), 0);
            std::function<void(int, int)> walk = [&](int pos, int from) {
                if (pos == delta) {
                    std::vector<int> exps;
                    int total = 0;
                    for (int i : idx) {
                        exps.push_back(g - i);
                        total += g - i;
                    }
                    CohClass expected(m.rank());
                    if (total <= delta) {
                        expected.coeffs[static_cast<std::size_t>(total)] = oracle::monomial_symmetric_at(exps, neg);
                    }
                    CHECK(chern_symmetric(m, idx, g) == expected);
                    return;
                }
                for (int i = from; i <= g; ++i) {
                    idx[static_cast<std::size_t>(pos)] = i;
                    walk(pos + 1, i);
                }
            };
            walk(0, 0);
        }
    }
}
