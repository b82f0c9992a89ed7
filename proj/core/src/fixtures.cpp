#include "gwdesc/fixtures.hpp"

#include "gwdesc/error.hpp"

namespace gwdesc {

GeometryModel projective_space(int n)
{
    if (n < 0) {
        throw DomainError("projective space dimension must be non-negative");
    }
    const auto r = static_cast<std::size_t>(n + 1);
    GeometryModel m;
    m.name = n == 0 ? "point" : "P" + std::to_string(n);
    m.dimension = n;
    for (int i = 0; i <= n; ++i) {
        m.basis.push_back({i == 0 ? "one" : i == 1 ? "h" : "h" + std::to_string(i), i});
    }
    m.cup_table.assign(r, std::vector<CohClass>(r, CohClass(r)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i + j < r) {
                m.cup_table[i][j] = CohClass::basis(r, i + j);
            }
        }
    }
    m.integral.assign(r, 0);
    m.integral[r - 1] = 1;
    m.lattice_rank = n == 0 ? 0 : 1;
    m.divisor_pairing.assign(r, std::vector<std::int64_t>(m.lattice_rank, 0));
    m.ample_class = CohClass(r);
    if (n >= 1) {
        m.divisor_pairing[1][0] = 1;
        m.ample_class.coeffs[1] = 1;
    }
    // c(P^n) = (1 + h)^{n+1}
    for (int k = 0; k <= n; ++k) {
        CohClass c(r);
        c.coeffs[static_cast<std::size_t>(k)] = Rational(binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)));
        m.chern_classes.push_back(c);
    }
    return m;
}

std::vector<std::string> fixture_names() { return {"point", "P1", "P2", "P3"}; }

FixtureModel load_fixture(const std::string& name)
{
    FixtureModel f;
    const CurveClass line(std::vector<std::int64_t>{1});
    if (name == "point") {
        f.model = projective_space(0);
    } else if (name == "P1") {
        f.model = projective_space(1);
        f.table.insert(line, {1, 1, 1}, 1);
    } else if (name == "P2") {
        f.model = projective_space(2);
        f.table.insert(line, {1, 2, 2}, wdvv_p2(1).at(1));
    } else if (name == "P3") {
        f.model = projective_space(3);
        f.table.insert(line, {1, 3, 3}, 1);
        f.table.insert(line, {2, 2, 3}, 1);
    } else {
        throw ConfigError("unknown fixture '" + name + "'");
    }
    const auto report = validate_model(f.model);
    for (const auto& c : report.checks) {
        if (!c.passed) {
            throw ValidationError("fixture " + name + " fails " + c.name + ": " + c.detail);
        }
    }
    f.table.check_dimensions(f.model);
    return f;
}

std::map<int, Rational> wdvv_p2(int dmax)
{
    if (dmax < 1) {
        throw DomainError("wdvv_p2 needs dmax >= 1");
    }
    std::map<int, Rational> n{{1, 1}};
    for (int d = 2; d <= dmax; ++d) {
        Rational total = 0;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const auto u = static_cast<unsigned>(3 * d - 4);
            const Rational bracket = Rational(d2) * Rational(binomial(u, static_cast<unsigned>(3 * d1 - 2)))
                                     - Rational(d1) * Rational(binomial(u, static_cast<unsigned>(3 * d1 - 1)));
            total += n.at(d1) * n.at(d2) * Rational(d1 * d1 * d2) * bracket;
        }
        n.emplace(d, total);
    }
    return n;
}

} // namespace gwdesc
