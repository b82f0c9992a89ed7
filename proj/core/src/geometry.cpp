#include "gwdesc/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gwdesc/error.hpp"
#include "gwdesc/symmetric.hpp"

namespace gwdesc {

CohClass CohClass::basis(std::size_t rank, std::size_t a)
{
    CohClass x(rank);
    x.coeffs.at(a) = 1;
    return x;
}

bool CohClass::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

CohClass& CohClass::operator+=(const CohClass& other)
{
    if (other.rank() != rank()) {
        throw DomainError("cohomology classes of different rank");
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        coeffs[i] += other.coeffs[i];
    }
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& other)
{
    if (other.rank() != rank()) {
        throw DomainError("cohomology classes of different rank");
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        coeffs[i] -= other.coeffs[i];
    }
    return *this;
}

CohClass& CohClass::operator*=(const Rational& s)
{
    for (auto& c : coeffs) {
        c *= s;
    }
    return *this;
}

std::optional<std::size_t> GeometryModel::index_of(const std::string& label) const
{
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (basis[a].label == label) {
            return a;
        }
    }
    return std::nullopt;
}

std::size_t GeometryModel::unit_index() const
{
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (basis[a].degree == 0) {
            return a;
        }
    }
    throw ValidationError("model '" + name + "' has no degree-0 basis element");
}

NovikovTruncation GeometryModel::novikov_truncation(std::int64_t max_beta_degree) const
{
    NovikovTruncation t;
    t.max_degree = max_beta_degree;
    t.weights.resize(lattice_rank);
    for (std::size_t i = 0; i < lattice_rank; ++i) {
        CurveClass e = CurveClass::zero(lattice_rank);
        e.coords[i] = 1;
        const Rational w = beta_pairing(*this, ample_class, e);
        if (w.get_den() != 1 || w < 1) {
            throw ValidationError("ample class must pair to a positive integer with every lattice generator");
        }
        t.weights[i] = w.get_num().get_si();
    }
    return t;
}

CohClass cup(const GeometryModel& model, const CohClass& x, const CohClass& y)
{
    const auto r = model.rank();
    CohClass out(r);
    for (std::size_t a = 0; a < r; ++a) {
        if (sgn(x.coeffs[a]) == 0) {
            continue;
        }
        for (std::size_t b = 0; b < r; ++b) {
            if (sgn(y.coeffs[b]) == 0) {
                continue;
            }
            out += (x.coeffs[a] * y.coeffs[b]) * model.cup_table[a][b];
        }
    }
    return out;
}

Rational integrate(const GeometryModel& model, const CohClass& x)
{
    Rational out = 0;
    for (std::size_t a = 0; a < model.rank(); ++a) {
        out += x.coeffs[a] * model.integral[a];
    }
    return out;
}

Rational pairing(const GeometryModel& model, const CohClass& x, const CohClass& y)
{
    return integrate(model, cup(model, x, y));
}

RationalMatrix gram_matrix(const GeometryModel& model)
{
    const auto r = model.rank();
    RationalMatrix g(r, r);
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            g(a, b) = integrate(model, model.cup_table[a][b]);
        }
    }
    return g;
}

DualBases dual_bases(const GeometryModel& model)
{
    const auto r = model.rank();
    const auto inv = inverse(gram_matrix(model));
    if (!inv) {
        throw ValidationError("Poincaré pairing of model '" + model.name + "' is degenerate");
    }
    DualBases out;
    for (std::size_t a = 0; a < r; ++a) {
        out.delta.push_back(model.basis_class(a));
        CohClass dual(r);
        for (std::size_t c = 0; c < r; ++c) {
            dual.coeffs[c] = (*inv)(a, c);
        }
        out.delta_dual.push_back(std::move(dual));
    }
    return out;
}

bool is_homogeneous(const GeometryModel& model, const CohClass& x, int degree)
{
    for (std::size_t a = 0; a < model.rank(); ++a) {
        if (sgn(x.coeffs[a]) != 0 && model.degree(a) != degree) {
            return false;
        }
    }
    return true;
}

Rational beta_pairing(const GeometryModel& model, const CohClass& gamma, const CurveClass& beta)
{
    if (beta.rank() != model.lattice_rank) {
        throw DomainError("curve class rank does not match the lattice rank of '" + model.name + "'");
    }
    if (!is_homogeneous(model, gamma, 1)) {
        throw DomainError("beta_pairing: class is not in the degree-1 span");
    }
    Rational out = 0;
    for (std::size_t a = 0; a < model.rank(); ++a) {
        if (sgn(gamma.coeffs[a]) == 0) {
            continue;
        }
        for (std::size_t i = 0; i < model.lattice_rank; ++i) {
            out += gamma.coeffs[a] * Rational(static_cast<long>(model.divisor_pairing[a][i]))
                   * Rational(static_cast<long>(beta.coords[i]));
        }
    }
    return out;
}

Rational c1_pairing(const GeometryModel& model, const CurveClass& beta)
{
    if (model.chern_classes.size() < 2) {
        return 0;
    }
    return beta_pairing(model, model.chern_classes[1], beta);
}

CohClass chern_symmetric(const GeometryModel& model, const std::vector<int>& indices, int genus)
{
    const auto delta = static_cast<std::size_t>(model.dimension);
    if (indices.size() != delta) {
        throw DomainError("chern_symmetric: expected one index per Chern root");
    }
    std::vector<int> exponents;
    int prev = 0;
    int total = 0;
    for (int i : indices) {
        if (i < prev || i > genus) {
            throw DomainError("chern_symmetric: indices must satisfy 0 <= i_1 <= ... <= i_dim <= g");
        }
        prev = i;
        exponents.push_back(genus - i);
        total += genus - i;
    }
    if (model.chern_classes.size() != delta + 1) {
        throw ValidationError("model '" + model.name + "' must list c_0..c_dim");
    }
    const MultiPoly in_elementary = to_elementary(monomial_symmetric(exponents), delta);

    // Roots are -v_j, so m(-v) = (-1)^{|exponents|} m(v) and e_k(v) = c_k(V).
    CohClass out(model.rank());
    for (const auto& [powers, coeff] : in_elementary) {
        CohClass term = model.unit();
        for (std::size_t k = 0; k < delta; ++k) {
            for (int r = 0; r < powers[k]; ++r) {
                term = cup(model, term, model.chern_classes[k + 1]);
            }
        }
        out += coeff * term;
    }
    if (total % 2 != 0) {
        out *= Rational(-1);
    }
    return out;
}

bool ValidationReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

ValidationReport validate_model(const GeometryModel& m)
{
    ValidationReport report;
    auto add = [&](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };
    const auto r = m.rank();

    // Shapes first: later checks index into these tables.
    {
        std::ostringstream why;
        bool ok = r > 0 && m.dimension >= 0 && m.cup_table.size() == r && m.integral.size() == r
                  && m.divisor_pairing.size() == r && m.ample_class.rank() == r;
        for (const auto& row : m.cup_table) {
            ok = ok && row.size() == r;
            for (const auto& x : row) {
                ok = ok && x.rank() == r;
            }
        }
        for (const auto& row : m.divisor_pairing) {
            ok = ok && row.size() == m.lattice_rank;
        }
        for (const auto& c : m.chern_classes) {
            ok = ok && c.rank() == r;
        }
        std::set<std::string> labels;
        for (const auto& b : m.basis) {
            if (!labels.insert(b.label).second) {
                ok = false;
                why << "duplicate label '" << b.label << "'; ";
            }
            if (b.degree < 0 || b.degree > m.dimension) {
                ok = false;
                why << "label '" << b.label << "' has degree outside [0, dim]; ";
            }
        }
        add("shape", ok, why.str());
        if (!ok) {
            return report;
        }
    }

    {
        const auto units = std::count_if(m.basis.begin(), m.basis.end(), [](const auto& b) { return b.degree == 0; });
        bool ok = units == 1;
        std::string detail = ok ? "" : "expected exactly one degree-0 basis element";
        if (ok) {
            const auto u = m.unit_index();
            for (std::size_t a = 0; a < r && ok; ++a) {
                if (!(m.cup_table[u][a] == m.basis_class(a)) || !(m.cup_table[a][u] == m.basis_class(a))) {
                    ok = false;
                    detail = "unit ∪ " + m.basis[a].label + " != " + m.basis[a].label;
                }
            }
        }
        add("identity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r && ok; ++a) {
            for (std::size_t b = 0; b < r && ok; ++b) {
                const int target = m.degree(a) + m.degree(b);
                const auto& x = m.cup_table[a][b];
                if ((target > m.dimension && !x.is_zero()) || (target <= m.dimension && !is_homogeneous(m, x, target))) {
                    ok = false;
                    detail = m.basis[a].label + " ∪ " + m.basis[b].label + " is not of degree " + std::to_string(target);
                }
            }
        }
        add("grading", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r && ok; ++a) {
            for (std::size_t b = a + 1; b < r && ok; ++b) {
                if (!(m.cup_table[a][b] == m.cup_table[b][a])) {
                    ok = false;
                    detail = "witness (" + m.basis[a].label + ", " + m.basis[b].label + ")";
                }
            }
        }
        add("commutativity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r && ok; ++a) {
            for (std::size_t b = 0; b < r && ok; ++b) {
                for (std::size_t c = 0; c < r && ok; ++c) {
                    const auto left = cup(m, m.cup_table[a][b], m.basis_class(c));
                    const auto right = cup(m, m.basis_class(a), m.cup_table[b][c]);
                    if (!(left == right)) {
                        ok = false;
                        detail = "witness (" + m.basis[a].label + ", " + m.basis[b].label + ", " + m.basis[c].label + ")";
                    }
                }
            }
        }
        add("associativity", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r; ++a) {
            if (sgn(m.integral[a]) != 0 && m.degree(a) != m.dimension) {
                ok = false;
                detail = "integral is nonzero on '" + m.basis[a].label + "' below top degree";
            }
        }
        add("integral-top-degree", ok, detail);
    }

    const auto gram = gram_matrix(m);
    const bool nondegenerate = sgn(determinant(gram)) != 0;
    add("pairing-nondegenerate", nondegenerate, nondegenerate ? "" : "Gram matrix is singular");

    if (nondegenerate) {
        const auto duals = dual_bases(m);
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r && ok; ++a) {
            for (std::size_t b = 0; b < r && ok; ++b) {
                const Rational expected = a == b ? 1 : 0;
                if (pairing(m, duals.delta[a], duals.delta_dual[b]) != expected) {
                    ok = false;
                    detail = "eta(Delta_" + m.basis[a].label + ", Delta^" + m.basis[b].label + ") != delta";
                }
            }
        }
        add("gram-dual", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < r; ++a) {
            const bool any = std::any_of(m.divisor_pairing[a].begin(), m.divisor_pairing[a].end(),
                                         [](auto v) { return v != 0; });
            if (any && m.degree(a) != 1) {
                ok = false;
                detail = "divisor pairing given for non-divisor '" + m.basis[a].label + "'";
            }
        }
        add("divisor-pairing", ok, detail);
    }

    {
        bool ok = is_homogeneous(m, m.ample_class, 1) && (m.lattice_rank == 0 || !m.ample_class.is_zero());
        std::string detail = ok ? "" : "ample class is not a nonzero degree-1 class";
        for (std::size_t i = 0; ok && i < m.lattice_rank; ++i) {
            CurveClass e = CurveClass::zero(m.lattice_rank);
            e.coords[i] = 1;
            const Rational w = beta_pairing(m, m.ample_class, e);
            if (w.get_den() != 1 || w < 1) {
                ok = false;
                detail = "(gamma0, e_" + std::to_string(i) + ") = " + to_string(w) + " is not a positive integer";
            }
        }
        add("ample", ok, detail);
    }

    {
        bool ok = m.chern_classes.size() == static_cast<std::size_t>(m.dimension) + 1;
        std::string detail = ok ? "" : "expected c_0..c_dim";
        if (ok && !(m.chern_classes[0] == m.unit())) {
            ok = false;
            detail = "c_0 != unit";
        }
        for (std::size_t k = 1; ok && k < m.chern_classes.size(); ++k) {
            if (!is_homogeneous(m, m.chern_classes[k], static_cast<int>(k))) {
                ok = false;
                detail = "c_" + std::to_string(k) + " is not of degree " + std::to_string(k);
            }
        }
        add("chern", ok, detail);
    }

    return report;
}

} // namespace gwdesc
