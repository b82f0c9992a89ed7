#include "gwdesc/moduli.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gwdesc/error.hpp"

namespace gwdesc {

Rational psi_integral_genus0(std::span<const int> d)
{
    const int n = static_cast<int>(d.size());
    if (n < 3) {
        throw DomainError("psi_integral_genus0 needs n >= 3 marked points");
    }
    int total = 0;
    for (int di : d) {
        if (di < 0) {
            throw DomainError("psi exponents must be non-negative");
        }
        total += di;
    }
    if (total != n - 3) {
        return 0;
    }
    Integer num = factorial(static_cast<unsigned>(total));
    Integer den = 1;
    for (int di : d) {
        den *= factorial(static_cast<unsigned>(di));
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::vector<BoundaryPartition> psi_boundary_partitions(int i, int j, int k, int n)
{
    if (i == j || i == k || j == k) {
        throw DomainError("psi_boundary_partitions: marks i, j, k must be distinct");
    }
    if (n < 4 || i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
        throw DomainError("psi_boundary_partitions: need n >= 4 and marks in range");
    }
    std::vector<int> free;
    for (int m = 0; m < n; ++m) {
        if (m != i && m != j && m != k) {
            free.push_back(m);
        }
    }
    std::vector<BoundaryPartition> out;
    const auto f = free.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << f); ++mask) {
        BoundaryPartition p;
        p.side.push_back(i);
        for (std::size_t b = 0; b < f; ++b) {
            if (mask & (std::size_t{1} << b)) {
                p.side.push_back(free[b]);
            }
        }
        // |S| >= 2 holds because mask != 0; the complement holds j and k.
        std::sort(p.side.begin(), p.side.end());
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.side.size() != b.side.size() ? a.side.size() < b.side.size() : a.side < b.side;
    });
    return out;
}

TautKey TautKey::make(int genus, std::vector<int> psi, std::vector<int> lambda)
{
    TautKey key;
    key.genus = genus;
    key.n = static_cast<int>(psi.size());
    std::sort(psi.begin(), psi.end());
    std::erase(lambda, 0);
    std::sort(lambda.begin(), lambda.end());
    key.psi = std::move(psi);
    key.lambda = std::move(lambda);
    return key;
}

std::string to_string(const TautKey& key)
{
    std::ostringstream os;
    os << "g=" << key.genus << ", n=" << key.n << ", psi=[";
    for (std::size_t i = 0; i < key.psi.size(); ++i) {
        os << (i ? "," : "") << key.psi[i];
    }
    os << "], lambda=[";
    for (std::size_t i = 0; i < key.lambda.size(); ++i) {
        os << (i ? "," : "") << key.lambda[i];
    }
    os << "]";
    return os.str();
}

void TautTable::insert(const TautKey& key, const Rational& value)
{
    if (key.genus < 1) {
        throw ValidationError("tautological table holds genus >= 1 entries only");
    }
    const int dim = 3 * key.genus - 3 + key.n;
    const int degree = std::accumulate(key.psi.begin(), key.psi.end(), 0)
                       + std::accumulate(key.lambda.begin(), key.lambda.end(), 0);
    if (degree != dim) {
        throw ValidationError("tautological entry " + to_string(key) + " has degree " + std::to_string(degree)
                              + " but dim M̄_{g,n} = " + std::to_string(dim));
    }
    for (int l : key.lambda) {
        if (l > key.genus) {
            throw ValidationError("tautological entry " + to_string(key) + " uses λ_i with i > g");
        }
    }
    entries_[key] = value;
}

std::optional<Rational> TautTable::lookup(const TautKey& key) const
{
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

CohClass product_of_insertions(const GeometryModel& model, const PointCorrelatorQuery& q)
{
    CohClass prod = model.unit();
    for (const auto& ins : q.insertions) {
        prod = cup(model, prod, ins.gamma);
    }
    return prod;
}

std::vector<int> psi_vector(const PointCorrelatorQuery& q)
{
    std::vector<int> d;
    for (const auto& ins : q.insertions) {
        if (ins.d < 0) {
            throw DomainError("descendant exponents must be non-negative");
        }
        d.push_back(ins.d);
    }
    return d;
}

Rational taut_integral(const TautTable* table, int genus, const std::vector<int>& psi, const std::vector<int>& lambda)
{
    const auto key = TautKey::make(genus, psi, lambda);
    if (table == nullptr) {
        throw TableIncomplete("no tautological table supplied; needed " + to_string(key));
    }
    auto v = table->lookup(key);
    if (!v) {
        throw TableIncomplete("tautological table incomplete: missing " + to_string(key));
    }
    return *v;
}

bool is_stable(int genus, int n) { return 2 * genus - 2 + n > 0; }

} // namespace

Rational point_correlator_chern_sum(const PointCorrelatorQuery& q, const GeometryModel& model, const TautTable* table)
{
    const int g = q.genus;
    const int n = static_cast<int>(q.insertions.size());
    if (g < 0) {
        throw DomainError("genus must be non-negative");
    }
    if (!is_stable(g, n)) {
        return 0;
    }
    const int delta = model.dimension;
    if (g >= 2 && delta >= 4) {
        return 0;
    }
    const auto psi = psi_vector(q);
    const int psi_degree = std::accumulate(psi.begin(), psi.end(), 0);
    const int moduli_dim = 3 * g - 3 + n;
    const CohClass prod = product_of_insertions(model, q);

    Rational total = 0;
    std::vector<int> idx(static_cast<std::size_t>(delta), 0);
    // Non-decreasing tuples 0 <= i_1 <= ... <= i_delta <= g.
    while (true) {
        const int lambda_degree = std::accumulate(idx.begin(), idx.end(), 0);
        if (lambda_degree + psi_degree == moduli_dim) {
            const Rational v_part = integrate(model, cup(model, chern_symmetric(model, idx, g), prod));
            if (sgn(v_part) != 0) {
                const Rational m_part = g == 0 ? psi_integral_genus0(psi) : taut_integral(table, g, psi, idx);
                total += v_part * m_part;
            }
        }
        int pos = delta - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        const int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int p = pos; p < delta; ++p) {
            idx[static_cast<std::size_t>(p)] = next;
        }
    }
    if ((g * delta) % 2 != 0) {
        total = -total;
    }
    return total;
}

Rational point_correlator(const PointCorrelatorQuery& q, const GeometryModel& model, const TautTable* table)
{
    const int g = q.genus;
    const int n = static_cast<int>(q.insertions.size());
    if (g < 0) {
        throw DomainError("genus must be non-negative");
    }
    if (!is_stable(g, n)) {
        return 0;
    }
    const auto psi = psi_vector(q);
    if (g == 0) {
        const Rational multinomial = psi_integral_genus0(psi);
        if (sgn(multinomial) == 0) {
            return 0;
        }
        return multinomial * integrate(model, product_of_insertions(model, q));
    }
    if (g == 1) {
        const int delta = model.dimension;
        const int psi_degree = std::accumulate(psi.begin(), psi.end(), 0);
        const CohClass prod = product_of_insertions(model, q);
        Rational total = 0;
        if (psi_degree == n) {
            const Rational v_part = integrate(model, cup(model, model.chern_classes.at(static_cast<std::size_t>(delta)), prod));
            if (sgn(v_part) != 0) {
                total += v_part * taut_integral(table, 1, psi, {});
            }
        }
        if (delta >= 1 && psi_degree == n - 1) {
            const Rational v_part
                = integrate(model, cup(model, model.chern_classes.at(static_cast<std::size_t>(delta - 1)), prod));
            if (sgn(v_part) != 0) {
                total -= v_part * taut_integral(table, 1, psi, {1});
            }
        }
        return total;
    }
    return point_correlator_chern_sum(q, model, table);
}

} // namespace gwdesc
