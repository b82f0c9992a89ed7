#include "gwdesc/phase_space.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "gwdesc/error.hpp"

namespace gwdesc {

namespace {

Rational multiplicity_factorial(const std::vector<PhaseIndex>& key)
{
    Integer denom = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < key.size(); ++i) {
        run = (i > 0 && key[i] == key[i - 1]) ? run + 1 : 1;
        denom *= run;
    }
    return Rational(denom);
}

} // namespace

// ---------------------------------------------------------------------------------------------
// TransformT

TransformT TransformT::identity(NovikovTruncation truncation, std::vector<PhaseIndex> indices)
{
    TransformT t{truncation, std::move(indices), {}};
    const auto n = t.indices.size();
    t.entries.assign(n, std::vector<NovikovSeries>(n, NovikovSeries(truncation)));
    for (std::size_t i = 0; i < n; ++i) {
        t.entries[i][i] = NovikovSeries::constant(truncation, 1);
    }
    return t;
}

std::size_t TransformT::position(const PhaseIndex& p) const
{
    auto it = std::lower_bound(indices.begin(), indices.end(), p);
    if (it == indices.end() || *it != p) {
        throw DomainError("phase index outside the transform");
    }
    return static_cast<std::size_t>(it - indices.begin());
}

const NovikovSeries& TransformT::at(const PhaseIndex& row, const PhaseIndex& col) const
{
    return entries[position(row)][position(col)];
}

TransformT operator*(const TransformT& a, const TransformT& b)
{
    if (a.indices != b.indices || !(a.truncation == b.truncation)) {
        throw ConfigError("transforms live on different index sets");
    }
    TransformT out = TransformT::identity(a.truncation, a.indices);
    const auto n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            NovikovSeries s(a.truncation);
            for (std::size_t k = 0; k < n; ++k) {
                if (!a.entries[i][k].is_zero() && !b.entries[k][j].is_zero()) {
                    s += a.entries[i][k] * b.entries[k][j];
                }
            }
            out.entries[i][j] = std::move(s);
        }
    }
    return out;
}

bool operator==(const TransformT& a, const TransformT& b)
{
    return a.indices == b.indices && a.truncation == b.truncation && a.entries == b.entries;
}

// ---------------------------------------------------------------------------------------------
// PotentialSeries

void PotentialSeries::add(std::vector<PhaseIndex> key, const NovikovSeries& value)
{
    if (value.is_zero()) {
        return;
    }
    std::sort(key.begin(), key.end());
    auto [it, inserted] = terms.try_emplace(std::move(key), value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms.erase(it);
        }
    }
}

NovikovSeries PotentialSeries::coefficient(const std::vector<PhaseIndex>& key) const
{
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    auto it = terms.find(sorted);
    return it == terms.end() ? NovikovSeries(truncation) : it->second;
}

bool operator==(const PotentialSeries& a, const PotentialSeries& b)
{
    return a.truncation == b.truncation && a.terms == b.terms;
}

std::string to_string(const GeometryModel& model, const std::vector<PhaseIndex>& key)
{
    std::string out;
    for (const auto& p : key) {
        if (!out.empty()) {
            out += "*";
        }
        out += "x[" + std::to_string(p.d) + "," + model.basis.at(p.a).label + "]";
    }
    return out.empty() ? "1" : out;
}

std::optional<std::string> first_difference(const GeometryModel& model, const PotentialSeries& a,
                                            const PotentialSeries& b, std::size_t* mismatches)
{
    std::set<std::vector<PhaseIndex>> keys;
    for (const auto& [k, v] : a.terms) {
        keys.insert(k);
    }
    for (const auto& [k, v] : b.terms) {
        keys.insert(k);
    }
    std::optional<std::string> first;
    std::size_t count = 0;
    for (const auto& k : keys) {
        const auto va = a.coefficient(k);
        const auto vb = b.coefficient(k);
        if (!(va == vb)) {
            ++count;
            if (!first) {
                first = to_string(model, k) + ": " + to_string(va) + " vs " + to_string(vb);
            }
        }
    }
    if (mismatches) {
        *mismatches = count;
    }
    return first;
}

std::vector<std::vector<PhaseIndex>> index_multisets(const std::vector<PhaseIndex>& indices, std::size_t lo,
                                                     std::size_t hi)
{
    std::vector<std::vector<PhaseIndex>> out;
    std::vector<PhaseIndex> current;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
        if (current.size() >= lo) {
            out.push_back(current);
        }
        if (current.size() == hi) {
            return;
        }
        for (std::size_t i = from; i < indices.size(); ++i) {
            current.push_back(indices[i]);
            walk(i);
            current.pop_back();
        }
    };
    walk(0);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

// ---------------------------------------------------------------------------------------------
// PhaseSpace

PhaseSpace::PhaseSpace(const Engine& engine, TruncationPolicy policy)
    : engine_(engine)
    , policy_(policy)
    , truncation_(engine.model().novikov_truncation(policy.max_beta_degree))
{
    if (policy.max_beta_degree < 0 || policy.max_x_degree < 0 || policy.max_descendant < 0) {
        throw ConfigError("truncation bounds must be non-negative");
    }
    classes_ = truncation_.effective_classes();
    for (int d = 0; d <= policy.max_descendant; ++d) {
        for (std::size_t a = 0; a < engine.model().rank(); ++a) {
            indices_.push_back({d, a});
        }
    }
}

NovikovSeries PhaseSpace::summed_correlator(const std::vector<Insertion>& insertions) const
{
    NovikovSeries out(truncation_);
    for (const auto& beta : classes_) {
        out.add_term(beta, engine_.descendant_correlator(0, beta, insertions));
    }
    return out;
}

NovikovSeries PhaseSpace::summed_generalized(const std::vector<Insertion>& insertions) const
{
    NovikovSeries out(truncation_);
    for (const auto& beta : classes_) {
        out.add_term(beta, engine_.generalized_correlator(beta, insertions));
    }
    return out;
}

NovikovSeries PhaseSpace::summed_two_point(int d1, const CohClass& g1, int d2, const CohClass& g2) const
{
    NovikovSeries out(truncation_);
    for (const auto& beta : classes_) {
        if (!beta.is_zero()) {
            out.add_term(beta, engine_.two_point(beta, d1, g1, d2, g2));
        }
    }
    return out;
}

SeriesClass PhaseSpace::quantum_product(const CohClass& x, const CohClass& y) const
{
    const auto& model = engine_.model();
    const auto r = model.rank();
    SeriesClass out(r, zero());
    for (std::size_t p = 0; p < r; ++p) {
        if (sgn(x.coeffs[p]) == 0) {
            continue;
        }
        for (std::size_t s = 0; s < r; ++s) {
            if (sgn(y.coeffs[s]) == 0) {
                continue;
            }
            for (std::size_t b = 0; b < r; ++b) {
                // Δ^a has coefficient Ginv[a][b] on Δ_b.
                const auto three = summed_correlator({tau(0, b), tau(0, p), tau(0, s)});
                if (three.is_zero()) {
                    continue;
                }
                for (std::size_t a = 0; a < r; ++a) {
                    const Rational w = engine_.duals().delta_dual[a].coeffs[b] * x.coeffs[p] * y.coeffs[s];
                    if (sgn(w) != 0) {
                        out[a] += three * w;
                    }
                }
            }
        }
    }
    return out;
}

SeriesClass PhaseSpace::U_operator(int d, const CohClass& gamma) const
{
    if (d < 0) {
        throw DomainError("U_d needs d >= 0");
    }
    const auto r = engine_.model().rank();
    SeriesClass out(r, zero());
    if (d == 0) {
        for (std::size_t a = 0; a < r; ++a) {
            out[a] = NovikovSeries::constant(truncation_, gamma.coeffs[a]);
        }
        return out;
    }
    for (std::size_t a = 0; a < r; ++a) {
        const auto two = summed_two_point(d - 1, gamma, 0, engine_.model().basis_class(a));
        if (two.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < r; ++c) {
            const Rational w = engine_.duals().delta_dual[a].coeffs[c];
            if (sgn(w) != 0) {
                out[c] += two * w;
            }
        }
    }
    return out;
}

// <γ0, τ_k Δ_a, Δ_b> summed over β: primary at k = 0, otherwise <τ_{k-1}Δ_a, γ0·Δ_b>.
NovikovSeries PhaseSpace::triple25(int k, std::size_t a, std::size_t b) const
{
    const auto& model = engine_.model();
    const auto& gamma0 = engine_.reduction_divisor();
    NovikovSeries out = zero();
    if (k == 0) {
        for (std::size_t g = 0; g < model.rank(); ++g) {
            if (sgn(gamma0.coeffs[g]) != 0) {
                out += summed_correlator({tau(0, g), tau(0, a), tau(0, b)}) * gamma0.coeffs[g];
            }
        }
        return out;
    }
    const auto product = quantum_product(gamma0, model.basis_class(b));
    for (std::size_t c = 0; c < model.rank(); ++c) {
        if (!product[c].is_zero()) {
            out += tp25(k - 1, a, c) * product[c];
        }
    }
    return out;
}

NovikovSeries PhaseSpace::tp25(int d, std::size_t a, std::size_t b) const
{
    const auto key = std::make_tuple(d, a, b);
    if (auto it = tp25_memo_.find(key); it != tp25_memo_.end()) {
        return it->second;
    }
    const auto& model = engine_.model();
    const auto& gamma0 = engine_.reduction_divisor();
    const CurveClass origin = CurveClass::zero(model.lattice_rank);
    const ClassPairing pairing = [this](const CurveClass& beta) { return engine_.reduction_pairing(beta); };

    NovikovSeries out = zero();
    CohClass power = model.basis_class(a); // γ0^{j-1} ∪ Δ_a
    for (int j = 1; j <= d + 1; ++j) {
        NovikovSeries bracket = zero();
        for (std::size_t c = 0; c < model.rank(); ++c) {
            if (sgn(power.coeffs[c]) != 0) {
                bracket += triple25(d + 1 - j, c, b) * power.coeffs[c];
            }
        }
        bracket.add_term(origin, -bracket.coefficient(origin));
        for (int i = 0; i < j; ++i) {
            bracket = antiderivative_q(bracket, pairing);
        }
        if (j % 2 == 1) {
            out += bracket;
        } else {
            out -= bracket;
        }
        power = cup(model, gamma0, power);
    }
    tp25_memo_.emplace(key, out);
    return out;
}

NovikovSeries PhaseSpace::two_point_via_25(int d, const CohClass& g1, const CohClass& g2) const
{
    if (d < 0) {
        throw DomainError("two_point_via_25 needs d >= 0");
    }
    NovikovSeries out = zero();
    for (std::size_t a = 0; a < g1.rank(); ++a) {
        for (std::size_t b = 0; b < g2.rank(); ++b) {
            const Rational w = g1.coeffs[a] * g2.coeffs[b];
            if (sgn(w) != 0) {
                out += tp25(d, a, b) * w;
            }
        }
    }
    return out;
}

TransformT PhaseSpace::build_T() const
{
    TransformT t = TransformT::identity(truncation_, indices_);
    const auto& model = engine_.model();
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        const auto [c, b] = indices_[i];
        for (std::size_t j = 0; j < indices_.size(); ++j) {
            const auto [d, a] = indices_[j];
            if (d >= c + 1) {
                t.entries[i][j] =
                    summed_two_point(d - c - 1, model.basis_class(a), 0, engine_.duals().delta_dual[b]);
            }
        }
    }
    return t;
}

TransformT PhaseSpace::invert_T(const TransformT& t)
{
    const auto n = t.size();
    TransformT minus_n = TransformT::identity(t.truncation, t.indices);
    int max_weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
        max_weight = std::max(max_weight, t.indices[i].d);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (!(t.entries[i][i] == NovikovSeries::constant(t.truncation, 1))) {
                    throw DomainError("transform must have identity diagonal");
                }
                minus_n.entries[i][j] = NovikovSeries(t.truncation);
            } else {
                minus_n.entries[i][j] = -t.entries[i][j];
            }
        }
    }
    TransformT result = TransformT::identity(t.truncation, t.indices);
    TransformT power = result;
    for (int k = 1; k <= max_weight; ++k) {
        power = power * minus_n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                result.entries[i][j] += power.entries[i][j];
            }
        }
    }
    return result;
}

PotentialSeries PhaseSpace::assemble(bool modified) const
{
    PotentialSeries out(truncation_);
    const auto hi = static_cast<std::size_t>(policy_.max_x_degree);
    for (const auto& key : index_multisets(indices_, 3, hi)) {
        std::vector<Insertion> ins;
        for (const auto& p : key) {
            ins.push_back(modified ? tau(0, p.d, p.a) : tau(p.d, p.a));
        }
        auto value = summed_generalized(ins);
        value *= 1 / multiplicity_factorial(key);
        out.add(key, value);
    }
    return out;
}

PotentialSeries PhaseSpace::potential_F_st() const { return assemble(false); }

PotentialSeries PhaseSpace::potential_G() const { return assemble(true); }

PotentialSeries PhaseSpace::primary_potential_Phi() const
{
    PotentialSeries out(truncation_);
    for (const auto& [key, value] : potential_F_st().terms) {
        if (std::all_of(key.begin(), key.end(), [](const PhaseIndex& p) { return p.d == 0; })) {
            out.add(key, value);
        }
    }
    return out;
}

PotentialSeries PhaseSpace::compose(const PotentialSeries& g, const TransformT& t)
{
    // Linear form of each y-coordinate in x.
    std::vector<std::vector<std::pair<PhaseIndex, NovikovSeries>>> forms(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (!t.entries[i][j].is_zero()) {
                forms[i].emplace_back(t.indices[j], t.entries[i][j]);
            }
        }
    }
    PotentialSeries out(g.truncation);
    for (const auto& [key, coeff] : g.terms) {
        std::map<std::vector<PhaseIndex>, NovikovSeries> poly;
        poly.emplace(std::vector<PhaseIndex>{}, coeff);
        for (const auto& y : key) {
            std::map<std::vector<PhaseIndex>, NovikovSeries> next;
            for (const auto& [mono, s] : poly) {
                for (const auto& [x, entry] : forms[t.position(y)]) {
                    auto grown = mono;
                    grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
                    auto term = s * entry;
                    if (term.is_zero()) {
                        continue;
                    }
                    auto [it, inserted] = next.try_emplace(std::move(grown), term);
                    if (!inserted) {
                        it->second += term;
                    }
                }
            }
            poly = std::move(next);
        }
        for (const auto& [mono, s] : poly) {
            out.add(mono, s);
        }
    }
    return out;
}

// Expands every τ_d Δ_a as Σ_j τ_{0,j} U_{d-j}(Δ_a) and sums the modified correlators.
NovikovSeries PhaseSpace::substituted(const std::vector<Insertion>& insertions) const
{
    struct Option {
        Insertion ins;
        NovikovSeries weight;
    };
    const auto& model = engine_.model();
    std::vector<std::vector<Option>> options;
    for (const auto& x : insertions) {
        std::vector<Option> opts;
        for (int j = 0; j <= x.d; ++j) {
            const auto u = U_operator(x.d - j, model.basis_class(x.a));
            for (std::size_t b = 0; b < model.rank(); ++b) {
                if (!u[b].is_zero()) {
                    opts.push_back({tau(0, j, b), u[b]});
                }
            }
        }
        options.push_back(std::move(opts));
    }
    NovikovSeries total = zero();
    std::vector<Insertion> chosen;
    std::function<void(std::size_t, const NovikovSeries&)> walk = [&](std::size_t i, const NovikovSeries& w) {
        if (w.is_zero()) {
            return;
        }
        if (i == options.size()) {
            total += w * summed_generalized(chosen);
            return;
        }
        for (const auto& opt : options[i]) {
            chosen.push_back(opt.ins);
            walk(i + 1, w * opt.weight);
            chosen.pop_back();
        }
    };
    walk(0, NovikovSeries::constant(truncation_, 1));
    return total;
}

Theorem22Report PhaseSpace::verify_theorem22(std::size_t substitution_max_n) const
{
    Theorem22Report report;
    const auto f = potential_F_st();
    const auto gt = compose(potential_G(), build_T());
    std::set<std::vector<PhaseIndex>> keys;
    for (const auto& [k, v] : f.terms) {
        keys.insert(k);
    }
    for (const auto& [k, v] : gt.terms) {
        keys.insert(k);
    }
    report.coefficients_compared = keys.size();
    report.first_mismatch = first_difference(engine_.model(), f, gt, &report.mismatches);

    const auto hi = std::min(substitution_max_n, static_cast<std::size_t>(policy_.max_x_degree));
    for (const auto& key : index_multisets(indices_, 3, hi)) {
        std::vector<Insertion> ins;
        for (const auto& p : key) {
            ins.push_back(tau(p.d, p.a));
        }
        const auto lhs = summed_correlator(ins);
        const auto rhs = substituted(ins);
        ++report.substitution_checks;
        if (!(lhs == rhs)) {
            ++report.substitution_failures;
            if (!report.first_substitution_failure) {
                report.first_substitution_failure =
                    to_string(engine_.model(), key) + ": " + to_string(lhs) + " vs " + to_string(rhs);
            }
        }
    }
    return report;
}

WdvvReport PhaseSpace::check_wdvv(const PotentialSeries& phi) const
{
    using Poly = std::map<std::vector<std::size_t>, NovikovSeries>;
    const auto& model = engine_.model();
    const auto r = model.rank();
    const auto top = policy_.max_x_degree >= 3 ? static_cast<std::size_t>(policy_.max_x_degree) - 3 : 0;

    // Small phase space polynomial in t_a.
    Poly small;
    for (const auto& [key, value] : phi.terms) {
        std::vector<std::size_t> mono;
        for (const auto& p : key) {
            if (p.d != 0) {
                throw DomainError("check_wdvv expects a primary potential");
            }
            mono.push_back(p.a);
        }
        small.emplace(std::move(mono), value);
    }
    auto derive = [&](const Poly& p, std::size_t a) {
        Poly out;
        for (const auto& [mono, s] : p) {
            const auto count = std::count(mono.begin(), mono.end(), a);
            if (count == 0) {
                continue;
            }
            auto m = mono;
            m.erase(std::find(m.begin(), m.end(), a));
            auto term = s * Rational(static_cast<long>(count));
            auto [it, inserted] = out.try_emplace(std::move(m), term);
            if (!inserted) {
                it->second += term;
            }
        }
        return out;
    };
    auto multiply = [&](const Poly& p, const Poly& q, const Rational& w, Poly& into) {
        for (const auto& [m1, s1] : p) {
            for (const auto& [m2, s2] : q) {
                if (m1.size() + m2.size() > top) {
                    continue;
                }
                std::vector<std::size_t> m;
                std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
                auto term = s1 * s2 * w;
                auto [it, inserted] = into.try_emplace(std::move(m), term);
                if (!inserted) {
                    it->second += term;
                }
            }
        }
    };
    auto clean = [](Poly& p) {
        std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
    };

    std::vector<std::vector<std::vector<Poly>>> third(r, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r)));
    for (std::size_t a = 0; a < r; ++a) {
        const auto pa = derive(small, a);
        for (std::size_t b = 0; b < r; ++b) {
            const auto pab = derive(pa, b);
            for (std::size_t c = 0; c < r; ++c) {
                third[a][b][c] = derive(pab, c);
            }
        }
    }
    const auto& eta_inv = engine_.eta_inverse();
    WdvvReport report;
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
            for (std::size_t c = 0; c < r; ++c) {
                for (std::size_t d = 0; d < r; ++d) {
                    Poly lhs;
                    Poly rhs;
                    for (std::size_t e = 0; e < r; ++e) {
                        for (std::size_t f = 0; f < r; ++f) {
                            if (sgn(eta_inv(e, f)) == 0) {
                                continue;
                            }
                            multiply(third[a][b][e], third[f][c][d], eta_inv(e, f), lhs);
                            multiply(third[a][c][e], third[f][b][d], eta_inv(e, f), rhs);
                        }
                    }
                    clean(lhs);
                    clean(rhs);
                    ++report.relations;
                    if (lhs != rhs) {
                        ++report.failures;
                        if (!report.first_failure) {
                            report.first_failure = "(" + model.basis[a].label + "," + model.basis[b].label + "|"
                                                   + model.basis[c].label + "," + model.basis[d].label + ")";
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace gwdesc
