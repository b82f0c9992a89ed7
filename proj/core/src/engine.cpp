#include "gwdesc/engine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gwdesc/error.hpp"

namespace gwdesc {

namespace {

std::vector<std::pair<std::size_t, Rational>> support(const CohClass& x)
{
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t a = 0; a < x.rank(); ++a) {
        if (sgn(x.coeffs[a]) != 0) {
            out.emplace_back(a, x.coeffs[a]);
        }
    }
    return out;
}

std::vector<Insertion> replaced(std::vector<Insertion> ins, std::size_t pos, Insertion with)
{
    ins[pos] = with;
    return ins;
}

std::vector<Insertion> with_extra(std::vector<Insertion> ins, Insertion extra)
{
    ins.push_back(extra);
    return ins;
}

// Distinct values with multiplicities of a sorted vector.
std::vector<std::pair<std::size_t, unsigned>> multiplicities(const std::vector<std::size_t>& sorted)
{
    std::vector<std::pair<std::size_t, unsigned>> out;
    for (auto v : sorted) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1u);
        }
    }
    return out;
}

} // namespace

CorrelatorKey CorrelatorKey::make(int genus, CurveClass beta, std::vector<Insertion> insertions)
{
    std::sort(insertions.begin(), insertions.end());
    return CorrelatorKey{genus, std::move(beta), std::move(insertions)};
}

Engine::Engine(GeometryModel model, PrimaryTable table, EngineOptions options, std::optional<TautTable> taut)
    : model_(std::move(model))
    , table_(std::move(table))
    , options_(std::move(options))
    , taut_(std::move(taut))
{
    const auto report = validate_model(model_);
    if (!report.ok()) {
        for (const auto& c : report.checks) {
            if (!c.passed) {
                throw ValidationError("model '" + model_.name + "' fails check '" + c.name + "': " + c.detail);
            }
        }
    }
    table_.check_dimensions(model_);
    gamma0_ = options_.reduction_divisor.value_or(model_.ample_class);
    if (gamma0_.rank() != model_.rank() || !is_homogeneous(model_, gamma0_, 1)) {
        throw DomainError("reduction divisor must be a degree-1 class");
    }
    duals_ = dual_bases(model_);
    eta_inv_ = *inverse(gram_matrix(model_));
    unit_ = model_.unit_index();

    // Express each basis element of degree p >= 2 through products divisor ∪ (degree p-1).
    const auto r = model_.rank();
    factors_.resize(r);
    for (std::size_t a = 0; a < r; ++a) {
        const int p = model_.degree(a);
        if (p < 2) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t dv = 0; dv < r; ++dv) {
            for (std::size_t rest = 0; rest < r; ++rest) {
                if (model_.degree(dv) == 1 && model_.degree(rest) == p - 1) {
                    pairs.emplace_back(dv, rest);
                }
            }
        }
        std::vector<std::size_t> rows;
        for (std::size_t b = 0; b < r; ++b) {
            if (model_.degree(b) == p) {
                rows.push_back(b);
            }
        }
        RationalMatrix m(rows.size(), pairs.size());
        for (std::size_t c = 0; c < pairs.size(); ++c) {
            const auto& prod = model_.cup_table[pairs[c].first][pairs[c].second];
            for (std::size_t row = 0; row < rows.size(); ++row) {
                m(row, c) = prod.coeffs[rows[row]];
            }
        }
        std::vector<Rational> rhs(rows.size());
        for (std::size_t row = 0; row < rows.size(); ++row) {
            rhs[row] = rows[row] == a ? 1 : 0;
        }
        if (auto x = solve(m, rhs)) {
            std::vector<Factor> f;
            for (std::size_t c = 0; c < pairs.size(); ++c) {
                if (sgn((*x)[c]) != 0) {
                    f.push_back({(*x)[c], pairs[c].first, pairs[c].second});
                }
            }
            factors_[a] = std::move(f);
        }
    }
}

Rational Engine::reduction_pairing(const CurveClass& beta) const
{
    return beta_pairing(model_, gamma0_, beta);
}

bool Engine::dimension_matches(const CurveClass& beta, const std::vector<Insertion>& insertions) const
{
    long total = 0;
    for (const auto& ins : insertions) {
        total += ins.d + ins.e + model_.degree(ins.a);
    }
    const long n = static_cast<long>(insertions.size());
    return Rational(total) == Rational(model_.dimension + n - 3) + c1_pairing(model_, beta);
}

void Engine::check_insertions(const std::vector<Insertion>& insertions) const
{
    for (const auto& ins : insertions) {
        if (ins.d < 0 || ins.e < 0) {
            throw DomainError("insertion exponents must be non-negative");
        }
        if (ins.a >= model_.rank()) {
            throw DomainError("insertion refers to a basis index out of range");
        }
    }
}

std::optional<Rational> Engine::cached(const MemoKey& key) const
{
    if (!options_.use_cache) {
        return std::nullopt;
    }
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Rational Engine::remember(MemoKey key, Rational value) const
{
    if (options_.use_cache) {
        std::unique_lock lock(cache_mutex_);
        cache_.try_emplace(std::move(key), value);
    }
    return value;
}

std::size_t Engine::cache_size() const
{
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

void Engine::clear_cache()
{
    std::unique_lock lock(cache_mutex_);
    cache_.clear();
}

// ---------------------------------------------------------------------------------------------
// Primary correlators

Rational Engine::primary3(const CurveClass& beta, std::size_t a, std::size_t b, std::size_t c) const
{
    if (beta.is_zero()) {
        return integrate(model_, cup(model_, cup(model_, model_.basis_class(a), model_.basis_class(b)),
                                     model_.basis_class(c)));
    }
    return table_.lookup(beta, {a, b, c});
}

Rational Engine::primary(const CurveClass& beta, std::vector<std::size_t> classes) const
{
    if (classes.size() < 3) {
        throw DomainError("primary correlators need n >= 3");
    }
    for (auto a : classes) {
        if (a >= model_.rank()) {
            throw DomainError("basis index out of range");
        }
    }
    std::sort(classes.begin(), classes.end());
    return primary_impl(beta, classes);
}

Rational Engine::primary_impl(const CurveClass& beta, const std::vector<std::size_t>& classes) const
{
    const auto n = classes.size();
    if (options_.dimension_shortcut) {
        std::vector<Insertion> ins;
        for (auto a : classes) {
            ins.push_back(tau(0, a));
        }
        if (!dimension_matches(beta, ins)) {
            return 0;
        }
    }
    if (n == 3) {
        return primary3(beta, classes[0], classes[1], classes[2]);
    }
    if (beta.is_zero()) {
        return 0;
    }
    // Fundamental class axiom.
    if (std::find(classes.begin(), classes.end(), unit_) != classes.end()) {
        return 0;
    }
    MemoKey key{Kind::Primary, 0, beta, {}};
    for (auto a : classes) {
        key.insertions.push_back(tau(0, a));
    }
    if (auto v = cached(key)) {
        return *v;
    }
    Rational value;
    auto divisor = std::find_if(classes.begin(), classes.end(), [&](auto a) { return model_.degree(a) == 1; });
    if (divisor != classes.end()) {
        // Divisor axiom.
        std::vector<std::size_t> rest = classes;
        rest.erase(rest.begin() + (divisor - classes.begin()));
        const Rational l = beta_pairing(model_, model_.basis_class(*divisor), beta);
        value = sgn(l) == 0 ? Rational(0) : l * primary_impl(beta, rest);
    } else {
        value = reconstruct_primary(beta, classes);
    }
    return remember(std::move(key), value);
}

// Associativity relation on n+1 points {u, v, s, t} ∪ R, summed over the splittings with u, v on
// one side and s, t on the other.
Rational Engine::wdvv_side(const CurveClass& beta, std::array<std::size_t, 2> left, std::array<std::size_t, 2> right,
                           const std::vector<std::size_t>& rest, bool skip_classical_left) const
{
    const auto r = model_.rank();
    const auto groups = multiplicities(rest);
    Rational total = 0;
    std::vector<unsigned> take(groups.size(), 0);
    while (true) {
        Integer weight = 1;
        std::vector<std::size_t> a_part;
        std::vector<std::size_t> b_part;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            weight *= binomial(groups[g].second, take[g]);
            a_part.insert(a_part.end(), take[g], groups[g].first);
            b_part.insert(b_part.end(), groups[g].second - take[g], groups[g].first);
        }
        for (const auto& beta1 : sub_classes(beta)) {
            const auto beta2 = beta - beta1;
            if (skip_classical_left && beta1.is_zero() && a_part.empty()) {
                continue;
            }
            if ((beta1.is_zero() && !a_part.empty()) || (beta2.is_zero() && !b_part.empty())) {
                continue; // >= 4 points at β = 0
            }
            std::vector<Rational> left_vals(r);
            bool any_left = false;
            for (std::size_t e = 0; e < r; ++e) {
                std::vector<std::size_t> cls{left[0], left[1]};
                cls.insert(cls.end(), a_part.begin(), a_part.end());
                cls.push_back(e);
                std::sort(cls.begin(), cls.end());
                left_vals[e] = primary_impl(beta1, cls);
                any_left = any_left || sgn(left_vals[e]) != 0;
            }
            if (!any_left) {
                continue;
            }
            for (std::size_t f = 0; f < r; ++f) {
                Rational contraction = 0;
                for (std::size_t e = 0; e < r; ++e) {
                    if (sgn(left_vals[e]) != 0 && sgn(eta_inv_(e, f)) != 0) {
                        contraction += left_vals[e] * eta_inv_(e, f);
                    }
                }
                if (sgn(contraction) == 0) {
                    continue;
                }
                std::vector<std::size_t> cls{right[0], right[1]};
                cls.insert(cls.end(), b_part.begin(), b_part.end());
                cls.push_back(f);
                std::sort(cls.begin(), cls.end());
                total += Rational(weight) * contraction * primary_impl(beta2, cls);
            }
        }
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) {
            take[g] = 0;
            ++g;
        }
        if (g == groups.size()) {
            break;
        }
        ++take[g];
    }
    return total;
}

// All insertions have degree >= 2 and n >= 4. Factor the lowest-degree insertion as
// Σ c D ∪ ε and solve the associativity relation on {D, ε, x, y} ∪ R for <D∪ε, x, y, R>.
Rational Engine::reconstruct_primary(const CurveClass& beta, const std::vector<std::size_t>& classes) const
{
    const auto pos = static_cast<std::size_t>(
        std::min_element(classes.begin(), classes.end(),
                         [&](auto x, auto y) { return model_.degree(x) < model_.degree(y); })
        - classes.begin());
    const auto target = classes[pos];
    if (!factors_[target]) {
        throw DomainError("cannot reconstruct primary correlators with insertion '" + model_.basis[target].label
                          + "': it is not generated by divisor classes");
    }
    std::vector<std::size_t> others = classes;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(pos));
    const auto x = others[0];
    const auto y = others[1];
    const std::vector<std::size_t> rest(others.begin() + 2, others.end());

    Rational total = 0;
    for (const auto& f : *factors_[target]) {
        const Rational rhs = wdvv_side(beta, {f.divisor, x}, {f.rest, y}, rest, false);
        const Rational lhs_rest = wdvv_side(beta, {f.divisor, f.rest}, {x, y}, rest, true);
        total += f.coeff * (rhs - lhs_rest);
    }
    return total;
}

// ---------------------------------------------------------------------------------------------
// Two-point and unstable correlators

Rational Engine::two_point(const CurveClass& beta, Insertion first, Insertion second) const
{
    check_insertions({first, second});
    if (first.e != 0 || second.e != 0) {
        throw DomainError("two-point correlators carry no φ-exponents");
    }
    if (second < first) {
        std::swap(first, second);
    }
    return two_point_impl(beta, first, second);
}

Rational Engine::two_point(const CurveClass& beta, int d1, const CohClass& g1, int d2, const CohClass& g2) const
{
    Rational total = 0;
    for (const auto& [a, ca] : support(g1)) {
        for (const auto& [b, cb] : support(g2)) {
            total += ca * cb * two_point(beta, tau(d1, a), tau(d2, b));
        }
    }
    return total;
}

Rational Engine::two_point_impl(const CurveClass& beta, Insertion x, Insertion y) const
{
    if (beta.is_zero()) {
        return 0;
    }
    if (options_.dimension_shortcut && !dimension_matches(beta, {x, y})) {
        return 0;
    }
    MemoKey key{Kind::TwoPoint, 0, beta, {x, y}};
    if (auto v = cached(key)) {
        return *v;
    }
    const Rational l = reduction_pairing(beta);
    if (sgn(l) == 0) {
        throw DomainError("reduction divisor pairs to zero with " + to_string(beta));
    }
    Rational value = 0;
    for (const auto& [g, c] : support(gamma0_)) {
        value += c * generalized_impl(beta, {tau(0, g), x, y});
    }
    auto lower = [&](const Insertion& which, const Insertion& other) {
        Rational s = 0;
        for (const auto& [g, c] : support(cup(model_, gamma0_, model_.basis_class(which.a)))) {
            Insertion p = tau(which.d - 1, g);
            Insertion q = other;
            if (q < p) {
                std::swap(p, q);
            }
            s += c * two_point_impl(beta, p, q);
        }
        return s;
    };
    if (x.d >= 1) {
        value -= lower(x, y);
    }
    if (y.d >= 1) {
        value -= lower(y, x);
    }
    value /= l;
    return remember(std::move(key), value);
}

Rational Engine::one_point_impl(const CurveClass& beta, Insertion x, UnstableRoute route) const
{
    if (beta.is_zero()) {
        return 0;
    }
    if (options_.dimension_shortcut && !dimension_matches(beta, {x})) {
        return 0;
    }
    MemoKey key{Kind::OnePoint, static_cast<std::uint8_t>(route), beta, {x}};
    if (auto v = cached(key)) {
        return *v;
    }
    Rational value = 0;
    if (route == UnstableRoute::Dilaton) {
        // <τ_1 1, τ_d γ>_β = (2·0 - 2 + 1) <τ_d γ>_β
        Insertion p = tau(1, unit_);
        Insertion q = x;
        if (q < p) {
            std::swap(p, q);
        }
        value = -two_point_impl(beta, p, q);
    } else {
        const Rational l = reduction_pairing(beta);
        if (sgn(l) == 0) {
            throw DomainError("reduction divisor pairs to zero with " + to_string(beta));
        }
        for (const auto& [g, c] : support(gamma0_)) {
            Insertion p = tau(0, g);
            Insertion q = x;
            if (q < p) {
                std::swap(p, q);
            }
            value += c * two_point_impl(beta, p, q);
        }
        if (x.d >= 1) {
            for (const auto& [g, c] : support(cup(model_, gamma0_, model_.basis_class(x.a)))) {
                value -= c * one_point_impl(beta, tau(x.d - 1, g), route);
            }
        }
        value /= l;
    }
    return remember(std::move(key), value);
}

Rational Engine::zero_point_impl(const CurveClass& beta, UnstableRoute route) const
{
    if (beta.is_zero()) {
        return 0;
    }
    if (options_.dimension_shortcut && !dimension_matches(beta, {})) {
        return 0;
    }
    MemoKey key{Kind::ZeroPoint, static_cast<std::uint8_t>(route), beta, {}};
    if (auto v = cached(key)) {
        return *v;
    }
    Rational value = 0;
    if (route == UnstableRoute::Dilaton) {
        // <τ_1 1>_β = (2·0 - 2 + 0) <>_β
        value = one_point_impl(beta, tau(1, unit_), route) / Rational(-2);
    } else {
        const Rational l = reduction_pairing(beta);
        if (sgn(l) == 0) {
            throw DomainError("reduction divisor pairs to zero with " + to_string(beta));
        }
        for (const auto& [g, c] : support(gamma0_)) {
            value += c * one_point_impl(beta, tau(0, g), route);
        }
        value /= l;
    }
    return remember(std::move(key), value);
}

// ---------------------------------------------------------------------------------------------
// Stable range

Rational Engine::three_point_descendant(const CurveClass& beta, std::array<Insertion, 3> insertions) const
{
    std::vector<Insertion> ins(insertions.begin(), insertions.end());
    check_insertions(ins);
    for (const auto& i : ins) {
        if (i.e != 0) {
            throw DomainError("three_point_descendant takes conventional insertions (e = 0)");
        }
    }
    std::sort(ins.begin(), ins.end());
    return three_point_impl(beta, std::move(ins));
}

Rational Engine::three_point_impl(const CurveClass& beta, std::vector<Insertion> ins) const
{
    if (options_.dimension_shortcut && !dimension_matches(beta, ins)) {
        return 0;
    }
    auto j = std::find_if(ins.begin(), ins.end(), [](const Insertion& i) { return i.d >= 1; });
    if (j == ins.end()) {
        return primary3(beta, ins[0].a, ins[1].a, ins[2].a);
    }
    MemoKey key{Kind::ThreePoint, 0, beta, ins};
    if (auto v = cached(key)) {
        return *v;
    }
    const auto pos = static_cast<std::size_t>(j - ins.begin());
    const auto r = model_.rank();
    Rational value = 0;
    for (const auto& beta1 : sub_classes(beta)) {
        if (beta1.is_zero()) {
            continue;
        }
        const auto beta2 = beta - beta1;
        for (std::size_t c = 0; c < r; ++c) {
            Rational two = 0;
            for (std::size_t f = 0; f < r; ++f) {
                if (sgn(eta_inv_(c, f)) == 0) {
                    continue;
                }
                Insertion p = tau(ins[pos].d - 1, ins[pos].a);
                Insertion q = tau(0, f);
                if (q < p) {
                    std::swap(p, q);
                }
                two += eta_inv_(c, f) * two_point_impl(beta1, p, q);
            }
            if (sgn(two) == 0) {
                continue;
            }
            auto next = replaced(ins, pos, tau(0, c));
            std::sort(next.begin(), next.end());
            value += two * three_point_impl(beta2, std::move(next));
        }
    }
    return remember(std::move(key), value);
}

Rational Engine::modified_correlator(const CurveClass& beta, std::vector<Insertion> insertions) const
{
    check_insertions(insertions);
    if (insertions.size() < 3) {
        throw DomainError("modified correlators need n >= 3");
    }
    for (const auto& i : insertions) {
        if (i.d != 0) {
            throw DomainError("modified correlators take τ_{0,e} insertions only");
        }
    }
    std::sort(insertions.begin(), insertions.end());
    return modified_impl(beta, std::move(insertions));
}

Rational Engine::modified_impl(const CurveClass& beta, std::vector<Insertion> ins) const
{
    const auto n = ins.size();
    if (options_.dimension_shortcut && !dimension_matches(beta, ins)) {
        return 0;
    }
    const auto first = std::find_if(ins.begin(), ins.end(), [](const Insertion& x) { return x.e >= 1; });
    if (first == ins.end()) {
        std::vector<std::size_t> classes;
        for (const auto& x : ins) {
            classes.push_back(x.a);
        }
        return primary_impl(beta, classes);
    }
    if (n == 3) {
        return 0; // φ_i = 0 on M̄_{0,3}
    }
    MemoKey key{Kind::Modified, 0, beta, ins};
    if (auto v = cached(key)) {
        return *v;
    }
    const auto i = static_cast<std::size_t>(first - ins.begin());
    std::size_t aux[2];
    std::size_t found = 0;
    for (std::size_t m = 0; m < n && found < 2; ++m) {
        if (m != i) {
            aux[found++] = m;
        }
    }
    const Rational value = boundary_step(beta, ins, i, aux[0], aux[1]);
    return remember(std::move(key), value);
}

Rational Engine::boundary_step(const CurveClass& beta, const std::vector<Insertion>& ins, std::size_t i,
                               std::size_t j, std::size_t k) const
{
    const auto n = ins.size();
    if (n < 4 || ins[i].e < 1) {
        throw DomainError("boundary_step needs n >= 4 and e_i >= 1");
    }
    const auto r = model_.rank();
    Rational value = 0;
    for (const auto& part : psi_boundary_partitions(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k),
                                                    static_cast<int>(n))) {
        std::vector<Insertion> left;
        std::vector<Insertion> right;
        std::vector<bool> on_left(n, false);
        for (int m : part.side) {
            on_left[static_cast<std::size_t>(m)] = true;
        }
        for (std::size_t m = 0; m < n; ++m) {
            Insertion x = ins[m];
            if (m == i) {
                --x.e;
            }
            (on_left[m] ? left : right).push_back(x);
        }
        for (const auto& beta1 : sub_classes(beta)) {
            const auto beta2 = beta - beta1;
            std::vector<Rational> left_vals(r);
            bool any = false;
            for (std::size_t c = 0; c < r; ++c) {
                auto side = with_extra(left, tau(0, c));
                std::sort(side.begin(), side.end());
                left_vals[c] = modified_impl(beta1, std::move(side));
                any = any || sgn(left_vals[c]) != 0;
            }
            if (!any) {
                continue;
            }
            for (std::size_t f = 0; f < r; ++f) {
                Rational contraction = 0;
                for (std::size_t c = 0; c < r; ++c) {
                    if (sgn(left_vals[c]) != 0 && sgn(eta_inv_(c, f)) != 0) {
                        contraction += left_vals[c] * eta_inv_(c, f);
                    }
                }
                if (sgn(contraction) == 0) {
                    continue;
                }
                auto side = with_extra(right, tau(0, f));
                std::sort(side.begin(), side.end());
                value += contraction * modified_impl(beta2, std::move(side));
            }
        }
    }
    return value;
}

Rational Engine::generalized_correlator(const CurveClass& beta, std::vector<Insertion> insertions) const
{
    check_insertions(insertions);
    if (insertions.size() < 3) {
        throw DomainError("generalized correlators need the stable range n >= 3");
    }
    std::sort(insertions.begin(), insertions.end());
    return generalized_impl(beta, std::move(insertions));
}

Rational Engine::generalized_impl(const CurveClass& beta, std::vector<Insertion> ins) const
{
    std::sort(ins.begin(), ins.end());
    if (options_.dimension_shortcut && !dimension_matches(beta, ins)) {
        return 0;
    }
    const auto j = std::find_if(ins.begin(), ins.end(), [](const Insertion& x) { return x.d >= 1; });
    if (j == ins.end()) {
        return modified_impl(beta, std::move(ins));
    }
    if (ins.size() == 3 && std::any_of(ins.begin(), ins.end(), [](const Insertion& x) { return x.e >= 1; })) {
        return 0;
    }
    MemoKey key{Kind::Generalized, 0, beta, ins};
    if (auto v = cached(key)) {
        return *v;
    }
    const Rational value = theorem12_step(beta, ins, static_cast<std::size_t>(j - ins.begin()));
    return remember(std::move(key), value);
}

Rational Engine::theorem12_step(const CurveClass& beta, const std::vector<Insertion>& ins, std::size_t j) const
{
    if (j >= ins.size() || ins[j].d < 1) {
        throw DomainError("theorem12_step needs d_j >= 1");
    }
    const auto r = model_.rank();
    const Insertion xj = ins[j];
    Rational value = generalized_impl(beta, replaced(ins, j, tau(xj.d - 1, xj.e + 1, xj.a)));
    for (const auto& beta1 : sub_classes(beta)) {
        if (beta1.is_zero()) {
            continue; // two-point correlators vanish at β = 0
        }
        const auto beta2 = beta - beta1;
        for (std::size_t c = 0; c < r; ++c) {
            Rational two = 0;
            for (std::size_t f = 0; f < r; ++f) {
                if (sgn(eta_inv_(c, f)) == 0) {
                    continue;
                }
                Insertion p = tau(xj.d - 1, xj.a);
                Insertion q = tau(0, f);
                if (q < p) {
                    std::swap(p, q);
                }
                two += eta_inv_(c, f) * two_point_impl(beta1, p, q);
            }
            if (sgn(two) == 0) {
                continue;
            }
            value += two * generalized_impl(beta2, replaced(ins, j, tau(0, xj.e, c)));
        }
    }
    return value;
}

// ---------------------------------------------------------------------------------------------
// Dispatch

Rational Engine::descendant_correlator(int genus, const CurveClass& beta, std::vector<Insertion> insertions) const
{
    return descendant_correlator(genus, beta, std::move(insertions), options_.unstable_route);
}

Rational Engine::descendant_correlator(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                                       UnstableRoute route) const
{
    check_insertions(insertions);
    for (const auto& i : insertions) {
        if (i.e != 0) {
            throw DomainError("conventional correlators take τ_d insertions (e = 0)");
        }
    }
    if (beta.rank() != model_.lattice_rank) {
        throw DomainError("curve class rank does not match the model lattice");
    }
    if (genus < 0) {
        throw DomainError("genus must be non-negative");
    }
    if (beta.is_zero()) {
        PointCorrelatorQuery q{genus, {}};
        for (const auto& i : insertions) {
            q.insertions.push_back({i.d, model_.basis_class(i.a)});
        }
        return point_correlator(q, model_, taut_ ? &*taut_ : nullptr);
    }
    if (genus >= 1) {
        throw OutOfScope("genus >= 1 correlators with beta != 0 are out of scope");
    }
    std::sort(insertions.begin(), insertions.end());
    switch (insertions.size()) {
    case 0:
        return zero_point_impl(beta, route);
    case 1:
        return one_point_impl(beta, insertions[0], route);
    case 2:
        return two_point_impl(beta, insertions[0], insertions[1]);
    default:
        return generalized_impl(beta, std::move(insertions));
    }
}

IdentityCheck Engine::divisor_check(const CohClass& gamma0, const CurveClass& beta,
                                    const std::vector<Insertion>& insertions) const
{
    if (!is_homogeneous(model_, gamma0, 1)) {
        throw DomainError("divisor_check needs a degree-1 class");
    }
    IdentityCheck out;
    if (beta.is_zero() && insertions.size() < 3) {
        out.applicable = false;
        return out;
    }
    for (const auto& [g, c] : support(gamma0)) {
        out.lhs += c * descendant_correlator(0, beta, with_extra(insertions, tau(0, g)));
    }
    out.rhs = beta_pairing(model_, gamma0, beta) * descendant_correlator(0, beta, insertions);
    for (std::size_t k = 0; k < insertions.size(); ++k) {
        if (insertions[k].d < 1) {
            continue;
        }
        for (const auto& [g, c] : support(cup(model_, gamma0, model_.basis_class(insertions[k].a)))) {
            out.rhs += c * descendant_correlator(0, beta, replaced(insertions, k, tau(insertions[k].d - 1, g)));
        }
    }
    return out;
}

IdentityCheck Engine::dilaton_check(int genus, const CurveClass& beta, const std::vector<Insertion>& insertions) const
{
    IdentityCheck out;
    const int n = static_cast<int>(insertions.size());
    if (beta.is_zero() && 2 * genus - 2 + n <= 0) {
        out.applicable = false;
        return out;
    }
    out.lhs = descendant_correlator(genus, beta, with_extra(insertions, tau(1, unit_)));
    out.rhs = Rational(2 * genus - 2 + n) * descendant_correlator(genus, beta, insertions);
    return out;
}

} // namespace gwdesc
