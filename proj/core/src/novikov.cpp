#include "gwdesc/novikov.hpp"

#include <algorithm>
#include <sstream>

#include "gwdesc/error.hpp"

namespace gwdesc {

bool CurveClass::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

bool CurveClass::fits_in(const CurveClass& other) const
{
    if (other.rank() != rank()) {
        throw DomainError("curve classes of different rank");
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        if (coords[i] > other.coords[i]) {
            return false;
        }
    }
    return true;
}

CurveClass operator+(const CurveClass& a, const CurveClass& b)
{
    if (a.rank() != b.rank()) {
        throw DomainError("curve classes of different rank");
    }
    CurveClass out = a;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        out.coords[i] += b.coords[i];
    }
    return out;
}

CurveClass operator-(const CurveClass& a, const CurveClass& b)
{
    if (!b.fits_in(a)) {
        throw DomainError("difference " + to_string(a) + " - " + to_string(b) + " is not effective");
    }
    CurveClass out = a;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        out.coords[i] -= b.coords[i];
    }
    return out;
}

std::string to_string(const CurveClass& beta)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < beta.rank(); ++i) {
        os << (i ? "," : "") << beta.coords[i];
    }
    os << ']';
    return os.str();
}

std::vector<CurveClass> sub_classes(const CurveClass& beta)
{
    std::vector<CurveClass> out;
    CurveClass cur = CurveClass::zero(beta.rank());
    while (true) {
        out.push_back(cur);
        std::size_t i = beta.rank();
        bool advanced = false;
        while (i > 0 && !advanced) {
            --i;
            if (cur.coords[i] < beta.coords[i]) {
                ++cur.coords[i];
                advanced = true;
            } else {
                cur.coords[i] = 0;
            }
        }
        if (!advanced) {
            return out;
        }
    }
}

std::int64_t NovikovTruncation::degree(const CurveClass& beta) const
{
    if (beta.rank() != weights.size()) {
        throw ConfigError("curve class rank does not match the lattice rank");
    }
    std::int64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        d += weights[i] * beta.coords[i];
    }
    return d;
}

std::vector<CurveClass> NovikovTruncation::effective_classes() const
{
    std::vector<CurveClass> out;
    CurveClass cur = CurveClass::zero(weights.size());
    // Depth-first over coordinates; weights are >= 1 so the search is finite.
    std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t budget) {
        if (i == weights.size()) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t c = 0; c * weights[i] <= budget; ++c) {
            cur.coords[i] = c;
            walk(i + 1, budget - c * weights[i]);
        }
        cur.coords[i] = 0;
    };
    if (max_degree >= 0) {
        walk(0, max_degree);
    }
    std::stable_sort(out.begin(), out.end(), [&](const CurveClass& a, const CurveClass& b) {
        const auto da = degree(a);
        const auto db = degree(b);
        return da != db ? da < db : a < b;
    });
    return out;
}

NovikovSeries NovikovSeries::constant(NovikovTruncation truncation, const Rational& c)
{
    const auto rank = truncation.weights.size();
    return monomial(std::move(truncation), CurveClass::zero(rank), c);
}

NovikovSeries NovikovSeries::monomial(NovikovTruncation truncation, const CurveClass& beta, const Rational& c)
{
    NovikovSeries s(std::move(truncation));
    s.add_term(beta, c);
    return s;
}

Rational NovikovSeries::coefficient(const CurveClass& beta) const
{
    auto it = terms_.find(beta);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NovikovSeries::add_term(const CurveClass& beta, const Rational& c)
{
    if (sgn(c) == 0 || !truncation_.admits(beta)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(beta, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

void NovikovSeries::require_same_truncation(const NovikovSeries& other) const
{
    if (!(truncation_ == other.truncation_)) {
        throw ConfigError("Novikov series with different truncation policies");
    }
}

NovikovSeries& NovikovSeries::operator+=(const NovikovSeries& other)
{
    require_same_truncation(other);
    for (const auto& [beta, c] : other.terms_) {
        add_term(beta, c);
    }
    return *this;
}

NovikovSeries& NovikovSeries::operator-=(const NovikovSeries& other)
{
    require_same_truncation(other);
    for (const auto& [beta, c] : other.terms_) {
        add_term(beta, -c);
    }
    return *this;
}

NovikovSeries& NovikovSeries::operator*=(const Rational& scalar)
{
    if (sgn(scalar) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [beta, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b)
{
    a.require_same_truncation(b);
    NovikovSeries out(a.truncation_);
    for (const auto& [b1, c1] : a.terms_) {
        const auto d1 = a.truncation_.degree(b1);
        for (const auto& [b2, c2] : b.terms_) {
            if (d1 + a.truncation_.degree(b2) > a.truncation_.max_degree) {
                continue;
            }
            out.add_term(b1 + b2, c1 * c2);
        }
    }
    return out;
}

bool operator==(const NovikovSeries& a, const NovikovSeries& b)
{
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
}

NovikovSeries derivative_q(const NovikovSeries& series, const ClassPairing& pairing)
{
    NovikovSeries out(series.truncation());
    for (const auto& [beta, c] : series.terms()) {
        out.add_term(beta, c * pairing(beta));
    }
    return out;
}

NovikovSeries antiderivative_q(const NovikovSeries& series, const ClassPairing& pairing)
{
    NovikovSeries out(series.truncation());
    for (const auto& [beta, c] : series.terms()) {
        if (beta.is_zero()) {
            throw DomainError("antiderivative_q: series has a nonzero constant term");
        }
        const Rational l = pairing(beta);
        if (sgn(l) == 0) {
            throw DomainError("antiderivative_q: zero pairing on class " + to_string(beta)
                              + " (reduction divisor is not ample)");
        }
        out.add_term(beta, c / l);
    }
    return out;
}

std::string to_string(const NovikovSeries& series)
{
    if (series.is_zero()) {
        return "0";
    }
    std::vector<std::pair<CurveClass, Rational>> ordered(series.terms().begin(), series.terms().end());
    const auto& t = series.truncation();
    std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
        const auto dx = t.degree(x.first);
        const auto dy = t.degree(y.first);
        return dx != dy ? dx < dy : x.first < y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [beta, c] : ordered) {
        if (first) {
            os << to_string(c);
        } else if (sgn(c) < 0) {
            os << " - " << to_string(Rational(-c));
        } else {
            os << " + " << to_string(c);
        }
        os << "·q^" << to_string(beta);
        first = false;
    }
    return os.str();
}

} // namespace gwdesc
