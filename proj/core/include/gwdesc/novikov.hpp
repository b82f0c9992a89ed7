#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gwdesc/rational.hpp"

namespace gwdesc {

// Effective curve class in coordinates of a basis of the numerical class group of 1-cycles.
struct CurveClass {
    std::vector<std::int64_t> coords;

    CurveClass() = default;
    explicit CurveClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    static CurveClass zero(std::size_t rank) { return CurveClass(std::vector<std::int64_t>(rank, 0)); }

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const;
    // Componentwise <=.
    bool fits_in(const CurveClass& other) const;

    friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
    // Throws DomainError if the difference is not effective.
    friend CurveClass operator-(const CurveClass& a, const CurveClass& b);
    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(const CurveClass& beta);

// All beta1 with 0 <= beta1 <= beta componentwise, in lexicographic order.
std::vector<CurveClass> sub_classes(const CurveClass& beta);

// Additive degree beta -> (gamma0, beta) on the lattice generators, plus the q-truncation bound.
struct NovikovTruncation {
    std::vector<std::int64_t> weights;
    std::int64_t max_degree = 0;

    std::int64_t degree(const CurveClass& beta) const;
    bool admits(const CurveClass& beta) const { return degree(beta) <= max_degree; }
    // Every effective class of degree <= max_degree, ordered by (degree, coords).
    std::vector<CurveClass> effective_classes() const;

    friend bool operator==(const NovikovTruncation&, const NovikovTruncation&) = default;
};

struct TruncationPolicy {
    std::int64_t max_beta_degree = 0;
    std::int64_t max_x_degree = 0;
    std::int64_t max_descendant = 0;
};

// Truncated element of the Novikov ring: a sparse sum of c_beta q^beta with exact coefficients.
class NovikovSeries {
public:
    explicit NovikovSeries(NovikovTruncation truncation) : truncation_(std::move(truncation)) {}

    static NovikovSeries constant(NovikovTruncation truncation, const Rational& c);
    static NovikovSeries monomial(NovikovTruncation truncation, const CurveClass& beta, const Rational& c);

    const NovikovTruncation& truncation() const { return truncation_; }
    const std::map<CurveClass, Rational>& terms() const { return terms_; }
    Rational coefficient(const CurveClass& beta) const;
    bool is_zero() const { return terms_.empty(); }

    // Adds c q^beta; silently dropped above the truncation bound.
    void add_term(const CurveClass& beta, const Rational& c);

    NovikovSeries& operator+=(const NovikovSeries& other);
    NovikovSeries& operator-=(const NovikovSeries& other);
    NovikovSeries& operator*=(const Rational& scalar);

    friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
    friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }
    friend NovikovSeries operator-(NovikovSeries a) { return a *= Rational(-1); }
    friend NovikovSeries operator*(NovikovSeries a, const Rational& s) { return a *= s; }
    friend NovikovSeries operator*(const Rational& s, NovikovSeries a) { return a *= s; }
    // Cauchy product over beta1 + beta2 = beta, truncated.
    friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
    friend bool operator==(const NovikovSeries& a, const NovikovSeries& b);

private:
    void require_same_truncation(const NovikovSeries& other) const;

    NovikovTruncation truncation_;
    std::map<CurveClass, Rational> terms_;
};

using ClassPairing = std::function<Rational(const CurveClass&)>;

// Multiplies the q^beta coefficient by pairing(beta).
NovikovSeries derivative_q(const NovikovSeries& series, const ClassPairing& pairing);

// Inverse of derivative_q on series without constant term. Throws DomainError on a constant
// term or on a present class with zero pairing.
NovikovSeries antiderivative_q(const NovikovSeries& series, const ClassPairing& pairing);

// "c·q^[b1,b2] + ..." in (degree, coords) order; "0" for the empty series.
std::string to_string(const NovikovSeries& series);

} // namespace gwdesc
