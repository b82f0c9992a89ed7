#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwdesc/linalg.hpp"
#include "gwdesc/novikov.hpp"
#include "gwdesc/rational.hpp"

namespace gwdesc {

// Element of H*(V) as coefficients over the model basis.
struct CohClass {
    std::vector<Rational> coeffs;

    CohClass() = default;
    explicit CohClass(std::size_t rank) : coeffs(rank) {}
    explicit CohClass(std::vector<Rational> c) : coeffs(std::move(c)) {}

    static CohClass basis(std::size_t rank, std::size_t a);

    std::size_t rank() const { return coeffs.size(); }
    bool is_zero() const;

    CohClass& operator+=(const CohClass& other);
    CohClass& operator-=(const CohClass& other);
    CohClass& operator*=(const Rational& s);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
    friend bool operator==(const CohClass&, const CohClass&) = default;
};

struct BasisElement {
    std::string label;
    int degree = 0; // complex degree
};

// Target geometry or abstract Frobenius input. Degrees are complex degrees; all classes even.
struct GeometryModel {
    std::string name;
    int dimension = 0;
    std::vector<BasisElement> basis;
    // cup_table[a][b] = Delta_a ∪ Delta_b.
    std::vector<std::vector<CohClass>> cup_table;
    // integral[a] = ∫_V Delta_a.
    std::vector<Rational> integral;
    std::size_t lattice_rank = 0;
    // divisor_pairing[a][i] = (Delta_a, e_i) for degree-1 basis elements; zero rows otherwise.
    std::vector<std::vector<std::int64_t>> divisor_pairing;
    CohClass ample_class;
    // c_0(V), ..., c_dim(V).
    std::vector<CohClass> chern_classes;

    std::size_t rank() const { return basis.size(); }
    int degree(std::size_t a) const { return basis.at(a).degree; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    // Index of the unique degree-0 basis element. Throws ValidationError if absent.
    std::size_t unit_index() const;
    CohClass unit() const { return CohClass::basis(rank(), unit_index()); }
    CohClass basis_class(std::size_t a) const { return CohClass::basis(rank(), a); }

    // Degree function on curve classes given by the ample class, with a q-degree bound.
    NovikovTruncation novikov_truncation(std::int64_t max_beta_degree) const;
};

struct DualBases {
    std::vector<CohClass> delta;
    std::vector<CohClass> delta_dual;
};

CohClass cup(const GeometryModel& model, const CohClass& x, const CohClass& y);
Rational integrate(const GeometryModel& model, const CohClass& x);
// eta(x, y) = ∫ x ∪ y.
Rational pairing(const GeometryModel& model, const CohClass& x, const CohClass& y);
RationalMatrix gram_matrix(const GeometryModel& model);
// Throws ValidationError when the Poincaré pairing is degenerate.
DualBases dual_bases(const GeometryModel& model);

// (gamma, beta) for gamma in the degree-1 span. Throws DomainError otherwise.
Rational beta_pairing(const GeometryModel& model, const CohClass& gamma, const CurveClass& beta);
// (c_1(V), beta).
Rational c1_pairing(const GeometryModel& model, const CurveClass& beta);

// True if every nonzero coefficient sits on a basis element of the given degree.
bool is_homogeneous(const GeometryModel& model, const CohClass& x, int degree);

// m_{g-i_1,...,g-i_dim} evaluated at the negated Chern roots, as a polynomial in c_k(V).
CohClass chern_symmetric(const GeometryModel& model, const std::vector<int>& indices, int genus);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const;
    const ValidationCheck* find(const std::string& name) const;
};

ValidationReport validate_model(const GeometryModel& model);

} // namespace gwdesc
