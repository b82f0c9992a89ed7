#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwdesc/engine.hpp"
#include "gwdesc/novikov.hpp"

namespace gwdesc {

// Coordinate x_{d,a}, dual to τ_d Δ_a. Its weight is d.
struct PhaseIndex {
    int d = 0;
    std::size_t a = 0;

    friend auto operator<=>(const PhaseIndex&, const PhaseIndex&) = default;
    friend bool operator==(const PhaseIndex&, const PhaseIndex&) = default;
};

// Class with series coefficients over the model basis.
using SeriesClass = std::vector<NovikovSeries>;

// y = T x, with y_{c,b} = Σ T[(c,b),(d,a)] x_{d,a}.
struct TransformT {
    NovikovTruncation truncation;
    std::vector<PhaseIndex> indices; // sorted; rows and columns share this order
    std::vector<std::vector<NovikovSeries>> entries;

    static TransformT identity(NovikovTruncation truncation, std::vector<PhaseIndex> indices);

    std::size_t size() const { return indices.size(); }
    std::size_t position(const PhaseIndex& p) const;
    const NovikovSeries& at(const PhaseIndex& row, const PhaseIndex& col) const;

    friend TransformT operator*(const TransformT& a, const TransformT& b);
    friend bool operator==(const TransformT& a, const TransformT& b);
};

// Monomial keys are sorted index multisets; the 1/∏m! factor sits in the coefficient.
struct PotentialSeries {
    NovikovTruncation truncation;
    std::map<std::vector<PhaseIndex>, NovikovSeries> terms;

    explicit PotentialSeries(NovikovTruncation t) : truncation(std::move(t)) {}

    void add(std::vector<PhaseIndex> key, const NovikovSeries& value);
    NovikovSeries coefficient(const std::vector<PhaseIndex>& key) const;

    friend bool operator==(const PotentialSeries& a, const PotentialSeries& b);
};

// First differing coefficient between two potentials, as text.
std::optional<std::string> first_difference(const GeometryModel& model, const PotentialSeries& a,
                                            const PotentialSeries& b, std::size_t* mismatches = nullptr);

std::string to_string(const GeometryModel& model, const std::vector<PhaseIndex>& key);

// All sorted multisets of size lo..hi drawn from the given index set.
std::vector<std::vector<PhaseIndex>> index_multisets(const std::vector<PhaseIndex>& indices, std::size_t lo,
                                                     std::size_t hi);

struct Theorem22Report {
    std::size_t coefficients_compared = 0;
    std::size_t mismatches = 0;
    std::optional<std::string> first_mismatch;
    std::size_t substitution_checks = 0;
    std::size_t substitution_failures = 0;
    std::optional<std::string> first_substitution_failure;

    bool ok() const { return mismatches == 0 && substitution_failures == 0; }
};

struct WdvvReport {
    std::size_t relations = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_failure;

    bool ok() const { return failures == 0; }
};

// Series-level operations on top of an engine, at a fixed truncation.
class PhaseSpace {
public:
    PhaseSpace(const Engine& engine, TruncationPolicy policy);

    const Engine& engine() const { return engine_; }
    const TruncationPolicy& policy() const { return policy_; }
    const NovikovTruncation& truncation() const { return truncation_; }
    // x_{d,a} with d <= max_descendant.
    const std::vector<PhaseIndex>& indices() const { return indices_; }

    NovikovSeries zero() const { return NovikovSeries(truncation_); }

    // Σ_β q^β <∏ τ_{d_i}Δ_{a_i}>_{0,β} over classes inside the truncation.
    NovikovSeries summed_correlator(const std::vector<Insertion>& insertions) const;
    // Same with τ_{d,e} insertions, n >= 3.
    NovikovSeries summed_generalized(const std::vector<Insertion>& insertions) const;
    NovikovSeries summed_two_point(int d1, const CohClass& g1, int d2, const CohClass& g2) const;

    // x·y = Σ_a Δ_a <Δ^a, x, y>.
    SeriesClass quantum_product(const CohClass& x, const CohClass& y) const;
    // U_0(γ) = γ; U_d(γ) = Σ_{β,a} q^β <τ_{d-1}γ, τ_0 Δ_a>_β Δ^a.
    SeriesClass U_operator(int d, const CohClass& gamma) const;
    // Two-point series through iterated q-antiderivatives of three-point series.
    NovikovSeries two_point_via_25(int d, const CohClass& g1, const CohClass& g2) const;

    TransformT build_T() const;
    static TransformT invert_T(const TransformT& t);

    PotentialSeries potential_F_st() const;
    PotentialSeries potential_G() const;
    PotentialSeries primary_potential_Phi() const;
    // G(T x): substitutes the linear forms of T into a potential in y.
    static PotentialSeries compose(const PotentialSeries& g, const TransformT& t);

    // Compares F^st with G∘T and checks τ_d γ -> Σ_j τ_{0,j} U_{d-j}(γ) on every
    // correlator with up to substitution_max_n insertions.
    Theorem22Report verify_theorem22(std::size_t substitution_max_n = 3) const;

    // Associativity of the product given by third derivatives of Φ.
    WdvvReport check_wdvv(const PotentialSeries& phi) const;

private:
    NovikovSeries tp25(int d, std::size_t a, std::size_t b) const;
    NovikovSeries triple25(int k, std::size_t a, std::size_t b) const;
    NovikovSeries substituted(const std::vector<Insertion>& insertions) const;
    PotentialSeries assemble(bool modified) const;

    const Engine& engine_;
    TruncationPolicy policy_;
    NovikovTruncation truncation_;
    std::vector<CurveClass> classes_;
    std::vector<PhaseIndex> indices_;
    mutable std::map<std::tuple<int, std::size_t, std::size_t>, NovikovSeries> tp25_memo_;
};

} // namespace gwdesc
