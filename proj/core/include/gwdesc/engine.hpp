#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "gwdesc/geometry.hpp"
#include "gwdesc/moduli.hpp"
#include "gwdesc/novikov.hpp"
#include "gwdesc/primary_table.hpp"

namespace gwdesc {

// τ_{d,e}Δ_a: ψ^d (relative) times φ^e (pulled back from M̄_{g,n}) at a mark carrying Δ_a.
struct Insertion {
    int d = 0;
    int e = 0;
    std::size_t a = 0;

    friend auto operator<=>(const Insertion&, const Insertion&) = default;
    friend bool operator==(const Insertion&, const Insertion&) = default;
};

inline Insertion tau(int d, std::size_t a) { return Insertion{d, 0, a}; }
inline Insertion tau(int d, int e, std::size_t a) { return Insertion{d, e, a}; }

// Canonical form of a correlator <∏ τ_{d_i,e_i} Δ_{a_i}>_{g,β}: insertions sorted.
struct CorrelatorKey {
    int genus = 0;
    CurveClass beta;
    std::vector<Insertion> insertions;

    static CorrelatorKey make(int genus, CurveClass beta, std::vector<Insertion> insertions);

    friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;
};

enum class UnstableRoute { Divisor, Dilaton };

struct EngineOptions {
    // γ0 used by the divisor-equation reductions; defaults to the model's ample class.
    std::optional<CohClass> reduction_divisor;
    bool use_cache = true;
    // Return 0 early when the dimension constraint fails.
    bool dimension_shortcut = true;
    UnstableRoute unstable_route = UnstableRoute::Divisor;
};

// Both sides of an identity, evaluated through independent reduction paths.
struct IdentityCheck {
    bool applicable = true;
    Rational lhs;
    Rational rhs;

    bool holds() const { return !applicable || lhs == rhs; }
};

// Genus-0 correlator evaluation for one target model. Thread-safe; the memo table is shared.
class Engine {
public:
    Engine(GeometryModel model, PrimaryTable table, EngineOptions options = {},
           std::optional<TautTable> taut = std::nullopt);

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const GeometryModel& model() const { return model_; }
    const PrimaryTable& table() const { return table_; }
    const EngineOptions& options() const { return options_; }
    const CohClass& reduction_divisor() const { return gamma0_; }
    const RationalMatrix& eta_inverse() const { return eta_inv_; }
    const DualBases& duals() const { return duals_; }

    // (γ0, β) for the reduction divisor.
    Rational reduction_pairing(const CurveClass& beta) const;

    // Σ (d_i + e_i + deg Δ_{a_i}) == dim + (c_1, β) + n - 3.
    bool dimension_matches(const CurveClass& beta, const std::vector<Insertion>& insertions) const;

    // <Δ_a Δ_b Δ_c>_{0,β}: classical triple intersection at β = 0, table value otherwise.
    Rational primary3(const CurveClass& beta, std::size_t a, std::size_t b, std::size_t c) const;

    // n-point primary correlator, n >= 3. n >= 4 is reconstructed from three-point numbers.
    Rational primary(const CurveClass& beta, std::vector<std::size_t> classes) const;

    // <τ_{d1}Δ_{a1} τ_{d2}Δ_{a2}>_{0,β}; zero at β = 0.
    Rational two_point(const CurveClass& beta, Insertion first, Insertion second) const;
    // Bilinear extension to arbitrary classes.
    Rational two_point(const CurveClass& beta, int d1, const CohClass& g1, int d2, const CohClass& g2) const;

    // Three-point descendants through the dedicated n = 3 recursion.
    Rational three_point_descendant(const CurveClass& beta, std::array<Insertion, 3> insertions) const;

    // <∏ τ_{0,e_i} Δ_{a_i}>_{0,β}, n >= 3, by boundary splitting of ψ on M̄_{0,n}.
    Rational modified_correlator(const CurveClass& beta, std::vector<Insertion> insertions) const;

    // <∏ τ_{d_i,e_i} Δ_{a_i}>_{0,β}, n >= 3.
    Rational generalized_correlator(const CurveClass& beta, std::vector<Insertion> insertions) const;

    // Conventional correlator <∏ τ_{d_i} Δ_{a_i}>_{g,β}, any n. β = 0 uses the degree-zero
    // formulas (genus >= 1 needs a tautological table); genus >= 1 with β != 0 throws OutOfScope.
    Rational descendant_correlator(int genus, const CurveClass& beta, std::vector<Insertion> insertions) const;
    Rational descendant_correlator(int genus, const CurveClass& beta, std::vector<Insertion> insertions,
                                   UnstableRoute route) const;

    // One application of the descendant recursion at position j (in the given order), subterms
    // evaluated normally.
    Rational theorem12_step(const CurveClass& beta, const std::vector<Insertion>& insertions, std::size_t j) const;

    // One boundary expansion of φ_i with auxiliary marks j, k, subterms evaluated normally.
    Rational boundary_step(const CurveClass& beta, const std::vector<Insertion>& insertions, std::size_t i,
                           std::size_t j, std::size_t k) const;

    // Divisor equation: <γ0 ∏τ_{d_i}γ_i> versus (γ0,β)<∏τ_{d_i}γ_i> + Σ_k <..τ_{d_k-1}(γ0∪γ_k)..>.
    // Not applicable when the base moduli space is empty (β = 0 and n < 3).
    IdentityCheck divisor_check(const CohClass& gamma0, const CurveClass& beta,
                                const std::vector<Insertion>& insertions) const;

    // Dilaton equation: <τ_1 1 ∏τ_{d_i}γ_i>_{g,β} versus (2g-2+n)<∏τ_{d_i}γ_i>_{g,β}.
    IdentityCheck dilaton_check(int genus, const CurveClass& beta, const std::vector<Insertion>& insertions) const;

    std::size_t cache_size() const;
    void clear_cache();

private:
    enum class Kind : std::uint8_t { Primary, TwoPoint, OnePoint, ZeroPoint, ThreePoint, Modified, Generalized };

    struct MemoKey {
        Kind kind;
        std::uint8_t route;
        CurveClass beta;
        std::vector<Insertion> insertions;

        friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
    };

    struct Factor {
        Rational coeff;
        std::size_t divisor;
        std::size_t rest;
    };

    std::optional<Rational> cached(const MemoKey& key) const;
    Rational remember(MemoKey key, Rational value) const;

    void check_insertions(const std::vector<Insertion>& insertions) const;

    Rational primary_impl(const CurveClass& beta, const std::vector<std::size_t>& classes) const;
    Rational reconstruct_primary(const CurveClass& beta, const std::vector<std::size_t>& classes) const;
    Rational wdvv_side(const CurveClass& beta, std::array<std::size_t, 2> left, std::array<std::size_t, 2> right,
                       const std::vector<std::size_t>& rest, bool skip_classical_left) const;
    Rational two_point_impl(const CurveClass& beta, Insertion x, Insertion y) const;
    Rational one_point_impl(const CurveClass& beta, Insertion x, UnstableRoute route) const;
    Rational zero_point_impl(const CurveClass& beta, UnstableRoute route) const;
    Rational three_point_impl(const CurveClass& beta, std::vector<Insertion> insertions) const;
    Rational modified_impl(const CurveClass& beta, std::vector<Insertion> insertions) const;
    Rational generalized_impl(const CurveClass& beta, std::vector<Insertion> insertions) const;

    GeometryModel model_;
    PrimaryTable table_;
    EngineOptions options_;
    std::optional<TautTable> taut_;
    CohClass gamma0_;
    DualBases duals_;
    RationalMatrix eta_inv_;
    std::size_t unit_;
    // factors_[a]: Δ_a = Σ coeff · Δ_divisor ∪ Δ_rest, for basis elements of degree >= 2.
    std::vector<std::optional<std::vector<Factor>>> factors_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::map<MemoKey, Rational> cache_;
};

} // namespace gwdesc
