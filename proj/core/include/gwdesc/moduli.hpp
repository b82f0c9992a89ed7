#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwdesc/geometry.hpp"
#include "gwdesc/rational.hpp"

namespace gwdesc {

// ∫_{M̄_{0,n}} ψ_1^{d_1}...ψ_n^{d_n} with n = d.size(); zero off the dimension n-3.
// Throws DomainError for n < 3.
Rational psi_integral_genus0(std::span<const int> d);

// Marks on one side of a boundary divisor D_S of M̄_{0,n}; marks are 0-based.
struct BoundaryPartition {
    std::vector<int> side; // sorted

    friend bool operator==(const BoundaryPartition&, const BoundaryPartition&) = default;
};

// All S with i in S, j and k outside S, 2 <= |S| <= n-2. On M̄_{0,n}, ψ_i is the sum of the
// corresponding divisors D_S.
std::vector<BoundaryPartition> psi_boundary_partitions(int i, int j, int k, int n);

// Key of a tautological integral ∫_{M̄_{g,n}} λ_{l_1}...λ_{l_r} ψ_1^{d_1}...ψ_n^{d_n}.
struct TautKey {
    int genus = 0;
    int n = 0;
    std::vector<int> psi;    // sorted ascending, length n
    std::vector<int> lambda; // sorted ascending, zeros removed

    static TautKey make(int genus, std::vector<int> psi, std::vector<int> lambda);

    friend auto operator<=>(const TautKey&, const TautKey&) = default;
};

std::string to_string(const TautKey& key);

// Injected tautological intersection numbers for genus >= 1.
class TautTable {
public:
    // Throws ValidationError for genus < 1 or a dimension-mismatched entry.
    void insert(const TautKey& key, const Rational& value);
    std::optional<Rational> lookup(const TautKey& key) const;
    const std::map<TautKey, Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<TautKey, Rational> entries_;
};

struct PointInsertion {
    int d = 0;
    CohClass gamma;
};

struct PointCorrelatorQuery {
    int genus = 0;
    std::vector<PointInsertion> insertions;
};

// Degree-zero correlator <τ_{d_1}γ_1...τ_{d_n}γ_n>_{g,0}. Genus 0 uses the multinomial closed
// form, genus 1 the two-term (c_dim, c_{dim-1} λ_1) formula, genus >= 2 the full Chern-root sum.
// Tautological integrals for g >= 1 come from `table`; throws TableIncomplete when a
// non-vanishing term needs a missing entry.
Rational point_correlator(const PointCorrelatorQuery& query, const GeometryModel& model, const TautTable* table);

// The full Chern-root sum for any genus, without the genus-0/1 specializations.
Rational point_correlator_chern_sum(const PointCorrelatorQuery& query, const GeometryModel& model,
                                    const TautTable* table);

} // namespace gwdesc
