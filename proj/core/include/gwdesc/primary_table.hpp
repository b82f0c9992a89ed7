#pragma once

#include <array>
#include <map>
#include <utility>

#include "gwdesc/geometry.hpp"
#include "gwdesc/novikov.hpp"

namespace gwdesc {

using Triple = std::array<std::size_t, 3>;

// Three-point primary Gromov–Witten numbers <Δ_a Δ_b Δ_c>_{0,β} for β != 0, stored under the
// sorted index triple. β = 0 values are never stored: they are classical triple intersections.
class PrimaryTable {
public:
    // Throws ValidationError for β = 0 or for a conflicting value at the same key.
    void insert(const CurveClass& beta, Triple classes, const Rational& value);
    Rational lookup(const CurveClass& beta, Triple classes) const;

    const std::map<std::pair<CurveClass, Triple>, Rational>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Throws ValidationError if an entry breaks sum of degrees = dim + (c_1, β).
    void check_dimensions(const GeometryModel& model) const;

    friend bool operator==(const PrimaryTable&, const PrimaryTable&) = default;

private:
    std::map<std::pair<CurveClass, Triple>, Rational> entries_;
};

} // namespace gwdesc
