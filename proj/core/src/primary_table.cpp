#include "gwdesc/primary_table.hpp"

#include <algorithm>

#include "gwdesc/error.hpp"

namespace gwdesc {

void PrimaryTable::insert(const CurveClass& beta, Triple classes, const Rational& value)
{
    if (beta.is_zero()) {
        throw ValidationError("primary table entries must have beta != 0");
    }
    std::sort(classes.begin(), classes.end());
    auto [it, inserted] = entries_.try_emplace({beta, classes}, value);
    if (!inserted && it->second != value) {
        throw ValidationError("conflicting primary table values at beta " + to_string(beta));
    }
    if (sgn(it->second) == 0) {
        entries_.erase(it);
    }
}

Rational PrimaryTable::lookup(const CurveClass& beta, Triple classes) const
{
    std::sort(classes.begin(), classes.end());
    auto it = entries_.find({beta, classes});
    return it == entries_.end() ? Rational(0) : it->second;
}

void PrimaryTable::check_dimensions(const GeometryModel& model) const
{
    for (const auto& [key, value] : entries_) {
        const auto& [beta, classes] = key;
        if (beta.rank() != model.lattice_rank) {
            throw ValidationError("primary table class " + to_string(beta) + " has the wrong lattice rank");
        }
        int degree = 0;
        for (auto a : classes) {
            if (a >= model.rank()) {
                throw ValidationError("primary table refers to a basis index out of range");
            }
            degree += model.degree(a);
        }
        const Rational expected = Rational(model.dimension) + c1_pairing(model, beta);
        if (Rational(degree) != expected) {
            throw ValidationError("primary table entry (" + model.basis[classes[0]].label + ", "
                                  + model.basis[classes[1]].label + ", " + model.basis[classes[2]].label
                                  + ") at beta " + to_string(beta) + " violates the dimension constraint");
        }
    }
}

} // namespace gwdesc
