#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwdesc/geometry.hpp"
#include "gwdesc/primary_table.hpp"

namespace gwdesc {

struct FixtureModel {
    GeometryModel model;
    PrimaryTable table;
};

// P^n with basis one, h, h2, ..., hn; n = 0 is the point (lattice rank 0).
GeometryModel projective_space(int n);

// "point", "P1", "P2", "P3". Throws ConfigError on an unknown name, ValidationError if the data is bad.
FixtureModel load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

// N_d for P^2, d = 1..dmax, from associativity seeded at N_1 = 1.
std::map<int, Rational> wdvv_p2(int dmax);

} // namespace gwdesc
