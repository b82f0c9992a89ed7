#pragma once

#include <map>
#include <vector>

#include "gwdesc/rational.hpp"

namespace gwdesc {

// Polynomial in a fixed number of variables: exponent vector -> coefficient.
using MultiPoly = std::map<std::vector<int>, Rational>;

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b, std::size_t nvars);

// m_lambda(v_1..v_n): sum over the distinct permutations of the exponent vector.
MultiPoly monomial_symmetric(std::vector<int> exponents);

// e_k(v_1..v_n).
MultiPoly elementary_symmetric(std::size_t k, std::size_t nvars);

// Rewrites a symmetric polynomial as a polynomial in e_1..e_n. Keys of the result are the
// powers (k_1..k_n) of e_1..e_n. Throws DomainError if the input is not symmetric.
MultiPoly to_elementary(MultiPoly p, std::size_t nvars);

} // namespace gwdesc
