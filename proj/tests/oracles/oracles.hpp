#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;

// Genus-0 ψ-integrals from the string equation alone, seeded by <τ0^3> = 1.
inline Q psi_by_string_equation(std::vector<int> d)
{
    const int n = static_cast<int>(d.size());
    if (n < 3) {
        return 0;
    }
    if (std::accumulate(d.begin(), d.end(), 0) != n - 3) {
        return 0;
    }
    if (n == 3) {
        return 1;
    }
    std::sort(d.begin(), d.end());
    if (d[0] == 0) {
        // string: <τ0 ∏τ_{k_i}> = Σ_j <..τ_{k_j - 1}..>
        std::vector<int> rest(d.begin() + 1, d.end());
        Q total = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] >= 1) {
                auto r = rest;
                --r[j];
                total += psi_by_string_equation(r);
            }
        }
        return total;
    }
    // All exponents >= 1 cannot sum to n - 3; unreachable for stable input.
    return 0;
}

// Rational curves in P^2 through 3d-1 points, from the WDVV consequence
// N_d = Σ_{a+b=d} N_a N_b (a^2 b^2 C(3d-4, 3a-2) - a^3 b C(3d-4, 3a-1)).
inline std::map<int, mpz_class> plane_curve_counts(int dmax)
{
    auto choose = [](int n, int k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    };
    std::map<int, mpz_class> n{{1, 1}};
    for (int d = 2; d <= dmax; ++d) {
        mpz_class s = 0;
        for (int a = 1; a < d; ++a) {
            const int b = d - a;
            s += n[a] * n[b] * (a * a * b * b * choose(3 * d - 4, 3 * a - 2) - a * a * a * b * choose(3 * d - 4, 3 * a - 1));
        }
        n[d] = s;
    }
    return n;
}

// One-point descendants of P^r: <τ_{(r+1)d-2} pt>_{0,d} = 1/(d!)^{r+1}.
inline Q projective_one_point(int r, int d)
{
    mpz_class f = 1;
    for (int i = 2; i <= d; ++i) {
        f *= i;
    }
    mpz_class p = 1;
    for (int i = 0; i <= r; ++i) {
        p *= f;
    }
    return Q(mpz_class(1), p);
}

// Monomial symmetric polynomial m_λ evaluated at concrete values (sum over distinct permutations).
inline Q monomial_symmetric_at(std::vector<int> exponents, const std::vector<Q>& x)
{
    exponents.resize(x.size(), 0);
    std::sort(exponents.begin(), exponents.end());
    Q total = 0;
    do {
        Q term = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (int k = 0; k < exponents[i]; ++k) {
                term *= x[i];
            }
        }
        total += term;
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    return total;
}

inline Q elementary_at(int k, const std::vector<Q>& x)
{
    Q total = 0;
    const auto n = x.size();
    std::function<void(std::size_t, int, Q)> walk = [&](std::size_t from, int left, Q acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            walk(i + 1, left - 1, acc * x[i]);
        }
    };
    walk(0, k, 1);
    return total;
}

} // namespace oracle
