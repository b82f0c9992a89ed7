#include "gwdesc/symmetric.hpp"

#include <algorithm>
#include <functional>

#include "gwdesc/error.hpp"

namespace gwdesc {

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b, std::size_t nvars)
{
    MultiPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                e[i] = ea[i] + eb[i];
            }
            auto& slot = out[e];
            slot += ca * cb;
            if (sgn(slot) == 0) {
                out.erase(e);
            }
        }
    }
    return out;
}

MultiPoly monomial_symmetric(std::vector<int> exponents)
{
    MultiPoly out;
    std::sort(exponents.begin(), exponents.end());
    do {
        out[exponents] = 1;
    } while (std::next_permutation(exponents.begin(), exponents.end()));
    return out;
}

MultiPoly elementary_symmetric(std::size_t k, std::size_t nvars)
{
    if (k > nvars) {
        return {};
    }
    std::vector<int> e(nvars, 0);
    std::fill(e.end() - static_cast<std::ptrdiff_t>(k), e.end(), 1);
    return monomial_symmetric(e);
}

MultiPoly to_elementary(MultiPoly p, std::size_t nvars)
{
    std::vector<MultiPoly> e(nvars + 1);
    for (std::size_t k = 1; k <= nvars; ++k) {
        e[k] = elementary_symmetric(k, nvars);
    }
    MultiPoly result;
    while (!p.empty()) {
        // Lexicographically largest monomial; for a symmetric polynomial its exponents are
        // non-increasing.
        const auto lead = std::prev(p.end());
        const std::vector<int> mu = lead->first;
        const Rational c = lead->second;
        if (!std::is_sorted(mu.begin(), mu.end(), std::greater<>())) {
            throw DomainError("to_elementary: polynomial is not symmetric");
        }
        std::vector<int> powers(nvars, 0);
        MultiPoly term{{std::vector<int>(nvars, 0), c}};
        for (std::size_t k = 1; k <= nvars; ++k) {
            const int next = k < nvars ? mu[k] : 0;
            powers[k - 1] = mu[k - 1] - next;
            for (int r = 0; r < powers[k - 1]; ++r) {
                term = poly_mul(term, e[k], nvars);
            }
        }
        result[powers] += c;
        for (const auto& [ex, cx] : term) {
            auto& slot = p[ex];
            slot -= cx;
            if (sgn(slot) == 0) {
                p.erase(ex);
            }
        }
    }
    return result;
}

} // namespace gwdesc
