#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binomat/golden.hpp"
#include "binomat/ring.hpp"

namespace binomat {

/// Closed-form eigenvalue list of R_n over Q(phi), sorted by strictly
/// decreasing absolute value (exact golden_sign comparisons):
///   n = 2k:   { (-1)^{k+i} phi^{2i-1}, (-1)^{k+i} phibar^{2i-1} }, i = 1..k
///   n = 2k+1: { (-1)^k } u { (-1)^{k+i} phi^{2i}, (-1)^{k+i} phibar^{2i} }, i = 1..k
/// The absolute values are distinct powers of phi, so the order is total;
/// this is asserted, not assumed.
inline std::vector<GoldenNumber> closed_form_eigenvalues(int n) {
    if (n < 1) throw std::domain_error("closed_form_eigenvalues: order must be >= 1");
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber phibar = GoldenNumber::phibar();
    const int k = n / 2;
    std::vector<GoldenNumber> ev;
    ev.reserve(static_cast<std::size_t>(n));
    if (n % 2 == 1) ev.push_back(k % 2 == 0 ? GoldenNumber(1) : GoldenNumber(-1));
    for (int i = 1; i <= k; ++i) {
        const long long exp = (n % 2 == 0) ? 2 * i - 1 : 2 * i;
        GoldenNumber lp = ring_pow(phi, exp);
        GoldenNumber lq = ring_pow(phibar, exp);
        if ((k + i) % 2 != 0) {
            lp = -lp;
            lq = -lq;
        }
        ev.push_back(lp);
        ev.push_back(lq);
    }
    std::sort(ev.begin(), ev.end(),
              [](const GoldenNumber& x, const GoldenNumber& y) { return golden_abs_less(y, x); });
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
        if (!golden_abs_less(ev[i + 1], ev[i]))
            throw std::logic_error("closed_form_eigenvalues: absolute values not strictly ordered");
    }
    return ev;
}

}  // namespace binomat
