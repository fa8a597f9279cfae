#pragma once

#include <vector>

namespace wg {

// Gauss-Legendre rule on [0,1]: exact for polynomials of degree <= 2n-1.
struct GaussRule {
    std::vector<double> nodes;   // in (0,1)
    std::vector<double> weights; // positive, sum to 1
};

// n-point rule, 1 <= n <= 32. Rules are computed once and cached.
const GaussRule& gauss_rule(int n);

} // namespace wg
