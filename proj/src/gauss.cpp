#include "wg/gauss.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "wg/errors.hpp"

namespace wg {

namespace {

constexpr int kMaxRule = 32;

// Nodes/weights on [-1,1] by Newton iteration on P_n, then mapped to [0,1].
GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: P_0 = 1, P_1 = x
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // weight on [-1,1]: 2 / ((1-x^2) P_n'(x)^2)
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map to [0,1]; store ascending
        rule.nodes[n - 1 - i] = 0.5 * (x + 1.0);
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_rule(int n) {
    if (n < 1 || n > kMaxRule)
        throw DomainError("gauss_rule: n = " + std::to_string(n) + " out of range [1," +
                          std::to_string(kMaxRule) + "]");
    static std::array<GaussRule, kMaxRule> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int m = 1; m <= kMaxRule; ++m) cache[m - 1] = compute_rule(m);
    });
    return cache[n - 1];
}

} // namespace wg
