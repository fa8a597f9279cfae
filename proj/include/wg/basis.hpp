#pragma once

#include <vector>

#include "wg/geometry.hpp"

namespace wg {

// Scaled monomial basis of P_k on an element: phi_(a,b) = xi^a eta^b with
// xi = (x - x_T)/h_T, eta = (y - y_T)/h_T, ordered degree-lexicographically
// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...

constexpr int poly_dim(int k) { return (k + 1) * (k + 2) / 2; }

struct Mono {
    int a = 0;
    int b = 0;
};

constexpr int mono_index(int a, int b) {
    int d = a + b;
    return d * (d + 1) / 2 + (d - a);
}

inline std::vector<Mono> monomials(int k) {
    std::vector<Mono> out;
    out.reserve(poly_dim(k));
    for (int d = 0; d <= k; ++d)
        for (int a = d; a >= 0; --a) out.push_back({a, d - a});
    return out;
}

// All poly_dim(k) basis values at x, appended to out.
inline void eval_basis(int k, Point2 x, Point2 center, double scale, std::vector<double>& out) {
    double xi = (x.x - center.x) / scale;
    double eta = (x.y - center.y) / scale;
    out.clear();
    out.reserve(poly_dim(k));
    for (int d = 0; d <= k; ++d)
        for (int a = d; a >= 0; --a) {
            double v = 1.0;
            for (int i = 0; i < a; ++i) v *= xi;
            for (int i = 0; i < d - a; ++i) v *= eta;
            out.push_back(v);
        }
}

inline double eval_poly(int k, const double* coef, Point2 x, Point2 center, double scale) {
    double xi = (x.x - center.x) / scale;
    double eta = (x.y - center.y) / scale;
    double sum = 0.0;
    int j = 0;
    for (int d = 0; d <= k; ++d)
        for (int a = d; a >= 0; --a) {
            double v = 1.0;
            for (int i = 0; i < a; ++i) v *= xi;
            for (int i = 0; i < d - a; ++i) v *= eta;
            sum += coef[j++] * v;
        }
    return sum;
}

} // namespace wg
