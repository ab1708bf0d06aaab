// Test-only Gauss-Legendre quadrature, independent of the library code it
// checks.  Nodes and weights come from Newton iteration on the Legendre
// recurrence; 24 points integrate the smooth trig profiles here to
// machine precision.

#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace testq {

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;

    explicit GaussLegendre(int n) : nodes(n), weights(n) {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

// integral of fn over the box [0,ax] x [0,ay] x [0,az]
inline double integrate_box(const std::function<double(double, double, double)>& fn,
                            double ax, double ay, double az, int n = 24) {
    const GaussLegendre gl(n);
    auto map = [](double node, double len) { return 0.5 * len * (node + 1.0); };
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                acc += gl.weights[i] * gl.weights[j] * gl.weights[k] *
                       fn(map(gl.nodes[i], ax), map(gl.nodes[j], ay), map(gl.nodes[k], az));
    return acc * 0.125 * ax * ay * az;
}

}  // namespace testq
