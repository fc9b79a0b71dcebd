#pragma once

#include <functional>
#include <vector>

namespace hfe::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration.
Rule gauss_legendre(int order);

// Same rule mapped to [a, b].
Rule gauss_legendre(int order, double a, double b);

// Adaptive Simpson to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48);

}  // namespace hfe::quad
