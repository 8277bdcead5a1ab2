#include "odospec/roots.hpp"

#include <algorithm>
#include <cmath>

#include "odospec/errors.hpp"

namespace odospec {

std::vector<ComplexFloat> poly_roots(std::vector<ComplexFloat> c) {
    const double eps = 1e-14;
    // trim numerically-zero leading coefficients
    double scale = 0.0;
    for (const auto& z : c) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) throw DomainError("root finding on the zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) <= eps * scale) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};
    for (auto& z : c) z /= c.back();

    double bound = 1.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<size_t>(k)]));
    bound += 1.0;

    auto eval = [&](ComplexFloat x) {
        ComplexFloat acc(0.0, 0.0);
        for (int k = n; k >= 0; --k) acc = acc * x + c[static_cast<size_t>(k)];
        return acc;
    };

    std::vector<ComplexFloat> w(static_cast<size_t>(n));
    const ComplexFloat seed(0.4, 0.9);
    ComplexFloat p(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
        p *= seed;
        w[static_cast<size_t>(k)] = bound * p;
    }

    for (int iter = 0; iter < 600; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            ComplexFloat denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= w[static_cast<size_t>(i)] - w[static_cast<size_t>(j)];
            if (std::abs(denom) == 0.0) {
                w[static_cast<size_t>(i)] += ComplexFloat(1e-8, 1e-8);
                continue;
            }
            ComplexFloat delta = eval(w[static_cast<size_t>(i)]) / denom;
            w[static_cast<size_t>(i)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-13 * bound) return w;
    }
    // accept a near-converged state, otherwise report failure
    double residual = 0.0;
    for (const auto& r : w) residual = std::max(residual, std::abs(eval(r)));
    if (residual < 1e-8 * std::pow(bound, n)) return w;
    throw ToleranceError("root finder did not converge");
}

std::vector<ComplexFloat> poly_roots(const ScalarPoly& p) {
    if (p.is_zero()) throw DomainError("root finding on the zero polynomial");
    std::vector<ComplexFloat> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) c.push_back(p.at(k).to_complex());
    return poly_roots(std::move(c));
}

} // namespace odospec
