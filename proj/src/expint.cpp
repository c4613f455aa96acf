#include "rapf/expint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rapf {

// Convergent series E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k/(k k!)
// for small x; modified Lentz evaluation of the continued fraction
// E1(x) = exp(-x) / (x + 1/(1 + 1/(x + 2/(1 + 2/(x + ...))))) for large x.
// Crossover at 1.0 keeps both branches at ~1e-15 relative error.
double expint_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("expint_e1: x must be positive");

    constexpr double kEulerGamma = 0.57721566490153286060651209;
    constexpr int kMaxIter = 200;
    constexpr double kEps = 1e-16;

    if (x <= 1.0) {
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k <= kMaxIter; ++k) {
            term *= -x / k;
            const double add = -term / k;
            sum += add;
            if (std::fabs(add) < kEps * std::fabs(sum)) break;
        }
        return sum - kEulerGamma - std::log(x);
    }

    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= kMaxIter; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return h * std::exp(-x);
}

}  // namespace rapf
