#pragma once

namespace rapf {

// E1(x) = integral_x^inf exp(-t)/t dt for x > 0.
// Power series up to x = 1, modified Lentz continued fraction beyond;
// both accurate to ~1e-14 relative. Throws std::domain_error for x <= 0.
double expint_e1(double x);

// Ei(-x) = -E1(x) for x > 0, the branch the terrain model needs.
inline double expint_ei_neg(double x) { return -expint_e1(x); }

}  // namespace rapf
