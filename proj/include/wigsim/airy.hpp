#pragma once

#include <vector>

namespace wigsim {

// Airy function Ai(x), relative error below 1e-10 on the working range
// |x| <= 50 (usable beyond; e^{-zeta} underflow on the far positive side is
// guarded). Self-contained: Maclaurin series around the origin, asymptotic
// expansions on the wings, and exact Taylor stepping of y'' = x y across the
// midrange where neither series reaches full accuracy.
double airy_ai(double x);

// First `count` magnitudes a_1 < a_2 < ... of the negative zeros of Ai,
// refined by bisection to 1e-12. Throws ConvergenceFailure if a bracket
// cannot be refined.
std::vector<double> airy_zeros(int count);

}  // namespace wigsim
