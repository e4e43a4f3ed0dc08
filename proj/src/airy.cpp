#include "wigsim/airy.hpp"

#include <cmath>
#include <numbers>

#include "wigsim/errors.hpp"

namespace wigsim {

namespace {

constexpr double kAi0 = 0.35502805388781723926;    // Ai(0)
constexpr double kAip0 = -0.25881940379280679840;  // Ai'(0)
constexpr double pi = std::numbers::pi;

struct ValueSlope {
    double y, yp;
};

// Maclaurin solution of y'' = x y from exact origin data; converges for all
// x and loses no significant digits for |x| <= 4.5.
ValueSlope maclaurin(double x) {
    const double x3 = x * x * x;
    double f = 1.0;
    double t = 1.0;
    for (int k = 0; k < 80; ++k) {
        t *= x3 / ((3 * k + 2) * (3 * k + 3));
        f += t;
        if (std::abs(t) < 1e-18 * std::abs(f)) break;
    }
    double fp = 0.0;  // f' = x^2/2 + ...
    t = 0.5 * x * x;
    for (int k = 1; k < 80; ++k) {
        fp += t;
        if (std::abs(t) < 1e-18 * (std::abs(fp) + 1e-300)) break;
        t *= x3 * (k + 1) / (static_cast<double>(k) * (3 * k + 2) * (3 * k + 3));
    }
    double g = x;
    t = x;
    for (int k = 0; k < 80; ++k) {
        t *= x3 / ((3 * k + 3) * (3 * k + 4));
        g += t;
        if (std::abs(t) < 1e-18 * (std::abs(g) + 1e-300)) break;
    }
    double gp = 1.0;
    t = 1.0;
    for (int k = 0; k < 80; ++k) {
        t *= x3 / ((3 * k + 1) * (3 * k + 3));
        gp += t;
        if (std::abs(t) < 1e-18 * std::abs(gp)) break;
    }
    return {kAi0 * f + kAip0 * g, kAi0 * fp + kAip0 * gp};
}

// One exact Taylor step of y'' = x y from x0 to x0 + h (the solution is
// entire, so the series converges for any h; |h| <= 0.25 keeps 30 terms far
// below roundoff).
ValueSlope taylor_step(double x0, ValueSlope s, double h) {
    constexpr int n_terms = 30;
    double c[n_terms];
    c[0] = s.y;
    c[1] = s.yp;
    c[2] = 0.5 * x0 * s.y;
    for (int n = 1; n + 2 < n_terms; ++n) {
        c[n + 2] = (x0 * c[n] + c[n - 1]) / ((n + 1) * (n + 2));
    }
    double y = 0.0, yp = 0.0;
    for (int n = n_terms - 1; n >= 1; --n) {
        y = y * h + c[n];
        yp = yp * h + c[n] * n;
    }
    y = y * h + c[0];
    // yp currently holds sum c_n n h^{n-1} built by Horner in h
    return {y, yp};
}

ValueSlope march(double from, ValueSlope s, double to) {
    const double h = to > from ? 0.25 : -0.25;
    double x = from;
    while (std::abs(to - x) > 1e-14) {
        const double step = std::abs(to - x) < std::abs(h) ? to - x : h;
        s = taylor_step(x, s, step);
        x += step;
    }
    return s;
}

// u_k of the asymptotic expansions: u_0 = 1,
// u_{k+1} = u_k (6k+1)(6k+5) / (72(k+1)).
double u_next(double u_k, int k) {
    return u_k * (6.0 * k + 1.0) * (6.0 * k + 5.0) / (72.0 * (k + 1.0));
}

// x >= 9.5: Ai ~ e^{-zeta}/(2 sqrt(pi) x^{1/4}) sum (-1)^k u_k zeta^{-k},
// Ai' ~ -x^{1/4} e^{-zeta}/(2 sqrt(pi)) sum (-1)^k v_k zeta^{-k},
// with v_k = (6k+1)/(1-6k) u_k.
ValueSlope asymptotic_pos(double x) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double sum_u = 0.0, sum_v = 0.0;
    double u = 1.0, sign = 1.0;
    double prev = 1e300;
    for (int k = 0; k < 60; ++k) {
        const double term = u / std::pow(zeta, k);
        if (std::abs(term) > prev) break;  // divergent tail reached
        sum_u += sign * term;
        const double v = k == 0 ? 1.0 : (6.0 * k + 1.0) / (1.0 - 6.0 * k) * u;
        sum_v += sign * v / std::pow(zeta, k);
        prev = std::abs(term);
        if (std::abs(term) < 1e-18) break;
        u = u_next(u, k);
        sign = -sign;
    }
    const double damp = std::exp(-zeta);
    const double root4 = std::pow(x, 0.25);
    return {damp / (2.0 * std::sqrt(pi) * root4) * sum_u,
            -root4 * damp / (2.0 * std::sqrt(pi)) * sum_v};
}

// x <= -9.5 (z = -x):
// Ai(-z) ~ (cos(zeta - pi/4) P + sin(zeta - pi/4) Q) / (sqrt(pi) z^{1/4}),
// P = sum (-1)^k u_{2k} zeta^{-2k}, Q = sum (-1)^k u_{2k+1} zeta^{-2k-1}.
double asymptotic_neg(double x) {
    const double z = -x;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    double P = 0.0, Q = 0.0;
    double u = 1.0;
    double sign = 1.0;
    for (int k = 0; k < 30; ++k) {
        const double even = u / std::pow(zeta, 2 * k);
        u = u_next(u, 2 * k);
        const double odd = u / std::pow(zeta, 2 * k + 1);
        u = u_next(u, 2 * k + 1);
        P += sign * even;
        Q += sign * odd;
        sign = -sign;
        if (even < 1e-18) break;
    }
    const double phase = zeta - 0.25 * pi;
    return (std::cos(phase) * P + std::sin(phase) * Q) /
           (std::sqrt(pi) * std::pow(z, 0.25));
}

}  // namespace

double airy_ai(double x) {
    if (std::abs(x) <= 4.5) return maclaurin(x).y;
    if (x >= 9.5) {
        if (x > 106.0) return 0.0;  // e^{-zeta} underflows
        return asymptotic_pos(x).y;
    }
    if (x > 0.0) {
        // downward march from the asymptotic anchor: the decaying solution
        // grows toward smaller x, so contamination dies off
        return march(10.0, asymptotic_pos(10.0), x).y;
    }
    if (x >= -9.5) {
        return march(-4.5, maclaurin(-4.5), x).y;
    }
    return asymptotic_neg(x);
}

std::vector<double> airy_zeros(int count) {
    std::vector<double> zeros;
    zeros.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n) {
        // asymptotic zero location as the bracket center
        const double t = 3.0 * pi * (4.0 * n - 1.0) / 8.0;
        const double guess =
            std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t));
        // keep the bracket well inside the local zero spacing ~ pi/sqrt(a)
        const double half = std::min(0.2, 0.35 * pi / std::sqrt(guess));
        double lo = guess - half;
        double hi = guess + half;
        auto f = [](double a) { return airy_ai(-a); };
        double flo = f(lo);
        double fhi = f(hi);
        if (flo == 0.0) {
            zeros.push_back(lo);
            continue;
        }
        if (flo * fhi > 0.0) {
            throw ConvergenceFailure("airy_zeros: bracket does not straddle a zero");
        }
        for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                hi = mid;
                fhi = fm;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        if (hi - lo > 1e-12) {
            throw ConvergenceFailure("airy_zeros: bisection failed to converge");
        }
        zeros.push_back(0.5 * (lo + hi));
    }
    return zeros;
}

}  // namespace wigsim
