#pragma once

#include "oscircle/params.hpp"

namespace oscircle {

// One parity solution of u'' = (x^2 - 2E) u at a point.
struct WeberValue {
  double value;
  double derivative;
};

enum class Parity { even, odd };

struct KummerParams {
  double a;
  double c;
  double z;
};

// Confluent hypergeometric 1F1(a, c; z) by direct series summation in
// extended precision. When z > 0, a < 0 and the direct sum cancels away more
// than four decimal digits, the Kummer transformation
// 1F1(a,c;z) = e^z 1F1(c-a,c;-z) is evaluated as well and the less
// cancellation-afflicted of the two results is returned.
// Throws std::domain_error unless c is 1/2 or 3/2, or if |z| > 64;
// std::runtime_error if no summation path converges within 500 terms.
double kummer_m(const KummerParams& p);

struct LogGammaValue {
  double log_abs;  // ln|Gamma(z)|
  int sign;        // sign of Gamma(z), +1 or -1
};

// Throws std::domain_error at the poles (nonpositive integers).
LogGammaValue log_gamma(double z);

// Even/odd solutions normalized by u_e(E,0)=1, u'_e(E,0)=0 and u_o(E,0)=0,
// u'_o(E,0)=1, so the Wronskian u_e u'_o - u'_e u_o is 1. Series evaluation
// for |x| <= 1 while the tracked cancellation stays small; direct ODE
// integration otherwise. Supported for |x| <= 8.
WeberValue weber_even(double E, double x);
WeberValue weber_odd(double E, double x);

// Integrates u'' = (x^2 - 2E) u from x = 0 with data (1,0) (even) or (0,1)
// (odd), adaptive embedded 4(5) pairs at relative tolerance 1e-11. Samples on
// [0, x_max] with n_steps intervals, extended to [-x_max, x_max] by parity.
// Throws std::runtime_error on step-size underflow.
SampledFunction integrate_weber(double E, Parity parity, double x_max, std::size_t n_steps);

namespace detail {

// Series evaluation with its cancellation estimate, for cross-validation
// against the ODE route. Returns false when the series is not trustworthy
// at this (E, x) in extended precision.
bool weber_series_tracked(double E, Parity parity, double x, WeberValue& out,
                          double& digits_lost);

// Single-point ODE evaluation (the route weber_even/weber_odd take for
// |x| > 1).
WeberValue weber_ode(double E, Parity parity, double x);

}  // namespace detail

}  // namespace oscircle
