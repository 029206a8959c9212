#pragma once
// Even test-function pairs (g, ghat) with ghat compactly supported in
// [-sigma, sigma], evaluable on the real and imaginary axes, plus the
// sin-kernel functional and the pole/Siegel term in both of its forms.

#include <functional>
#include <string>

namespace twistlab {

struct TestFunctionPair {
  double sigma = 1.0;       // support radius of ghat
  std::string family;       // "fejer" or "bump"
  std::function<double(double)> g;       // g(y) for real y
  std::function<double(double)> g_imag;  // g(i*y) for real y (real-valued)
  std::function<double(double)> ghat;    // ghat(u) for real u
  double ghat0 = 1.0;          // ghat(0) = integral of g
  double max_ghat = 1.0;       // sup |ghat|
  double tail_constant = 0.0;  // c with |g(y)| <= c / (1 + y^2)
};

// Fejer pair: ghat(u) = max(0, 1 - |u|/sigma), g(y) = sigma*sinc^2(pi sigma y),
// g(iy) = sigma*(sinh(pi sigma y)/(pi sigma y))^2. Throws for sigma <= 0.
TestFunctionPair fejer_pair(double sigma);

// Smooth compactly supported alternative: ghat = b * b (self-convolution of a
// C-infinity bump on [-sigma/2, sigma/2], normalized so ghat(0) = 1), so
// g(y) = B(y)^2 >= 0 where B is the transform of b. Evaluators use quadrature.
TestFunctionPair bump_pair(double sigma);

// Accurate value of the one-sided tail integral of the Fejer g beyond Y
// (asymptotic expansion of int_Y^inf g, absolute error O(1/(sigma^5 Y^6))).
double fejer_g_tail(double sigma, double Y);

// Certified upper bound on int_{|y| > Y} g(y) dy for either family,
// derived from tail_constant.
double g_tail_bound(const TestFunctionPair& tf, double Y);

// 2 * int g(y) (1 - sin(2 pi sigma y)/(2 pi y)) dy by quadrature with
// analytic tail corrections. Contract: equals 2*ghat0 - g(0).
double sin_kernel_functional(const TestFunctionPair& tf);

// 2 g(iL/4pi) - 2 g(i(1/2 - delta)L/2pi), evaluated from g_imag.
// Requires L > 0 and 0 <= delta < 1/2.
double pole_term(const TestFunctionPair& tf, double L, double delta);

// Equivalent integral form 2 int_{-sigma}^{sigma} ghat(u)
// (e^{-uL/2} - e^{-(1/2-delta)uL}) du, for cross-checking pole_term.
double pole_term_integral(const TestFunctionPair& tf, double L, double delta);

}  // namespace twistlab
