#include "twistlab/testfn.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "twistlab/quadrature.hpp"

namespace twistlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// sin(x)/x with a stable removable singularity.
double sinc(double x) {
  if (std::abs(x) < 1e-6) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

// sinh(x)/x with a stable removable singularity.
double sinhc(double x) {
  if (std::abs(x) < 1e-6) {
    double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
  }
  return std::sinh(x) / x;
}

// Asymptotic expansions of the oscillatory tail integrals
//   C2(b) = int_Y^inf cos(by)/y^2 dy,  S3(b) = int_Y^inf sin(by)/y^3 dy,
// by repeated integration by parts; error O(1/(b^5 Y^6)).
double tail_c2(double b, double Y) {
  double s = std::sin(b * Y), c = std::cos(b * Y);
  double bY = b * Y;
  return (-s / bY + 2.0 * c / (bY * bY) + 6.0 * s / (bY * bY * bY) -
          24.0 * c / (bY * bY * bY * bY)) /
         Y;
}
double tail_s3(double b, double Y) {
  double s = std::sin(b * Y), c = std::cos(b * Y);
  double bY = b * Y;
  return (c / bY + 3.0 * s / (bY * bY) - 12.0 * c / (bY * bY * bY)) / (Y * Y);
}

// C-infinity bump supported on |u| < h: exp(-1/(1 - (u/h)^2)).
double bump_b_raw(double u, double h) {
  double t = u / h;
  double d = 1.0 - t * t;
  if (d <= 0.0) return 0.0;
  return std::exp(-1.0 / d);
}

// Shared state for the bump pair so that the three evaluators stay in sync.
struct BumpState {
  double sigma = 1.0;
  double h = 0.5;     // bump half-width sigma/2
  double norm = 1.0;  // scale on b so that int b^2 = 1, i.e. ghat(0) = 1

  double b(double u) const { return norm * bump_b_raw(u, h); }

  // B(y) = int b(u) e^{2 pi i u y} du = 2 int_0^h b(u) cos(2 pi u y) du.
  double B(double y) const {
    int n = static_cast<int>(std::ceil(2.0 * h * std::abs(y))) * 2 + 2;
    return 2.0 * integrate_panels(
                     [&](double u) { return b(u) * std::cos(2.0 * kPi * u * y); },
                     0.0, h, n, 1e-13)
                     .value;
  }

  // B(iy) = int b(u) e^{-2 pi u y} du (real and positive).
  double B_imag(double y) const {
    return integrate([&](double u) { return b(u) * std::exp(-2.0 * kPi * u * y); },
                     -h, h, 1e-13)
        .value;
  }

  // ghat(x) = (b * b)(x) = int b(t) b(x - t) dt.
  double ghat(double x) const {
    double ax = std::abs(x);
    if (ax >= 2.0 * h) return 0.0;
    double lo = std::max(-h, ax - h), hi = std::min(h, ax + h);
    return integrate([&](double t) { return b(t) * b(ax - t); }, lo, hi, 1e-13)
        .value;
  }
};

}  // namespace

TestFunctionPair fejer_pair(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("fejer_pair: sigma must be positive");
  TestFunctionPair tf;
  tf.sigma = sigma;
  tf.family = "fejer";
  tf.g = [sigma](double y) {
    double s = sinc(kPi * sigma * y);
    return sigma * s * s;
  };
  tf.g_imag = [sigma](double y) {
    double s = sinhc(kPi * sigma * y);
    return sigma * s * s;
  };
  tf.ghat = [sigma](double u) { return std::max(0.0, 1.0 - std::abs(u) / sigma); };
  tf.ghat0 = 1.0;
  tf.max_ghat = 1.0;
  // g(y) <= min(sigma, 1/(pi^2 sigma y^2)) gives g(y)(1+y^2) <= sigma + 1/(pi^2 sigma).
  tf.tail_constant = sigma + 1.0 / (kPi * kPi * sigma);
  return tf;
}

TestFunctionPair bump_pair(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("bump_pair: sigma must be positive");
  auto st = std::make_shared<BumpState>();
  st->sigma = sigma;
  st->h = sigma / 2.0;
  double i2 = integrate([&](double u) { return bump_b_raw(u, st->h) * bump_b_raw(u, st->h); },
                        -st->h, st->h, 1e-14)
                  .value;
  st->norm = 1.0 / std::sqrt(i2);

  TestFunctionPair tf;
  tf.sigma = sigma;
  tf.family = "bump";
  tf.g = [st](double y) {
    double B = st->B(y);
    return B * B;
  };
  tf.g_imag = [st](double y) {
    double B = st->B_imag(y);
    return B * B;
  };
  tf.ghat = [st](double u) { return st->ghat(u); };
  tf.ghat0 = 1.0;           // by normalization of b
  tf.max_ghat = 1.0;        // ghat(x) <= ghat(0) by Cauchy-Schwarz
  // Empirical bound on g(y)(1 + y^2); g decays super-polynomially, so the
  // supremum is attained at moderate y. Safety factor 2.
  double c = 0.0;
  for (double y = 0.0; y <= 50.0; y += 0.05) c = std::max(c, tf.g(y) * (1.0 + y * y));
  tf.tail_constant = 2.0 * c;
  return tf;
}

double fejer_g_tail(double sigma, double Y) {
  // int_Y^inf g = (1/(2 pi^2 sigma)) (1/Y - C2(2 pi sigma)).
  double a = 2.0 * kPi * sigma;
  return (1.0 / Y - tail_c2(a, Y)) / (2.0 * kPi * kPi * sigma);
}

double g_tail_bound(const TestFunctionPair& tf, double Y) {
  return 2.0 * tf.tail_constant * (kPi / 2.0 - std::atan(Y));
}

double sin_kernel_functional(const TestFunctionPair& tf) {
  double sigma = tf.sigma;
  double a = 2.0 * kPi * sigma;
  auto h = [&](double y) {
    // kernel 1 - sin(2 pi sigma y)/(2 pi y) = 1 - sigma*sinc(2 pi sigma y)
    return tf.g(y) * (1.0 - sigma * sinc(a * y));
  };
  if (tf.family == "fejer") {
    double Y = 200.0;
    int n = static_cast<int>(std::ceil(4.0 * sigma * Y)) + 8;
    double main = integrate_panels(h, 0.0, Y, n, 1e-11).value;
    // Tail of the "1" part, minus the tail of the oscillatory part:
    //   int_Y^inf g sin(ay)/(2 pi y) dy
    //     = (1/(4 pi^3 sigma)) [S3(a) - S3(2a)/2].
    double tail = fejer_g_tail(sigma, Y) -
                  (tail_s3(a, Y) - 0.5 * tail_s3(2.0 * a, Y)) /
                      (4.0 * kPi * kPi * kPi * sigma);
    // 2 int_R = 4 int_0^inf by evenness.
    return 4.0 * (main + tail);
  }
  // Smooth bump: g decays faster than any polynomial, truncation suffices.
  double Y = 80.0;
  int n = static_cast<int>(std::ceil(4.0 * sigma * Y)) + 8;
  return 4.0 * integrate_panels(h, 0.0, Y, n, 1e-11).value;
}

double pole_term(const TestFunctionPair& tf, double L, double delta) {
  if (!(L > 0.0)) throw std::invalid_argument("pole_term: L must be positive");
  if (!(delta >= 0.0 && delta < 0.5))
    throw std::invalid_argument("pole_term: delta must lie in [0, 1/2)");
  return 2.0 * tf.g_imag(L / (4.0 * kPi)) -
         2.0 * tf.g_imag((0.5 - delta) * L / (2.0 * kPi));
}

double pole_term_integral(const TestFunctionPair& tf, double L, double delta) {
  if (!(L > 0.0)) throw std::invalid_argument("pole_term_integral: L must be positive");
  if (!(delta >= 0.0 && delta < 0.5))
    throw std::invalid_argument("pole_term_integral: delta must lie in [0, 1/2)");
  auto f = [&](double u) {
    return tf.ghat(u) * (std::exp(-u * L / 2.0) - std::exp(-(0.5 - delta) * u * L));
  };
  // Split at 0 where the Fejer ghat has a kink.
  double s = tf.sigma;
  return 2.0 * (integrate_panels(f, -s, 0.0, 16, 1e-13).value +
                integrate_panels(f, 0.0, s, 16, 1e-13).value);
}

}  // namespace twistlab
