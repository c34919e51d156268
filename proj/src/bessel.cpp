#include "wecfarm/bessel.hpp"

#include <cmath>

namespace wecfarm {

namespace {

// Rational fits of the Hankel P and Q modulus functions in z = (5/x)^2,
// valid for x >= 5 (classical Hart/Cephes coefficients, near machine
// precision there).
constexpr double kPp[7] = {
    7.96936729297347051624e-4, 8.28352392107440799803e-2, 1.23953371646414299388e0,
    5.44725003058768775090e0,  8.74716500199817011941e0,  5.30324038235394892183e0,
    9.99999999999999997821e-1,
};
constexpr double kPq[7] = {
    9.24408810558863637013e-4, 8.56288474354474431428e-2, 1.25352743901058953537e0,
    5.47097740330417105182e0,  8.76190883237069594232e0,  5.30605288235394617618e0,
    1.00000000000000000218e0,
};
constexpr double kQp[8] = {
    -1.13663838898469149931e-2, -1.28252718670509318512e0, -1.95539544257735972385e1,
    -9.32060152123768231369e1,  -1.77681167980488790968e2, -1.47077505154951170175e2,
    -5.14105326766599330220e1,  -6.05014350600728481186e0,
};
constexpr double kQq[7] = {
    // leading coefficient 1.0 implicit
    6.43178256118178023184e1, 8.56430025976980587198e2, 3.88240183605401609683e3,
    7.24046774195652478189e3, 5.93072701187316984827e3, 2.06209331660327847417e3,
    2.42005740240291393179e2,
};

constexpr double kPiOver4 = 0.78539816339744830962;
constexpr double kSqrtTwoOverPi = 0.79788456080286535588;

double polevl(double x, const double* c, int degree) {
  double r = c[0];
  for (int i = 1; i <= degree; ++i) r = r * x + c[i];
  return r;
}

double p1evl(double x, const double* c, int degree) {
  double r = x + c[0];
  for (int i = 1; i < degree; ++i) r = r * x + c[i];
  return r;
}

}  // namespace

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x < 8.0) {
    // sum_k (-1)^k (x^2/4)^k / (k!)^2; worst-case cancellation at x -> 8
    // leaves ~1e-13 absolute error in double.
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
      term *= -q / (static_cast<double>(k) * static_cast<double>(k));
      sum += term;
      if (std::fabs(term) < 1e-18) break;
    }
    return sum;
  }
  const double w = 5.0 / x;
  const double z = w * w;
  const double p = polevl(z, kPp, 6) / polevl(z, kPq, 6);
  const double q = polevl(z, kQp, 7) / p1evl(z, kQq, 7);
  const double xn = x - kPiOver4;
  const double v = p * std::cos(xn) - w * q * std::sin(xn);
  return v * kSqrtTwoOverPi / std::sqrt(x);
}

}  // namespace wecfarm
