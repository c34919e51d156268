#pragma once

namespace wecfarm {

/// Bessel function of the first kind, order zero.
///
/// Power series below |x| = 8, large-argument (Hankel) form with rational
/// fits of the modulus functions above. Absolute error stays below 1e-10,
/// which keeps the radiation-coupling kernel reproducible to the digit
/// across reimplementations.
double bessel_j0(double x);

}  // namespace wecfarm
