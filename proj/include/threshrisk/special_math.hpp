// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace threshrisk {

/// A dimensionless value constrained to [0, 1].
struct Probability {
  double value{0.0};
};

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(what);
}

inline constexpr long double kSqrt2 = std::numbers::sqrt2_v<long double>;
inline constexpr long double kInvSqrtPi = std::numbers::inv_sqrtpi_v<long double>;
inline constexpr long double kTwoInvSqrtPi = 2.0L * std::numbers::inv_sqrtpi_v<long double>;
inline constexpr long double kInvSqrt2Pi =
    std::numbers::inv_sqrtpi_v<long double> / std::numbers::sqrt2_v<long double>;

// erf by Maclaurin series; accurate for |x| <= 2, where the alternating
// terms stay small enough that extended precision absorbs the cancellation.
inline long double erf_series(long double x) {
  const long double x2 = x * x;
  long double power = x;  // (-1)^n x^(2n+1) / n!
  long double sum = x;
  for (int n = 1; n < 200; ++n) {
    power *= -x2 / n;
    const long double add = power / (2 * n + 1);
    sum += add;
    if (std::fabs(add) <= std::fabs(sum) * 1e-21L) break;
  }
  return kTwoInvSqrtPi * sum;
}

// Laplace continued fraction for sqrt(pi) e^{x^2} erfc(x), x >= 2,
// evaluated with the modified Lentz algorithm:
//   1/(x+ (1/2)/(x+ (2/2)/(x+ (3/2)/(x+ ...))))
inline long double erfcx_cf(long double x) {
  constexpr long double tiny = 1e-60L;
  long double f = x;
  long double c = x;
  long double d = 0.0L;
  for (int n = 1; n < 500; ++n) {
    const long double a = 0.5L * n;
    d = x + a * d;
    if (d == 0.0L) d = tiny;
    c = x + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) <= 1e-21L) return kInvSqrtPi / f;
  }
  throw std::runtime_error("erfc continued fraction failed to converge");
}

inline long double erfc_ld(long double x) {
  if (x < 0.0L) return 2.0L - erfc_ld(-x);
  if (x <= 2.0L) return 1.0L - erf_series(x);
  return erfcx_cf(x) * std::exp(-x * x);
}

inline long double erf_ld(long double x) {
  if (std::fabs(x) <= 2.0L) return erf_series(x);
  return x > 0.0L ? 1.0L - erfc_ld(x) : erfc_ld(-x) - 1.0L;
}

// Paper-convention Q on long double; Q(x) = erfc(x)/2.
inline long double gauss_q_ld(long double x) { return 0.5L * erfc_ld(x); }

// Regularized lower incomplete gamma of shape 3/2 through the closed
// identity erf(sqrt x) - (2 sqrt x / sqrt pi) e^{-x}.
inline long double gamma_inc_3half_ld(long double x) {
  const long double r = std::sqrt(x);
  const long double v = erf_ld(r) - kTwoInvSqrtPi * r * std::exp(-x);
  if (v < 0.0L) return 0.0L;
  if (v > 1.0L) return 1.0L;
  return v;
}

}  // namespace detail

/// Q(x) = pi^{-1/2} int_x^inf e^{-t^2} dt = erfc(x)/2. Note this is not the
/// standard normal tail; the integrand carries no 1/2 in the exponent.
inline Probability gauss_q(double x) {
  detail::require_finite(x, "gauss_q: non-finite input");
  return Probability{static_cast<double>(detail::gauss_q_ld(x))};
}

/// Regularized lower incomplete gamma of shape 3/2:
/// (2/sqrt(pi)) int_0^x t^{1/2} e^{-t} dt.
inline Probability gamma_inc_3half(double x) {
  detail::require_finite(x, "gamma_inc_3half: non-finite input");
  detail::require(x >= 0.0, "gamma_inc_3half: negative argument");
  return Probability{static_cast<double>(detail::gamma_inc_3half_ld(x))};
}

/// Zero-mean Gaussian density with standard deviation sigma.
inline double gauss_pdf(double y, double sigma) {
  detail::require_finite(y, "gauss_pdf: non-finite input");
  detail::require(std::isfinite(sigma) && sigma > 0.0, "gauss_pdf: sigma must be positive");
  const double z = y / sigma;
  return std::exp(-0.5 * z * z) /
         (sigma * std::sqrt(2.0 * std::numbers::pi));
}

}  // namespace threshrisk
