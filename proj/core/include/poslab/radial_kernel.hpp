#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace poslab {

/// Half-width of the switchover band around t = 1. The two-term series error
/// (~delta^2) sits far below the cancellation error of the naive quotient
/// (~eps/delta) at this width.
inline constexpr double kNearOneBand = 1e-3;

enum class Direction { F, G };

/// Exact rational exponent p/q in lowest terms, both >= 1.
struct RationalExponent {
  long long p = 1;
  long long q = 1;

  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// Parameters of the radial kernel family
///   f(t) = (1 - t) / (1 - t^r),   g(t) = 1 / f(t),
/// with the value at t = 1 read as the limit (1/r for f, r for g).
struct KernelParams {
  double r = 2.0;
  std::optional<RationalExponent> exact_r;
  Direction direction = Direction::F;

  static KernelParams make(double r, Direction dir = Direction::F);
  static KernelParams make_exact(long long p, long long q, Direction dir = Direction::F);
};

/// Evaluation grid for probe and CLI sweeps: sorted nonnegative abscissae
/// plus the near-one band half-width in force.
struct EvalGrid {
  std::vector<double> points;
  double near_one_band = kNearOneBand;

  static EvalGrid linspace(double lo, double hi, int count);
  static EvalGrid logspace(double lo, double hi, int count);
  void validate() const;
};

namespace detail {

// Shared scalar core, instantiated for double and long double. The quotient
// is rewritten as u / ((1+u)^r - 1) with u = t - 1; expm1/log1p keep every
// regime cancellation-free, including t near 0, near 1, and t -> inf.
template <typename T>
T eval_f_scalar(T r, T t, T band) {
  if (r == T(1)) return T(1);
  const T u = t - T(1);
  if (u == T(0)) return T(1) / r;
  if (std::abs(u) < band) return u / std::expm1(r * std::log1p(u));
  T denom = T(1) - std::pow(t, r);
  if (std::abs(denom) < T(0.5)) denom = -std::expm1(r * std::log(t));
  return (T(1) - t) / denom;
}

// Taylor coefficients of f at t = 1:
//   f(1+u) = (1/r) (1 + a1 u + a2 u^2 + a3 u^3 + a4 u^4 + ...)
// with a1 = -(r-1)/2, a2 = (r^2-1)/12, a3 = -(r^2-1)/24,
//      a4 = -(r^2-1)(r^2-19)/720.
// The derivative limits below follow.
inline double f_prime_at_one(double r) { return -(r - 1.0) / (2.0 * r); }
inline double f_second_at_one(double r) { return (r * r - 1.0) / (6.0 * r); }
inline double f_third_at_one(double r) { return -(r * r - 1.0) / (4.0 * r); }
inline double f_fourth_at_one(double r) {
  return -(r * r - 1.0) * (r * r - 19.0) / (30.0 * r);
}

}  // namespace detail

/// f(t) = (1 - t)/(1 - t^r), with f(1) = 1/r exactly.
/// Relative error <= 1e-13 over [0, 1e6] for every r > 0.
double eval_f(const KernelParams& params, double t, double band = kNearOneBand);

/// g(t) = 1/f(t) = (1 - t^r)/(1 - t), with g(1) = r exactly.
double eval_g(const KernelParams& params, double t, double band = kNearOneBand);

/// h(s) = f(sqrt(s)): the square-root composition used by the
/// complete-monotonicity route; h(1) = 1/r.
double eval_h(const KernelParams& params, double s, double band = kNearOneBand);

/// f'(t) = ((1-r) t^r + r t^{r-1} - 1) / (1 - t^r)^2 for r > 1.
/// Inside the band a truncated Taylor expansion at t = 1 is used; agreement
/// with 4th-order central differences of eval_f is 1e-6 or better.
double eval_f_prime(const KernelParams& params, double t, double band = kNearOneBand);

/// f''(t) = phi(t) / (1 - t^r)^3 for r > 1, where
///   phi(t) = r(1-r) t^{2r-1} + r(1+r) t^{2r-2} - r(1+r) t^{r-1} - r(1-r) t^{r-2}.
/// Note f''(0+) = +inf for 1 < r < 2; the limit is returned as such.
double eval_f_second(const KernelParams& params, double t, double band = kNearOneBand);

/// Numerator polynomial phi of f'' evaluated directly (no band treatment);
/// exposed for cross-checks against the exact-arithmetic construction.
double eval_phi_direct(double r, double t);

/// Numerator polynomial psi of f f'' - (f')^2 evaluated directly:
///   psi(t) = (r-1) t^{2r} - 2r t^{2r-1} + r t^{2r-2} + (r^2-r+2) t^r
///            - 2r(r-1) t^{r-1} - 1 + r(r-1) t^{r-2}.
double eval_psi_direct(double r, double t);

/// (1 - z^q)/(1 - z^p) on the open upper half-plane, principal branch for
/// both powers. Throws std::domain_error when Im z <= 0.
std::complex<double> eval_ratio_uhp(double p, double q, std::complex<double> z);

/// Extended-precision variant of eval_f for violation confirmation.
long double eval_f_ld(long double r, long double t, long double band = 1e-3L);

}  // namespace poslab
