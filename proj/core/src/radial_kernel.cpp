#include "poslab/radial_kernel.hpp"

#include <algorithm>

namespace poslab {

namespace {

void require_valid(double r, double t) {
  if (!(r > 0.0)) throw std::domain_error("kernel exponent r must be positive");
  if (!(t >= 0.0)) throw std::domain_error("kernel argument t must be nonnegative");
}

void require_r_above_one(double r) {
  if (!(r > 1.0)) throw std::domain_error("derivative formulas require r > 1");
}

}  // namespace

KernelParams KernelParams::make(double r, Direction dir) {
  if (!(r > 0.0)) throw std::domain_error("kernel exponent r must be positive");
  return KernelParams{r, std::nullopt, dir};
}

KernelParams KernelParams::make_exact(long long p, long long q, Direction dir) {
  if (p < 1 || q < 1) throw std::domain_error("exact exponent needs p, q >= 1");
  const long long g = std::gcd(p, q);
  p /= g;
  q /= g;
  KernelParams params;
  params.r = static_cast<double>(p) / static_cast<double>(q);
  params.exact_r = RationalExponent{p, q};
  params.direction = dir;
  return params;
}

EvalGrid EvalGrid::linspace(double lo, double hi, int count) {
  EvalGrid grid;
  grid.points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid.points.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  }
  return grid;
}

EvalGrid EvalGrid::logspace(double lo, double hi, int count) {
  EvalGrid grid;
  grid.points.reserve(static_cast<std::size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i) {
    grid.points.push_back(count == 1 ? lo : std::exp(llo + (lhi - llo) * i / (count - 1)));
  }
  return grid;
}

void EvalGrid::validate() const {
  if (!(near_one_band > 0.0 && near_one_band < 1.0)) {
    throw std::invalid_argument("near_one_band must lie in (0, 1)");
  }
  if (!std::is_sorted(points.begin(), points.end())) {
    throw std::invalid_argument("grid points must be sorted ascending");
  }
  if (!points.empty() && points.front() < 0.0) {
    throw std::invalid_argument("grid points must be nonnegative");
  }
}

double eval_f(const KernelParams& params, double t, double band) {
  require_valid(params.r, t);
  return detail::eval_f_scalar(params.r, t, band);
}

double eval_g(const KernelParams& params, double t, double band) {
  require_valid(params.r, t);
  if (t == 1.0) return params.r;
  return 1.0 / detail::eval_f_scalar(params.r, t, band);
}

double eval_h(const KernelParams& params, double s, double band) {
  require_valid(params.r, s);
  return detail::eval_f_scalar(params.r, std::sqrt(s), band);
}

double eval_f_prime(const KernelParams& params, double t, double band) {
  require_valid(params.r, t);
  require_r_above_one(params.r);
  const double r = params.r;
  const double u = t - 1.0;
  if (std::abs(u) < band) {
    const double d1 = detail::f_prime_at_one(r);
    const double d2 = detail::f_second_at_one(r);
    const double d3 = detail::f_third_at_one(r);
    const double d4 = detail::f_fourth_at_one(r);
    return d1 + u * (d2 + u * (0.5 * d3 + u * (d4 / 6.0)));
  }
  const double num = (1.0 - r) * std::pow(t, r) + r * std::pow(t, r - 1.0) - 1.0;
  double denom = 1.0 - std::pow(t, r);
  if (std::abs(denom) < 0.5) denom = -std::expm1(r * std::log(t));
  return num / (denom * denom);
}

double eval_f_second(const KernelParams& params, double t, double band) {
  require_valid(params.r, t);
  require_r_above_one(params.r);
  const double r = params.r;
  const double u = t - 1.0;
  if (std::abs(u) < band) {
    const double d2 = detail::f_second_at_one(r);
    const double d3 = detail::f_third_at_one(r);
    const double d4 = detail::f_fourth_at_one(r);
    return d2 + u * (d3 + u * (0.5 * d4));
  }
  const double phi = eval_phi_direct(r, t);
  double denom = 1.0 - std::pow(t, r);
  if (std::abs(denom) < 0.5) denom = -std::expm1(r * std::log(t));
  return phi / (denom * denom * denom);
}

double eval_phi_direct(double r, double t) {
  return r * (1.0 - r) * std::pow(t, 2.0 * r - 1.0) +
         r * (1.0 + r) * std::pow(t, 2.0 * r - 2.0) -
         r * (1.0 + r) * std::pow(t, r - 1.0) - r * (1.0 - r) * std::pow(t, r - 2.0);
}

double eval_psi_direct(double r, double t) {
  return (r - 1.0) * std::pow(t, 2.0 * r) - 2.0 * r * std::pow(t, 2.0 * r - 1.0) +
         r * std::pow(t, 2.0 * r - 2.0) + (r * r - r + 2.0) * std::pow(t, r) -
         2.0 * r * (r - 1.0) * std::pow(t, r - 1.0) - 1.0 +
         r * (r - 1.0) * std::pow(t, r - 2.0);
}

std::complex<double> eval_ratio_uhp(double p, double q, std::complex<double> z) {
  if (!(z.imag() > 0.0)) {
    throw std::domain_error("upper-half-plane evaluation needs Im z > 0");
  }
  if (p == q) return {1.0, 0.0};
  const std::complex<double> logz = std::log(z);  // principal branch
  const std::complex<double> num = 1.0 - std::exp(q * logz);
  const std::complex<double> den = 1.0 - std::exp(p * logz);
  return num / den;
}

long double eval_f_ld(long double r, long double t, long double band) {
  if (!(r > 0.0L) || !(t >= 0.0L)) throw std::domain_error("eval_f_ld: bad arguments");
  return detail::eval_f_scalar(r, t, band);
}

}  // namespace poslab
