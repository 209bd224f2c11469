#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace poslab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

Sign sign_of(const Rational& value);
char sign_char(Sign s);

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// by strictly descending exponent with no zero coefficients; after
/// normalize() the trailing exponent is 0.
class RationalPoly {
 public:
  using Term = std::pair<long long, Rational>;  // (exponent, coefficient)

  RationalPoly() = default;

  /// Merges duplicate exponents, drops zero coefficients, sorts descending.
  static RationalPoly from_terms(std::vector<Term> terms);

  /// Shifts exponents so the smallest becomes 0. Multiplying by a monomial
  /// t^k preserves signs on (0, inf), which is all the analysis uses.
  RationalPoly normalized() const;

  bool is_zero() const { return terms_.empty(); }
  long long degree() const;
  long long min_exponent() const;
  const std::vector<Term>& terms() const { return terms_; }

  Rational eval(const Rational& t) const;

  /// Dense coefficient vector c[0..degree], c[k] = coefficient of t^k.
  std::vector<Rational> dense() const;

  std::string to_string() const;

  /// JSON array of (exponent, numerator, denominator) triples.
  nlohmann::ordered_json to_json() const;
  static RationalPoly from_json(const nlohmann::ordered_json& j);

 private:
  std::vector<Term> terms_;
};

/// Outcome of the sign-change / multiplicity argument for a polynomial whose
/// only candidate positive root is t = 1. When the Descartes bound equals the
/// multiplicity at 1, the sign on each side of 1 is pinned by the end
/// coefficients and the report is conclusive.
struct SignReport {
  int sign_changes = 0;
  int multiplicity_at_one = 0;
  Sign sign_left = Sign::Zero;   // sign on (0, 1)
  Sign sign_right = Sign::Zero;  // sign on (1, inf)
  bool conclusive = false;

  nlohmann::ordered_json to_json() const;
};

/// Numerator polynomial of f'' after x = t^q and clearing by t^{2q-p}:
/// exact terms r(1-r) t^{p+q} + r(1+r) t^p - r(1+r) t^q - r(1-r).
/// Requires gcd(p,q) = 1 and p > q (that is, r > 1).
RationalPoly build_phi_poly(long long p, long long q);

/// Numerator polynomial of f f'' - (f')^2 after the same substitution and
/// clearing; seven raw terms, merged where exponents collide. Requires
/// gcd(p,q) = 1 and p > q.
RationalPoly build_psi_poly(long long p, long long q);

/// Sign changes in the coefficient sequence ordered by descending exponent.
/// Upper-bounds the number of positive roots counted with multiplicity.
int descartes_sign_changes(const RationalPoly& poly);

/// Largest k with (t-1)^k dividing poly, by exact synthetic division.
int multiplicity_at_one(const RationalPoly& poly);

SignReport sign_analysis(const RationalPoly& poly);

enum class ConvexityVerdict { Convex, Inconclusive };
enum class LogConvexityVerdict { LogConvex, NotLogConvex, Inconclusive };

struct ConvexityResult {
  ConvexityVerdict verdict = ConvexityVerdict::Inconclusive;
  SignReport report;

  nlohmann::ordered_json to_json() const;
};

struct LogConvexityResult {
  LogConvexityVerdict verdict = LogConvexityVerdict::Inconclusive;
  SignReport report;
  // Exact witness with psi(witness_x) = witness_value < 0, in the original
  // variable x (not the substituted t).
  std::optional<Rational> witness_x;
  std::optional<Rational> witness_value;

  nlohmann::ordered_json to_json() const;
};

/// f is convex and monotonically decreasing on (0, inf) iff phi is positive
/// left of 1 and negative right of 1 (matching the sign of (1 - x^r)^3).
/// Requires r = p/q > 1.
ConvexityResult verify_convexity(long long p, long long q);

/// f is log-convex iff psi >= 0 on (0, inf). Holds exactly for 1 <= r <= 2;
/// for r > 2 an exact rational witness with psi < 0 is produced.
/// Requires r = p/q >= 1.
LogConvexityResult verify_logconvexity(long long p, long long q);

/// Exact power helper for nonnegative integer exponents.
Rational rational_pow(const Rational& base, long long exponent);

/// Parses "p/q" or a bare integer into an exact rational exponent pair.
std::pair<long long, long long> parse_rational_exponent(const std::string& text);

}  // namespace poslab
