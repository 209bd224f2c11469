#include "poslab/exact_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace poslab {

namespace {

constexpr long long kMaxDenseDegree = 200000;

void require_coprime_ratio(long long p, long long q, bool strict) {
  if (p < 1 || q < 1) throw std::invalid_argument("exponent pair needs p, q >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("exponent pair must be in lowest terms");
  if (strict && p <= q) throw std::invalid_argument("analysis requires r = p/q > 1");
}

}  // namespace

Sign sign_of(const Rational& value) {
  if (value > 0) return Sign::Positive;
  if (value < 0) return Sign::Negative;
  return Sign::Zero;
}

char sign_char(Sign s) {
  switch (s) {
    case Sign::Positive: return '+';
    case Sign::Negative: return '-';
    default: return '0';
  }
}

RationalPoly RationalPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  RationalPoly poly;
  for (auto& term : terms) {
    if (term.second == 0) continue;
    if (!poly.terms_.empty() && poly.terms_.back().first == term.first) {
      poly.terms_.back().second += term.second;
      if (poly.terms_.back().second == 0) poly.terms_.pop_back();
    } else {
      poly.terms_.push_back(std::move(term));
    }
  }
  return poly;
}

RationalPoly RationalPoly::normalized() const {
  if (terms_.empty()) return {};
  const long long shift = terms_.back().first;
  if (shift == 0) return *this;
  RationalPoly poly(*this);
  for (auto& term : poly.terms_) term.first -= shift;
  return poly;
}

long long RationalPoly::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.front().first;
}

long long RationalPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min exponent of zero polynomial");
  return terms_.back().first;
}

Rational RationalPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rational_pow(t, e);
  return acc;
}

std::vector<Rational> RationalPoly::dense() const {
  if (terms_.empty()) return {Rational(0)};
  const long long deg = degree();
  if (deg > kMaxDenseDegree) throw std::invalid_argument("polynomial degree too large");
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e)] = c;
  return coeffs;
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    out << boost::multiprecision::abs(c);
    if (e > 0) out << "*t^" << e;
  }
  return out.str();
}

nlohmann::ordered_json RationalPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    arr.push_back({e, boost::multiprecision::numerator(c).str(),
                   boost::multiprecision::denominator(c).str()});
  }
  return arr;
}

RationalPoly RationalPoly::from_json(const nlohmann::ordered_json& j) {
  std::vector<Term> terms;
  for (const auto& triple : j) {
    const long long e = triple.at(0).get<long long>();
    const BigInt num(triple.at(1).get<std::string>());
    const BigInt den(triple.at(2).get<std::string>());
    terms.emplace_back(e, Rational(num, den));
  }
  return from_terms(std::move(terms));
}

nlohmann::ordered_json SignReport::to_json() const {
  return {{"sign_changes", sign_changes},
          {"multiplicity_at_one", multiplicity_at_one},
          {"sign_left", std::string(1, sign_char(sign_left))},
          {"sign_right", std::string(1, sign_char(sign_right))},
          {"conclusive", conclusive}};
}

RationalPoly build_phi_poly(long long p, long long q) {
  require_coprime_ratio(p, q, /*strict=*/true);
  const Rational r(p, q);
  const Rational a = r * (1 - r);  // negative for r > 1
  const Rational b = r * (1 + r);
  return RationalPoly::from_terms({{p + q, a}, {p, b}, {q, -b}, {0, -a}});
}

RationalPoly build_psi_poly(long long p, long long q) {
  require_coprime_ratio(p, q, /*strict=*/true);
  const Rational r(p, q);
  // Exponents of x^{2r}, x^{2r-1}, x^{2r-2}, x^r, x^{r-1}, 1, x^{r-2} after
  // x = t^q, then shifted by max(2q - p, 0) so the minimum exponent is 0.
  const long long shift = std::max(2 * q - p, 0LL);
  std::vector<RationalPoly::Term> terms = {
      {2 * p + shift, r - 1},
      {2 * p - q + shift, -2 * r},
      {2 * p - 2 * q + shift, r},
      {p + shift, r * r - r + 2},
      {p - q + shift, -2 * r * (r - 1)},
      {shift, Rational(-1)},
      {p - 2 * q + shift, r * (r - 1)},
  };
  return RationalPoly::from_terms(std::move(terms)).normalized();
}

int descartes_sign_changes(const RationalPoly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("sign changes of zero polynomial");
  int changes = 0;
  Sign prev = Sign::Zero;
  for (const auto& [e, c] : poly.terms()) {
    const Sign s = sign_of(c);
    if (prev != Sign::Zero && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int multiplicity_at_one(const RationalPoly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("multiplicity of zero polynomial");
  std::vector<Rational> coeffs = poly.dense();  // c[k] is coefficient of t^k
  int multiplicity = 0;
  while (coeffs.size() > 1) {
    // Synthetic division by (t - 1): remainder is the value at 1.
    std::vector<Rational> quotient(coeffs.size() - 1);
    Rational carry = 0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
      carry += coeffs[k];
      quotient[k - 1] = carry;
    }
    const Rational remainder = carry + coeffs[0];
    if (remainder != 0) break;
    ++multiplicity;
    coeffs = std::move(quotient);
  }
  if (coeffs.size() == 1 && coeffs[0] == 0) {
    throw std::logic_error("synthetic division reduced polynomial to zero");
  }
  return multiplicity;
}

SignReport sign_analysis(const RationalPoly& poly) {
  if (poly.is_zero()) throw std::invalid_argument("sign analysis of zero polynomial");
  SignReport report;
  report.sign_changes = descartes_sign_changes(poly);
  report.multiplicity_at_one = multiplicity_at_one(poly);
  report.conclusive = (report.sign_changes == report.multiplicity_at_one);
  if (report.conclusive) {
    // No positive roots besides t = 1, so the sign is constant on each side:
    // near 0+ the trailing term dominates, near +inf the leading term.
    report.sign_left = sign_of(poly.terms().back().second);
    report.sign_right = sign_of(poly.terms().front().second);
  }
  return report;
}

nlohmann::ordered_json ConvexityResult::to_json() const {
  return {{"verdict", verdict == ConvexityVerdict::Convex ? "CONVEX" : "INCONCLUSIVE"},
          {"phi_report", report.to_json()}};
}

nlohmann::ordered_json LogConvexityResult::to_json() const {
  nlohmann::ordered_json j;
  switch (verdict) {
    case LogConvexityVerdict::LogConvex: j["verdict"] = "LOG_CONVEX"; break;
    case LogConvexityVerdict::NotLogConvex: j["verdict"] = "NOT_LOG_CONVEX"; break;
    default: j["verdict"] = "INCONCLUSIVE"; break;
  }
  j["psi_report"] = report.to_json();
  if (witness_x) {
    j["witness_x"] = witness_x->str();
    j["witness_value"] = witness_value->str();
  }
  return j;
}

ConvexityResult verify_convexity(long long p, long long q) {
  ConvexityResult result;
  result.report = sign_analysis(build_phi_poly(p, q));
  if (result.report.conclusive && result.report.sign_left == Sign::Positive &&
      result.report.sign_right == Sign::Negative) {
    result.verdict = ConvexityVerdict::Convex;
  }
  return result;
}

LogConvexityResult verify_logconvexity(long long p, long long q) {
  require_coprime_ratio(p, q, /*strict=*/false);
  LogConvexityResult result;
  if (p == q) {
    // r = 1: f is the constant function 1 and psi vanishes identically.
    result.verdict = LogConvexityVerdict::LogConvex;
    result.report.conclusive = true;
    return result;
  }
  const RationalPoly psi = build_psi_poly(p, q);
  result.report = sign_analysis(psi);

  // Look for an exact negative value. The cleared polynomial P(t) carries the
  // sign of psi(t^q), so a rational t* with P(t*) < 0 maps back to the exact
  // witness x* = t*^q.
  std::vector<Rational> candidates;
  Rational half(1, 2);
  Rational t = half;
  for (int k = 0; k < 80; ++k) {
    candidates.push_back(t);
    t *= half;
  }
  for (long long k = 2; k <= 16; ++k) candidates.emplace_back(k);
  for (const Rational& cand : candidates) {
    const Rational val = psi.eval(cand);
    if (val < 0) {
      result.verdict = LogConvexityVerdict::NotLogConvex;
      result.witness_x = rational_pow(cand, q);
      // psi(x*) = P(t*) / t*^{shift}, with shift the clearing exponent.
      const long long shift = std::max(2 * q - p, 0LL);
      result.witness_value = val / rational_pow(cand, shift);
      return result;
    }
  }

  if (result.report.conclusive && result.report.sign_left != Sign::Negative &&
      result.report.sign_right != Sign::Negative) {
    result.verdict = LogConvexityVerdict::LogConvex;
  }
  return result;
}

Rational rational_pow(const Rational& base, long long exponent) {
  if (exponent < 0) throw std::invalid_argument("rational_pow wants exponent >= 0");
  Rational acc = 1;
  Rational factor = base;
  long long e = exponent;
  while (e > 0) {
    if (e & 1) acc *= factor;
    e >>= 1;
    if (e > 0) factor *= factor;
  }
  return acc;
}

std::pair<long long, long long> parse_rational_exponent(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const long long p = std::stoll(text);
      if (text.find('.') != std::string::npos) {
        throw std::invalid_argument("decimal input");
      }
      return {p, 1};
    }
    const long long p = std::stoll(text.substr(0, slash));
    const long long q = std::stoll(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return {p, q};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected exact rational exponent 'p/q', got '" + text + "'");
  }
}

}  // namespace poslab
