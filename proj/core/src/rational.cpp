#include "leibniz/rational.hpp"

#include <cctype>
#include <functional>

#include "leibniz/error.hpp"

namespace leibniz {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kValidationError: return "VALIDATION_ERROR";
    case ErrorCode::kDuplicateEntry: return "DUPLICATE_ENTRY";
    case ErrorCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kAlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::kFailsToSeparate: return "FAILS_TO_SEPARATE";
    case ErrorCode::kNotASubalgebra: return "NOT_A_SUBALGEBRA";
    case ErrorCode::kNotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::kNotCartan: return "NOT_CARTAN";
    case ErrorCode::kNotFound: return "NOT_FOUND";
    case ErrorCode::kCertificateFailed: return "CERTIFICATE_FAILED";
    case ErrorCode::kQuotientNotLie: return "QUOTIENT_NOT_LIE";
    case ErrorCode::kHypothesisViolated: return "HYPOTHESIS_VIOLATED";
  }
  return "UNKNOWN";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational division by zero");
  }
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view literal) {
  std::string_view body = literal;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw Error(ErrorCode::kParseError, "bad rational literal '" + std::string(literal) + "'");
    }
  }
  if (!all_digits(num)) {
    throw Error(ErrorCode::kParseError, "bad rational literal '" + std::string(literal) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(literal) + "'");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace leibniz
