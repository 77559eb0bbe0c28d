#include "folcan/rational.hpp"

#include <numeric>
#include <ostream>

#include "folcan/error.hpp"

namespace folcan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::InvalidOverride: return "InvalidOverride";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::NonPositiveVolume: return "NonPositiveVolume";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonIntegralGenus: return "NonIntegralGenus";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Canonical unsigned decimal: nonempty digits, no leading zero unless "0".
bool canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_digit(c)) return false;
  }
  return s.size() == 1 || s.front() != '0';
}

[[noreturn]] void reject(std::string_view text, const char* why) {
  throw Error(ErrorCode::ParseError, std::string("invalid rational: ") + why,
              std::string(text));
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!canonical_digits(num_text)) reject(text, "malformed numerator");

  mpz_class num(std::string(num_text), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_text = body.substr(slash + 1);
    if (!canonical_digits(den_text)) reject(text, "malformed denominator");
    den = mpz_class(std::string(den_text), 10);
    if (den == 0) reject(text, "zero denominator");
    if (den == 1) reject(text, "explicit unit denominator");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) reject(text, "fraction not in lowest terms");
  }
  if (negative && num == 0) reject(text, "negative zero");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

mpz_class Rational::to_integer() const {
  if (!is_integer()) throw Error(ErrorCode::NotIntegral, "value is not an integer", str());
  return value_.get_num();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace folcan
