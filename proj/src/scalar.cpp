#include "zerodiv/scalar.hpp"

#include <cctype>
#include <charconv>

#include "zerodiv/error.hpp"

namespace zerodiv {

namespace {

constexpr std::uint64_t kMaxPrime = 1ULL << 31;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_field(const Scalar& x, const Scalar& y) {
  if (!(x.field() == y.field()))
    throw Error(ErrorCode::FieldMismatch, "field mismatch: " + x.field().to_string() + " vs " +
                                              y.field().to_string());
}

// Parses an optionally signed decimal integer; returns the number of
// characters consumed, or 0 when no digits are present.
std::size_t parse_int(std::string_view text, mpz_class& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_begin) return 0;
  out.set_str(std::string(text.substr(digits_begin, i - digits_begin)), 10);
  if (negative) out = -out;
  return i;
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ZeroInversion: return "ZeroInversion";
    case ErrorCode::SupportSize: return "SupportSize";
    case ErrorCode::IdentityNotInSupport: return "IdentityNotInSupport";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotAnnihilating: return "NotAnnihilating";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::FixedPointPresent: return "FixedPointPresent";
    case ErrorCode::DegenerateC: return "DegenerateC";
    case ErrorCode::NoOrderThreeElement: return "NoOrderThreeElement";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::WitnessVerificationFailed: return "WitnessVerificationFailed";
  }
  return "Unknown";
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime) throw Error(ErrorCode::InvalidSpec, "prime field characteristic must be below 2^31");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidSpec, std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "GF:") {
    std::uint64_t p = 0;
    auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw Error(ErrorCode::InvalidSpec, "malformed field spec '" + std::string(text) + "'");
    return prime(p);
  }
  throw Error(ErrorCode::InvalidSpec, "unknown field spec '" + std::string(text) + "' (expected Q or GF:p)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "GF:" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
  if (field.is_rational()) return Scalar(field, mpq_class(mpz_class(static_cast<long>(value))));
  const auto p = static_cast<std::int64_t>(field.characteristic());
  return Scalar(field, static_cast<std::uint32_t>(((value % p) + p) % p));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, std::move(q));
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t d = reduce(den, p);
  if (d == 0)
    throw Error(ErrorCode::ZeroDenominator, "denominator vanishes in " + field.to_string());
  const std::uint64_t n = reduce(num, p);
  return Scalar(field, static_cast<std::uint32_t>(n * pow_mod(d, p - 2, p) % p));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  mpz_class num, den = 1;
  std::size_t used = parse_int(text, num);
  if (used == 0) throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'", 1);
  if (used < text.size()) {
    if (text[used] != '/')
      throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'", used + 1);
    const std::size_t more = parse_int(text.substr(used + 1), den);
    if (more == 0 || used + 1 + more != text.size())
      throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'", used + 2);
  }
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
  return from_rational(field, num, den);
}

bool Scalar::is_zero() const noexcept {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) {
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::to_string(std::get<std::uint32_t>(value_));
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint32_t r = std::get<std::uint32_t>(value_);
  return Scalar(field_, r == 0 ? 0u : field_.characteristic() - r);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_rational()) return Scalar(x.field_, mpq_class(x.rational() + y.rational()));
  const std::uint64_t p = x.field_.characteristic();
  return Scalar(x.field_, static_cast<std::uint32_t>((std::uint64_t{x.residue()} + y.residue()) % p));
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_rational()) return Scalar(x.field_, mpq_class(x.rational() * y.rational()));
  const std::uint64_t p = x.field_.characteristic();
  return Scalar(x.field_, static_cast<std::uint32_t>(std::uint64_t{x.residue()} * y.residue() % p));
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInversion, "inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  const std::uint32_t p = field_.characteristic();
  return Scalar(field_, pow_mod(std::get<std::uint32_t>(value_), p - 2, p));
}

bool operator==(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  return x.value_ == y.value_;
}

bool operator<(const Scalar& x, const Scalar& y) {
  require_same_field(x, y);
  if (x.field_.is_rational()) return x.rational() < y.rational();
  return x.residue() < y.residue();
}

Scalar add(const Scalar& x, const Scalar& y) { return x + y; }
Scalar mul(const Scalar& x, const Scalar& y) { return x * y; }
Scalar inv(const Scalar& x) { return x.inverse(); }
Scalar parse_scalar(std::string_view text, const FieldSpec& field) { return Scalar::parse(text, field); }

}  // namespace zerodiv
