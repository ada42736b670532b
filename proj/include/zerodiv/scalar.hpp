#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace zerodiv {

/// The coefficient field: either the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidSpec unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "GF:p".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are reduced into [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t value);
  static Scalar from_rational(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);
  /// Grammar: ['-'] digits [ '/' ['-'] digits ]. Non-residues are reduced.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Canonical text: "-2/3", "2"; denominator 1 omitted.
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  /// Throws ZeroInversion on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// Only meaningful within one field; used for deterministic ordering.
  friend bool operator<(const Scalar& x, const Scalar& y);

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }

 private:
  Scalar(FieldSpec field, std::variant<mpq_class, std::uint32_t> value)
      : field_(field), value_(std::move(value)) {}

  FieldSpec field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

Scalar add(const Scalar& x, const Scalar& y);
Scalar mul(const Scalar& x, const Scalar& y);
Scalar inv(const Scalar& x);
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace zerodiv
