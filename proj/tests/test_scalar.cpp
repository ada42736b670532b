#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zerodiv/error.hpp"
#include "zerodiv/scalar.hpp"

using namespace zerodiv;

TEST_CASE("field specs parse and validate") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("GF:7").characteristic() == 7);
  CHECK(FieldSpec::parse("GF:7").to_string() == "GF:7");
  CHECK_THROWS_AS(FieldSpec::parse("GF:8"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("GF:1"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), Error);  // prime, but too large
}

TEST_CASE("rationals are normalized") {
  const auto Q = FieldSpec::rationals();
  CHECK(Scalar::parse("4/-6", Q).to_string() == "-2/3");
  CHECK(Scalar::parse("-10/5", Q).to_string() == "-2");
  CHECK(Scalar::parse("0/3", Q).is_zero());
  CHECK((Scalar::parse("1/2", Q) + Scalar::parse("1/3", Q)).to_string() == "5/6");
  CHECK((Scalar::parse("2/3", Q) / Scalar::parse("4/9", Q)).to_string() == "3/2");
}

TEST_CASE("scalar parse errors") {
  const auto Q = FieldSpec::rationals();
  CHECK_THROWS_AS(Scalar::parse("", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("1/", Q), Error);
  CHECK_THROWS_AS(Scalar::parse("x", Q), Error);
  try {
    Scalar::parse("3/0", Q);
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
  try {
    Scalar::parse("1/7", FieldSpec::prime(7));
    FAIL("expected ZeroDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("prime field reduction and inverses agree with Fermat") {
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 2147483647ULL}) {
    const auto F = FieldSpec::prime(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 200; ++i) {
      const auto v = static_cast<std::int64_t>(rng() % 1000000007ULL) - 500000000;
      const Scalar x = Scalar::from_int(F, v);
      const auto residue = static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p));
      CHECK(x.to_string() == std::to_string(residue));
      if (residue == 0) {
        CHECK_THROWS_AS(x.inverse(), Error);
        continue;
      }
      CHECK(x.inverse().to_string() == std::to_string(oracle::pow_mod(residue, p - 2, p)));
    }
  }
  const auto F7 = FieldSpec::prime(7);
  CHECK(Scalar::parse("-1", F7).to_string() == "6");
  CHECK(Scalar::parse("3/2", F7).to_string() == "5");
}

TEST_CASE("mixing fields is rejected") {
  const Scalar x = Scalar::one(FieldSpec::rationals());
  const Scalar y = Scalar::one(FieldSpec::prime(5));
  try {
    (void)(x + y);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}
