#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "zerodiv/algebra.hpp"
#include "zerodiv/error.hpp"

using namespace zerodiv;

namespace {

std::shared_ptr<const Group> group(const char* spec) { return std::make_shared<const Group>(Group::parse(spec)); }

// Dense cyclic convolution over Q.
std::vector<mpq_class> dense_cyclic(const AlgebraElement& x, std::int64_t m) {
  std::vector<mpq_class> out(static_cast<std::size_t>(m));
  for (const auto& [g, c] : x.terms()) out[static_cast<std::size_t>(g.code[0])] = c.rational();
  return out;
}

}  // namespace

TEST_CASE("parse and render") {
  const auto F = group("free:2");
  const auto Q = FieldSpec::rationals();
  CHECK(parse_algebra(F, Q, "1 - a").to_string() == "1 - a");
  CHECK(parse_algebra(F, Q, "2*a*b^-1 + 0*b").to_string() == "2*a*b^-1");
  CHECK(parse_algebra(F, Q, "a - a").to_string() == "0");
  CHECK(parse_algebra(F, Q, "1/2*a + a").to_string() == "3/2*a");
  CHECK(parse_algebra(F, Q, "a b - 2*b^-1").to_string() == "a*b - 2*b^-1");
  try {
    parse_algebra(F, Q, "1 + + a");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("canonical zero divisor in Q[C3]") {
  const auto C3 = group("cyclic:3");
  const auto Q = FieldSpec::rationals();
  const auto a = parse_algebra(C3, Q, "1 + a + a^2");
  const auto b = parse_algebra(C3, Q, "1 - a");
  CHECK(a_mul(a, b).is_zero());
  CHECK(a_mul(b, a).is_zero());
  CHECK(a_mul(a, a).to_string() == "3 + 3*a + 3*a^2");
}

TEST_CASE("convolution matches a dense cyclic oracle") {
  const std::int64_t m = 7;
  const auto C = group("cyclic:7");
  const auto Q = FieldSpec::rationals();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto x = random_element(C, Q, rng, 5, 1);
    const auto y = random_element(C, Q, rng, 5, 1);
    const auto dx = dense_cyclic(x, m), dy = dense_cyclic(y, m);
    std::vector<mpq_class> expect(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; j < m; ++j) expect[static_cast<std::size_t>((i + j) % m)] += dx[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(j)];
    CHECK(dense_cyclic(a_mul(x, y), m) == expect);
  }
}

TEST_CASE("translations") {
  const auto F = group("free:2");
  const auto Q = FieldSpec::rationals();
  const auto x = parse_algebra(F, Q, "1 + 2*b");
  const GroupElement a = F->generator(0);
  CHECK(left_translate(a, x).to_string() == "a + 2*a*b");
  CHECK(right_translate(x, a).to_string() == "a + 2*b*a");
}

TEST_CASE("support triples are normalized") {
  const auto F = group("free:2");
  const auto Q = FieldSpec::rationals();
  const SupportTriple t = as_support_triple(parse_algebra(F, Q, "2 + 4*b - 6*a"));
  CHECK(t.alpha1.to_string() == "-3");
  CHECK(F->render(t.g1) == "a");
  CHECK(t.alpha2.to_string() == "2");
  CHECK(F->render(t.g2) == "b");
  try {
    as_support_triple(parse_algebra(F, Q, "1 + a"));
    FAIL("expected SupportSize");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SupportSize);
  }
  try {
    as_support_triple(parse_algebra(F, Q, "a + b + a*b"));
    FAIL("expected IdentityNotInSupport");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdentityNotInSupport);
  }
}

TEST_CASE("mismatched operands") {
  const auto Q = FieldSpec::rationals();
  const auto x = parse_algebra(group("free:2"), Q, "a");
  const auto y = parse_algebra(group("free:2"), FieldSpec::prime(3), "a");
  CHECK_THROWS_AS(a_mul(x, y), Error);
  const auto z = parse_algebra(group("cyclic:3"), Q, "a");
  CHECK_THROWS_AS(a_add(x, z), Error);
}
