#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zerodiv/error.hpp"
#include "zerodiv/group.hpp"

using namespace zerodiv;

TEST_CASE("group specs") {
  CHECK(GroupSpec::parse("free:2").to_string() == "free:2");
  CHECK(GroupSpec::parse("product(cyclic:3,abelian:1)").generator_count() == 2);
  CHECK(GroupSpec::parse("heisenberg").torsion_free());
  CHECK_FALSE(GroupSpec::parse("cyclic:3").torsion_free());
  CHECK_FALSE(GroupSpec::parse("product(cyclic:3,abelian:1)").torsion_free());
  CHECK(GroupSpec::parse("sym:3").finite());
  CHECK_THROWS_AS(GroupSpec::parse("cyclic:1"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("sym:13"), Error);
  CHECK_THROWS_AS(GroupSpec::parse("lattice:2"), Error);
}

TEST_CASE("free group words reduce") {
  const Group F = Group::parse("free:2");
  CHECK(F.render(F.parse_element("a*b*b^-1*a^-1")) == "1");
  CHECK(F.render(F.parse_element("a b b a^-1 a")) == "a*b^2");
  CHECK(F.render(F.parse_element("a^3*a^-5")) == "a^-2");
  CHECK(F.parse_element("a*b") != F.parse_element("b*a"));
  CHECK(F.order(F.parse_element("a*b")) == 0);
}

TEST_CASE("unknown generator reports its column") {
  const Group F = Group::parse("free:2");
  try {
    F.parse_element("a*b*c");
    FAIL("expected UnknownGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownGenerator);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("free abelian and cyclic groups commute") {
  const Group Z2 = Group::parse("abelian:2");
  CHECK(Z2.parse_element("a*b") == Z2.parse_element("b*a"));
  CHECK(Z2.render(Z2.parse_element("b^2*a^-1*b")) == "a^-1*b^3");
  const Group C6 = Group::parse("cyclic:6");
  CHECK(C6.render(C6.parse_element("a^7")) == "a");
  CHECK(C6.order(C6.parse_element("a^2")) == 3);
  CHECK(C6.ball(1).size() == 6);
}

TEST_CASE("Heisenberg multiplication matches unitriangular matrices") {
  const Group H = Group::parse("heisenberg");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gen(0, 2), sign(0, 1);
  for (int t = 0; t < 300; ++t) {
    GroupElement g = H.identity();
    oracle::Mat m = oracle::heis(0, 0, 0);
    for (int k = 0; k < 8; ++k) {
      const int i = gen(rng);
      const int e = sign(rng) ? 1 : -1;
      g = H.mul(g, H.pow(H.generator(static_cast<std::size_t>(i)), e));
      const oracle::Mat step = i == 0 ? oracle::heis(e, 0, 0) : i == 1 ? oracle::heis(0, e, 0) : oracle::heis(0, 0, e);
      m = oracle::mat_mul(m, step);
    }
    CHECK(g.code == std::vector<std::int64_t>{m[0][1], m[1][2], m[0][2]});
    CHECK(H.parse_element(H.render(g)) == g);
  }
  CHECK(H.parse_element("a*b*a^-1*b^-1") == H.parse_element("c"));
}

TEST_CASE("symmetric group composes right to left") {
  const Group S3 = Group::parse("sym:3");
  const GroupElement a = S3.generator(0), b = S3.generator(1);
  CHECK(S3.render(a) == "[2,1,3]");
  CHECK(S3.render(b) == "[2,3,1]");
  // (a b)(i) = a(b(i)): b sends 1->2, then a sends 2->1
  CHECK(S3.render(S3.mul(a, b)) == "[1,3,2]");
  CHECK(S3.order(b) == 3);
  CHECK(S3.ball(0).size() == 6);
  CHECK(S3.parse_element("[3,1,2]") == S3.mul(b, b));
  CHECK_THROWS_AS(S3.parse_element("[1,1,2]"), Error);
}

TEST_CASE("products keep global generator names") {
  const Group P = Group::parse("product(cyclic:3,abelian:1)");
  const GroupElement x = P.parse_element("a^2*b^-1");
  CHECK(P.render(x) == "(a^2,b^-1)");
  CHECK(P.parse_element("(a^2,b^-1)") == x);
  CHECK(P.parse_element("a*b") == P.parse_element("b*a"));
  CHECK(P.order(P.parse_element("a")) == 3);
}

TEST_CASE("formal words") {
  const FormalWord w = FormalWord::parse("X1·X2·X2^-1·X1");
  CHECK(w.to_string() == "X1^2");
  CHECK(FormalWord::parse("X2^-2·X1").inverse().to_string() == "X1^-1·X2^2");
  CHECK((FormalWord::parse("X1") * FormalWord::parse("X1^-1")).empty());
  CHECK(FormalWord::parse("X1·X2·X1^-1").cyclically_reduced().to_string() == "X2");
  const Group C3 = Group::parse("cyclic:3");
  const GroupElement g = C3.generator(0);
  CHECK(C3.is_identity(eval_word(C3, FormalWord::parse("X1·X2"), g, C3.mul(g, g))));
}
