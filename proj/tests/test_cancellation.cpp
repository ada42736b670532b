#include <doctest.h>

#include "zerodiv/cancellation.hpp"
#include "zerodiv/error.hpp"

using namespace zerodiv;

namespace {

std::shared_ptr<const Group> group(const char* spec) { return std::make_shared<const Group>(Group::parse(spec)); }

CancellationStructure worked() { return {2, 1, 0, {1, 0}, {0, 1}, {1, 0}}; }

std::string pairs_text(const std::vector<IndexPair>& ps) {
  std::string s;
  for (const auto& p : ps)
    s += "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")@" + multiplier_name(p.letter) + " ";
  return s;
}

}  // namespace

TEST_CASE("recover the canonical instance") {
  const auto C3 = group("cyclic:3");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(C3, Q, "1 + a + a^2"));
  const auto inst = recover_structure(a, parse_algebra(C3, Q, "1 - a"));
  REQUIRE(inst.structure);
  CHECK(*inst.structure == worked());
  CHECK(inst.coefficients[0].to_string() == "1");
  CHECK(inst.coefficients[1].to_string() == "-1");
  CHECK_FALSE(inst.cycle_case);
}

TEST_CASE("pair sets and relations of the canonical instance") {
  const auto ps = build_pair_sets(worked());
  CHECK(pairs_text(ps.B) == "(2,1)@g1 (1,2)@g2 ");
  CHECK(pairs_text(ps.M) == "(2,1)@g2^-1 (1,2)@lambda^-1 ");
  CHECK(extract_relation_B(worked()).to_string() == "X1·X2");
  CHECK(extract_relation_M(worked()).to_string() == "X2^-2·X1");

  const auto C3 = group("cyclic:3");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(C3, Q, "1 + a + a^2"));
  const auto report = extract_relations(worked(), *C3, a);
  CHECK(report.verified);
  CHECK(report.cycles.size() == 2);
  for (const auto& c : report.cycles) CHECK(c.verified);
}

TEST_CASE("validation names the failing clause") {
  CHECK(validate_structure(worked()).empty());
  auto bad = worked();
  bad.phi = {1, 0};  // f(1) = phi(1)
  const auto v = validate_structure(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().clause == "f!=phi");
  CHECK(v.front().index == 1);

  auto counts = worked();
  counts.kp = 1;
  CHECK(validate_structure(counts).front().clause == "counting");

  auto notperm = worked();
  notperm.tau = {0, 0};
  CHECK_FALSE(is_valid(notperm));
  CHECK_THROWS_AS(build_pair_sets(notperm), Error);
}

TEST_CASE("errors on bad input") {
  const auto C3 = group("cyclic:3");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(C3, Q, "1 + a + a^2"));
  try {
    recover_structure(a, parse_algebra(C3, Q, "0"));
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroElement);
  }
  try {
    recover_structure(a, parse_algebra(C3, Q, "1 + a"));
    FAIL("expected NotAnnihilating");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnnihilating);
  }
}

TEST_CASE("no cancelling pair: translation cycle") {
  const auto C4 = group("cyclic:4");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(C4, Q, "1 + a - 2*a^2"));
  const auto inst = recover_structure(a, parse_algebra(C4, Q, "1 + a + a^2 + a^3"));
  CHECK_FALSE(inst.structure);
  REQUIRE(inst.cycle_case);
  const FormalWord r = extract_cycle_relation(*inst.cycle_case);
  CHECK(r.to_string() == "X1^4");
  CHECK(C4->is_identity(eval_word(*C4, r, a.g1, a.g2)));
  CHECK_THROWS_AS(extract_cycle_relation({1, 0, 2}), Error);
}

TEST_CASE("translation permutation") {
  const Group Z = Group::parse("free:1");
  const std::vector<GroupElement> s{Z.parse_element("1"), Z.parse_element("a")};
  CHECK_FALSE(translation_permutation(Z, Z.generator(0), s));
  const Group C2 = Group::parse("cyclic:2");
  const auto h = translation_permutation(C2, C2.generator(0), {C2.parse_element("1"), C2.parse_element("a")});
  REQUIRE(h);
  CHECK(*h == Permutation{1, 0});
}
