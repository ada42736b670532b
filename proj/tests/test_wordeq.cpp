#include <doctest.h>

#include <algorithm>
#include <random>

#include "zerodiv/search.hpp"
#include "zerodiv/wordeq.hpp"

using namespace zerodiv;

namespace {

std::shared_ptr<const Group> group(const char* spec) { return std::make_shared<const Group>(Group::parse(spec)); }

CancellationStructure worked() { return {2, 1, 0, {1, 0}, {0, 1}, {1, 0}}; }

}  // namespace

TEST_CASE("equation system of the canonical instance") {
  const auto sys = build_equation_system(worked());
  CHECK(sys.n == 2);
  CHECK(sys.words.size() == 3);
  for (const auto& e : sys.words) CHECK(e.lhs != e.rhs);
  // beta_2 + a1 beta_1, beta_1 + a2 beta_2, a1 beta_2 + a2 beta_1: distinct
  // as expressions in a1, a2 even though they agree at a1 = a2 = 1
  CHECK(sys.raw_coefficient_count == 3);
  CHECK(sys.coefficients.size() == 3);
}

TEST_CASE("propagation is consistent in C3 and fails in Free(2)") {
  const auto sys = build_equation_system(worked());
  const auto C3 = group("cyclic:3");
  const GroupElement g = C3->generator(0);
  const auto ok = propagate(sys, *C3, g, C3->mul(g, g));
  CHECK(ok.consistent);
  CHECK(ok.component_count == 1);

  const auto F = group("free:2");
  const auto bad = propagate(sys, *F, F->generator(0), F->generator(1));
  CHECK_FALSE(bad.consistent);
  CHECK_FALSE(bad.cycle_word.empty());
  // the cycle word is the B relation up to inversion and rotation
  const auto rots = bad.cycle_word.cyclically_reduced().rotations();
  const auto inv = bad.cycle_word.inverse().cyclically_reduced().rotations();
  const bool matches = std::any_of(rots.begin(), rots.end(), [](const FormalWord& w) { return w.to_string() == "X1·X2"; }) ||
                       std::any_of(inv.begin(), inv.end(), [](const FormalWord& w) { return w.to_string() == "X1·X2"; });
  CHECK(matches);
}

TEST_CASE("empty system") {
  EquationSystem sys;
  sys.n = 3;
  const auto F = group("free:2");
  const auto p = propagate(sys, *F, F->generator(0), F->generator(1));
  CHECK(p.consistent);
  CHECK(p.component_count == 3);
}

TEST_CASE("distinctness within components") {
  const auto Z2 = group("abelian:2");
  EquationSystem sys;
  sys.n = 3;
  sys.words.push_back({1, 0, FormalWord::parse("X1·X2"), 0});
  sys.words.push_back({2, 0, FormalWord::parse("X2·X1"), 0});
  const auto p = propagate(sys, *Z2, Z2->generator(0), Z2->generator(1));
  CHECK(p.consistent);
  CHECK_FALSE(check_distinctness(p));
  CHECK(find_collision(p) == std::make_pair(1, 2));

  const auto F = group("free:2");
  const auto q = propagate(sys, *F, F->generator(0), F->generator(1));
  CHECK(check_distinctness(q));
}

TEST_CASE("nullspace over Q and GF(p)") {
  const auto Q = FieldSpec::rationals();
  auto s = [&](int v) { return Scalar::from_int(Q, v); };
  const auto basis = nullspace({{s(1), s(1), s(0)}, {s(0), s(1), s(1)}}, 3, Q);
  REQUIRE(basis.size() == 1);
  // (1, -1, 1) up to scale
  CHECK(basis[0][0] == -basis[0][1]);
  CHECK(basis[0][2] == basis[0][0]);
  const auto F2 = FieldSpec::prime(2);
  const auto b2 = nullspace({{Scalar::one(F2), Scalar::one(F2)}}, 2, F2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0][0] == b2[0][1]);
}

TEST_CASE("coefficient layer") {
  const auto Q = FieldSpec::rationals();
  const auto one = Scalar::one(Q);
  const auto sol = solve_coefficients(build_equation_system(worked()), Q, one, one);
  CHECK(sol.solvable);
  CHECK(sol.dimension == 1);
  REQUIRE(sol.witness.size() == 2);
  CHECK(sol.witness[0] == -sol.witness[1]);

  EquationSystem forced;
  forced.n = 2;
  forced.coefficients.push_back({{{0, CoeffSymbol::One}}, 0});
  CHECK_FALSE(solve_coefficients(forced, Q, one, one).solvable);

  EquationSystem trivial;
  trivial.n = 1;
  trivial.coefficients.push_back({{{0, CoeffSymbol::Alpha1}}, 0});
  CHECK_FALSE(solve_coefficients(trivial, Q, one, one).solvable);
}

TEST_CASE("decide") {
  const auto Q = FieldSpec::rationals();
  const auto C3 = group("cyclic:3");
  const auto a = as_support_triple(parse_algebra(C3, Q, "1 + a + a^2"));
  const auto v = decide(worked(), a, C3, Q);
  REQUIRE(v.kind == Verdict::Kind::Feasible);
  REQUIRE(v.witness);
  CHECK(a_mul(a.to_element(C3), *v.witness).is_zero());
  CHECK(v.witness->support_size() == 2);

  const auto F = group("free:2");
  const auto fa = as_support_triple(parse_algebra(F, Q, "1 + a + b"));
  const auto w = decide(worked(), fa, F, Q);
  CHECK(w.kind == Verdict::Kind::WordInconsistent);
  CHECK_FALSE(w.cycle_word.empty());
  CHECK(w.cycle_word.to_string() == (FormalWord() * w.cycle_word).to_string());
}

TEST_CASE("propagation does not depend on edge order") {
  const auto Q = FieldSpec::rationals();
  for (const char* spec : {"free:2", "abelian:1", "cyclic:3", "heisenberg"}) {
    const auto G = group(spec);
    const GroupElement g1 = G->generator(0);
    const GroupElement g2 = G->generator_count() > 1 ? G->generator(1) : G->mul(g1, g1);
    for (int n = 2; n <= 4; ++n) {
      EnumerationPlan plan{n, Symmetry::FixFIdentity, {}};
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      enumerate_structures(plan, [&](const CancellationStructure& cs) {
        auto sys = build_equation_system(cs);
        const bool base = propagate(sys, *G, g1, g2).consistent;
        for (int k = 0; k < 5; ++k) {
          std::shuffle(sys.words.begin(), sys.words.end(), rng);
          const auto p = propagate(sys, *G, g1, g2);
          CHECK(p.consistent == base);
          if (!p.consistent) CHECK_FALSE(p.cycle_word.empty());
        }
      });
    }
  }
}

TEST_CASE("large prime fields fall back to sampling") {
  const auto F = FieldSpec::prime(2147483647);
  const auto one = Scalar::one(F);
  const auto sol = solve_coefficients(build_equation_system(worked()), F, one, one);
  CHECK(sol.solvable);
  CHECK_FALSE(sol.exhaustive);
  CHECK(sol.trials >= 1);
  const auto C3 = group("cyclic:3");
  const auto a = as_support_triple(parse_algebra(C3, F, "1 + a + a^2"));
  const auto v = decide(worked(), a, C3, F);
  REQUIRE(v.kind == Verdict::Kind::Feasible);
  CHECK(a_mul(a.to_element(C3), *v.witness).is_zero());

  const auto small = solve_coefficients(build_equation_system(worked()), FieldSpec::prime(5), Scalar::one(FieldSpec::prime(5)),
                                        Scalar::one(FieldSpec::prime(5)));
  CHECK(small.exhaustive);
}
