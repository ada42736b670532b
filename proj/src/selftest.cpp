#include "zerodiv/selftest.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "zerodiv/cancellation.hpp"
#include "zerodiv/error.hpp"
#include "zerodiv/search.hpp"

namespace zerodiv {

namespace {

using Case = std::function<std::string(std::mt19937_64&)>;  // empty string on success

struct Suite {
  std::string name;
  Case run;
};

Scalar random_scalar(const FieldSpec& field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    std::uniform_int_distribution<std::int64_t> num(-20, 20), den(1, 9);
    return Scalar::from_rational(field, num(rng), den(rng));
  }
  std::uniform_int_distribution<std::uint64_t> any(0, field.characteristic() - 1);
  return Scalar::from_int(field, static_cast<std::int64_t>(any(rng)));
}

std::string field_case(const FieldSpec& field, std::mt19937_64& rng) {
  const Scalar x = random_scalar(field, rng), y = random_scalar(field, rng), z = random_scalar(field, rng);
  const Scalar zero = Scalar::zero(field), one = Scalar::one(field);
  auto show = [&] { return x.to_string() + ", " + y.to_string() + ", " + z.to_string(); };
  if ((x + y) + z != x + (y + z)) return "additive associativity at " + show();
  if ((x * y) * z != x * (y * z)) return "multiplicative associativity at " + show();
  if (x + y != y + x || x * y != y * x) return "commutativity at " + show();
  if (x * (y + z) != x * y + x * z) return "distributivity at " + show();
  if (x + zero != x || x * one != x) return "identities at " + show();
  if (x + (-x) != zero || x - y != x + (-y)) return "additive inverse at " + show();
  if (!x.is_zero() && x * x.inverse() != one) return "multiplicative inverse at " + show();
  if (!y.is_zero() && (x / y) * y != x) return "division at " + show();
  return {};
}

std::string group_case(const Group& g, std::mt19937_64& rng) {
  const GroupElement x = g.random(rng, 3), y = g.random(rng, 3), z = g.random(rng, 3);
  auto show = [&] { return g.render(x) + ", " + g.render(y) + ", " + g.render(z); };
  if (!g.conforms(x) || !g.conforms(g.mul(x, y))) return "normal form at " + show();
  if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) return "associativity at " + show();
  if (g.mul(x, g.identity()) != x || g.mul(g.identity(), x) != x) return "identity at " + show();
  if (!g.is_identity(g.mul(x, g.inv(x))) || !g.is_identity(g.mul(g.inv(x), x))) return "inverse at " + show();
  if (g.inv(g.mul(x, y)) != g.mul(g.inv(y), g.inv(x))) return "inverse of product at " + show();
  if (g.parse_element(g.render(x)) != x) return "render round trip at " + show();
  return {};
}

std::string ring_case(const std::shared_ptr<const Group>& g, const FieldSpec& field, std::mt19937_64& rng) {
  const AlgebraElement x = random_element(g, field, rng, 3, 2);
  const AlgebraElement y = random_element(g, field, rng, 3, 2);
  const AlgebraElement z = random_element(g, field, rng, 3, 2);
  const AlgebraElement one = AlgebraElement::one(g, field);
  auto show = [&] { return x.to_string() + " ; " + y.to_string() + " ; " + z.to_string(); };
  if (a_mul(a_mul(x, y), z) != a_mul(x, a_mul(y, z))) return "associativity at " + show();
  if (a_mul(x, a_add(y, z)) != a_add(a_mul(x, y), a_mul(x, z))) return "left distributivity at " + show();
  if (a_mul(a_add(x, y), z) != a_add(a_mul(x, z), a_mul(y, z))) return "right distributivity at " + show();
  if (a_mul(x, one) != x || a_mul(one, x) != x) return "identity at " + show();
  if (a_add(x, y) != a_add(y, x) || !a_sub(x, x).is_zero()) return "additive group at " + show();
  if (parse_algebra(g, field, x.to_string()) != x) return "render round trip at " + show();
  return {};
}

std::string torsion_case(const std::shared_ptr<const Group>& g, const FieldSpec& field, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const AlgebraElement c = random_element(g, field, rng, 4, 2);
    std::pair<AlgebraElement, AlgebraElement> ab{c, c};
    try {
      ab = make_torsion_instance(g, field, c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateC) continue;
      throw;
    }
    const auto& [a, b] = ab;
    if (!a_mul(a, b).is_zero()) return "a*b != 0 for c = " + c.to_string();
    const SupportTriple t = as_support_triple(a);
    const RecoveredInstance inst = recover_structure(t, b);
    if (inst.structure) {
      if (!is_valid(*inst.structure)) return "invalid structure for b = " + b.to_string();
      if (!extract_relations(*inst.structure, *g, t).verified) return "relation not e for b = " + b.to_string();
    } else if (!g->is_identity(eval_word(*g, extract_cycle_relation(*inst.cycle_case), t.g1, t.g2))) {
      return "cycle relation not e for b = " + b.to_string();
    }
    return {};
  }
  return {};
}

std::vector<Suite> build_suites() {
  std::vector<Suite> suites;
  for (const auto& f : selftest_fields()) {
    const FieldSpec field = FieldSpec::parse(f);
    suites.push_back({"field " + f, [field](std::mt19937_64& rng) { return field_case(field, rng); }});
  }
  for (const auto& gs : selftest_groups()) {
    auto g = std::make_shared<const Group>(Group::parse(gs));
    suites.push_back({"group " + gs, [g](std::mt19937_64& rng) { return group_case(*g, rng); }});
  }
  for (const auto& gs : selftest_groups()) {
    auto g = std::make_shared<const Group>(Group::parse(gs));
    for (const auto& f : selftest_fields()) {
      const FieldSpec field = FieldSpec::parse(f);
      suites.push_back({"ring " + gs + " " + f, [g, field](std::mt19937_64& rng) { return ring_case(g, field, rng); }});
    }
  }
  for (const char* gs : {"cyclic:3", "sym:3", "product(cyclic:3,abelian:1)"}) {
    auto g = std::make_shared<const Group>(Group::parse(gs));
    for (const char* f : {"Q", "GF:5"}) {
      const FieldSpec field = FieldSpec::parse(f);
      suites.push_back({std::string("torsion ") + gs + " " + f,
                        [g, field](std::mt19937_64& rng) { return torsion_case(g, field, rng); }});
    }
  }
  return suites;
}

SuiteResult run_suite(const Suite& suite, std::uint64_t seed, std::size_t index, std::size_t cases) {
  SuiteResult out{suite.name, cases, 0, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::string failure;
    try {
      failure = suite.run(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty() && out.failures++ == 0) out.first_failure = "case " + std::to_string(i) + ": " + failure;
  }
  return out;
}

}  // namespace

std::vector<std::string> selftest_groups() {
  return {"free:2", "abelian:2", "cyclic:6", "heisenberg", "sym:4", "product(cyclic:3,abelian:1)"};
}

std::vector<std::string> selftest_fields() { return {"Q", "GF:2", "GF:7", "GF:2147483647"}; }

std::vector<SuiteResult> run_selftest(std::uint64_t seed, unsigned workers, std::size_t cases) {
  const auto suites = build_suites();
  std::vector<SuiteResult> results(suites.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) results[i] = run_suite(suites[i], seed, i, cases);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace zerodiv
