// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Pass --n6 to extend the free-group scan to n = 6.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>

#include "oracle.hpp"
#include "zerodiv/error.hpp"
#include "zerodiv/report.hpp"
#include "zerodiv/search.hpp"
#include "zerodiv/selftest.hpp"

using namespace zerodiv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::shared_ptr<const Group> group(const char* spec) { return std::make_shared<const Group>(Group::parse(spec)); }

bool is_e(const Group& g, const FormalWord& w, const SupportTriple& a) {
  return g.is_identity(eval_word(g, w, a.g1, a.g2));
}

// 1. Canonical instance.
Outcome canonical() {
  const auto C3 = group("cyclic:3");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(C3, Q, "1 + a + a^2"));
  const auto inst = recover_structure(a, parse_algebra(C3, Q, "1 - a"));
  if (!inst.structure) return {false, "no cancellation structure"};
  const auto& cs = *inst.structure;
  const FormalWord rb = extract_relation_B(cs), rm = extract_relation_M(cs);
  const bool ok = cs.kc == 1 && cs.kp == 0 && cs.n == 2 && rb.to_string() == "X1·X2" &&
                  rm.to_string() == "X2^-2·X1" && is_e(*C3, rb, a) && is_e(*C3, rm, a);
  return {ok, "n=" + std::to_string(cs.n) + " k_c=" + std::to_string(cs.kc) + " k_p=" + std::to_string(cs.kp) +
                  " r1=" + rb.to_string() + " r2=" + rm.to_string()};
}

// 2. Randomized soundness over torsion instances.
Outcome soundness() {
  const auto Q = FieldSpec::rationals();
  const char* specs[] = {"cyclic:3", "sym:3", "product(cyclic:3,abelian:1)"};
  std::mt19937_64 rng(20261018);
  int done = 0, failures = 0, max_n = 0, cycle_cases = 0;
  std::size_t words = 0;
  std::string first;
  while (done < 200) {
    const auto G = group(specs[done % 3]);
    const auto c = random_element(G, Q, rng, 1 + rng() % 6, 3);
    std::pair<AlgebraElement, AlgebraElement> ab{c, c};
    try {
      ab = make_torsion_instance(G, Q, c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateC) continue;
      throw;
    }
    ++done;
    const auto a = as_support_triple(ab.first);
    const auto inst = recover_structure(a, ab.second);
    max_n = std::max(max_n, inst.n());
    bool ok;
    if (inst.structure) {
      const auto rep = extract_relations(*inst.structure, *G, a);
      words += rep.cycles.size();
      ok = is_valid(*inst.structure) && rep.verified &&
           std::all_of(rep.cycles.begin(), rep.cycles.end(), [](const RelationEntry& r) { return r.verified; });
    } else {
      ++cycle_cases;
      ++words;
      ok = is_e(*G, extract_cycle_relation(*inst.cycle_case), a);
    }
    if (!ok && failures++ == 0) first = " first failure b=" + ab.second.to_string();
  }
  return {failures == 0, std::to_string(done) + " instances, max n=" + std::to_string(max_n) + ", " +
                             std::to_string(words) + " relations checked, " + std::to_string(cycle_cases) +
                             " k_c=0 cases, " + std::to_string(failures) + " failures" + first};
}

// 3. k_c = 0 branch.
Outcome cycle_branch() {
  const auto C4 = group("cyclic:4");
  const auto Q = FieldSpec::rationals();
  const auto b = parse_algebra(C4, Q, "1 + a + a^2 + a^3");
  const GroupElement g = C4->generator(0);
  const bool same_support = left_translate(g, b).support() == b.support();
  const auto a = as_support_triple(parse_algebra(C4, Q, "1 + a - 2*a^2"));
  const auto inst = recover_structure(a, b);
  bool four_cycle = false, relation_ok = false;
  std::string r;
  if (inst.cycle_case) {
    const auto& h = *inst.cycle_case;
    int len = 0, i = 0;
    do {
      i = h[static_cast<std::size_t>(i)];
      ++len;
    } while (i != 0);
    four_cycle = len == 4 && h.size() == 4;
    const FormalWord w = extract_cycle_relation(h);
    r = w.to_string();
    relation_ok = r == "X1^4" && is_e(*C4, w, a);
  }

  // Free(1): no finite support is stable under a nontrivial translation.
  const Group Z = Group::parse("free:1");
  const auto ball = Z.ball(4);
  std::size_t checked = 0, stable = 0;
  for (const auto& g1 : ball) {
    if (Z.is_identity(g1)) continue;
    const std::size_t m = ball.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) > 5) continue;
      std::vector<GroupElement> s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(ball[i]);
      ++checked;
      if (translation_permutation(Z, g1, s)) ++stable;
    }
  }
  return {same_support && four_cycle && relation_ok && stable == 0,
          "C4: h is a 4-cycle=" + std::string(four_cycle ? "yes" : "no") + " r=" + r + "; Free(1): " +
              std::to_string(checked) + " (g1, S) pairs, " + std::to_string(stable) + " translation-stable"};
}

// 4. Free(2) scan.
Outcome free_scan(int n_max) {
  const auto F = group("free:2");
  std::string detail;
  bool ok = true;
  for (const char* f : {"Q", "GF:2"}) {
    const FieldSpec field = FieldSpec::parse(f);
    const auto a = as_support_triple(parse_algebra(F, field, "1 + a + b"));
    ScanOptions opts;
    opts.n_max = n_max;
    opts.keep_verdicts = true;
    for (const auto& r : scan_small_supports(a, F, field, opts)) {
      std::uint64_t explained = 0;
      for (const auto& sv : r.verdicts) {
        const auto& v = sv.verdict;
        const bool cycle = v.kind == Verdict::Kind::WordInconsistent && v.reason == Verdict::Reason::Cycle &&
                           !v.cycle_word.empty() && FormalWord::parse(v.cycle_word.to_string()) == v.cycle_word;
        if (cycle || v.kind == Verdict::Kind::CoeffInconsistent) ++explained;
      }
      ok = ok && r.feasible_count == 0 && explained == r.structures_valid;
      detail += std::string(f) + " n=" + std::to_string(r.n) + ": " + std::to_string(r.structures_valid) + " valid, " +
                std::to_string(explained) + " killed by cycle word or coefficients; ";
    }
  }
  return {ok, detail};
}

// 5. Z = FreeAbelian(1).
Outcome integers() {
  const auto Z = group("abelian:1");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(Z, Q, "1 + a + a^2"));
  ScanOptions opts;
  opts.n_max = 4;
  std::uint64_t feasible = 0, reached = 0, valid = 0;
  for (const auto& r : scan_small_supports(a, Z, Q, opts)) {
    feasible += r.feasible_count;
    reached += r.coeff_killed + r.feasible_count;
    valid += r.structures_valid;
  }
  return {feasible == 0 && reached >= 1, std::to_string(valid) + " valid, feasible=" + std::to_string(feasible) +
                                             ", reached coefficient layer=" + std::to_string(reached)};
}

// 6. Enumerator against brute force.
Outcome enumerator() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 4; ++n) {
    std::vector<oracle::Triple> fixed, full;
    enumerate_structures({n, Symmetry::FixFIdentity, {}},
                         [&](const CancellationStructure& cs) { fixed.push_back({cs.kc, cs.f, cs.phi, cs.tau}); });
    enumerate_structures({n, Symmetry::Full, {}},
                         [&](const CancellationStructure& cs) { full.push_back({cs.kc, cs.f, cs.phi, cs.tau}); });
    std::sort(fixed.begin(), fixed.end());
    std::sort(full.begin(), full.end());
    std::size_t nf = 1;
    for (int i = 2; i <= n; ++i) nf *= static_cast<std::size_t>(i);
    const bool same = fixed == oracle::brute_force(n, true) && full == oracle::brute_force(n, false) &&
                      full.size() == nf * fixed.size();
    ok = ok && same;
    detail += "n=" + std::to_string(n) + ": " + std::to_string(fixed.size()) + " fixed-f, " +
              std::to_string(full.size()) + " full; ";
  }
  return {ok, detail};
}

// 7. Axiom suites.
Outcome axioms() {
  std::size_t suites = 0, failed = 0, cases = 0;
  std::string first;
  for (const auto& r : run_selftest(1, 1, 1000)) {
    ++suites;
    cases += r.cases;
    if (!r.passed() && failed++ == 0) first = " first: " + r.name + " " + r.first_failure;
  }
  return {failed == 0, std::to_string(suites) + " suites, " + std::to_string(cases) + " cases, " +
                           std::to_string(failed) + " failed" + first};
}

// 8. Worker-count independence.
Outcome determinism() {
  const auto F = group("free:2");
  const auto Q = FieldSpec::rationals();
  const auto a = as_support_triple(parse_algebra(F, Q, "1 + a + b"));
  auto run = [&](unsigned workers) {
    ScanOptions opts;
    opts.n_min = 4;
    opts.n_max = 4;
    opts.workers = workers;
    opts.keep_verdicts = true;
    std::string out;
    for (const auto& r : scan_small_supports(a, F, Q, opts)) out += to_json(r, true).dump() + "\n";
    return out;
  };
  const std::string one = run(1), eight = run(8);
  return {one == eight, std::to_string(one.size()) + " bytes, identical=" + (one == eight ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const bool n6 = argc > 1 && std::strcmp(argv[1], "--n6") == 0;
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "canonical instance", 1.0, canonical},
      {2, "randomized soundness", 60.0, soundness},
      {3, "k_c = 0 branch", 30.0, cycle_branch},
      {4, "Free(2) scan", 600.0, [n6] { return free_scan(n6 ? 6 : 5); }},
      {5, "Z sanity", 60.0, integers},
      {6, "enumerator oracle", 60.0, enumerator},
      {7, "arithmetic axioms", 30.0, axioms},
      {8, "determinism", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit;
    if (!pass) ++failed;
    std::printf("CRITERION %d %s: %s (%.3f s, limit %.0f s) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.limit, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
