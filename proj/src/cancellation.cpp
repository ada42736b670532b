#include "zerodiv/cancellation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zerodiv/error.hpp"

namespace zerodiv {

namespace {

bool is_bijection(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string one_based(int v) { return std::to_string(v + 1); }

void require_valid(const CancellationStructure& cs) {
  const auto violations = validate_structure(cs);
  if (!violations.empty())
    throw Error(ErrorCode::InvalidStructure,
                "invalid cancellation structure: " + violations.front().clause + " " + violations.front().detail);
}

}  // namespace

std::vector<Violation> validate_structure(const CancellationStructure& cs) {
  std::vector<Violation> out;
  const int n = cs.n, kc = cs.kc, kp = cs.kp;
  if (n < 2) out.push_back({"size", 0, "n must be at least 2"});
  if (kc < 1) out.push_back({"kc", 0, "k_c must be at least 1"});
  if (kp < 0) out.push_back({"kp", 0, "k_p must be non-negative"});
  if (2 * kc + kp != n)
    out.push_back({"counting", 0, "2*k_c + k_p = " + std::to_string(2 * kc + kp) + " != n = " + std::to_string(n)});
  const std::pair<const char*, const Permutation*> perms[] = {{"f", &cs.f}, {"phi", &cs.phi}, {"tau", &cs.tau}};
  bool shapes_ok = n >= 0;
  for (const auto& [name, p] : perms) {
    if (!is_bijection(*p, n)) {
      out.push_back({"bijection", 0, std::string(name) + " is not a permutation of {1..n}"});
      shapes_ok = false;
    }
  }
  if (!out.empty() && (!shapes_ok || 2 * kc + kp != n || kc < 0 || kp < 0)) return out;

  const auto at = [](const Permutation& p, int i) { return p[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < kc + kp; ++i)
    if (at(cs.f, i) == at(cs.phi, i))
      out.push_back({"f!=phi", i + 1, "f(" + one_based(i) + ") = phi(" + one_based(i) + ") = " + one_based(at(cs.f, i))});
  for (int i = 0; i < kp; ++i) {
    const int p = kc + i;
    if (at(cs.tau, p) == at(cs.f, p))
      out.push_back({"tau!=f", p + 1, "tau(" + one_based(p) + ") = f(" + one_based(p) + ")"});
    if (at(cs.tau, p) == at(cs.phi, p))
      out.push_back({"tau!=phi", p + 1, "tau(" + one_based(p) + ") = phi(" + one_based(p) + ")"});
  }
  for (int i = 0; i < kc; ++i) {
    const int p = kc + kp + i;
    if (at(cs.f, p) == at(cs.tau, i))
      out.push_back({"f!=tau", i + 1, "f(" + one_based(p) + ") = tau(" + one_based(i) + ")"});
    if (at(cs.phi, p) == at(cs.tau, p))
      out.push_back({"phi!=tau", p + 1, "phi(" + one_based(p) + ") = tau(" + one_based(p) + ")"});
  }
  return out;
}

bool is_valid(const CancellationStructure& cs) { return validate_structure(cs).empty(); }

const char* multiplier_name(Multiplier m) {
  switch (m) {
    case Multiplier::G1: return "g1";
    case Multiplier::G2: return "g2";
    case Multiplier::G2Inv: return "g2^-1";
    case Multiplier::LambdaInv: return "lambda^-1";
  }
  return "?";
}

FormalWord multiplier_word(Multiplier m) {
  switch (m) {
    case Multiplier::G1: return FormalWord::x1();
    case Multiplier::G2: return FormalWord::x2();
    case Multiplier::G2Inv: return FormalWord::x2(-1);
    case Multiplier::LambdaInv: return FormalWord::x2(-1) * FormalWord::x1();
  }
  return {};
}

// ---------------------------------------------------------------- pair sets

const IndexPair& PairSets::starting_at(Chain c, int first) const {
  const auto& index = c == Chain::B ? b_by_first : m_by_first;
  return pairs(c)[static_cast<std::size_t>(index[static_cast<std::size_t>(first)])];
}

PairSets build_pair_sets(const CancellationStructure& cs) {
  require_valid(cs);
  const int kc = cs.kc, kp = cs.kp;
  const auto& f = cs.f;
  const auto& phi = cs.phi;
  const auto& tau = cs.tau;
  auto u = [](int i) { return static_cast<std::size_t>(i); };

  PairSets ps;
  ps.n = cs.n;
  for (int i = 0; i < kc; ++i) ps.B.push_back({f[u(i)], phi[u(i)], 1, Multiplier::G1});
  for (int i = 0; i < kp; ++i) ps.B.push_back({f[u(kc + i)], tau[u(kc + i)], 2, Multiplier::G2});
  for (int i = 0; i < kc; ++i) ps.B.push_back({f[u(kc + kp + i)], tau[u(i)], 3, Multiplier::G2});

  for (int i = 0; i < kc; ++i) ps.M.push_back({tau[u(i)], f[u(kc + kp + i)], 1, Multiplier::G2Inv});
  for (int i = 0; i < kp; ++i) ps.M.push_back({tau[u(kc + i)], phi[u(kc + i)], 2, Multiplier::LambdaInv});
  for (int i = 0; i < kc; ++i) ps.M.push_back({tau[u(kc + kp + i)], phi[u(kc + kp + i)], 3, Multiplier::LambdaInv});

  ps.b_by_first.assign(u(cs.n), -1);
  ps.m_by_first.assign(u(cs.n), -1);
  for (std::size_t i = 0; i < ps.B.size(); ++i) ps.b_by_first[u(ps.B[i].first)] = static_cast<int>(i);
  for (std::size_t i = 0; i < ps.M.size(); ++i) ps.m_by_first[u(ps.M[i].first)] = static_cast<int>(i);
  return ps;
}

// ------------------------------------------------------------------- chains

std::vector<Multiplier> ChainTrace::cycle_letters() const {
  std::vector<Multiplier> out;
  for (int i = cycle_start; i <= cycle_end; ++i) out.push_back(visited[static_cast<std::size_t>(i)].letter);
  return out;
}

ChainTrace follow_chain(const PairSets& ps, Chain which, int start) {
  ChainTrace trace;
  trace.which = which;
  std::vector<int> position(static_cast<std::size_t>(ps.n), -1);
  int current = start;
  for (;;) {
    if (position[static_cast<std::size_t>(current)] >= 0) {
      trace.cycle_start = position[static_cast<std::size_t>(current)];
      trace.cycle_end = static_cast<int>(trace.visited.size()) - 1;
      return trace;
    }
    position[static_cast<std::size_t>(current)] = static_cast<int>(trace.visited.size());
    const IndexPair& pair = ps.starting_at(which, current);
    trace.visited.push_back(pair);
    current = pair.second;
  }
}

std::vector<ChainTrace> all_cycles(const PairSets& ps, Chain which) {
  // 0 = unvisited, 1 = on current walk, 2 = done
  std::vector<int> state(static_cast<std::size_t>(ps.n), 0);
  std::vector<ChainTrace> out;
  for (int s = 0; s < ps.n; ++s) {
    if (state[static_cast<std::size_t>(s)]) continue;
    std::vector<int> walk;
    int x = s;
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      walk.push_back(x);
      x = ps.starting_at(which, x).second;
    }
    if (state[static_cast<std::size_t>(x)] == 1) {
      auto it = std::find(walk.begin(), walk.end(), x);
      std::vector<int> cycle(it, walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      ChainTrace trace;
      trace.which = which;
      for (int node : cycle) trace.visited.push_back(ps.starting_at(which, node));
      trace.cycle_start = 0;
      trace.cycle_end = static_cast<int>(cycle.size()) - 1;
      out.push_back(std::move(trace));
    }
    for (int w : walk) state[static_cast<std::size_t>(w)] = 2;
  }
  std::sort(out.begin(), out.end(), [](const ChainTrace& l, const ChainTrace& r) {
    return l.visited.front().first < r.visited.front().first;
  });
  return out;
}

FormalWord relation_word(const ChainTrace& trace) {
  FormalWord w;
  for (Multiplier m : trace.cycle_letters()) w = w * multiplier_word(m);
  return w;
}

FormalWord extract_relation_B(const CancellationStructure& cs) {
  const PairSets ps = build_pair_sets(cs);
  return relation_word(follow_chain(ps, Chain::B, cs.f[0]));
}

FormalWord extract_relation_M(const CancellationStructure& cs) {
  const PairSets ps = build_pair_sets(cs);
  return relation_word(follow_chain(ps, Chain::M, cs.tau[0]));
}

FormalWord extract_cycle_relation(const Permutation& h) {
  if (h.empty() || !is_bijection(h, static_cast<int>(h.size())))
    throw Error(ErrorCode::InvalidStructure, "h is not a permutation");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] == static_cast<int>(i))
      throw Error(ErrorCode::FixedPointPresent, "h fixes " + std::to_string(i + 1));
  std::int64_t r = 1;
  for (int x = h[0]; x != 0; x = h[static_cast<std::size_t>(x)]) ++r;
  return FormalWord::x1(r);
}

std::optional<Permutation> translation_permutation(const Group& group, const GroupElement& g1,
                                                   const std::vector<GroupElement>& support) {
  std::map<GroupElement, int> index;
  for (std::size_t i = 0; i < support.size(); ++i) index.emplace(support[i], static_cast<int>(i));
  const GroupElement g1_inv = group.inv(g1);
  Permutation h(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    auto it = index.find(group.mul(g1_inv, support[i]));
    if (it == index.end()) return std::nullopt;
    h[i] = it->second;
  }
  return h;
}

// ----------------------------------------------------------------- recovery

RecoveredInstance recover_structure(const SupportTriple& a, const AlgebraElement& b) {
  const Group& group = b.group();
  const AlgebraElement a_elem = a.to_element(b.group_ptr());
  if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "b must be nonzero");
  if (!a_mul(a_elem, b).is_zero()) throw Error(ErrorCode::NotAnnihilating, "a*b != 0");

  RecoveredInstance out{a, b.support(), {}, {}, std::nullopt, std::nullopt};
  for (const auto& [g, c] : b.terms()) out.coefficients.push_back(c);

  std::map<GroupElement, int> s0, s1, s2;
  for (std::size_t i = 0; i < out.support.size(); ++i) {
    const int idx = static_cast<int>(i);
    s0.emplace(out.support[i], idx);
    s1.emplace(group.mul(a.g1, out.support[i]), idx);
    s2.emplace(group.mul(a.g2, out.support[i]), idx);
  }
  std::set<GroupElement> all;
  for (const auto* m : {&s0, &s1, &s2})
    for (const auto& [g, i] : *m) all.insert(g);

  const auto beta = [&](int i) { return out.coefficients[static_cast<std::size_t>(i)]; };
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InternalInconsistency, "classification failed: " + what);
  };

  struct Hit { int i0 = -1, i1 = -1, i2 = -1; };
  std::vector<Hit> block1, block2, block3, block4;
  for (const auto& x : all) {
    Hit h;
    if (auto it = s0.find(x); it != s0.end()) h.i0 = it->second;
    if (auto it = s1.find(x); it != s1.end()) h.i1 = it->second;
    if (auto it = s2.find(x); it != s2.end()) h.i2 = it->second;
    int block = 0;
    if (h.i0 >= 0 && h.i1 >= 0 && h.i2 < 0) {
      if (!(beta(h.i0) + a.alpha1 * beta(h.i1)).is_zero()) fail("block 1 coefficients");
      block1.push_back(h);
      block = 1;
    } else if (h.i0 >= 0 && h.i1 >= 0 && h.i2 >= 0) {
      const Scalar partial = beta(h.i0) + a.alpha1 * beta(h.i1);
      if (partial.is_zero() || !(partial + a.alpha2 * beta(h.i2)).is_zero()) fail("block 2 coefficients");
      block2.push_back(h);
      block = 2;
    } else if (h.i0 >= 0 && h.i2 >= 0) {
      if (!(beta(h.i0) + a.alpha2 * beta(h.i2)).is_zero()) fail("block 3 coefficients");
      block3.push_back(h);
      block = 3;
    } else if (h.i1 >= 0 && h.i2 >= 0) {
      if (!(a.alpha1 * beta(h.i1) + a.alpha2 * beta(h.i2)).is_zero()) fail("block 4 coefficients");
      block4.push_back(h);
      block = 4;
    } else {
      fail("element " + group.render(x) + " lies in only one support");
    }
    out.blocks.push_back({x, block});
  }

  if (block3.size() != block1.size() || block4.size() != block1.size()) fail("block counts");

  if (block1.empty()) {
    out.cycle_case = translation_permutation(group, a.g1, out.support);
    if (!out.cycle_case) fail("supp(g1 b) != supp(b) without cancellation");
    return out;
  }

  CancellationStructure cs;
  cs.n = out.n();
  cs.kc = static_cast<int>(block1.size());
  cs.kp = static_cast<int>(block2.size());
  Permutation tau_head, tau_mid, tau_tail;
  for (const auto& h : block1) {
    cs.f.push_back(h.i0);
    cs.phi.push_back(h.i1);
  }
  for (const auto& h : block2) {
    cs.f.push_back(h.i0);
    cs.phi.push_back(h.i1);
    tau_mid.push_back(h.i2);
  }
  for (const auto& h : block3) {
    cs.f.push_back(h.i0);
    tau_head.push_back(h.i2);
  }
  for (const auto& h : block4) {
    cs.phi.push_back(h.i1);
    tau_tail.push_back(h.i2);
  }
  cs.tau = tau_head;
  cs.tau.insert(cs.tau.end(), tau_mid.begin(), tau_mid.end());
  cs.tau.insert(cs.tau.end(), tau_tail.begin(), tau_tail.end());
  if (!is_valid(cs)) fail("recovered structure violates validity clauses");
  out.structure = std::move(cs);
  return out;
}

// --------------------------------------------------------------- relations

RelationReport extract_relations(const CancellationStructure& cs, const Group& group,
                                 const SupportTriple& a) {
  const PairSets ps = build_pair_sets(cs);
  RelationReport report;
  report.chain_B = follow_chain(ps, Chain::B, cs.f[0]);
  report.chain_M = follow_chain(ps, Chain::M, cs.tau[0]);
  report.raw_B = report.chain_B.cycle_letters();
  report.raw_M = report.chain_M.cycle_letters();
  report.relation_B = relation_word(report.chain_B);
  report.relation_M = relation_word(report.chain_M);

  const auto holds = [&](const FormalWord& w) { return group.is_identity(eval_word(group, w, a.g1, a.g2)); };
  report.verified = holds(report.relation_B) && holds(report.relation_M);

  for (Chain which : {Chain::B, Chain::M}) {
    const ChainTrace& canonical = which == Chain::B ? report.chain_B : report.chain_M;
    int start_min = ps.n;
    for (int i = canonical.cycle_start; i <= canonical.cycle_end; ++i)
      start_min = std::min(start_min, canonical.visited[static_cast<std::size_t>(i)].first);
    for (auto& trace : all_cycles(ps, which)) {
      RelationEntry entry;
      entry.which = which;
      entry.canonical_start = trace.visited.front().first == start_min;
      entry.word = relation_word(trace);
      entry.verified = holds(entry.word);
      entry.trace = std::move(trace);
      report.verified = report.verified && entry.verified;
      report.cycles.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace zerodiv
