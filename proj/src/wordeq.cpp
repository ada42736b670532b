#include "zerodiv/wordeq.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <unordered_set>

#include "zerodiv/error.hpp"

namespace zerodiv {

namespace {

constexpr std::uint64_t kEnumerationBound = 1u << 16;
constexpr std::size_t kSamplingTrials = 10000;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

CoefficientEquation coeff_eq(std::vector<std::pair<int, CoeffSymbol>> terms, int block) {
  std::sort(terms.begin(), terms.end());
  return {std::move(terms), block};
}

template <class T>
void push_unique(std::vector<T>& v, T x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(std::move(x));
}

Scalar symbol_value(CoeffSymbol s, const FieldSpec& field, const Scalar& a1, const Scalar& a2) {
  switch (s) {
    case CoeffSymbol::One: return Scalar::one(field);
    case CoeffSymbol::Alpha1: return a1;
    case CoeffSymbol::Alpha2: return a2;
  }
  return Scalar::zero(field);
}

bool nowhere_zero(const std::vector<Scalar>& v) {
  return std::none_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<Scalar> combine(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& coeffs,
                            std::size_t cols, const FieldSpec& field) {
  std::vector<Scalar> v(cols, Scalar::zero(field));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t j = 0; j < cols; ++j) v[j] += coeffs[k] * basis[k][j];
  }
  return v;
}

}  // namespace

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::WordInconsistent: return "word";
    case Verdict::Kind::CoeffInconsistent: return "coeff";
    case Verdict::Kind::Feasible: return "feasible";
  }
  return "?";
}

const char* reason_name(Verdict::Reason r) {
  switch (r) {
    case Verdict::Reason::None: return "none";
    case Verdict::Reason::Cycle: return "cycle";
    case Verdict::Reason::Indistinct: return "indistinct";
    case Verdict::Reason::Coincidence: return "coincidence";
    case Verdict::Reason::Unrealizable: return "unrealizable";
  }
  return "?";
}

EquationSystem build_equation_system(const CancellationStructure& cs) {
  if (!is_valid(cs)) throw Error(ErrorCode::InvalidStructure, "invalid cancellation structure");
  const int kc = cs.kc, kp = cs.kp;
  const auto& f = cs.f;
  const auto& phi = cs.phi;
  const auto& tau = cs.tau;
  const FormalWord lambda = FormalWord::x1(-1) * FormalWord::x2();
  using S = CoeffSymbol;

  std::vector<WordEquation> words;
  std::vector<CoefficientEquation> coeffs;
  for (int i = 0; i < kc; ++i) {
    words.push_back({f[u(i)], phi[u(i)], FormalWord::x1(), 1});
    coeffs.push_back(coeff_eq({{f[u(i)], S::One}, {phi[u(i)], S::Alpha1}}, 1));
  }
  for (int i = kc; i < kc + kp; ++i) {
    words.push_back({f[u(i)], phi[u(i)], FormalWord::x1(), 2});
    words.push_back({f[u(i)], tau[u(i)], FormalWord::x2(), 2});
    coeffs.push_back(coeff_eq({{f[u(i)], S::One}, {phi[u(i)], S::Alpha1}, {tau[u(i)], S::Alpha2}}, 2));
  }
  for (int i = 0; i < kc; ++i) {
    words.push_back({f[u(kc + kp + i)], tau[u(i)], FormalWord::x2(), 3});
    coeffs.push_back(coeff_eq({{f[u(kc + kp + i)], S::One}, {tau[u(i)], S::Alpha2}}, 3));
  }
  for (int i = 0; i < kc; ++i) {
    const int p = kc + kp + i;
    words.push_back({phi[u(p)], tau[u(p)], lambda, 4});
    coeffs.push_back(coeff_eq({{phi[u(p)], S::Alpha1}, {tau[u(p)], S::Alpha2}}, 4));
  }

  EquationSystem sys;
  sys.n = cs.n;
  sys.raw_word_count = words.size();
  sys.raw_coefficient_count = coeffs.size();
  for (auto& w : words) {
    const bool dup = std::any_of(sys.words.begin(), sys.words.end(), [&](const WordEquation& x) {
      return x.lhs == w.lhs && x.rhs == w.rhs && x.word == w.word;
    });
    if (!dup) sys.words.push_back(std::move(w));
  }
  for (auto& c : coeffs) push_unique(sys.coefficients, std::move(c));
  return sys;
}

Propagation propagate(const EquationSystem& sys, const Group& group, const GroupElement& g1,
                      const GroupElement& g2) {
  const std::size_t n = u(sys.n);
  Propagation out;
  out.component.assign(n, -1);
  out.relative_word.assign(n, FormalWord());
  out.relative.assign(n, group.identity());

  std::vector<GroupElement> edge_value;
  std::vector<std::vector<int>> adjacent(n);
  for (std::size_t e = 0; e < sys.words.size(); ++e) {
    const auto& eq = sys.words[e];
    if (eq.lhs < 0 || u(eq.lhs) >= n || eq.rhs < 0 || u(eq.rhs) >= n)
      throw Error(ErrorCode::InvalidStructure, "equation refers to an unknown outside [1, n]");
    edge_value.push_back(eval_word(group, eq.word, g1, g2));
    adjacent[u(eq.lhs)].push_back(static_cast<int>(e));
    adjacent[u(eq.rhs)].push_back(static_cast<int>(e));
  }

  std::vector<bool> tree(sys.words.size(), false);
  for (std::size_t s = 0; s < n; ++s) {
    if (out.component[s] >= 0) continue;
    const int id = out.component_count++;
    out.component[s] = id;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int e : adjacent[u(x)]) {
        const auto& eq = sys.words[u(e)];
        const int other = eq.lhs == x ? eq.rhs : eq.lhs;
        if (out.component[u(other)] >= 0) continue;
        out.component[u(other)] = id;
        tree[u(e)] = true;
        if (other == eq.rhs) {
          // g'_rhs = w^-1 g'_lhs
          out.relative_word[u(other)] = eq.word.inverse() * out.relative_word[u(x)];
          out.relative[u(other)] = group.mul(group.inv(edge_value[u(e)]), out.relative[u(x)]);
        } else {
          out.relative_word[u(other)] = eq.word * out.relative_word[u(x)];
          out.relative[u(other)] = group.mul(edge_value[u(e)], out.relative[u(x)]);
        }
        queue.push_back(other);
      }
    }
  }

  for (std::size_t e = 0; e < sys.words.size(); ++e) {
    if (tree[e]) continue;
    const auto& eq = sys.words[e];
    if (out.relative[u(eq.lhs)] == group.mul(edge_value[e], out.relative[u(eq.rhs)])) continue;
    out.consistent = false;
    out.failing_equation = static_cast<int>(e);
    out.cycle_word = out.relative_word[u(eq.lhs)].inverse() * eq.word * out.relative_word[u(eq.rhs)];
    break;
  }
  return out;
}

std::optional<std::pair<int, int>> find_collision(const Propagation& prop) {
  std::map<std::pair<int, GroupElement>, int> seen;
  for (std::size_t i = 0; i < prop.relative.size(); ++i) {
    auto [it, inserted] = seen.try_emplace({prop.component[i], prop.relative[i]}, static_cast<int>(i));
    if (!inserted) return std::make_pair(it->second, static_cast<int>(i));
  }
  return std::nullopt;
}

bool check_distinctness(const Propagation& prop) { return !find_collision(prop).has_value(); }

// --------------------------------------------------------- linear algebra

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols,
                                           const FieldSpec& field) {
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Scalar inv_p = rows[rank][col].inverse();
    for (auto& v : rows[rank]) v *= inv_p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] - factor * rows[rank][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[u(c)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(field));
    v[free_col] = Scalar::one(field);
    for (std::size_t r = 0; r < rank; ++r) v[u(pivot_col_of_row[r])] = -rows[r][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

CoefficientSolution solve_coefficients(const EquationSystem& sys, const FieldSpec& field,
                                       const Scalar& alpha1, const Scalar& alpha2) {
  const std::size_t cols = u(sys.n);
  std::vector<std::vector<Scalar>> rows;
  for (const auto& eq : sys.coefficients) {
    std::vector<Scalar> row(cols, Scalar::zero(field));
    for (const auto& [idx, sym] : eq.terms) row[u(idx)] += symbol_value(sym, field, alpha1, alpha2);
    rows.push_back(std::move(row));
  }
  const auto basis = nullspace(std::move(rows), cols, field);

  CoefficientSolution out;
  out.dimension = static_cast<int>(basis.size());
  if (basis.empty()) return out;
  for (std::size_t j = 0; j < cols; ++j) {
    const bool alive = std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return !b[j].is_zero(); });
    if (!alive) return out;
  }

  const std::size_t d = basis.size();
  if (field.is_rational()) {
    // Each coordinate of sum_k t^k b_k is a nonzero polynomial of degree < d in t,
    // so some t <= cols * d + 1 avoids every root.
    for (std::int64_t t = 1;; ++t) {
      std::vector<Scalar> coeffs;
      Scalar power = Scalar::one(field);
      for (std::size_t k = 0; k < d; ++k) {
        coeffs.push_back(power);
        power *= Scalar::from_int(field, t);
      }
      auto v = combine(basis, coeffs, cols, field);
      if (nowhere_zero(v)) {
        out.solvable = true;
        out.witness = std::move(v);
        return out;
      }
    }
  }

  const std::uint64_t p = field.characteristic();
  std::uint64_t space = 1;
  bool small = true;
  for (std::size_t k = 0; k < d && small; ++k) {
    space *= p;
    small = space <= kEnumerationBound;
  }
  if (small) {
    std::vector<std::int64_t> digits(d, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < d && ++digits[k] == static_cast<std::int64_t>(p)) digits[k++] = 0;
      if (k == d) break;
      std::vector<Scalar> coeffs;
      for (auto x : digits) coeffs.push_back(Scalar::from_int(field, x));
      auto v = combine(basis, coeffs, cols, field);
      if (nowhere_zero(v)) {
        out.solvable = true;
        out.witness = std::move(v);
        return out;
      }
    }
    return out;
  }

  out.exhaustive = false;
  std::mt19937_64 rng(0x5eed0000ULL ^ (cols << 8) ^ d);
  std::uniform_int_distribution<std::int64_t> digit(0, static_cast<std::int64_t>(p) - 1);
  for (out.trials = 1; out.trials <= kSamplingTrials; ++out.trials) {
    std::vector<Scalar> coeffs;
    for (std::size_t k = 0; k < d; ++k) coeffs.push_back(Scalar::from_int(field, digit(rng)));
    auto v = combine(basis, coeffs, cols, field);
    if (nowhere_zero(v)) {
      out.solvable = true;
      out.witness = std::move(v);
      return out;
    }
  }
  out.trials = kSamplingTrials;
  return out;
}

// ------------------------------------------------------------------ decide

namespace {

// Expected coincidences between supp(b), g1 supp(b) and g2 supp(b), indexed
// by unknown; -1 where the structure says the element is absent.
struct ExpectedMatches {
  std::vector<int> s1_in_s0, s1_in_s2, s2_in_s0;
};

ExpectedMatches expected_matches(const CancellationStructure& cs) {
  const int n = cs.n, kc = cs.kc, kp = cs.kp;
  std::vector<int> phi_pos(u(n)), tau_pos(u(n));
  for (int p = 0; p < n; ++p) {
    phi_pos[u(cs.phi[u(p)])] = p;
    tau_pos[u(cs.tau[u(p)])] = p;
  }
  ExpectedMatches m{std::vector<int>(u(n), -1), std::vector<int>(u(n), -1), std::vector<int>(u(n), -1)};
  for (int j = 0; j < n; ++j) {
    const int p = phi_pos[u(j)];
    if (p < kc + kp) m.s1_in_s0[u(j)] = cs.f[u(p)];
    if (p >= kc) m.s1_in_s2[u(j)] = cs.tau[u(p)];
    const int q = tau_pos[u(j)];
    if (q < kc) m.s2_in_s0[u(j)] = cs.f[u(kc + kp + q)];
    else if (q < kc + kp) m.s2_in_s0[u(j)] = cs.f[u(q)];
  }
  return m;
}

bool coincidences_match(const CancellationStructure& cs, const Propagation& prop, const Group& group,
                        const GroupElement& g1, const GroupElement& g2) {
  const ExpectedMatches expect = expected_matches(cs);
  for (int c = 0; c < prop.component_count; ++c) {
    std::map<GroupElement, int> s0, s2;
    std::vector<int> members;
    for (int i = 0; i < cs.n; ++i) {
      if (prop.component[u(i)] != c) continue;
      members.push_back(i);
      s0.emplace(prop.relative[u(i)], i);
      s2.emplace(group.mul(g2, prop.relative[u(i)]), i);
    }
    const auto lookup = [](const std::map<GroupElement, int>& m, const GroupElement& x) {
      auto it = m.find(x);
      return it == m.end() ? -1 : it->second;
    };
    for (int j : members) {
      const GroupElement y1 = group.mul(g1, prop.relative[u(j)]);
      if (lookup(s0, y1) != expect.s1_in_s0[u(j)]) return false;
      if (lookup(s2, y1) != expect.s1_in_s2[u(j)]) return false;
      if (lookup(s0, group.mul(g2, prop.relative[u(j)])) != expect.s2_in_s0[u(j)]) return false;
    }
  }
  return true;
}

std::vector<GroupElement> root_candidates(const Group& group, std::size_t wanted) {
  if (group.spec().finite()) return group.ball(0);
  std::vector<GroupElement> out;
  for (int r = 1; out.size() < wanted; ++r) out = group.ball(r);
  return out;
}

}  // namespace

Verdict decide(const CancellationStructure& cs, const SupportTriple& a,
               const std::shared_ptr<const Group>& group_ptr, const FieldSpec& field) {
  const Group& group = *group_ptr;
  Verdict verdict;
  const EquationSystem sys = build_equation_system(cs);
  const Propagation prop = propagate(sys, group, a.g1, a.g2);
  if (!prop.consistent) {
    verdict.reason = Verdict::Reason::Cycle;
    verdict.cycle_word = prop.cycle_word;
    return verdict;
  }
  if (auto clash = find_collision(prop)) {
    verdict.reason = Verdict::Reason::Indistinct;
    verdict.collision = clash;
    return verdict;
  }
  const CoefficientSolution coeffs = solve_coefficients(sys, field, a.alpha1, a.alpha2);
  verdict.trials = coeffs.exhaustive ? 0 : coeffs.trials;
  if (!coeffs.solvable) {
    verdict.kind = Verdict::Kind::CoeffInconsistent;
    return verdict;
  }
  if (!coincidences_match(cs, prop, group, a.g1, a.g2)) {
    verdict.reason = Verdict::Reason::Coincidence;
    return verdict;
  }

  // Place component roots so that no element of one component's three
  // supports meets another component's.
  const std::size_t n = u(cs.n);
  const std::size_t attempts = 10 * n * n;
  std::vector<GroupElement> roots(u(prop.component_count), group.identity());
  std::unordered_set<GroupElement, GroupElementHash> occupied;
  std::vector<GroupElement> candidates;
  for (int c = 0; c < prop.component_count; ++c) {
    std::vector<GroupElement> members;
    for (std::size_t i = 0; i < n; ++i)
      if (prop.component[i] == c) members.push_back(prop.relative[i]);
    const auto footprint = [&](const GroupElement& root) {
      std::vector<GroupElement> out;
      for (const auto& v : members) {
        const GroupElement x = group.mul(v, root);
        out.push_back(x);
        out.push_back(group.mul(a.g1, x));
        out.push_back(group.mul(a.g2, x));
      }
      return out;
    };
    bool placed = false;
    if (c == 0) {
      placed = true;
    } else {
      if (candidates.empty()) candidates = root_candidates(group, attempts + 1);
      for (std::size_t k = 0; k < candidates.size() && k < attempts; ++k) {
        const auto fp = footprint(candidates[k]);
        if (std::none_of(fp.begin(), fp.end(), [&](const GroupElement& x) { return occupied.count(x); })) {
          roots[u(c)] = candidates[k];
          placed = true;
          break;
        }
      }
    }
    if (!placed) {
      verdict.reason = Verdict::Reason::Unrealizable;
      return verdict;
    }
    for (auto& x : footprint(roots[u(c)])) occupied.insert(std::move(x));
  }

  AlgebraElement b(group_ptr, field);
  for (std::size_t i = 0; i < n; ++i)
    b.add_term(group.mul(prop.relative[i], roots[u(prop.component[i])]), coeffs.witness[i]);
  if (b.support_size() != n || !a_mul(a.to_element(group_ptr), b).is_zero())
    throw Error(ErrorCode::WitnessVerificationFailed, "constructed witness does not annihilate a");
  verdict.kind = Verdict::Kind::Feasible;
  verdict.witness = std::move(b);
  return verdict;
}

}  // namespace zerodiv
