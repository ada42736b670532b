#include "zerodiv/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

#include "zerodiv/error.hpp"

namespace zerodiv {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

Permutation identity_perm(int n) {
  Permutation p(u(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Backtracking over phi then tau with the validity clauses checked as soon as
// the positions they mention are fixed.
class Backtracker {
 public:
  Backtracker(const EnumerationPlan& plan, const WorkUnit& unit, const StructureSink& sink)
      : plan_(plan), sink_(sink) {
    cs_.n = plan.n;
    cs_.kc = unit.kc;
    cs_.kp = plan.n - 2 * unit.kc;
    cs_.f = unit.f;
    cs_.phi.assign(u(plan.n), -1);
    cs_.tau.assign(u(plan.n), -1);
    used_phi_.assign(u(plan.n), false);
    used_tau_.assign(u(plan.n), false);
    phi_first_ = unit.phi_first;
  }

  void run() {
    if (!phi_allowed(0, phi_first_)) return;
    place_phi(0, phi_first_);
  }

 private:
  bool phi_allowed(int pos, int v) const {
    if (used_phi_[u(v)]) return false;
    if (pos < cs_.kc + cs_.kp && cs_.f[u(pos)] == v) return false;
    return true;
  }

  bool tau_allowed(int pos, int v) const {
    if (used_tau_[u(v)]) return false;
    const int kc = cs_.kc, kp = cs_.kp;
    if (pos < kc) return cs_.f[u(kc + kp + pos)] != v;
    if (pos < kc + kp) return cs_.f[u(pos)] != v && cs_.phi[u(pos)] != v;
    return cs_.phi[u(pos)] != v;
  }

  void place_phi(int pos, int v) {
    cs_.phi[u(pos)] = v;
    used_phi_[u(v)] = true;
    extend_phi(pos + 1);
    used_phi_[u(v)] = false;
  }

  void extend_phi(int pos) {
    if (pos == cs_.n) {
      extend_tau(0);
      return;
    }
    for (int v = 0; v < cs_.n; ++v)
      if (phi_allowed(pos, v)) place_phi(pos, v);
  }

  void extend_tau(int pos) {
    if (pos == cs_.n) {
      for (const auto& keep : plan_.filters)
        if (!keep(cs_)) return;
      sink_(cs_);
      return;
    }
    for (int v = 0; v < cs_.n; ++v) {
      if (!tau_allowed(pos, v)) continue;
      cs_.tau[u(pos)] = v;
      used_tau_[u(v)] = true;
      extend_tau(pos + 1);
      used_tau_[u(v)] = false;
    }
  }

  const EnumerationPlan& plan_;
  const StructureSink& sink_;
  CancellationStructure cs_;
  std::vector<bool> used_phi_, used_tau_;
  int phi_first_ = 0;
};

template <class Fn>
void run_parallel(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void tally(ScanReport& r, const CancellationStructure& cs, Verdict v, bool keep) {
  ++r.structures_valid;
  if (v.trials) ++r.sampled;
  switch (v.kind) {
    case Verdict::Kind::WordInconsistent:
      ++r.word_killed;
      switch (v.reason) {
        case Verdict::Reason::Cycle: ++r.cycle_killed; break;
        case Verdict::Reason::Indistinct: ++r.indistinct_killed; break;
        case Verdict::Reason::Coincidence: ++r.coincidence_killed; break;
        case Verdict::Reason::Unrealizable: ++r.unrealizable_killed; break;
        case Verdict::Reason::None: break;
      }
      break;
    case Verdict::Kind::CoeffInconsistent: ++r.coeff_killed; break;
    case Verdict::Kind::Feasible:
      ++r.feasible_count;
      r.feasible.push_back({cs, v});
      break;
  }
  if (keep) r.verdicts.push_back({cs, std::move(v)});
}

void merge_into(ScanReport& total, ScanReport&& part) {
  total.structures_valid += part.structures_valid;
  total.word_killed += part.word_killed;
  total.coeff_killed += part.coeff_killed;
  total.feasible_count += part.feasible_count;
  total.cycle_killed += part.cycle_killed;
  total.indistinct_killed += part.indistinct_killed;
  total.coincidence_killed += part.coincidence_killed;
  total.unrealizable_killed += part.unrealizable_killed;
  total.sampled += part.sampled;
  for (auto& v : part.verdicts) total.verdicts.push_back(std::move(v));
  for (auto& v : part.feasible) total.feasible.push_back(std::move(v));
}

}  // namespace

std::vector<WorkUnit> work_units(const EnumerationPlan& plan) {
  std::vector<WorkUnit> units;
  if (plan.n < 2) return units;
  for (int kc = plan.n / 2; kc >= 1; --kc) {
    Permutation f = identity_perm(plan.n);
    do {
      for (int first = 0; first < plan.n; ++first) units.push_back({kc, f, first});
    } while (plan.symmetry == Symmetry::Full && std::next_permutation(f.begin(), f.end()));
  }
  return units;
}

void enumerate_unit(const EnumerationPlan& plan, const WorkUnit& unit, const StructureSink& sink) {
  Backtracker(plan, unit, sink).run();
}

void enumerate_structures(const EnumerationPlan& plan, const StructureSink& sink) {
  for (const auto& unit : work_units(plan)) enumerate_unit(plan, unit, sink);
}

std::vector<CancellationStructure> collect_structures(const EnumerationPlan& plan) {
  std::vector<CancellationStructure> out;
  enumerate_structures(plan, [&](const CancellationStructure& cs) { out.push_back(cs); });
  return out;
}

std::uint64_t candidate_count(const EnumerationPlan& plan) {
  if (plan.n < 2) return 0;
  const std::uint64_t splits = static_cast<std::uint64_t>(plan.n / 2);
  const std::uint64_t nf = factorial(plan.n);
  return splits * nf * nf * (plan.symmetry == Symmetry::Full ? nf : 1);
}

std::vector<ScanReport> scan_small_supports(const SupportTriple& a, const std::shared_ptr<const Group>& group,
                                            const FieldSpec& field, const ScanOptions& options) {
  std::vector<ScanReport> reports;
  for (int n = std::max(2, options.n_min); n <= options.n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    EnumerationPlan plan{n, options.symmetry, {}};
    const auto units = work_units(plan);
    std::vector<ScanReport> parts(units.size());
    run_parallel(units.size(), options.workers, [&](std::size_t i) {
      enumerate_unit(plan, units[i], [&](const CancellationStructure& cs) {
        tally(parts[i], cs, decide(cs, a, group, field), options.keep_verdicts);
      });
    });
    ScanReport report;
    report.n = n;
    report.structures_total = candidate_count(plan);
    for (auto& p : parts) merge_into(report, std::move(p));
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(report));
  }
  return reports;
}

std::optional<AlgebraElement> search_annihilator_direct(const AlgebraElement& a, int n_max, int radius) {
  if (a.is_zero() || a.support_size() == 1) return std::nullopt;
  const Group& group = a.group();
  const FieldSpec& field = a.field();
  const GroupElement e = group.identity();
  std::vector<GroupElement> others;
  for (auto& g : group.ball(radius))
    if (g != e) others.push_back(std::move(g));

  const std::size_t pool = others.size();
  for (int size = 1; size <= n_max; ++size) {
    const std::size_t extra = u(size - 1);
    if (extra > pool) break;
    std::vector<std::size_t> pick(extra);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<GroupElement> support{e};
      for (auto i : pick) support.push_back(others[i]);

      // coefficient of x in a*b: sum over (g, s) with g s = x of a_g beta_s
      std::map<GroupElement, std::vector<Scalar>> rows;
      for (const auto& [g, c] : a.terms()) {
        for (std::size_t j = 0; j < support.size(); ++j) {
          auto [it, fresh] = rows.try_emplace(group.mul(g, support[j]));
          if (fresh) it->second.assign(support.size(), Scalar::zero(field));
          it->second[j] += c;
        }
      }
      std::vector<std::vector<Scalar>> matrix;
      for (auto& [x, row] : rows) matrix.push_back(std::move(row));
      const auto basis = nullspace(std::move(matrix), support.size(), field);
      if (!basis.empty()) {
        // small integer combinations of the basis, in lexicographic order
        std::vector<std::int64_t> digits(basis.size(), 0);
        const std::int64_t limit = field.is_rational() ? static_cast<std::int64_t>(support.size() * basis.size() + 2)
                                                       : static_cast<std::int64_t>(field.characteristic());
        for (std::size_t tries = 0; tries < 65536; ++tries) {
          std::size_t k = 0;
          while (k < digits.size() && ++digits[k] == limit) digits[k++] = 0;
          if (k == digits.size()) break;
          std::vector<Scalar> v(support.size(), Scalar::zero(field));
          for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += Scalar::from_int(field, digits[b]) * basis[b][j];
          if (std::any_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); })) continue;
          AlgebraElement b(a.group_ptr(), field);
          for (std::size_t j = 0; j < v.size(); ++j) b.add_term(support[j], v[j]);
          if (a_mul(a, b).is_zero()) return b;
          throw Error(ErrorCode::WitnessVerificationFailed, "direct search produced a non-annihilator");
        }
      }

      // next combination
      std::size_t k = extra;
      while (k > 0 && pick[k - 1] == pool - extra + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<GroupElement> order_three_element(const Group& group) {
  const auto& spec = group.spec();
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      if (spec.param % 3 == 0) return group.pow(group.generator(0), spec.param / 3);
      return std::nullopt;
    case GroupSpec::Kind::Symmetric: {
      if (spec.param < 3) return std::nullopt;
      GroupElement h = group.identity();
      h.code[0] = 1;
      h.code[1] = 2;
      h.code[2] = 0;
      return h;
    }
    case GroupSpec::Kind::Product: {
      std::size_t offset = 0;
      for (const auto& factor_spec : spec.factors) {
        const Group factor(factor_spec);
        if (auto h = order_three_element(factor)) {
          // rebuild as a product element through the text form, which keeps
          // the encoding private to Group
          std::string text = "(";
          for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            if (i) text += ",";
            if (&spec.factors[i] == &factor_spec) {
              std::string local = factor.render(*h);
              if (factor_spec.kind != GroupSpec::Kind::Symmetric) {
                for (auto& ch : local)
                  if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch + offset);
              }
              text += local;
            } else {
              text += "1";
            }
          }
          return group.parse_element(text + ")");
        }
        offset += factor_spec.generator_count();
      }
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

std::pair<AlgebraElement, AlgebraElement> make_torsion_instance(const std::shared_ptr<const Group>& group,
                                                                const FieldSpec& field,
                                                                const AlgebraElement& c) {
  const auto h = order_three_element(*group);
  if (!h) throw Error(ErrorCode::NoOrderThreeElement, group->spec().to_string() + " has no element of order 3");
  AlgebraElement a = AlgebraElement::one(group, field);
  a.add_term(*h, Scalar::one(field));
  a.add_term(group->mul(*h, *h), Scalar::one(field));
  AlgebraElement one_minus_h = AlgebraElement::one(group, field);
  one_minus_h.add_term(*h, -Scalar::one(field));
  AlgebraElement b = a_mul(one_minus_h, c);
  if (b.is_zero()) throw Error(ErrorCode::DegenerateC, "(1 - h) c = 0; retry with another c");
  return {std::move(a), std::move(b)};
}

}  // namespace zerodiv
