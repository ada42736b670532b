#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "zerodiv/algebra.hpp"
#include "zerodiv/cancellation.hpp"
#include "zerodiv/wordeq.hpp"

namespace zerodiv {

enum class Symmetry { FixFIdentity, Full };

struct EnumerationPlan {
  int n = 2;
  Symmetry symmetry = Symmetry::FixFIdentity;
  std::vector<std::function<bool(const CancellationStructure&)>> filters;
};

/// A disjoint subtree of the enumeration: one (k_c, f, phi(1)) prefix.
struct WorkUnit {
  int kc = 1;
  Permutation f;
  int phi_first = 0;
};

/// Units in canonical order: k_c descending, then f, then phi(1).
std::vector<WorkUnit> work_units(const EnumerationPlan& plan);

using StructureSink = std::function<void(const CancellationStructure&)>;

void enumerate_unit(const EnumerationPlan& plan, const WorkUnit& unit, const StructureSink& sink);
/// Streams every valid structure in canonical order.
void enumerate_structures(const EnumerationPlan& plan, const StructureSink& sink);
std::vector<CancellationStructure> collect_structures(const EnumerationPlan& plan);

/// Size of the raw (f, phi, tau) space the plan ranges over.
std::uint64_t candidate_count(const EnumerationPlan& plan);

struct StructureVerdict {
  CancellationStructure structure;
  Verdict verdict;
};

struct ScanOptions {
  int n_min = 2;
  int n_max = 5;
  unsigned workers = 1;
  Symmetry symmetry = Symmetry::FixFIdentity;
  bool keep_verdicts = false;
};

struct ScanReport {
  int n = 0;
  std::uint64_t structures_total = 0;
  std::uint64_t structures_valid = 0;
  std::uint64_t word_killed = 0;
  std::uint64_t coeff_killed = 0;
  std::uint64_t feasible_count = 0;
  // word_killed broken down by reason
  std::uint64_t cycle_killed = 0;
  std::uint64_t indistinct_killed = 0;
  std::uint64_t coincidence_killed = 0;
  std::uint64_t unrealizable_killed = 0;
  std::uint64_t sampled = 0;  // verdicts relying on GF(p) sampling
  double wall_time = 0.0;
  std::vector<StructureVerdict> verdicts;  // only with keep_verdicts
  std::vector<StructureVerdict> feasible;  // always kept
};

/// Runs decide() on every enumerated structure for n_min <= n <= n_max.
/// Reports are independent of the worker count.
std::vector<ScanReport> scan_small_supports(const SupportTriple& a, const std::shared_ptr<const Group>& group,
                                            const FieldSpec& field, const ScanOptions& options);

/// Looks for b with supp(b) a subset of ball(radius) containing e,
/// |supp(b)| <= n_max and a*b = 0. Returns the first hit in canonical order.
std::optional<AlgebraElement> search_annihilator_direct(const AlgebraElement& a, int n_max, int radius);

/// Some element of order 3, if the group has one.
std::optional<GroupElement> order_three_element(const Group& group);

/// a = 1 + h + h^2 and b = (1 - h) c for an element h of order 3. Throws
/// NoOrderThreeElement or DegenerateC.
std::pair<AlgebraElement, AlgebraElement> make_torsion_instance(const std::shared_ptr<const Group>& group,
                                                                const FieldSpec& field,
                                                                const AlgebraElement& c);

}  // namespace zerodiv
