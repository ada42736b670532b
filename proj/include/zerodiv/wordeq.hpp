#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zerodiv/algebra.hpp"
#include "zerodiv/cancellation.hpp"

namespace zerodiv {

/// g'_lhs = word(g1, g2) * g'_rhs
struct WordEquation {
  int lhs = 0;
  int rhs = 0;
  FormalWord word;
  int block = 0;

  friend bool operator==(const WordEquation&, const WordEquation&) = default;
};

enum class CoeffSymbol { One, Alpha1, Alpha2 };

/// sum of symbol * beta_index = 0
struct CoefficientEquation {
  std::vector<std::pair<int, CoeffSymbol>> terms;  // sorted by index
  int block = 0;

  friend bool operator==(const CoefficientEquation& l, const CoefficientEquation& r) { return l.terms == r.terms; }
};

struct EquationSystem {
  int n = 0;
  std::vector<WordEquation> words;                // deduplicated
  std::vector<CoefficientEquation> coefficients;  // deduplicated
  std::size_t raw_word_count = 0;
  std::size_t raw_coefficient_count = 0;
};

/// Throws InvalidStructure for invalid input.
EquationSystem build_equation_system(const CancellationStructure& cs);

/// Unknowns expressed relative to the root of their connected component:
/// g'_i = relative[i] * g'_{root}.
struct Propagation {
  bool consistent = true;
  FormalWord cycle_word;          // nonempty, reduced; only when inconsistent
  int failing_equation = -1;
  std::vector<int> component;     // component id per unknown, numbered by smallest member
  std::vector<FormalWord> relative_word;
  std::vector<GroupElement> relative;
  int component_count = 0;
};

Propagation propagate(const EquationSystem& sys, const Group& group, const GroupElement& g1,
                      const GroupElement& g2);

/// First pair (i, j), i < j, in one component with equal relative elements.
std::optional<std::pair<int, int>> find_collision(const Propagation& prop);
bool check_distinctness(const Propagation& prop);

struct CoefficientSolution {
  bool solvable = false;
  std::vector<Scalar> witness;     // nowhere-zero, when solvable
  int dimension = 0;               // of the solution space
  bool exhaustive = true;          // false when GF(p) sampling was used
  std::size_t trials = 0;
};

/// Basis of {x : rows * x = 0}; rows are dense over `cols` unknowns.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols,
                                           const FieldSpec& field);

/// Searches for a nowhere-zero solution of the coefficient layer.
CoefficientSolution solve_coefficients(const EquationSystem& sys, const FieldSpec& field,
                                       const Scalar& alpha1, const Scalar& alpha2);

struct Verdict {
  enum class Kind { WordInconsistent, CoeffInconsistent, Feasible };
  /// Why a word-level verdict was reached.
  enum class Reason { None, Cycle, Indistinct, Coincidence, Unrealizable };

  Kind kind = Kind::WordInconsistent;
  Reason reason = Reason::None;
  FormalWord cycle_word;
  std::optional<std::pair<int, int>> collision;
  std::optional<AlgebraElement> witness;
  std::size_t trials = 0;  // GF(p) sampling trials, 0 when exhaustive
};

const char* verdict_name(Verdict::Kind k);
const char* reason_name(Verdict::Reason r);

/// propagate -> distinctness -> coefficients -> realization. A Feasible
/// verdict always carries a witness b with a*b = 0 checked exactly; a failed
/// check throws WitnessVerificationFailed.
Verdict decide(const CancellationStructure& cs, const SupportTriple& a,
               const std::shared_ptr<const Group>& group, const FieldSpec& field);

}  // namespace zerodiv
