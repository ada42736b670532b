#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerodiv/algebra.hpp"
#include "zerodiv/group.hpp"

namespace zerodiv {

/// One-line permutation of {0..n-1}; rendered 1-based.
using Permutation = std::vector<int>;

/// The combinatorial skeleton of an annihilation a*b = 0 with
/// a = 1 + alpha1*g1 + alpha2*g2 and supp(b) = {g'_1..g'_n}.
///
/// Positions 0..kc-1 of (f, phi) describe cancelling pairs g'_f = g1 g'_phi,
/// positions kc..kc+kp-1 of (f, phi, tau) describe merged triples
/// g'_f = g1 g'_phi = g2 g'_tau, positions kc+kp.. of f pair with the first kc
/// entries of tau (g'_f = g2 g'_tau), and positions kc+kp.. of (phi, tau) give
/// g'_phi = lambda g'_tau with lambda = g1^-1 g2.
struct CancellationStructure {
  int n = 0;
  int kc = 0;
  int kp = 0;
  Permutation f, phi, tau;

  friend bool operator==(const CancellationStructure&, const CancellationStructure&) = default;
  friend auto operator<=>(const CancellationStructure&, const CancellationStructure&) = default;
};

struct Violation {
  std::string clause;
  int index = 0;  // 1-based position, 0 when the clause is global
  std::string detail;
};

/// Empty result means valid. Never throws.
std::vector<Violation> validate_structure(const CancellationStructure& cs);
bool is_valid(const CancellationStructure& cs);

/// Multiplier t or s attached to a pair: g'_first = letter * g'_second.
enum class Multiplier { G1, G2, G2Inv, LambdaInv };

const char* multiplier_name(Multiplier m);
FormalWord multiplier_word(Multiplier m);

struct IndexPair {
  int first = 0;   // 0-based unknown index
  int second = 0;
  int block = 0;   // 1, 2 or 3
  Multiplier letter = Multiplier::G1;
};

enum class Chain { B, M };

struct PairSets {
  int n = 0;
  std::vector<IndexPair> B;  // B1, B2, B3 in order
  std::vector<IndexPair> M;  // M1, M2, M3 in order
  std::vector<int> b_by_first;  // index into B of the pair with a given first coordinate
  std::vector<int> m_by_first;

  const std::vector<IndexPair>& pairs(Chain c) const { return c == Chain::B ? B : M; }
  const IndexPair& starting_at(Chain c, int first) const;
};

PairSets build_pair_sets(const CancellationStructure& cs);

struct ChainTrace {
  Chain which = Chain::B;
  std::vector<IndexPair> visited;
  int cycle_start = 0;  // r (or u): position in `visited`
  int cycle_end = 0;    // s (or v)

  std::vector<Multiplier> cycle_letters() const;
};

/// Walks successor pairs from the pair whose first coordinate is `start`
/// (0-based) until a pair repeats.
ChainTrace follow_chain(const PairSets& ps, Chain which, int start);

/// All cycles of the successor map, each rotated to start at its smallest
/// first coordinate, ordered by that coordinate.
std::vector<ChainTrace> all_cycles(const PairSets& ps, Chain which);

/// Freely reduced product of the cycle's multipliers in X1, X2.
FormalWord relation_word(const ChainTrace& trace);

/// Chain from f(1) through B; positive word in X1, X2.
FormalWord extract_relation_B(const CancellationStructure& cs);
/// Chain from tau(1) through M; letters X2^-1 and X2^-1 X1.
FormalWord extract_relation_M(const CancellationStructure& cs);
/// X1^r with r the length of h's cycle through index 0. Throws
/// FixedPointPresent when h has a fixed point.
FormalWord extract_cycle_relation(const Permutation& h);

/// h with support[i] = g1 * support[h(i)], if g1 * S = S.
std::optional<Permutation> translation_permutation(const Group& group, const GroupElement& g1,
                                                   const std::vector<GroupElement>& support);

/// Which of the four coincidence classes an element of
/// supp(b) u supp(g1 b) u supp(g2 b) falls into.
struct BlockEntry {
  GroupElement element;
  int block = 0;  // 1..4
};

struct RecoveredInstance {
  SupportTriple a;
  std::vector<GroupElement> support;   // g'_1..g'_n in canonical order
  std::vector<Scalar> coefficients;    // beta_1..beta_n
  std::vector<BlockEntry> blocks;      // canonical element order
  std::optional<CancellationStructure> structure;
  std::optional<Permutation> cycle_case;  // set iff no cancelling pair exists

  int n() const { return static_cast<int>(support.size()); }
};

/// Requires a*b = 0 (NotAnnihilating otherwise) and b != 0 (ZeroElement).
RecoveredInstance recover_structure(const SupportTriple& a, const AlgebraElement& b);

/// Every relation the structure yields, evaluated against a.
struct RelationEntry {
  Chain which = Chain::B;
  bool canonical_start = false;  // chain reached from f(1) / tau(1)
  ChainTrace trace;
  FormalWord word;
  bool verified = false;
};

struct RelationReport {
  FormalWord relation_B;
  FormalWord relation_M;
  std::vector<Multiplier> raw_B;
  std::vector<Multiplier> raw_M;
  ChainTrace chain_B;
  ChainTrace chain_M;
  std::vector<RelationEntry> cycles;  // all cycles of both successor maps
  bool verified = false;              // every word evaluates to e at (g1, g2)
};

RelationReport extract_relations(const CancellationStructure& cs, const Group& group,
                                 const SupportTriple& a);

}  // namespace zerodiv
