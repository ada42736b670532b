#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace zerodiv {

/// Description of a computable group family. Products are flat.
struct GroupSpec {
  enum class Kind { Free, FreeAbelian, Cyclic, Heisenberg, Symmetric, Product };

  Kind kind = Kind::Free;
  std::int64_t param = 1;             // rank, dimension, modulus or degree
  std::vector<GroupSpec> factors;     // Product only

  static GroupSpec free(std::int64_t rank);
  static GroupSpec free_abelian(std::int64_t dim);
  static GroupSpec cyclic(std::int64_t modulus);
  static GroupSpec heisenberg();
  static GroupSpec symmetric(std::int64_t degree);
  static GroupSpec product(std::vector<GroupSpec> factors);

  /// Grammar: "free:2", "abelian:3", "cyclic:6", "heisenberg", "sym:3",
  /// "product(free:1,cyclic:3)".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  bool torsion_free() const;
  bool finite() const;
  /// Number of named generators contributed (a, b, c, ... in order).
  std::size_t generator_count() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Element in canonical normal form. The encoding is family-specific and only
/// interpreted by `Group`; equality is structural and ordering lexicographic.
///
///   Free        (gen, exp) pairs, freely reduced, exp != 0, adjacent gens distinct
///   FreeAbelian integer vector
///   Cyclic      single residue in [0, m)
///   Heisenberg  (x, y, z) with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')
///   Symmetric   0-based image array, product is composition (x*y)(i) = x(y(i))
///   Product     per factor: length prefix followed by the factor's encoding
struct GroupElement {
  std::vector<std::int64_t> code;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Operations for one concrete group. Cheap to copy.
class Group {
 public:
  explicit Group(GroupSpec spec);
  static Group parse(std::string_view text) { return Group(GroupSpec::parse(text)); }

  const GroupSpec& spec() const noexcept { return spec_; }
  bool torsion_free() const { return spec_.torsion_free(); }

  GroupElement identity() const;
  bool is_identity(const GroupElement& x) const { return x == identity(); }
  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, std::int64_t k) const;

  std::size_t generator_count() const { return spec_.generator_count(); }
  /// Generator by global index (0 = 'a').
  GroupElement generator(std::size_t index) const;

  /// Throws GroupMismatch if `x` is not a well-formed element of this group.
  void check(const GroupElement& x) const;
  bool conforms(const GroupElement& x) const;

  /// Generator words ("a b^-1 b a", "a*b^2", "1"), permutation literals
  /// ("[2,3,1]") and product tuples ("(a^2,b)").
  GroupElement parse_element(std::string_view text) const;
  std::string render(const GroupElement& x) const;

  /// Finite families: whole group. Free: reduced words of length <= radius.
  /// FreeAbelian / Heisenberg: coordinates bounded by radius in absolute value.
  /// Sorted in canonical order.
  std::vector<GroupElement> ball(int radius) const;
  /// Order of the element, or 0 if it has infinite order.
  std::int64_t order(const GroupElement& x) const;

  GroupElement random(std::mt19937_64& rng, int size) const;

  /// Parses one factor starting at `pos`; used by the algebra parser.
  /// Stops at the first character that cannot continue a group word.
  GroupElement parse_word_at(std::string_view text, std::size_t& pos) const;

 private:
  GroupSpec spec_;
  std::vector<Group> factors_;          // Product only
  std::vector<std::size_t> gen_offset_; // Product only: first global generator per factor

  GroupElement parse_atom(std::string_view text, std::size_t& pos) const;
  GroupElement generator_power(std::size_t index, std::int64_t exp) const;
  std::vector<GroupElement> split(const GroupElement& x) const;
  static GroupElement join(const std::vector<GroupElement>& parts);
  std::string render_local(const GroupElement& x, std::size_t first_gen) const;
};

std::string generator_name(std::size_t index);

/// Abstract two-letter words r(X1, X2), always freely reduced.
class FormalWord {
 public:
  enum class Letter : std::uint8_t { X1 = 1, X2 = 2 };
  struct Syllable {
    Letter letter;
    std::int64_t exp;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };

  FormalWord() = default;
  static FormalWord letter(Letter l, std::int64_t exp = 1);
  static FormalWord x1(std::int64_t exp = 1) { return letter(Letter::X1, exp); }
  static FormalWord x2(std::int64_t exp = 1) { return letter(Letter::X2, exp); }
  /// Accepts "X1·X2", "X1*X2^-2", "X2^-1 X1", "1".
  static FormalWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::int64_t length() const;
  bool positive() const;

  FormalWord operator*(const FormalWord& other) const;
  FormalWord inverse() const;
  /// Cyclic rotations, used to compare relation words up to conjugation.
  FormalWord cyclically_reduced() const;
  std::vector<FormalWord> rotations() const;

  /// "X1·X2", "X2^-2·X1"; empty word renders as "1".
  std::string to_string() const;

  friend bool operator==(const FormalWord&, const FormalWord&) = default;
  friend auto operator<=>(const FormalWord&, const FormalWord&) = default;

 private:
  void push(Letter l, std::int64_t exp);
  std::vector<Syllable> syl_;
};

GroupElement eval_word(const Group& group, const FormalWord& w, const GroupElement& g1,
                       const GroupElement& g2);

inline GroupElement g_mul(const Group& g, const GroupElement& x, const GroupElement& y) {
  return g.mul(x, y);
}
inline GroupElement g_inv(const Group& g, const GroupElement& x) { return g.inv(x); }
inline bool is_torsion_free(const GroupSpec& spec) { return spec.torsion_free(); }

}  // namespace zerodiv
