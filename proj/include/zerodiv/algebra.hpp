#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zerodiv/group.hpp"
#include "zerodiv/scalar.hpp"

namespace zerodiv {

/// Element of the group algebra F[G]: a finite map from group elements to
/// nonzero scalars, kept in canonical (normal-form) order.
class AlgebraElement {
 public:
  using Terms = std::map<GroupElement, Scalar>;

  AlgebraElement(std::shared_ptr<const Group> group, FieldSpec field);

  static AlgebraElement monomial(std::shared_ptr<const Group> group, FieldSpec field,
                                 const GroupElement& g, const Scalar& coeff);
  static AlgebraElement one(std::shared_ptr<const Group> group, FieldSpec field);

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  const FieldSpec& field() const { return field_; }
  const Terms& terms() const { return terms_; }

  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::vector<GroupElement> support() const;
  bool contains(const GroupElement& g) const { return terms_.count(g) != 0; }
  /// Zero when g is outside the support.
  Scalar coefficient(const GroupElement& g) const;

  /// Adds c*g, dropping the term if the coefficient becomes zero.
  void add_term(const GroupElement& g, const Scalar& c);

  /// Canonical text, e.g. "1 - a", "2*a*b^-1 + 1/2", "0".
  std::string to_string() const;

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);

 private:
  std::shared_ptr<const Group> group_;
  FieldSpec field_;
  Terms terms_;
};

void require_compatible(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement a_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement a_sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement a_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement a_scale(const Scalar& c, const AlgebraElement& x);
/// g*x: support mapped by h -> g h.
AlgebraElement left_translate(const GroupElement& g, const AlgebraElement& x);
/// x*g: support mapped by h -> h g.
AlgebraElement right_translate(const AlgebraElement& x, const GroupElement& g);

/// element := ['+'|'-'] term (('+'|'-') term)*
/// term    := scalar ['*' groupword] | groupword
AlgebraElement parse_algebra(std::shared_ptr<const Group> group, const FieldSpec& field,
                             std::string_view text);

/// a = 1 + alpha1*g1 + alpha2*g2 with g1 < g2 in canonical order.
struct SupportTriple {
  Scalar alpha1;
  GroupElement g1;
  Scalar alpha2;
  GroupElement g2;

  GroupElement lambda(const Group& group) const { return group.mul(group.inv(g1), g2); }
  AlgebraElement to_element(std::shared_ptr<const Group> group) const;
};

/// Scales by the inverse of the identity coefficient. Throws SupportSize when
/// |supp| != 3 and IdentityNotInSupport when e is absent.
SupportTriple as_support_triple(const AlgebraElement& x);

AlgebraElement random_element(std::shared_ptr<const Group> group, const FieldSpec& field,
                              std::mt19937_64& rng, std::size_t max_terms, int radius);

}  // namespace zerodiv
