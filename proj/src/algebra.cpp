#include "zerodiv/algebra.hpp"

#include <cctype>

#include "zerodiv/error.hpp"

namespace zerodiv {

AlgebraElement::AlgebraElement(std::shared_ptr<const Group> group, FieldSpec field)
    : group_(std::move(group)), field_(field) {}

AlgebraElement AlgebraElement::monomial(std::shared_ptr<const Group> group, FieldSpec field,
                                        const GroupElement& g, const Scalar& coeff) {
  AlgebraElement x(std::move(group), field);
  x.add_term(g, coeff);
  return x;
}

AlgebraElement AlgebraElement::one(std::shared_ptr<const Group> group, FieldSpec field) {
  const GroupElement e = group->identity();
  return monomial(std::move(group), field, e, Scalar::one(field));
}

std::vector<GroupElement> AlgebraElement::support() const {
  std::vector<GroupElement> out;
  out.reserve(terms_.size());
  for (const auto& [g, c] : terms_) out.push_back(g);
  return out;
}

Scalar AlgebraElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add_term(const GroupElement& g, const Scalar& c) {
  if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  group_->check(g);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    bool negative = field_.is_rational() && sgn(c.rational()) < 0;
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (group_->is_identity(g)) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += group_->render(g);
    } else {
      out += mag.to_string() + "*" + group_->render(g);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.group_->spec() == y.group_->spec() && x.field_ == y.field_ && x.terms_ == y.terms_;
}

void require_compatible(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.field() == y.field()))
    throw Error(ErrorCode::FieldMismatch,
                "field mismatch: " + x.field().to_string() + " vs " + y.field().to_string());
  if (x.group_ptr() != y.group_ptr() && !(x.group().spec() == y.group().spec()))
    throw Error(ErrorCode::GroupMismatch, "group mismatch: " + x.group().spec().to_string() + " vs " +
                                              y.group().spec().to_string());
}

AlgebraElement a_add(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  AlgebraElement out = x;
  for (const auto& [g, c] : y.terms()) out.add_term(g, c);
  return out;
}

AlgebraElement a_sub(const AlgebraElement& x, const AlgebraElement& y) {
  return a_add(x, a_scale(-Scalar::one(y.field()), y));
}

AlgebraElement a_scale(const Scalar& c, const AlgebraElement& x) {
  AlgebraElement out(x.group_ptr(), x.field());
  for (const auto& [g, v] : x.terms()) out.add_term(g, c * v);
  return out;
}

AlgebraElement a_mul(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  const Group& group = x.group();
  AlgebraElement out(x.group_ptr(), x.field());
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) out.add_term(group.mul(g, h), c * d);
  return out;
}

AlgebraElement left_translate(const GroupElement& g, const AlgebraElement& x) {
  AlgebraElement out(x.group_ptr(), x.field());
  for (const auto& [h, c] : x.terms()) out.add_term(x.group().mul(g, h), c);
  return out;
}

AlgebraElement right_translate(const AlgebraElement& x, const GroupElement& g) {
  AlgebraElement out(x.group_ptr(), x.field());
  for (const auto& [h, c] : x.terms()) out.add_term(x.group().mul(h, g), c);
  return out;
}

namespace {

class AlgebraParser {
 public:
  AlgebraParser(std::shared_ptr<const Group> group, const FieldSpec& field, std::string_view text)
      : group_(std::move(group)), field_(field), text_(text) {}

  AlgebraElement parse() {
    AlgebraElement out(group_, field_);
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      skip();
      auto [g, c] = term();
      out.add_term(g, negative ? -c : c);
      skip();
      if (pos_ == text_.size()) return out;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }

  std::size_t digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return pos_ - start;
  }

  std::pair<GroupElement, Scalar> term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      digits();
      if (peek() == '/') {
        ++pos_;
        if (digits() == 0) fail("expected denominator");
      }
      Scalar c = Scalar::parse(text_.substr(start, pos_ - start), field_);
      const std::size_t after = pos_;
      skip();
      if (peek() == '*') {
        ++pos_;
        return {word(), c};
      }
      pos_ = after;
      return {group_->identity(), c};
    }
    return {word(), Scalar::one(field_)};
  }

  GroupElement word() {
    skip();
    try {
      return group_->parse_word_at(text_, pos_);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownGenerator) {
        std::string msg = e.what();
        if (e.column() && msg.find("column") == std::string::npos)
          msg += " at column " + std::to_string(e.column());
        throw Error(e.code(), msg, e.column());
      }
      throw;
    }
  }

  std::shared_ptr<const Group> group_;
  FieldSpec field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_algebra(std::shared_ptr<const Group> group, const FieldSpec& field,
                             std::string_view text) {
  return AlgebraParser(std::move(group), field, text).parse();
}

AlgebraElement SupportTriple::to_element(std::shared_ptr<const Group> group) const {
  const FieldSpec field = alpha1.field();
  AlgebraElement a = AlgebraElement::one(group, field);
  a.add_term(g1, alpha1);
  a.add_term(g2, alpha2);
  return a;
}

SupportTriple as_support_triple(const AlgebraElement& x) {
  if (x.support_size() != 3)
    throw Error(ErrorCode::SupportSize,
                "expected |supp(a)| = 3, got " + std::to_string(x.support_size()));
  const GroupElement e = x.group().identity();
  if (!x.contains(e))
    throw Error(ErrorCode::IdentityNotInSupport,
                "identity not in supp(a); left-translate by the inverse of a support element first");
  const Scalar scale = x.coefficient(e).inverse();
  std::vector<std::pair<GroupElement, Scalar>> rest;
  for (const auto& [g, c] : x.terms())
    if (g != e) rest.emplace_back(g, c * scale);
  return {rest[0].second, rest[0].first, rest[1].second, rest[1].first};
}

AlgebraElement random_element(std::shared_ptr<const Group> group, const FieldSpec& field,
                              std::mt19937_64& rng, std::size_t max_terms, int radius) {
  AlgebraElement out(group, field);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(max_terms, 1));
  std::uniform_int_distribution<std::int64_t> num(-5, 5);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  for (std::size_t i = count(rng); i > 0; --i) {
    std::int64_t n = num(rng);
    if (n == 0) n = 1;
    const Scalar c = field.is_rational() ? Scalar::from_rational(field, n, den(rng)) : Scalar::from_int(field, n);
    out.add_term(group->random(rng, radius), c);
  }
  return out;
}

}  // namespace zerodiv
