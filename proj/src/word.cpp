#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "zerodiv/error.hpp"
#include "zerodiv/group.hpp"

namespace zerodiv {

FormalWord FormalWord::letter(Letter l, std::int64_t exp) {
  FormalWord w;
  w.push(l, exp);
  return w;
}

void FormalWord::push(Letter l, std::int64_t exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().letter == l) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({l, exp});
}

FormalWord FormalWord::operator*(const FormalWord& other) const {
  FormalWord out = *this;
  for (const auto& s : other.syl_) out.push(s.letter, s.exp);
  return out;
}

FormalWord FormalWord::inverse() const {
  FormalWord out;
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.push(it->letter, -it->exp);
  return out;
}

std::int64_t FormalWord::length() const {
  std::int64_t len = 0;
  for (const auto& s : syl_) len += std::llabs(s.exp);
  return len;
}

bool FormalWord::positive() const {
  return std::all_of(syl_.begin(), syl_.end(), [](const Syllable& s) { return s.exp > 0; });
}

FormalWord FormalWord::cyclically_reduced() const {
  std::vector<Syllable> s = syl_;
  while (s.size() >= 2 && s.front().letter == s.back().letter) {
    // merge last into first: conjugate by the last syllable
    s.front().exp += s.back().exp;
    s.pop_back();
    if (s.front().exp == 0) s.erase(s.begin());
  }
  FormalWord out;
  for (const auto& x : s) out.push(x.letter, x.exp);
  return out;
}

std::vector<FormalWord> FormalWord::rotations() const {
  // Letter-level rotations of the cyclically reduced word.
  const FormalWord base = cyclically_reduced();
  std::vector<std::pair<Letter, int>> letters;
  for (const auto& s : base.syl_)
    for (std::int64_t k = 0; k < std::llabs(s.exp); ++k) letters.push_back({s.letter, s.exp > 0 ? 1 : -1});
  std::vector<FormalWord> out;
  for (std::size_t shift = 0; shift < std::max<std::size_t>(letters.size(), 1); ++shift) {
    FormalWord w;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const auto& [l, e] = letters[(i + shift) % letters.size()];
      w.push(l, e);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string FormalWord::to_string() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) out += "·";
    out += syl_[i].letter == Letter::X1 ? "X1" : "X2";
    if (syl_[i].exp != 1) out += "^" + std::to_string(syl_[i].exp);
  }
  return out;
}

FormalWord FormalWord::parse(std::string_view text) {
  FormalWord w;
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '*') {
        ++i;
      } else if (text.substr(i, 2) == "·") {
        i += 2;
      } else {
        break;
      }
    }
  };
  skip_sep();
  if (text.substr(i) == "1") return w;
  while (i < text.size()) {
    if (text[i] != 'X' || i + 1 >= text.size() || (text[i + 1] != '1' && text[i + 1] != '2'))
      throw Error(ErrorCode::ParseError, "expected X1 or X2", i + 1);
    const Letter l = text[i + 1] == '1' ? Letter::X1 : Letter::X2;
    i += 2;
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && text[start] == '-'))
        throw Error(ErrorCode::ParseError, "malformed exponent", start + 1);
      exp = std::stoll(std::string(text.substr(start, i - start)));
    }
    w.push(l, exp);
    skip_sep();
  }
  return w;
}

GroupElement eval_word(const Group& group, const FormalWord& w, const GroupElement& g1,
                       const GroupElement& g2) {
  GroupElement out = group.identity();
  for (const auto& s : w.syllables())
    out = group.mul(out, group.pow(s.letter == FormalWord::Letter::X1 ? g1 : g2, s.exp));
  return out;
}

}  // namespace zerodiv
