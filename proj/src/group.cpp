#include "zerodiv/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

#include "zerodiv/error.hpp"

namespace zerodiv {

namespace {

using Kind = GroupSpec::Kind;

constexpr std::size_t kMaxGenerators = 26;
constexpr std::int64_t kMaxSymmetricDegree = 12;
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::size_t skip_spaces(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

std::int64_t parse_signed(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw Error(ErrorCode::ParseError, "malformed integer", start + 1);
  if (pos - digits > 18) throw Error(ErrorCode::ParseError, "integer too large", start + 1);
  return std::stoll(std::string(text.substr(start, pos - start)));
}

std::int64_t parse_param(std::string_view text, std::string_view prefix) {
  std::size_t pos = prefix.size();
  const std::int64_t v = parse_signed(text, pos);
  if (pos != text.size())
    throw Error(ErrorCode::InvalidSpec, "malformed group spec '" + std::string(text) + "'");
  return v;
}

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

void free_push(std::vector<std::int64_t>& code, std::int64_t gen, std::int64_t exp) {
  if (exp == 0) return;
  const std::size_t n = code.size();
  if (n >= 2 && code[n - 2] == gen) {
    code[n - 1] += exp;
    if (code[n - 1] == 0) code.resize(n - 2);
    return;
  }
  code.push_back(gen);
  code.push_back(exp);
}

}  // namespace

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::free(std::int64_t rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidSpec, "free rank must be >= 1");
  return {Kind::Free, rank, {}};
}

GroupSpec GroupSpec::free_abelian(std::int64_t dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidSpec, "abelian dimension must be >= 1");
  return {Kind::FreeAbelian, dim, {}};
}

GroupSpec GroupSpec::cyclic(std::int64_t modulus) {
  if (modulus < 2 || modulus >= kMaxModulus)
    throw Error(ErrorCode::InvalidSpec, "cyclic modulus must be in [2, 2^31)");
  return {Kind::Cyclic, modulus, {}};
}

GroupSpec GroupSpec::heisenberg() { return {Kind::Heisenberg, 3, {}}; }

GroupSpec GroupSpec::symmetric(std::int64_t degree) {
  if (degree < 2 || degree > kMaxSymmetricDegree)
    throw Error(ErrorCode::InvalidSpec, "symmetric degree must be in [2, 12]");
  return {Kind::Symmetric, degree, {}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidSpec, "empty product");
  GroupSpec out{Kind::Product, 0, {}};
  for (auto& f : factors) {
    if (f.kind == Kind::Product) {
      for (auto& inner : f.factors) out.factors.push_back(std::move(inner));
    } else {
      out.factors.push_back(std::move(f));
    }
  }
  out.param = static_cast<std::int64_t>(out.factors.size());
  return out;
}

GroupSpec GroupSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  GroupSpec out;
  if (text.rfind("free:", 0) == 0) {
    out = free(parse_param(text, "free:"));
  } else if (text.rfind("abelian:", 0) == 0) {
    out = free_abelian(parse_param(text, "abelian:"));
  } else if (text.rfind("cyclic:", 0) == 0) {
    out = cyclic(parse_param(text, "cyclic:"));
  } else if (text == "heisenberg") {
    out = heisenberg();
  } else if (text.rfind("sym:", 0) == 0) {
    out = symmetric(parse_param(text, "sym:"));
  } else if (text.rfind("product(", 0) == 0 && text.back() == ')') {
    std::vector<GroupSpec> parts;
    std::string_view inner = text.substr(8, text.size() - 9);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
        parts.push_back(parse(inner.substr(start, i - start)));
        start = i + 1;
      } else if (inner[i] == '(') {
        ++depth;
      } else if (inner[i] == ')') {
        --depth;
      }
    }
    out = product(std::move(parts));
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown group spec '" + std::string(text) + "'");
  }
  if (out.generator_count() > kMaxGenerators)
    throw Error(ErrorCode::InvalidSpec, "at most 26 generators are supported");
  return out;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Free: return "free:" + std::to_string(param);
    case Kind::FreeAbelian: return "abelian:" + std::to_string(param);
    case Kind::Cyclic: return "cyclic:" + std::to_string(param);
    case Kind::Heisenberg: return "heisenberg";
    case Kind::Symmetric: return "sym:" + std::to_string(param);
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].to_string();
      return s + ")";
    }
  }
  return {};
}

bool GroupSpec::torsion_free() const {
  switch (kind) {
    case Kind::Free:
    case Kind::FreeAbelian:
    case Kind::Heisenberg: return true;
    case Kind::Cyclic:
    case Kind::Symmetric: return false;
    case Kind::Product:
      return std::all_of(factors.begin(), factors.end(), [](const GroupSpec& f) { return f.torsion_free(); });
  }
  return false;
}

bool GroupSpec::finite() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Symmetric: return true;
    case Kind::Product:
      return std::all_of(factors.begin(), factors.end(), [](const GroupSpec& f) { return f.finite(); });
    default: return false;
  }
}

std::size_t GroupSpec::generator_count() const {
  switch (kind) {
    case Kind::Free:
    case Kind::FreeAbelian: return static_cast<std::size_t>(param);
    case Kind::Cyclic: return 1;
    case Kind::Heisenberg: return 3;
    case Kind::Symmetric: return 2;
    case Kind::Product: {
      std::size_t n = 0;
      for (const auto& f : factors) n += f.generator_count();
      return n;
    }
  }
  return 0;
}

std::string generator_name(std::size_t index) { return std::string(1, static_cast<char>('a' + index)); }

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : g.code) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------------------- Group

Group::Group(GroupSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == Kind::Product) {
    std::size_t offset = 0;
    for (const auto& f : spec_.factors) {
      factors_.emplace_back(f);
      gen_offset_.push_back(offset);
      offset += f.generator_count();
    }
  }
}

GroupElement Group::identity() const {
  switch (spec_.kind) {
    case Kind::Free: return {};
    case Kind::FreeAbelian: return {std::vector<std::int64_t>(static_cast<std::size_t>(spec_.param), 0)};
    case Kind::Cyclic: return {{0}};
    case Kind::Heisenberg: return {{0, 0, 0}};
    case Kind::Symmetric: {
      GroupElement e{std::vector<std::int64_t>(static_cast<std::size_t>(spec_.param))};
      std::iota(e.code.begin(), e.code.end(), 0);
      return e;
    }
    case Kind::Product: {
      std::vector<GroupElement> parts;
      for (const auto& f : factors_) parts.push_back(f.identity());
      return join(parts);
    }
  }
  return {};
}

std::vector<GroupElement> Group::split(const GroupElement& x) const {
  std::vector<GroupElement> parts;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (pos >= x.code.size()) throw Error(ErrorCode::GroupMismatch, "truncated product element");
    const auto len = x.code[pos++];
    if (len < 0 || pos + static_cast<std::size_t>(len) > x.code.size())
      throw Error(ErrorCode::GroupMismatch, "malformed product element");
    parts.push_back({std::vector<std::int64_t>(x.code.begin() + static_cast<std::ptrdiff_t>(pos),
                                               x.code.begin() + static_cast<std::ptrdiff_t>(pos + len))});
    pos += static_cast<std::size_t>(len);
  }
  if (pos != x.code.size()) throw Error(ErrorCode::GroupMismatch, "trailing data in product element");
  return parts;
}

GroupElement Group::join(const std::vector<GroupElement>& parts) {
  GroupElement out;
  for (const auto& p : parts) {
    out.code.push_back(static_cast<std::int64_t>(p.code.size()));
    out.code.insert(out.code.end(), p.code.begin(), p.code.end());
  }
  return out;
}

bool Group::conforms(const GroupElement& x) const {
  const auto& c = x.code;
  switch (spec_.kind) {
    case Kind::Free: {
      if (c.size() % 2) return false;
      for (std::size_t i = 0; i < c.size(); i += 2) {
        if (c[i] < 0 || c[i] >= spec_.param || c[i + 1] == 0) return false;
        if (i >= 2 && c[i - 2] == c[i]) return false;
      }
      return true;
    }
    case Kind::FreeAbelian: return c.size() == static_cast<std::size_t>(spec_.param);
    case Kind::Cyclic: return c.size() == 1 && c[0] >= 0 && c[0] < spec_.param;
    case Kind::Heisenberg: return c.size() == 3;
    case Kind::Symmetric: {
      if (c.size() != static_cast<std::size_t>(spec_.param)) return false;
      std::vector<bool> seen(c.size(), false);
      for (auto v : c) {
        if (v < 0 || v >= spec_.param || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
      }
      return true;
    }
    case Kind::Product: {
      try {
        const auto parts = split(x);
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (!factors_[i].conforms(parts[i])) return false;
        return true;
      } catch (const Error&) {
        return false;
      }
    }
  }
  return false;
}

void Group::check(const GroupElement& x) const {
  if (!conforms(x))
    throw Error(ErrorCode::GroupMismatch, "element does not belong to " + spec_.to_string());
}

GroupElement Group::mul(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  switch (spec_.kind) {
    case Kind::Free: {
      GroupElement out = x;
      for (std::size_t i = 0; i < y.code.size(); i += 2) free_push(out.code, y.code[i], y.code[i + 1]);
      return out;
    }
    case Kind::FreeAbelian: {
      GroupElement out = x;
      for (std::size_t i = 0; i < out.code.size(); ++i) out.code[i] += y.code[i];
      return out;
    }
    case Kind::Cyclic: return {{mod(x.code[0] + y.code[0], spec_.param)}};
    case Kind::Heisenberg:
      return {{x.code[0] + y.code[0], x.code[1] + y.code[1], x.code[2] + y.code[2] + x.code[0] * y.code[1]}};
    case Kind::Symmetric: {
      GroupElement out = y;
      for (auto& v : out.code) v = x.code[static_cast<std::size_t>(v)];
      return out;
    }
    case Kind::Product: {
      auto xs = split(x);
      const auto ys = split(y);
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = factors_[i].mul(xs[i], ys[i]);
      return join(xs);
    }
  }
  return {};
}

GroupElement Group::inv(const GroupElement& x) const {
  check(x);
  switch (spec_.kind) {
    case Kind::Free: {
      GroupElement out;
      for (std::size_t i = x.code.size(); i >= 2; i -= 2) {
        out.code.push_back(x.code[i - 2]);
        out.code.push_back(-x.code[i - 1]);
      }
      return out;
    }
    case Kind::FreeAbelian: {
      GroupElement out = x;
      for (auto& v : out.code) v = -v;
      return out;
    }
    case Kind::Cyclic: return {{mod(-x.code[0], spec_.param)}};
    case Kind::Heisenberg:
      return {{-x.code[0], -x.code[1], x.code[0] * x.code[1] - x.code[2]}};
    case Kind::Symmetric: {
      GroupElement out = x;
      for (std::size_t i = 0; i < x.code.size(); ++i) out.code[static_cast<std::size_t>(x.code[i])] = static_cast<std::int64_t>(i);
      return out;
    }
    case Kind::Product: {
      auto xs = split(x);
      for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = factors_[i].inv(xs[i]);
      return join(xs);
    }
  }
  return {};
}

GroupElement Group::pow(const GroupElement& x, std::int64_t k) const {
  GroupElement base = k < 0 ? inv(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GroupElement out = identity();
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

GroupElement Group::generator_power(std::size_t index, std::int64_t exp) const {
  if (index >= generator_count())
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + generator_name(index) + "' in " + spec_.to_string());
  switch (spec_.kind) {
    case Kind::Free: {
      GroupElement out;
      free_push(out.code, static_cast<std::int64_t>(index), exp);
      return out;
    }
    case Kind::FreeAbelian: {
      GroupElement out = identity();
      out.code[index] = exp;
      return out;
    }
    case Kind::Cyclic: return {{mod(exp, spec_.param)}};
    case Kind::Heisenberg: {
      GroupElement out = identity();
      out.code[index] = exp;
      return out;
    }
    case Kind::Symmetric: {
      GroupElement g = identity();
      if (index == 0) {
        std::swap(g.code[0], g.code[1]);
      } else {
        for (std::size_t i = 0; i < g.code.size(); ++i) g.code[i] = static_cast<std::int64_t>((i + 1) % g.code.size());
      }
      return pow(g, exp);
    }
    case Kind::Product: {
      std::vector<GroupElement> parts;
      for (const auto& f : factors_) parts.push_back(f.identity());
      for (std::size_t i = factors_.size(); i-- > 0;) {
        if (index >= gen_offset_[i]) {
          parts[i] = factors_[i].generator_power(index - gen_offset_[i], exp);
          break;
        }
      }
      return join(parts);
    }
  }
  return {};
}

GroupElement Group::generator(std::size_t index) const { return generator_power(index, 1); }

// ------------------------------------------------------------------ parsing

GroupElement Group::parse_atom(std::string_view text, std::size_t& pos) const {
  const char c = text[pos];
  if (c >= 'a' && c <= 'z') {
    const auto index = static_cast<std::size_t>(c - 'a');
    const std::size_t at = pos;
    ++pos;
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exp = parse_signed(text, pos);
    }
    if (index >= generator_count())
      throw Error(ErrorCode::UnknownGenerator,
                  "unknown generator '" + std::string(1, c) + "' in " + spec_.to_string(), at + 1);
    return generator_power(index, exp);
  }
  if (c == '1') {
    ++pos;
    return identity();
  }
  if (c == '[') {
    const std::size_t at = pos;
    const Group* sym = nullptr;
    std::size_t factor = 0;
    if (spec_.kind == Kind::Symmetric) {
      sym = this;
    } else if (spec_.kind == Kind::Product) {
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].spec_.kind == Kind::Symmetric) {
          if (sym) throw Error(ErrorCode::ParseError, "ambiguous permutation literal; use a tuple", at + 1);
          sym = &factors_[i];
          factor = i;
        }
      }
    }
    if (!sym) throw Error(ErrorCode::ParseError, "permutation literal in non-symmetric group", at + 1);
    ++pos;
    GroupElement perm;
    for (;;) {
      pos = skip_spaces(text, pos);
      perm.code.push_back(parse_signed(text, pos) - 1);
      pos = skip_spaces(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw Error(ErrorCode::ParseError, "expected ',' or ']'", pos + 1);
    }
    if (!sym->conforms(perm)) throw Error(ErrorCode::ParseError, "not a permutation of the right degree", at + 1);
    if (sym == this) return perm;
    std::vector<GroupElement> parts;
    for (const auto& f : factors_) parts.push_back(f.identity());
    parts[factor] = perm;
    return join(parts);
  }
  if (c == '(' && spec_.kind == Kind::Product) {
    ++pos;
    std::vector<GroupElement> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      pos = skip_spaces(text, pos);
      const std::size_t at = pos;
      GroupElement comp;
      if (pos < text.size() && text[pos] == '[' && factors_[i].spec_.kind == Kind::Symmetric) {
        comp = factors_[i].parse_word_at(text, pos);
      } else {
        const auto parts_i = split(parse_word_at(text, pos));
        for (std::size_t j = 0; j < parts_i.size(); ++j)
          if (j != i && !factors_[j].is_identity(parts_i[j]))
            throw Error(ErrorCode::ParseError, "tuple component uses generators of another factor", at + 1);
        comp = parts_i[i];
      }
      parts.push_back(std::move(comp));
      pos = skip_spaces(text, pos);
      const char expect = i + 1 == factors_.size() ? ')' : ',';
      if (pos >= text.size() || text[pos] != expect)
        throw Error(ErrorCode::ParseError, std::string("expected '") + expect + "'", pos + 1);
      ++pos;
    }
    return join(parts);
  }
  throw Error(ErrorCode::ParseError, std::string("unexpected character '") + c + "'", pos + 1);
}

GroupElement Group::parse_word_at(std::string_view text, std::size_t& pos) const {
  auto starts_atom = [&](std::size_t p) {
    if (p >= text.size()) return false;
    const char c = text[p];
    if (c >= 'a' && c <= 'z') return true;
    if (c == '[' || c == '(') return true;
    return c == '1' && (p + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p + 1])));
  };
  pos = skip_spaces(text, pos);
  if (!starts_atom(pos)) throw Error(ErrorCode::ParseError, "expected group element", pos + 1);
  GroupElement out = parse_atom(text, pos);
  for (;;) {
    std::size_t p = skip_spaces(text, pos);
    if (p < text.size() && text[p] == '*') {
      p = skip_spaces(text, p + 1);
      if (!starts_atom(p)) throw Error(ErrorCode::ParseError, "expected group element after '*'", p + 1);
    } else if (!starts_atom(p)) {
      return out;
    }
    pos = p;
    out = mul(out, parse_atom(text, pos));
  }
}

GroupElement Group::parse_element(std::string_view text) const {
  std::size_t pos = 0;
  GroupElement out = parse_word_at(text, pos);
  pos = skip_spaces(text, pos);
  if (pos != text.size()) throw Error(ErrorCode::ParseError, "trailing input", pos + 1);
  return out;
}

// ---------------------------------------------------------------- rendering

std::string Group::render_local(const GroupElement& x, std::size_t first_gen) const {
  std::vector<std::pair<std::size_t, std::int64_t>> syl;
  switch (spec_.kind) {
    case Kind::Free:
      for (std::size_t i = 0; i < x.code.size(); i += 2) syl.push_back({static_cast<std::size_t>(x.code[i]), x.code[i + 1]});
      break;
    case Kind::FreeAbelian:
      for (std::size_t i = 0; i < x.code.size(); ++i) syl.push_back({i, x.code[i]});
      break;
    case Kind::Cyclic: syl.push_back({0, x.code[0]}); break;
    case Kind::Heisenberg:
      syl = {{0, x.code[0]}, {1, x.code[1]}, {2, x.code[2] - x.code[0] * x.code[1]}};
      break;
    case Kind::Symmetric: {
      if (is_identity(x)) return "1";
      std::string s = "[";
      for (std::size_t i = 0; i < x.code.size(); ++i) s += (i ? "," : "") + std::to_string(x.code[i] + 1);
      return s + "]";
    }
    case Kind::Product: {
      if (is_identity(x)) return "1";
      const auto parts = split(x);
      std::string s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + factors_[i].render_local(parts[i], first_gen + gen_offset_[i]);
      return s + ")";
    }
  }
  std::string s;
  for (const auto& [gen, exp] : syl) {
    if (exp == 0) continue;
    if (!s.empty()) s += "*";
    s += generator_name(first_gen + gen);
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s.empty() ? "1" : s;
}

std::string Group::render(const GroupElement& x) const {
  check(x);
  return render_local(x, 0);
}

// ----------------------------------------------------------- enumeration

std::vector<GroupElement> Group::ball(int radius) const {
  if (radius < 0) radius = 0;
  std::set<GroupElement> out;
  switch (spec_.kind) {
    case Kind::Free: {
      std::vector<GroupElement> frontier{identity()};
      out.insert(identity());
      for (int len = 1; len <= radius; ++len) {
        std::vector<GroupElement> next;
        for (const auto& w : frontier) {
          for (std::int64_t g = 0; g < spec_.param; ++g) {
            for (std::int64_t e : {1, -1}) {
              GroupElement x = w;
              free_push(x.code, g, e);
              if (x.code.size() >= w.code.size() && out.insert(x).second) next.push_back(x);
            }
          }
        }
        frontier = std::move(next);
      }
      break;
    }
    case Kind::FreeAbelian:
    case Kind::Heisenberg: {
      const std::size_t dim = spec_.kind == Kind::Heisenberg ? 3 : static_cast<std::size_t>(spec_.param);
      GroupElement x{std::vector<std::int64_t>(dim, -radius)};
      for (;;) {
        out.insert(x);
        std::size_t i = 0;
        while (i < dim && x.code[i] == radius) x.code[i++] = -radius;
        if (i == dim) break;
        ++x.code[i];
      }
      break;
    }
    case Kind::Cyclic:
      for (std::int64_t r = 0; r < spec_.param; ++r) out.insert({{r}});
      break;
    case Kind::Symmetric: {
      if (spec_.param > 8) throw Error(ErrorCode::InvalidSpec, "symmetric group too large to enumerate");
      GroupElement x = identity();
      do {
        out.insert(x);
      } while (std::next_permutation(x.code.begin(), x.code.end()));
      break;
    }
    case Kind::Product: {
      std::vector<std::vector<GroupElement>> balls;
      for (const auto& f : factors_) balls.push_back(f.ball(radius));
      std::vector<std::size_t> idx(balls.size(), 0);
      for (;;) {
        std::vector<GroupElement> parts;
        for (std::size_t i = 0; i < balls.size(); ++i) parts.push_back(balls[i][idx[i]]);
        out.insert(join(parts));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == balls[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
      break;
    }
  }
  return {out.begin(), out.end()};
}

std::int64_t Group::order(const GroupElement& x) const {
  check(x);
  if (is_identity(x)) return 1;
  switch (spec_.kind) {
    case Kind::Free:
    case Kind::FreeAbelian:
    case Kind::Heisenberg: return 0;
    case Kind::Cyclic: return spec_.param / std::gcd(spec_.param, x.code[0]);
    case Kind::Symmetric: {
      std::int64_t k = 1;
      for (GroupElement y = x; !is_identity(y); y = mul(y, x)) ++k;
      return k;
    }
    case Kind::Product: {
      const auto parts = split(x);
      std::int64_t l = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::int64_t o = factors_[i].order(parts[i]);
        if (o == 0) return 0;
        l = std::lcm(l, o);
      }
      return l;
    }
  }
  return 0;
}

GroupElement Group::random(std::mt19937_64& rng, int size) const {
  size = std::max(size, 1);
  std::uniform_int_distribution<std::int64_t> coord(-size, size);
  switch (spec_.kind) {
    case Kind::Free: {
      std::uniform_int_distribution<int> len(0, size);
      std::uniform_int_distribution<std::int64_t> gen(0, spec_.param - 1);
      GroupElement out;
      for (int i = len(rng); i > 0; --i) free_push(out.code, gen(rng), (rng() & 1) ? 1 : -1);
      return out;
    }
    case Kind::FreeAbelian:
    case Kind::Heisenberg: {
      GroupElement out = identity();
      for (auto& v : out.code) v = coord(rng);
      return out;
    }
    case Kind::Cyclic: return {{std::uniform_int_distribution<std::int64_t>(0, spec_.param - 1)(rng)}};
    case Kind::Symmetric: {
      GroupElement out = identity();
      std::shuffle(out.code.begin(), out.code.end(), rng);
      return out;
    }
    case Kind::Product: {
      std::vector<GroupElement> parts;
      for (const auto& f : factors_) parts.push_back(f.random(rng, size));
      return join(parts);
    }
  }
  return {};
}

}  // namespace zerodiv
