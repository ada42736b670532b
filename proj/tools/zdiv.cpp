// zdiv: command-line frontend over the zerodiv C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zerodiv/zerodiv.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kInput = 2, kNotAnnihilating = 3, kPrecondition = 4, kWitness = 10, kInternal = 70 };

struct Failure {
  int code;
};

struct RunConfig {
  std::string group = "free:2";
  std::string field = "Q";
  std::string alphas;  // "a1,a2;a1,a2;..." or empty
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string output = "json";
  bool trace = false;
  bool verbose = false;
  bool timing = false;
};

int exit_for(zd_status s) {
  switch (s) {
    case ZD_OK: return kOk;
    case ZD_ERR_INPUT: return kInput;
    case ZD_ERR_NOT_ANNIHILATING: return kNotAnnihilating;
    case ZD_ERR_PRECONDITION: return kPrecondition;
    default: return kInternal;
  }
}

void check(zd_status s) {
  if (s == ZD_OK) return;
  std::cerr << "error: " << zd_last_error() << "\n";
  throw Failure{exit_for(s)};
}

struct StringDeleter {
  void operator()(char* s) const { zd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return OwnedString(s).get(); }

struct ContextDeleter {
  void operator()(zd_context* c) const { zd_context_destroy(c); }
};
struct ElementDeleter {
  void operator()(zd_element* e) const { zd_element_destroy(e); }
};
using Context = std::unique_ptr<zd_context, ContextDeleter>;
using Element = std::unique_ptr<zd_element, ElementDeleter>;

class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    zd_context* raw = nullptr;
    check(zd_context_create(cfg.group.c_str(), cfg.field.c_str(), &raw));
    ctx_.reset(raw);
  }

  Element parse(const std::string& text) const {
    zd_element* raw = nullptr;
    check(zd_element_parse(ctx_.get(), text.c_str(), &raw));
    return Element(raw);
  }

  Json describe() const {
    char* out = nullptr;
    check(zd_context_describe(ctx_.get(), &out));
    return Json::parse(take(out));
  }

  void emit(const Json& j, const std::string& text) const {
    if (cfg_.output == "json")
      std::cout << j.dump() << "\n";
    else
      std::cout << text;
  }

  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  Context ctx_;
};

std::vector<std::pair<std::string, std::string>> parse_alphas(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  if (text.empty()) return out;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: alphas entry '" << item << "' is not of the form a1,a2\n";
      throw Failure{kInput};
    }
    out.emplace_back(item.substr(0, comma), item.substr(comma + 1));
  }
  return out;
}

std::string text_lines(const std::string& jsonl, const std::function<std::string(const Json&)>& fmt) {
  std::string out;
  std::stringstream in(jsonl);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out += fmt(Json::parse(line));
  return out;
}

std::string perm_text(const Json& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i].get<int>());
  return s + ")";
}

std::string structure_text(const Json& s) {
  return "n=" + std::to_string(s["n"].get<int>()) + " k_c=" + std::to_string(s["k_c"].get<int>()) +
         " k_p=" + std::to_string(s["k_p"].get<int>()) + " f=" + perm_text(s["f"]) + " phi=" + perm_text(s["phi"]) +
         " tau=" + perm_text(s["tau"]);
}

std::string recovery_text(const Json& j) {
  std::string out;
  if (j["case"] == "cycle")
    out += "case: cycle  h=" + perm_text(j["cycle_case"]) + "\n";
  else
    out += "structure: " + structure_text(j["structure"]) + "\n";
  for (const auto& b : j["blocks"])
    out += "  block " + std::to_string(b["block"].get<int>()) + ": " + b["element"].get<std::string>() + "\n";
  return out;
}

// ---- commands --------------------------------------------------------------

int cmd_mul(const RunConfig& cfg, const std::string& lhs, const std::string& rhs) {
  Session s(cfg);
  Element x = s.parse(lhs), y = s.parse(rhs);
  zd_element* raw = nullptr;
  check(zd_element_mul(x.get(), y.get(), &raw));
  Element p(raw);
  char* js = nullptr;
  check(zd_element_to_json(p.get(), &js));
  const Json product = Json::parse(take(js));
  s.emit({{"product", product}, {"support_size", product["support_size"]}},
         product["text"].get<std::string>() + "\nsupp " + std::to_string(product["support_size"].get<int>()) + "\n");
  return kOk;
}

int cmd_annihilate_check(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  Session s(cfg);
  Element a = s.parse(a_text), b = s.parse(b_text);
  int zero = 0;
  char* js = nullptr;
  check(zd_annihilate_check(a.get(), b.get(), &zero, &js));
  const Json j = Json::parse(take(js));
  s.emit(j, std::string(zero ? "a*b = 0\n" : "a*b != 0\n") + "product: " + j["product"]["text"].get<std::string>() + "\n");
  return zero ? kOk : kNotAnnihilating;
}

int cmd_recover(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  Session s(cfg);
  Element a = s.parse(a_text), b = s.parse(b_text);
  char* js = nullptr;
  check(zd_recover(a.get(), b.get(), &js));
  const Json j = Json::parse(take(js));
  s.emit(j, recovery_text(j));
  return kOk;
}

int cmd_extract(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  Session s(cfg);
  Element a = s.parse(a_text), b = s.parse(b_text);
  char* js = nullptr;
  check(zd_extract(a.get(), b.get(), cfg.trace ? 1 : 0, &js));
  const Json j = Json::parse(take(js));
  std::string text = recovery_text(j);
  text += "relation_B: " + j["relation_B"].get<std::string>() + "\n";
  text += "relation_M: " + (j["relation_M"].is_null() ? std::string("-") : j["relation_M"].get<std::string>()) + "\n";
  if (j.contains("raw_B")) {
    auto raw = [](const Json& letters) {
      std::string s;
      for (const auto& l : letters) s += (s.empty() ? "" : " ") + l.get<std::string>();
      return s;
    };
    text += "raw_B: " + raw(j["raw_B"]) + "\nraw_M: " + raw(j["raw_M"]) + "\n";
  }
  text += std::string("verified: ") + (j["verified"].get<bool>() ? "yes" : "no") + "\n";
  if (j.contains("traces")) text += "traces: " + j["traces"].dump() + "\n";
  s.emit(j, text);
  return j["verified"].get<bool>() ? kOk : kInternal;
}

int cmd_enumerate(const RunConfig& cfg, int n, bool full) {
  char* js = nullptr;
  std::uint64_t count = 0;
  check(zd_enumerate(n, full ? 1 : 0, &js, &count));
  const std::string lines = take(js);
  if (cfg.output == "json") {
    std::cout << lines;
  } else {
    std::cout << text_lines(lines, [](const Json& j) { return structure_text(j) + "\n"; });
    std::cout << count << " structures\n";
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, const std::string& a_text, int n_min, int n_max, bool full) {
  Session s(cfg);
  Element a = s.parse(a_text);
  if (!s.describe()["torsion_free"].get<bool>())
    std::cerr << "warning: " << cfg.group << " has torsion; feasible structures are expected\n";
  auto alphas = parse_alphas(cfg.alphas);
  if (alphas.empty()) alphas.emplace_back();  // keep a's own coefficients
  std::uint64_t feasible_total = 0;
  for (const auto& [a1, a2] : alphas) {
    zd_scan_options opts{n_min, n_max, cfg.workers, full ? 1 : 0, cfg.verbose ? 1 : 0,
                         a1.empty() ? nullptr : a1.c_str(), a2.empty() ? nullptr : a2.c_str()};
    char* js = nullptr;
    std::uint64_t feasible = 0;
    check(zd_scan(a.get(), &opts, &js, &feasible));
    const std::string lines = take(js);
    feasible_total += feasible;
    if (cfg.output == "json") {
      std::cout << lines;
    } else {
      std::cout << text_lines(lines, [](const Json& j) {
        std::string t = "alphas=(" + j["alpha1"].get<std::string>() + "," + j["alpha2"].get<std::string>() +
                        ") n=" + std::to_string(j["n"].get<int>()) + " valid=" + j["structures_valid"].dump() +
                        " of " + j["structures_total"].dump() + " word=" + j["word_killed"].dump() +
                        " coeff=" + j["coeff_killed"].dump() + " feasible=" + j["feasible_count"].dump() + "\n";
        for (const auto& f : j["feasible"])
          t += "  witness: " + f["verdict"]["witness"]["text"].get<std::string>() + "  [" +
               structure_text(f["structure"]) + "]\n";
        return t;
      });
    }
  }
  return feasible_total ? kWitness : kOk;
}

int cmd_search_direct(const RunConfig& cfg, const std::string& a_text, int n_max, int radius) {
  Session s(cfg);
  Element a = s.parse(a_text);
  int found = 0;
  char* js = nullptr;
  check(zd_search_direct(a.get(), n_max, radius, &found, &js));
  const Json w = Json::parse(take(js));
  s.emit({{"found", found != 0}, {"witness", w}},
         found ? "witness: " + w["text"].get<std::string>() + "\n" : std::string("no annihilator found\n"));
  return found ? kWitness : kOk;
}

int cmd_make_instance(const RunConfig& cfg, const std::string& c_text) {
  Session s(cfg);
  Element c = s.parse(c_text);
  zd_element *ra = nullptr, *rb = nullptr;
  check(zd_make_instance(c.get(), &ra, &rb));
  Element a(ra), b(rb);
  char *ja = nullptr, *jb = nullptr;
  check(zd_element_to_json(a.get(), &ja));
  check(zd_element_to_json(b.get(), &jb));
  const Json aj = Json::parse(take(ja)), bj = Json::parse(take(jb));
  s.emit({{"a", aj}, {"b", bj}},
         "a = " + aj["text"].get<std::string>() + "\nb = " + bj["text"].get<std::string>() + "\n");
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, std::size_t cases) {
  char* js = nullptr;
  int ok = 0;
  check(zd_selftest(cfg.seed, cfg.workers, cases, &js, &ok));
  const std::string lines = take(js);
  if (cfg.output == "json") {
    std::cout << lines;
  } else {
    std::cout << text_lines(lines, [](const Json& j) {
      std::string t = std::string(j["passed"].get<bool>() ? "PASS " : "FAIL ") + j["suite"].get<std::string>() +
                      " (" + j["cases"].dump() + " cases)\n";
      if (j.contains("first_failure")) t += "  " + j["first_failure"].get<std::string>() + "\n";
      return t;
    });
  }
  return ok ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor structure toolkit for group algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(zd_version()));

  RunConfig cfg;
  app.set_config("--config", "", "Read 'key = value' settings; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--group", cfg.group, "Group: free:k, abelian:k, cyclic:m, heisenberg, sym:k, product(...)")
      ->capture_default_str();
  app.add_option("--field", cfg.field, "Field: Q or GF:p")->capture_default_str();
  app.add_option("--alphas", cfg.alphas, "Coefficient pairs for scan, e.g. '1,1;2,-1'");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--trace", cfg.trace, "Include chain walks in extract output");
  app.add_flag("--verbose", cfg.verbose, "Per-structure verdicts in scan output");
  app.add_flag("--timing", cfg.timing, "Report wall time on standard error");

  std::string x, y;
  int n = 2, n_min = 2, n_max = 5, radius = 2;
  bool full = false;
  std::size_t cases = 1000;
  std::function<int()> action;

  auto* mul = app.add_subcommand("mul", "Multiply two elements");
  mul->add_option("lhs", x)->required();
  mul->add_option("rhs", y)->required();
  mul->callback([&] { action = [&] { return cmd_mul(cfg, x, y); }; });

  auto* ann = app.add_subcommand("annihilate-check", "Exit 0 iff a*b = 0");
  ann->add_option("a", x)->required();
  ann->add_option("b", y)->required();
  ann->callback([&] { action = [&] { return cmd_annihilate_check(cfg, x, y); }; });

  auto* rec = app.add_subcommand("recover", "Cancellation structure of a*b = 0");
  rec->add_option("a", x)->required();
  rec->add_option("b", y)->required();
  rec->callback([&] { action = [&] { return cmd_recover(cfg, x, y); }; });

  auto* ext = app.add_subcommand("extract", "Relation words from a*b = 0");
  ext->add_option("a", x)->required();
  ext->add_option("b", y)->required();
  ext->callback([&] { action = [&] { return cmd_extract(cfg, x, y); }; });

  auto* en = app.add_subcommand("enumerate", "List valid cancellation structures of size n");
  en->add_option("n", n)->required()->check(CLI::Range(2, 7));
  en->add_flag("--full", full, "Do not fix f to the identity");
  en->callback([&] { action = [&] { return cmd_enumerate(cfg, n, full); }; });

  auto* sc = app.add_subcommand("scan", "Decide every structure up to n-max");
  sc->add_option("a", x)->required();
  sc->add_option("--n-min", n_min)->capture_default_str();
  sc->add_option("--n-max", n_max)->capture_default_str()->check(CLI::Range(0, 7));
  sc->add_flag("--full", full, "Do not fix f to the identity");
  sc->callback([&] { action = [&] { return cmd_scan(cfg, x, n_min, n_max, full); }; });

  auto* sd = app.add_subcommand("search-direct", "Search annihilators with small support in a ball");
  sd->add_option("a", x)->required();
  sd->add_option("--n-max", n_max)->capture_default_str();
  sd->add_option("--radius", radius)->capture_default_str();
  sd->callback([&] { action = [&] { return cmd_search_direct(cfg, x, n_max, radius); }; });

  auto* mi = app.add_subcommand("make-instance", "a = 1 + h + h^2 and b = (1 - h) c");
  mi->add_option("c", x)->required();
  mi->callback([&] { action = [&] { return cmd_make_instance(cfg, x); }; });

  auto* st = app.add_subcommand("selftest", "Randomized axiom and round-trip suites");
  st->add_option("--cases", cases)->capture_default_str();
  st->callback([&] { action = [&] { return cmd_selftest(cfg, cases); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kInput;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    code = action();
  } catch (const Failure& f) {
    code = f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kInternal;
  }
  if (cfg.timing)
    std::cerr << "wall_time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
  return code;
}
