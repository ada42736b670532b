#include "zerodiv/zerodiv.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "zerodiv/error.hpp"
#include "zerodiv/report.hpp"
#include "zerodiv/search.hpp"
#include "zerodiv/selftest.hpp"

using namespace zerodiv;

struct zd_context {
  std::shared_ptr<const Group> group;
  FieldSpec field;
};

struct zd_element {
  AlgebraElement value;
};

namespace {

thread_local std::string last_error;
thread_local int last_column = 0;

zd_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::UnknownGenerator:
    case ErrorCode::InvalidSpec:
    case ErrorCode::ZeroInversion: return ZD_ERR_INPUT;
    case ErrorCode::NotAnnihilating: return ZD_ERR_NOT_ANNIHILATING;
    case ErrorCode::InternalInconsistency:
    case ErrorCode::WitnessVerificationFailed: return ZD_ERR_INTERNAL;
    default: return ZD_ERR_PRECONDITION;
  }
}

template <class Fn>
zd_status guarded(Fn&& fn) {
  last_error.clear();
  last_column = 0;
  try {
    fn();
    return ZD_OK;
  } catch (const Error& e) {
    last_error = std::string(error_code_name(e.code())) + ": " + e.what();
    last_column = e.column();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = std::string("internal: ") + e.what();
    return ZD_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidSpec, std::string(what) + " is null");
}

std::string line(const Json& j) { return j.dump() + "\n"; }

}  // namespace

extern "C" {

const char* zd_version(void) { return "1.0.0"; }

void zd_string_free(char* s) { std::free(s); }

const char* zd_last_error(void) { return last_error.c_str(); }

int zd_last_error_column(void) { return last_column; }

zd_status zd_context_create(const char* group, const char* field, zd_context** out) {
  return guarded([&] {
    require(group, "group");
    require(field, "field");
    require(out, "out");
    auto g = std::make_shared<const Group>(Group::parse(group));
    *out = new zd_context{std::move(g), FieldSpec::parse(field)};
  });
}

void zd_context_destroy(zd_context* ctx) { delete ctx; }

zd_status zd_context_describe(const zd_context* ctx, char** out) {
  return guarded([&] {
    require(ctx, "context");
    Json j{{"group", ctx->group->spec().to_string()},
           {"field", ctx->field.to_string()},
           {"generators", ctx->group->generator_count()},
           {"torsion_free", ctx->group->torsion_free()},
           {"finite", ctx->group->spec().finite()}};
    *out = dup(j.dump());
  });
}

zd_status zd_element_parse(const zd_context* ctx, const char* text, zd_element** out) {
  return guarded([&] {
    require(ctx, "context");
    require(text, "text");
    *out = new zd_element{parse_algebra(ctx->group, ctx->field, text)};
  });
}

void zd_element_destroy(zd_element* x) { delete x; }

zd_status zd_element_mul(const zd_element* x, const zd_element* y, zd_element** out) {
  return guarded([&] {
    require(x, "lhs");
    require(y, "rhs");
    *out = new zd_element{a_mul(x->value, y->value)};
  });
}

zd_status zd_element_add(const zd_element* x, const zd_element* y, zd_element** out) {
  return guarded([&] {
    require(x, "lhs");
    require(y, "rhs");
    *out = new zd_element{a_add(x->value, y->value)};
  });
}

zd_status zd_element_render(const zd_element* x, char** out) {
  return guarded([&] {
    require(x, "element");
    *out = dup(x->value.to_string());
  });
}

zd_status zd_element_to_json(const zd_element* x, char** out) {
  return guarded([&] {
    require(x, "element");
    *out = dup(to_json(x->value).dump());
  });
}

size_t zd_element_support_size(const zd_element* x) { return x ? x->value.support_size() : 0; }

zd_status zd_annihilate_check(const zd_element* a, const zd_element* b, int* is_zero, char** json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    const AlgebraElement ab = a_mul(a->value, b->value);
    if (is_zero) *is_zero = ab.is_zero() ? 1 : 0;
    if (json) *json = dup(Json{{"annihilates", ab.is_zero()}, {"product", to_json(ab)}}.dump());
  });
}

zd_status zd_recover(const zd_element* a, const zd_element* b, char** json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    const RecoveredInstance inst = recover_structure(as_support_triple(a->value), b->value);
    *json = dup(recovery_json(inst, a->value.group()).dump());
  });
}

zd_status zd_extract(const zd_element* a, const zd_element* b, int trace, char** json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    const RecoveredInstance inst = recover_structure(as_support_triple(a->value), b->value);
    *json = dup(extraction_json(inst, a->value.group(), trace != 0).dump());
  });
}

zd_status zd_enumerate(int n, int full_symmetry, char** jsonl, uint64_t* count) {
  return guarded([&] {
    EnumerationPlan plan{n, full_symmetry ? Symmetry::Full : Symmetry::FixFIdentity, {}};
    std::string out;
    std::uint64_t total = 0;
    enumerate_structures(plan, [&](const CancellationStructure& cs) {
      ++total;
      if (jsonl) out += line(to_json(cs));
    });
    if (count) *count = total;
    if (jsonl) *jsonl = dup(out);
  });
}

zd_status zd_scan(const zd_element* a, const zd_scan_options* options, char** jsonl, uint64_t* feasible) {
  return guarded([&] {
    require(a, "a");
    require(options, "options");
    SupportTriple t = as_support_triple(a->value);
    const FieldSpec& field = a->value.field();
    if (options->alpha1) t.alpha1 = Scalar::parse(options->alpha1, field);
    if (options->alpha2) t.alpha2 = Scalar::parse(options->alpha2, field);
    if (t.alpha1.is_zero() || t.alpha2.is_zero())
      throw Error(ErrorCode::SupportSize, "alpha1 and alpha2 must be nonzero");
    ScanOptions opts;
    opts.n_min = options->n_min;
    opts.n_max = options->n_max;
    opts.workers = options->workers;
    opts.symmetry = options->full_symmetry ? Symmetry::Full : Symmetry::FixFIdentity;
    opts.keep_verdicts = options->verbose != 0;
    const auto reports = scan_small_supports(t, a->value.group_ptr(), field, opts);
    std::string out;
    std::uint64_t total = 0;
    for (const auto& r : reports) {
      Json j = to_json(r, options->verbose != 0);
      j["alpha1"] = t.alpha1.to_string();
      j["alpha2"] = t.alpha2.to_string();
      out += line(j);
      total += r.feasible_count;
    }
    if (feasible) *feasible = total;
    if (jsonl) *jsonl = dup(out);
  });
}

zd_status zd_search_direct(const zd_element* a, int n_max, int radius, int* found, char** json) {
  return guarded([&] {
    require(a, "a");
    const auto b = search_annihilator_direct(a->value, n_max, radius);
    if (found) *found = b ? 1 : 0;
    if (json) *json = dup(b ? to_json(*b).dump() : std::string("null"));
  });
}

zd_status zd_make_instance(const zd_element* c, zd_element** a, zd_element** b) {
  return guarded([&] {
    require(c, "c");
    auto [x, y] = make_torsion_instance(c->value.group_ptr(), c->value.field(), c->value);
    *a = new zd_element{std::move(x)};
    *b = new zd_element{std::move(y)};
  });
}

zd_status zd_selftest(uint64_t seed, unsigned workers, size_t cases, char** jsonl, int* all_passed) {
  return guarded([&] {
    const auto results = run_selftest(seed, workers, cases);
    std::string out;
    bool ok = true;
    for (const auto& r : results) {
      Json j{{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
      if (!r.passed()) j["first_failure"] = r.first_failure;
      out += line(j);
      ok = ok && r.passed();
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
    if (jsonl) *jsonl = dup(out);
  });
}

}  // extern "C"
