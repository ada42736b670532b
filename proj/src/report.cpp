#include "zerodiv/report.hpp"

namespace zerodiv {

namespace {

Json perm_json(const Permutation& p) {
  Json out = Json::array();
  for (int x : p) out.push_back(x + 1);
  return out;
}

Json letters_json(const std::vector<Multiplier>& letters) {
  Json out = Json::array();
  for (auto m : letters) out.push_back(multiplier_name(m));
  return out;
}

const char* chain_name(Chain c) { return c == Chain::B ? "B" : "M"; }

Json blocks_json(const RecoveredInstance& inst, const Group& group) {
  Json out = Json::array();
  for (const auto& entry : inst.blocks) out.push_back({{"element", group.render(entry.element)}, {"block", entry.block}});
  return out;
}

Json support_json(const RecoveredInstance& inst, const Group& group) {
  Json out = Json::array();
  for (std::size_t i = 0; i < inst.support.size(); ++i)
    out.push_back({{"term", group.render(inst.support[i])}, {"coeff", inst.coefficients[i].to_string()}});
  return out;
}

Json triple_json(const SupportTriple& a, const Group& group) {
  return {{"alpha1", a.alpha1.to_string()},
          {"g1", group.render(a.g1)},
          {"alpha2", a.alpha2.to_string()},
          {"g2", group.render(a.g2)}};
}

}  // namespace

Json to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back({{"term", x.group().render(g)}, {"coeff", c.to_string()}});
  return {{"text", x.to_string()}, {"support_size", x.support_size()}, {"terms", std::move(terms)}};
}

Json to_json(const CancellationStructure& cs) {
  return {{"n", cs.n}, {"k_c", cs.kc}, {"k_p", cs.kp},
          {"f", perm_json(cs.f)}, {"phi", perm_json(cs.phi)}, {"tau", perm_json(cs.tau)}};
}

Json to_json(const ChainTrace& trace) {
  Json visited = Json::array();
  for (const auto& p : trace.visited)
    visited.push_back({{"pair", {p.first + 1, p.second + 1}}, {"block", p.block}, {"letter", multiplier_name(p.letter)}});
  return {{"chain", chain_name(trace.which)},
          {"visited", std::move(visited)},
          {"cycle_start", trace.cycle_start + 1},
          {"cycle_end", trace.cycle_end + 1}};
}

Json to_json(const Verdict& v) {
  Json out{{"verdict", verdict_name(v.kind)}, {"reason", reason_name(v.reason)}};
  if (!v.cycle_word.empty()) out["cycle_word"] = v.cycle_word.to_string();
  if (v.collision) out["collision"] = {v.collision->first + 1, v.collision->second + 1};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.trials) out["trials"] = v.trials;
  return out;
}

Json recovery_json(const RecoveredInstance& inst, const Group& group) {
  Json out{{"a", triple_json(inst.a, group)}, {"n", inst.n()}, {"support", support_json(inst, group)},
           {"blocks", blocks_json(inst, group)}};
  if (inst.structure) {
    out["case"] = "cancellation";
    out["structure"] = to_json(*inst.structure);
  } else {
    out["case"] = "cycle";
    out["cycle_case"] = perm_json(*inst.cycle_case);
  }
  return out;
}

Json extraction_json(const RecoveredInstance& inst, const Group& group, bool trace) {
  Json out = recovery_json(inst, group);
  if (!inst.structure) {
    const FormalWord r = extract_cycle_relation(*inst.cycle_case);
    out["relation_B"] = r.to_string();
    out["relation_M"] = nullptr;
    out["verified"] = group.is_identity(eval_word(group, r, inst.a.g1, inst.a.g2));
    return out;
  }
  const RelationReport rep = extract_relations(*inst.structure, group, inst.a);
  out["relation_B"] = rep.relation_B.to_string();
  out["relation_M"] = rep.relation_M.to_string();
  out["raw_B"] = letters_json(rep.raw_B);
  out["raw_M"] = letters_json(rep.raw_M);
  Json cycles = Json::array();
  for (const auto& entry : rep.cycles) {
    cycles.push_back({{"chain", chain_name(entry.which)},
                      {"start", entry.trace.visited.empty() ? 0 : entry.trace.visited.front().first + 1},
                      {"from_first_index", entry.canonical_start},
                      {"word", entry.word.to_string()},
                      {"verified", entry.verified}});
  }
  out["cycles"] = std::move(cycles);
  out["verified"] = rep.verified;
  if (trace) out["traces"] = {to_json(rep.chain_B), to_json(rep.chain_M)};
  return out;
}

Json to_json(const ScanReport& report, bool verbose) {
  Json out{{"n", report.n},
           {"structures_total", report.structures_total},
           {"structures_valid", report.structures_valid},
           {"word_killed", report.word_killed},
           {"coeff_killed", report.coeff_killed},
           {"feasible_count", report.feasible_count},
           {"word_breakdown",
            {{"cycle", report.cycle_killed},
             {"indistinct", report.indistinct_killed},
             {"coincidence", report.coincidence_killed},
             {"unrealizable", report.unrealizable_killed}}},
           {"sampled", report.sampled}};
  Json feasible = Json::array();
  for (const auto& sv : report.feasible) feasible.push_back({{"structure", to_json(sv.structure)}, {"verdict", to_json(sv.verdict)}});
  out["feasible"] = std::move(feasible);
  if (verbose) {
    Json verdicts = Json::array();
    for (const auto& sv : report.verdicts) verdicts.push_back({{"structure", to_json(sv.structure)}, {"verdict", to_json(sv.verdict)}});
    out["verdicts"] = std::move(verdicts);
  }
  return out;
}

}  // namespace zerodiv
