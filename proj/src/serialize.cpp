#include "coxdepth/serialize.hpp"

#include "coxdepth/classify.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

json window_to_json(const SignedPermutation& w, const GroupContext& ctx) {
  return json{{"family", std::string(1, family_letter(ctx.family))}, {"window", w.window()}};
}

SignedPermutation window_from_json(const json& j, GroupContext* ctx_out) {
  std::vector<int> window = j.at("window").get<std::vector<int>>();
  SignedPermutation w{window};
  Family family = family_from_letter(j.at("family").get<std::string>().at(0));
  GroupContext ctx(family, w.size());
  if (!w.member_of(ctx)) throw std::domain_error("window is not a member of the stated family");
  if (ctx_out) *ctx_out = ctx;
  return w;
}

json blocks_to_json(const BlockDecomposition& dec) {
  return json{{"cuts", dec.cuts}, {"parities", std::vector<bool>(dec.odd_block)}};
}

json length_to_json(const LengthBreakdown& b) {
  return json{{"inv", b.inv}, {"neg", b.neg}, {"nsp", b.nsp}, {"total", b.total}};
}

json depth_to_json(const DepthBreakdown& b) {
  return json{{"exceedance_sum", b.exceedance_sum},
              {"neg_abs_sum", b.neg_abs_sum},
              {"oddness", b.oddness},
              {"correction", b.correction},
              {"total", b.total}};
}

namespace {

json reflection_to_json(const Reflection& t, const GroupContext& ctx) {
  json j;
  switch (t.kind()) {
    case Reflection::Kind::Swap: j["kind"] = "Swap"; break;
    case Reflection::Kind::BarSwap: j["kind"] = "BarSwap"; break;
    case Reflection::Kind::BarFix: j["kind"] = "BarFix"; break;
  }
  j["i"] = t.i();
  if (t.kind() != Reflection::Kind::BarFix) j["j"] = t.j();
  j["dp"] = reflection_depth(t, ctx);
  return j;
}

}  // namespace

json factorization_to_json(const Factorization& f, const GroupContext& ctx) {
  json reflections = json::array();
  for (const Reflection& t : f.reflections) reflections.push_back(reflection_to_json(t, ctx));
  return json{{"reflections", reflections},
              {"depth_cost", f.depth_cost},
              {"length_cost", f.length_cost}};
}

json report_to_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& item : report.items) {
    json j{{"name", item.name}, {"ok", item.ok}};
    if (!item.detail.empty()) j["detail"] = item.detail;
    checks.push_back(j);
  }
  return json{{"checks", checks}, {"all_ok", report.all_ok()}};
}

json count_table_to_json(const CountTable& table) {
  json counts = json::object();
  for (const auto& [key, count] : table.counts) counts[std::to_string(key)] = count;
  return json{{"family", std::string(1, family_letter(table.family))},
              {"n", table.rank},
              {"statistic", table.statistic},
              {"source", table.source},
              {"counts", counts}};
}

json pattern_lists_json() {
  return json{{"b_depth_eq_length", b_depth_eq_length_patterns()},
              {"d_depth_eq_length", d_depth_eq_length_patterns()},
              {"b_boolean", b_boolean_patterns()},
              {"d_boolean", d_boolean_patterns()}};
}

}  // namespace coxdepth
