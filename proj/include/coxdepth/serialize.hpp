#pragma once

#include "json.hpp"

#include "coxdepth/blocks.hpp"
#include "coxdepth/counting.hpp"
#include "coxdepth/factorize.hpp"
#include "coxdepth/group.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

using json = nlohmann::json;

/// {"family":"B","window":[-2,1,3]}
json window_to_json(const SignedPermutation& w, const GroupContext& ctx);
SignedPermutation window_from_json(const json& j, GroupContext* ctx_out = nullptr);

/// {"cuts":[...],"parities":[...]}
json blocks_to_json(const BlockDecomposition& dec);

json length_to_json(const LengthBreakdown& b);
json depth_to_json(const DepthBreakdown& b);

/// {"reflections":[{"kind":"BarSwap","i":1,"j":4,"dp":4},...],
///  "depth_cost":..,"length_cost":..}
json factorization_to_json(const Factorization& f, const GroupContext& ctx);
json report_to_json(const CheckReport& report);
json count_table_to_json(const CountTable& table);

/// The four pattern lists, keyed by their statistic, for the shipped data
/// file and the CLI.
json pattern_lists_json();

}  // namespace coxdepth
