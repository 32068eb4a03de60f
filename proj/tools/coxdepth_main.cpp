// Command-line front end: every operation of the library with
// machine-readable JSON (or CSV) output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "coxdepth/blocks.hpp"
#include "coxdepth/cayley.hpp"
#include "coxdepth/classify.hpp"
#include "coxdepth/counting.hpp"
#include "coxdepth/factorize.hpp"
#include "coxdepth/serialize.hpp"
#include "coxdepth/stats.hpp"
#include "coxdepth/verify.hpp"

using namespace coxdepth;

namespace {

struct Options {
  std::string config_path;
  std::string type;
  std::string window;
  int n = 0;
  int max_n = 0;
  int jobs = 0;
  std::string stat;
  std::string csv_path;
  bool emit_word = false;
};

struct Config {
  std::optional<std::uint64_t> max_order;
  std::optional<std::string> default_family;
};

Config load_config(const std::string& path) {
  Config config;
  if (path.empty()) return config;
  std::ifstream in(path);
  if (!in.good()) throw CLI::ValidationError("--config", "cannot open " + path);
  json j = json::parse(in);
  if (j.contains("max_order")) config.max_order = j.at("max_order").get<std::uint64_t>();
  if (j.contains("default_family")) config.default_family = j.at("default_family").get<std::string>();
  return config;
}

std::uint64_t resolve_max_order(const Config& config) {
  if (std::getenv("COXDEPTH_MAX_ORDER") == nullptr && config.max_order) return *config.max_order;
  return CayleyGraph::default_max_order();
}

Family resolve_family(const Options& opt, const Config& config) {
  std::string type = opt.type;
  if (type.empty() && config.default_family) type = *config.default_family;
  if (type.empty()) throw CLI::RequiredError("--type");
  return family_from_letter(type.at(0));
}

GroupContext element_context(const Options& opt, const Config& config) {
  Family family = resolve_family(opt, config);
  if (opt.window.empty()) throw CLI::RequiredError("--w");
  int commas = static_cast<int>(std::count(opt.window.begin(), opt.window.end(), ','));
  GroupContext ctx(family, commas + 1);
  if (opt.n != 0 && opt.n != ctx.rank)
    throw CLI::ValidationError("--n", "window has rank " + std::to_string(ctx.rank));
  return ctx;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_stat(const Options& opt, const Config& config) {
  GroupContext ctx = element_context(opt, config);
  SignedPermutation w = parse_window(opt.window, ctx);
  json out = window_to_json(w, ctx);
  out["length"] = length_to_json(length(w, ctx));
  out["depth"] = depth_to_json(depth(w, ctx));
  if (ctx.family != Family::A) out["depth_alt"] = depth_alt(w, ctx);
  out["blocks_b"] = blocks_to_json(b_decompose(w));
  out["oddness_b"] = oddness_b(w);
  if (ctx.family == Family::D) {
    out["blocks_d"] = blocks_to_json(d_decompose(w));
    out["oddness_d"] = oddness_d(w);
  }
  emit(out);
  return 0;
}

int run_factor(const Options& opt, const Config& config) {
  GroupContext ctx = element_context(opt, config);
  SignedPermutation w = parse_window(opt.window, ctx);
  Factorization f = depth_factorization(w, ctx);
  CheckReport report = verify(f, w, ctx);
  json out = window_to_json(w, ctx);
  out["factorization"] = factorization_to_json(f, ctx);
  out["verification"] = report_to_json(report);
  if (opt.emit_word) out["word"] = expand_to_word(f, ctx);
  emit(out);
  return report.all_ok() ? 0 : 1;
}

int run_oracle(const Options& opt, const Config& config) {
  GroupContext ctx = element_context(opt, config);
  SignedPermutation w = parse_window(opt.window, ctx);
  CayleyGraph graph(ctx, resolve_max_order(config));
  json out = window_to_json(w, ctx);
  out["dp"] = graph.depth(w);
  out["lt"] = graph.reflection_length(w);
  out["lr"] = graph.reduced_reflection_length(w);
  out["ls"] = graph.coxeter_length(w);
  emit(out);
  return 0;
}

int run_classify(const Options& opt, const Config& config) {
  GroupContext ctx = element_context(opt, config);
  SignedPermutation w = parse_window(opt.window, ctx);
  json out = window_to_json(w, ctx);
  out["short_braid_avoiding"] = is_short_braid_avoiding(w, ctx);
  out["boolean"] = is_boolean(w, ctx);
  out["depth_eq_length"] = depth_equals_length(w, ctx);
  json avoids = json::object();
  if (ctx.family == Family::B) {
    avoids["b_depth_eq_length"] = avoids_all(w, b_depth_eq_length_patterns());
    avoids["b_boolean"] = avoids_all(w, b_boolean_patterns());
    out["fully_commutative_top_and_bottom"] = is_fully_commutative_top_and_bottom(w, ctx);
  }
  if (ctx.family == Family::D) {
    avoids["d_depth_eq_length"] = avoids_all(w, d_depth_eq_length_patterns());
    avoids["d_boolean"] = avoids_all(w, d_boolean_patterns());
  }
  out["avoids"] = avoids;
  emit(out);
  return 0;
}

int run_count(const Options& opt, const Config& config) {
  Family family = resolve_family(opt, config);
  if (opt.n <= 0) throw CLI::RequiredError("--n");
  GroupContext ctx(family, opt.n);
  std::uint64_t max_order = resolve_max_order(config);

  std::vector<CountTable> tables;
  if (opt.stat == "depth") {
    tables.push_back(depth_distribution(ctx));
  } else if (opt.stat == "dp_eq_ls") {
    CountTable enumerated{ctx.family, ctx.rank, "dp_eq_ls", "enumerated", {}};
    enumerated.counts[0] = count_depth_eq_length(ctx);
    tables.push_back(enumerated);
    if (ctx.family != Family::A && !(ctx.family == Family::D && ctx.rank < 2)) {
      CountTable closed{ctx.family, ctx.rank, "dp_eq_ls", "closed_form", {}};
      closed.counts[0] = closed_form_depth_eq_length(ctx);
      tables.push_back(closed);
    }
  } else if (opt.stat == "boolean") {
    CayleyGraph graph(ctx, max_order);
    CountTable enumerated{ctx.family, ctx.rank, "boolean_by_length", "enumerated", {}};
    for (std::size_t k = 0; k < graph.order(); ++k) {
      const SignedPermutation& w = graph.element(k);
      int ls = length(w, ctx).total;
      if (graph.reflection_length_table()[k] == ls && depth(w, ctx).total == ls)
        ++enumerated.counts[ls];
    }
    tables.push_back(enumerated);
    if (ctx.family != Family::A) {
      CountTable closed{ctx.family, ctx.rank, "boolean_by_length", "closed_form", {}};
      int max_k = enumerated.counts.empty() ? 0 : enumerated.counts.rbegin()->first;
      for (int k = 0; k <= max_k + 1; ++k) {
        std::uint64_t value = closed_form_boolean_by_length(ctx, k);
        if (value > 0) closed.counts[k] = value;
      }
      tables.push_back(closed);
    }
  } else {
    throw CLI::ValidationError("--stat", "expected depth, dp_eq_ls, or boolean");
  }

  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    if (!out.good()) throw CLI::ValidationError("--csv", "cannot open " + opt.csv_path);
    write_csv(tables, out);
    return 0;
  }
  json out = json::array();
  for (const CountTable& table : tables) out.push_back(count_table_to_json(table));
  emit(out);
  return 0;
}

int run_verify_all(const Options& opt, const Config& config) {
  Family family = resolve_family(opt, config);
  if (opt.max_n <= 0) throw CLI::RequiredError("--max-n");
  std::vector<VerificationResult> results =
      run_verification(family, opt.max_n, opt.jobs, resolve_max_order(config));
  json out;
  json checks = json::array();
  for (const VerificationResult& r : results) {
    json j{{"name", r.name}, {"ok", r.ok}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    checks.push_back(j);
  }
  out["checks"] = checks;
  out["all_ok"] = all_passed(results);
  emit(out);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"depth, length, and reflection statistics on the classical Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "JSON config file (caps, default family)");

  auto add_common = [&](CLI::App* cmd, bool wants_window) {
    cmd->fallthrough();
    cmd->add_option("--type", opt.type, "group family: A, B, or D");
    if (wants_window) cmd->add_option("--w", opt.window, "window, e.g. \"-2,1,3\"");
    cmd->add_option("--n", opt.n, "rank (checked against --w when both are given)");
  };

  CLI::App* stat = app.add_subcommand("stat", "length and depth breakdowns of one element");
  add_common(stat, true);
  CLI::App* factor = app.add_subcommand("factor", "depth-realizing reduced factorization");
  add_common(factor, true);
  factor->add_flag("--word", opt.emit_word, "also expand to a reduced simple-generator word");
  CLI::App* oracle = app.add_subcommand("oracle", "graph-search statistics dp, l_T, l_R, l_S");
  add_common(oracle, true);
  CLI::App* classify = app.add_subcommand("classify", "predicates and pattern avoidance");
  add_common(classify, true);
  CLI::App* count = app.add_subcommand("count", "statistic tables over a whole group");
  add_common(count, false);
  count->add_option("--stat", opt.stat, "depth, dp_eq_ls, or boolean")->required();
  count->add_option("--csv", opt.csv_path, "write CSV to this path instead of JSON");
  CLI::App* verify_all = app.add_subcommand("verify-all", "run the whole invariant suite");
  verify_all->add_option("--type", opt.type, "group family: A, B, or D");
  verify_all->add_option("--max-n", opt.max_n, "largest rank to verify")->required();
  verify_all->add_option("--jobs", opt.jobs, "worker threads (default: hardware parallelism)");

  try {
    app.parse(argc, argv);
    Config config = load_config(opt.config_path);
    if (stat->parsed()) return run_stat(opt, config);
    if (factor->parsed()) return run_factor(opt, config);
    if (oracle->parsed()) return run_oracle(opt, config);
    if (classify->parsed()) return run_classify(opt, config);
    if (count->parsed()) return run_count(opt, config);
    if (verify_all->parsed()) return run_verify_all(opt, config);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
