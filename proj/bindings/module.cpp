#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxdepth/blocks.hpp"
#include "coxdepth/cayley.hpp"
#include "coxdepth/classify.hpp"
#include "coxdepth/counting.hpp"
#include "coxdepth/factorize.hpp"
#include "coxdepth/serialize.hpp"
#include "coxdepth/stats.hpp"
#include "coxdepth/verify.hpp"

namespace py = pybind11;
using namespace coxdepth;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

GroupContext make_context(const std::string& family, int rank) {
  return GroupContext(family_from_letter(family.at(0)), rank);
}

SignedPermutation make_element(const std::string& family, const std::vector<int>& window) {
  SignedPermutation w{window};
  if (!w.member_of(make_context(family, w.size())))
    throw std::domain_error("window is not a member of the stated family");
  return w;
}

}  // namespace

PYBIND11_MODULE(_coxdepth, m) {
  m.doc() = "depth, length, and reflection statistics on the classical Coxeter groups";

  m.def("parse_window", [](const std::string& text, const std::string& family) {
    GroupContext ctx(family_from_letter(family.at(0)),
                     static_cast<int>(std::count(text.begin(), text.end(), ',')) + 1);
    return parse_window(text, ctx).window();
  }, py::arg("text"), py::arg("family"));

  m.def("format_window", [](const std::vector<int>& window) {
    return format_window(SignedPermutation(window));
  }, py::arg("window"));

  m.def("compose", [](const std::vector<int>& u, const std::vector<int>& v) {
    return compose(SignedPermutation(u), SignedPermutation(v)).window();
  }, py::arg("u"), py::arg("v"));

  m.def("inverse", [](const std::vector<int>& w) {
    return SignedPermutation(w).inverse().window();
  }, py::arg("w"));

  m.def("length", [](const std::string& family, const std::vector<int>& w) {
    SignedPermutation elem = make_element(family, w);
    return json_to_py(length_to_json(length(elem, make_context(family, elem.size()))));
  }, py::arg("family"), py::arg("w"));

  m.def("depth", [](const std::string& family, const std::vector<int>& w) {
    SignedPermutation elem = make_element(family, w);
    return json_to_py(depth_to_json(depth(elem, make_context(family, elem.size()))));
  }, py::arg("family"), py::arg("w"));

  m.def("depth_alt", [](const std::string& family, const std::vector<int>& w) {
    SignedPermutation elem = make_element(family, w);
    return depth_alt(elem, make_context(family, elem.size()));
  }, py::arg("family"), py::arg("w"));

  m.def("blocks_b", [](const std::vector<int>& w) {
    return json_to_py(blocks_to_json(b_decompose(SignedPermutation(w))));
  }, py::arg("w"));

  m.def("blocks_d", [](const std::vector<int>& w) {
    return json_to_py(blocks_to_json(d_decompose(SignedPermutation(w))));
  }, py::arg("w"));

  m.def("oddness_b", [](const std::vector<int>& w) { return oddness_b(SignedPermutation(w)); },
        py::arg("w"));
  m.def("oddness_d", [](const std::vector<int>& w) { return oddness_d(SignedPermutation(w)); },
        py::arg("w"));

  m.def("direct_sum", [](const std::vector<int>& u, const std::vector<int>& v) {
    return direct_sum(SignedPermutation(u), SignedPermutation(v)).window();
  }, py::arg("u"), py::arg("v"));

  m.def("factorize", [](const std::string& family, const std::vector<int>& w, bool word) {
    SignedPermutation elem = make_element(family, w);
    GroupContext ctx = make_context(family, elem.size());
    Factorization f = depth_factorization(elem, ctx);
    json out = factorization_to_json(f, ctx);
    out["verification"] = report_to_json(verify(f, elem, ctx));
    if (word) out["word"] = expand_to_word(f, ctx);
    return json_to_py(out);
  }, py::arg("family"), py::arg("w"), py::arg("word") = false);

  m.def("oracle", [](const std::string& family, const std::vector<int>& w) {
    SignedPermutation elem = make_element(family, w);
    GroupContext ctx = make_context(family, elem.size());
    CayleyGraph graph(ctx);
    json out{{"dp", graph.depth(elem)},
             {"lt", graph.reflection_length(elem)},
             {"lr", graph.reduced_reflection_length(elem)},
             {"ls", graph.coxeter_length(elem)}};
    return json_to_py(out);
  }, py::arg("family"), py::arg("w"));

  m.def("classify", [](const std::string& family, const std::vector<int>& w) {
    SignedPermutation elem = make_element(family, w);
    GroupContext ctx = make_context(family, elem.size());
    json out{{"short_braid_avoiding", is_short_braid_avoiding(elem, ctx)},
             {"boolean", is_boolean(elem, ctx)},
             {"depth_eq_length", depth_equals_length(elem, ctx)}};
    if (ctx.family == Family::B) {
      out["avoids_b_depth_eq_length"] = avoids_all(elem, b_depth_eq_length_patterns());
      out["avoids_b_boolean"] = avoids_all(elem, b_boolean_patterns());
    }
    if (ctx.family == Family::D) {
      out["avoids_d_depth_eq_length"] = avoids_all(elem, d_depth_eq_length_patterns());
      out["avoids_d_boolean"] = avoids_all(elem, d_boolean_patterns());
    }
    return json_to_py(out);
  }, py::arg("family"), py::arg("w"));

  m.def("pattern_lists", []() { return json_to_py(pattern_lists_json()); });

  m.def("all_elements", [](const std::string& family, int n) {
    std::vector<std::vector<int>> out;
    for_each_element(make_context(family, n),
                     [&](const SignedPermutation& w) { out.push_back(w.window()); });
    return out;
  }, py::arg("family"), py::arg("n"));

  m.def("depth_distribution", [](const std::string& family, int n) {
    return json_to_py(count_table_to_json(depth_distribution(make_context(family, n))));
  }, py::arg("family"), py::arg("n"));

  m.def("count_depth_eq_length", [](const std::string& family, int n) {
    return count_depth_eq_length(make_context(family, n));
  }, py::arg("family"), py::arg("n"));

  m.def("closed_form_depth_eq_length", [](const std::string& family, int n) {
    return closed_form_depth_eq_length(make_context(family, n));
  }, py::arg("family"), py::arg("n"));

  m.def("count_boolean", [](const std::string& family, int n) {
    return count_boolean(make_context(family, n));
  }, py::arg("family"), py::arg("n"));

  m.def("closed_form_boolean", [](const std::string& family, int n) {
    return closed_form_boolean(make_context(family, n));
  }, py::arg("family"), py::arg("n"));

  m.def("count_boolean_by_length", [](const std::string& family, int n, int k) {
    return count_boolean_by_length(make_context(family, n), k);
  }, py::arg("family"), py::arg("n"), py::arg("k"));

  m.def("closed_form_boolean_by_length", [](const std::string& family, int n, int k) {
    return closed_form_boolean_by_length(make_context(family, n), k);
  }, py::arg("family"), py::arg("n"), py::arg("k"));

  m.def("max_depth_profile", [](const std::string& family, int n) {
    MaxDepthProfile profile = max_depth_profile(make_context(family, n));
    return py::make_tuple(profile.max_depth, profile.achievers);
  }, py::arg("family"), py::arg("n"));

  m.def("shallow_elements", [](const std::string& family, int n) {
    std::vector<std::vector<int>> out;
    for (const SignedPermutation& w : shallow_elements(make_context(family, n)))
      out.push_back(w.window());
    return out;
  }, py::arg("family"), py::arg("n"));

  m.def("verify_all", [](const std::string& family, int max_n, int jobs) {
    py::list out;
    for (const VerificationResult& r : run_verification(family_from_letter(family.at(0)), max_n, jobs)) {
      py::dict item;
      item["name"] = r.name;
      item["ok"] = r.ok;
      item["detail"] = r.detail;
      out.append(item);
    }
    return out;
  }, py::arg("family"), py::arg("max_n"), py::arg("jobs") = 0);
}
