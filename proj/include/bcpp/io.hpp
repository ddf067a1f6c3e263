#ifndef BCPP_IO_HPP
#define BCPP_IO_HPP

#include "bcpp/core.hpp"
#include "bcpp/exact.hpp"
#include "bcpp/reduction.hpp"
#include "bcpp/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bcpp {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

inline Rational height_from_json(const Json& j, std::size_t index, const char* bar) {
  const std::string where = "chart " + std::to_string(index) + " bar '" + bar + "'";
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError(where + " must be a rational string such as \"3/5\" or \"0.6\"");
}

inline const Json& require_field(const Json& j, const char* name, std::string_view what) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string(what) + ": missing field '" + name + "'");
  return j.at(name);
}

}  // namespace detail

/// Parses `{"charts": [{"a": "<rational>", "b": "<rational>"}, ...]}`.
inline Instance load_instance(std::string_view text) {
  const Json doc = detail::parse_json(text, "instance");
  const Json& charts_json = detail::require_field(doc, "charts", "instance");
  if (!charts_json.is_array()) throw ParseError("instance: 'charts' must be an array");
  if (charts_json.empty()) throw ParseError("instance: empty chart list");
  std::vector<BarChart> charts;
  for (std::size_t i = 0; i < charts_json.size(); ++i) {
    const Json& c = charts_json[i];
    const std::string what = "chart " + std::to_string(i);
    charts.push_back({detail::height_from_json(detail::require_field(c, "a", what), i, "a"),
                      detail::height_from_json(detail::require_field(c, "b", what), i, "b")});
  }
  try {
    return Instance(std::move(charts));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline Json to_json(const Instance& instance) {
  Json charts = Json::array();
  for (const auto& c : instance.charts())
    charts.push_back({{"a", to_string(c.a)}, {"b", to_string(c.b)}});
  return Json{{"charts", std::move(charts)}};
}

/// `{"assignment": [...], "length": L}` with 1-based bins.
inline Json to_json(const Instance& instance, const Packing& packing) {
  return Json{{"assignment", packing.assignment},
              {"length", packing_length(instance, packing)}};
}

struct PackingFile {
  Packing packing;
  std::optional<std::size_t> declared_length;
};

inline PackingFile load_packing(std::string_view text) {
  const Json doc = detail::parse_json(text, "packing");
  const Json& assignment = detail::require_field(doc, "assignment", "packing");
  if (!assignment.is_array()) throw ParseError("packing: 'assignment' must be an array");
  PackingFile out;
  for (const auto& v : assignment) {
    if (!v.is_number_integer()) throw ParseError("packing: bin indices must be integers");
    out.packing.assignment.push_back(v.get<int>());
  }
  if (doc.contains("length")) {
    if (!doc["length"].is_number_unsigned()) throw ParseError("packing: 'length' must be a count");
    out.declared_length = doc["length"].get<std::size_t>();
  }
  return out;
}

inline Json to_json(const FeasibilityReport& report) {
  Json loads = Json::object();
  for (const auto& [bin, load] : report.report.loads) loads[std::to_string(bin)] = to_string(load);
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"bin", v.bin}, {"load", to_string(v.load)}});
  return Json{{"feasible", report.feasible()},
              {"used_bins", report.report.used_bins()},
              {"loads", std::move(loads)},
              {"violations", std::move(violations)}};
}

inline Json to_json(const ChainDecomposition& chains) {
  Json out = Json::array();
  for (const auto& c : chains.chains) out.push_back(c);
  return out;
}

inline Json to_json(const Instance& instance, const ExactResult& result) {
  Json out = to_json(instance, result.witness);
  out["opt_length"] = result.opt_length;
  out["k1"] = result.k1;
  out["k2"] = result.k2;
  return out;
}

inline Json to_json(const Instance& instance, const LinearResult& result) {
  Json out = to_json(instance, result.witness);
  out["lambda"] = result.chains.lambda();
  out["chains"] = to_json(result.chains);
  return out;
}

/// Parses `{"x": [...], "y": [...], "z": [...], "b": B}`.
inline NdmInstance load_ndm(std::string_view text) {
  const Json doc = detail::parse_json(text, "NDM");
  auto list = [&](const char* name) {
    const Json& j = detail::require_field(doc, name, "NDM");
    if (!j.is_array()) throw ParseError(std::string("NDM: '") + name + "' must be an array");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("NDM: elements must be integers");
      out.push_back(v.get<std::int64_t>());
    }
    return out;
  };
  const Json& b = detail::require_field(doc, "b", "NDM");
  if (!b.is_number_integer()) throw ParseError("NDM: 'b' must be an integer");
  try {
    return NdmInstance(list("x"), list("y"), list("z"), b.get<std::int64_t>());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("NDM: ") + e.what());
  }
}

inline Json to_json(const NdmInstance& ndm) {
  return Json{{"x", ndm.x()}, {"y", ndm.y()}, {"z", ndm.z()}, {"b", ndm.target()}};
}

inline Json to_json(const ReductionReport& report) {
  Json partition = nullptr;
  if (report.partition) {
    partition = Json::array();
    for (const auto& t : *report.partition) partition.push_back({t[0], t[1], t[2]});
  }
  return Json{{"ndm_yes", report.ndm_yes},
              {"partition", std::move(partition)},
              {"opt_length", report.opt_length},
              {"bin_budget", report.bin_budget},
              {"equivalence_holds", report.equivalence_holds}};
}

}  // namespace bcpp

#endif  // BCPP_IO_HPP
