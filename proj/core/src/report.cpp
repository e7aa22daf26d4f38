#include "logizono/report.hpp"

#include <cstdio>

#include "logizono/errors.hpp"
#include "serialize_json.hpp"

namespace logizono {

namespace {

using nlohmann::json;

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

std::string report_csv(const ReachResult& result, const ReportMeta& meta) {
  std::string out;
  out += "# algebra=" + std::string(algebra_name(result.algebra));
  out += " mode=" + std::string(mode_name(result.mode)) + "\n";
  if (!meta.model.empty()) out += "# model=" + meta.model + "\n";
  out += "# seed=" + (meta.seed ? std::to_string(*meta.seed) : std::string("none")) + "\n";
  out += "steps,time_seconds,size\n";
  for (const auto& r : result.records) {
    out += std::to_string(r.step) + "," + seconds(r.time_seconds) + "," +
           std::to_string(r.joint_size) + "\n";
  }
  return out;
}

std::string report_json(const ReachResult& result, const ReportMeta& meta, bool dump_sets) {
  json doc;
  doc["algebra"] = algebra_name(result.algebra);
  doc["mode"] = mode_name(result.mode);
  doc["model"] = meta.model;
  doc["seed"] = meta.seed ? json(*meta.seed) : json(nullptr);
  doc["state_names"] = result.state_names;
  doc["rows"] = json::array();
  for (const auto& r : result.records) {
    json row{{"steps", r.step},
             {"time_seconds", r.time_seconds},
             {"size", r.joint_size},
             {"marginal_size", r.marginal_size}};
    if (dump_sets) {
      json sets = json::object();
      for (std::size_t j = 0; j < r.sets.size() && j < result.state_names.size(); ++j) {
        sets[result.state_names[j]] = detail::set_json(r.sets[j]);
      }
      row["sets"] = sets;
      if (r.joint) row["joint"] = detail::set_json(*r.joint);
    }
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

ParsedReport parse_report_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    ParsedReport p;
    p.algebra = doc.at("algebra").get<std::string>();
    p.mode = doc.at("mode").get<std::string>();
    p.model = doc.value("model", std::string());
    if (doc.contains("seed") && !doc["seed"].is_null()) p.seed = doc["seed"].get<std::uint64_t>();
    for (const auto& r : doc.at("rows")) {
      p.rows.push_back({r.at("steps").get<std::size_t>(), r.at("time_seconds").get<double>(),
                        r.at("size").get<std::size_t>(), r.value("marginal_size", std::size_t{0})});
    }
    return p;
  } catch (const json::exception& e) {
    throw ModelError(std::string("invalid report: ") + e.what());
  }
}

}  // namespace logizono
