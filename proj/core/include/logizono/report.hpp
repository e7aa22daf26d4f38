#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logizono/reach.hpp"

namespace logizono {

/// Provenance printed at the top of every report.
struct ReportMeta {
  std::string model;
  std::optional<std::uint64_t> seed;
};

/// `#`-prefixed header lines, then `steps,time_seconds,size`, one row per
/// recorded step.
std::string report_csv(const ReachResult& result, const ReportMeta& meta);

/// Same rows as JSON objects, plus `marginal_size`. With `dump_sets`, each
/// row carries its per-variable sets under "sets".
std::string report_json(const ReachResult& result, const ReportMeta& meta, bool dump_sets = false);

struct ReportRow {
  std::size_t steps = 0;
  double time_seconds = 0.0;
  std::size_t size = 0;
  std::size_t marginal_size = 0;
};

struct ParsedReport {
  std::string algebra;
  std::string mode;
  std::string model;
  std::optional<std::uint64_t> seed;
  std::vector<ReportRow> rows;
};

/// Reads report_json output back. Throws ModelError.
ParsedReport parse_report_json(std::string_view text);

}  // namespace logizono
