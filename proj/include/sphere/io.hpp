#pragma once

#include "sphere/point_config.hpp"
#include "sphere/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphere {

/// Configuration text: a line "n N", then N rows of n coordinates printed
/// with 17 significant digits. Blank lines and '#' comments are skipped on
/// input.
std::string format_config(const PointConfig& config);

/// Rows whose norm is off by at most 1e-9 are renormalized; larger
/// deviations throw NotOnSphere naming the row. Malformed text throws
/// ParseError naming the line.
PointConfig parse_config(const std::string& text);

PointConfig read_config(const std::string& path);
void write_config(const PointConfig& config, const std::string& path);

/// A search report as stored on disk. Representative coordinates are not
/// part of the report; `full` selects 17 significant digits instead of 12
/// decimals for the real-valued fields.
struct ReportFile {
  SearchReport report;
  bool full = false;
};

std::string format_report(const ReportFile& file);
ReportFile parse_report(const std::string& text);

/// One row of an energy-level table: energy and frequency, optionally
/// followed by parameter count, maximal cosine and symmetry order.
struct LevelRow {
  double energy = 0.0;
  long frequency = 0;
  std::optional<int> parameters;
  std::optional<double> max_cosine;
  std::optional<long> symmetries;
};

/// A level table starts with the word "levels"; otherwise the text is read
/// as a search report and its records become the rows.
std::vector<LevelRow> parse_levels(const std::string& text);

std::string read_text(const std::string& path);
void write_text(const std::string& text, const std::string& path);

/// 12 decimals, or 17 significant digits when full.
std::string format_number(double x, bool full);

}  // namespace sphere
