#include "sphere/io.hpp"

#include "sphere/error.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sphere {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

double to_double(const std::string& s, int line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) parse_error(line, "bad number '" + s + "'");
  return v;
}

long to_long(const std::string& s, int line) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) parse_error(line, "bad integer '" + s + "'");
  return v;
}

std::uint64_t to_u64(const std::string& s, int line) {
  errno = 0;
  char* end = nullptr;
  if (!s.empty() && s[0] == '-') parse_error(line, "bad unsigned integer '" + s + "'");
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE) parse_error(line, "bad unsigned integer '" + s + "'");
  return v;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string format_number(double x, bool full) {
  if (full) return g17(x);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string format_config(const PointConfig& config) {
  std::string out = std::to_string(config.dimension()) + " " + std::to_string(config.size()) + "\n";
  for (int i = 0; i < config.size(); ++i) {
    for (int k = 0; k < config.dimension(); ++k) {
      if (k) out += ' ';
      out += g17(config.points()(k, i));
    }
    out += '\n';
  }
  return out;
}

PointConfig parse_config(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) parse_error(1, "empty configuration");
  const Line& head = lines[0];
  if (head.tokens.size() != 2) parse_error(head.number, "expected header 'n N'");
  const long n = to_long(head.tokens[0], head.number);
  const long count = to_long(head.tokens[1], head.number);
  if (n < 2 || count < 1) parse_error(head.number, "need n >= 2 and N >= 1");
  if (static_cast<long>(lines.size()) - 1 != count) {
    parse_error(lines.back().number, "expected " + std::to_string(count) + " rows, found " + std::to_string(lines.size() - 1));
  }
  Matrix x(n, count);
  for (long i = 0; i < count; ++i) {
    const Line& row = lines[i + 1];
    if (static_cast<long>(row.tokens.size()) != n) {
      parse_error(row.number, "row " + std::to_string(i) + " has " + std::to_string(row.tokens.size()) +
                                  " coordinates, expected " + std::to_string(n));
    }
    for (long k = 0; k < n; ++k) x(k, i) = to_double(row.tokens[k], row.number);
    const double norm = x.col(i).norm();
    if (std::abs(norm - 1.0) > 1e-9) {
      throw Error(ErrorKind::NotOnSphere, "row " + std::to_string(i) + " (line " + std::to_string(row.number) +
                                              ") has norm " + g17(norm));
    }
    if (std::abs(norm - 1.0) > PointConfig::kNormTolerance) x.col(i) /= norm;
  }
  return PointConfig(std::move(x));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path);
}

PointConfig read_config(const std::string& path) { return parse_config(read_text(path)); }

void write_config(const PointConfig& config, const std::string& path) { write_text(format_config(config), path); }

std::string format_report(const ReportFile& file) {
  const SearchReport& r = file.report;
  const bool full = file.full;
  std::string out = "search_report\n";
  out += "digits " + std::string(full ? "17" : "12") + "\n";
  out += "n " + std::to_string(r.n) + "\n";
  out += "N " + std::to_string(r.N) + "\n";
  out += "potential " + r.potential.name() + "\n";
  out += "trials " + std::to_string(r.trials) + "\n";
  out += "master_seed " + std::to_string(r.master_seed) + "\n";
  out += "gradient_tolerance " + g17(r.gradient_tolerance) + "\n";
  out += "dedup_tolerance " + g17(r.dedup_tolerance) + "\n";
  out += "unconverged " + std::to_string(r.unconverged) + "\n";
  out += "records " + std::to_string(r.records.size()) + "\n";
  for (const LocalMinimumRecord& m : r.records) {
    out += "record\n";
    out += "energy " + format_number(m.energy, full) + "\n";
    out += "occurrences " + std::to_string(m.occurrences) + "\n";
    if (m.parameter_count >= 0) out += "parameters " + std::to_string(m.parameter_count) + "\n";
    if (m.symmetry_order > 0) {
      out += "balanced " + std::string(m.balanced ? "true" : "false") + "\n";
      out += "symmetries " + std::to_string(m.symmetry_order) + "\n";
    }
    out += "max_cosine " + format_number(m.max_inner_product, full) + "\n";
    out += "seeds";
    for (std::uint64_t s : m.seeds) out += " " + std::to_string(s);
    out += "\nend\n";
  }
  return out;
}

ReportFile parse_report(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  ReportFile file;
  SearchReport& r = file.report;
  std::size_t i = 0;
  auto next = [&](const char* key, std::size_t arity) -> const Line& {
    if (i >= lines.size()) parse_error(lines.empty() ? 1 : lines.back().number, std::string("missing '") + key + "'");
    const Line& line = lines[i++];
    if (line.tokens[0] != key) parse_error(line.number, std::string("expected '") + key + "'");
    if (arity && line.tokens.size() != arity) parse_error(line.number, std::string("malformed '") + key + "'");
    return line;
  };
  next("search_report", 1);
  const Line& digits = next("digits", 2);
  if (digits.tokens[1] != "12" && digits.tokens[1] != "17") parse_error(digits.number, "digits must be 12 or 17");
  file.full = digits.tokens[1] == "17";
  const Line& ln = next("n", 2);
  r.n = static_cast<int>(to_long(ln.tokens[1], ln.number));
  const Line& lN = next("N", 2);
  r.N = static_cast<int>(to_long(lN.tokens[1], lN.number));
  const Line& lp = next("potential", 2);
  try {
    r.potential = PotentialSpec::parse(lp.tokens[1]);
  } catch (const Error& e) {
    parse_error(lp.number, e.what());
  }
  const Line& lt = next("trials", 2);
  r.trials = static_cast<int>(to_long(lt.tokens[1], lt.number));
  const Line& ls = next("master_seed", 2);
  r.master_seed = to_u64(ls.tokens[1], ls.number);
  const Line& lg = next("gradient_tolerance", 2);
  r.gradient_tolerance = to_double(lg.tokens[1], lg.number);
  const Line& ld = next("dedup_tolerance", 2);
  r.dedup_tolerance = to_double(ld.tokens[1], ld.number);
  const Line& lu = next("unconverged", 2);
  r.unconverged = static_cast<int>(to_long(lu.tokens[1], lu.number));
  const Line& lr = next("records", 2);
  const long count = to_long(lr.tokens[1], lr.number);
  for (long k = 0; k < count; ++k) {
    next("record", 1);
    LocalMinimumRecord m;
    const Line& le = next("energy", 2);
    m.energy = to_double(le.tokens[1], le.number);
    const Line& lo = next("occurrences", 2);
    m.occurrences = static_cast<int>(to_long(lo.tokens[1], lo.number));
    if (i < lines.size() && lines[i].tokens[0] == "parameters") {
      const Line& l = next("parameters", 2);
      m.parameter_count = static_cast<int>(to_long(l.tokens[1], l.number));
    }
    if (i < lines.size() && lines[i].tokens[0] == "balanced") {
      const Line& l = next("balanced", 2);
      if (l.tokens[1] != "true" && l.tokens[1] != "false") parse_error(l.number, "balanced must be true or false");
      m.balanced = l.tokens[1] == "true";
      const Line& sym = next("symmetries", 2);
      m.symmetry_order = to_u64(sym.tokens[1], sym.number);
    }
    const Line& lc = next("max_cosine", 2);
    m.max_inner_product = to_double(lc.tokens[1], lc.number);
    const Line& seeds = next("seeds", 0);
    for (std::size_t t = 1; t < seeds.tokens.size(); ++t) m.seeds.push_back(to_u64(seeds.tokens[t], seeds.number));
    next("end", 1);
    r.records.push_back(std::move(m));
  }
  if (i != lines.size()) parse_error(lines[i].number, "unexpected trailing content");
  return file;
}

std::vector<LevelRow> parse_levels(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  std::vector<LevelRow> rows;
  if (lines.empty() || lines[0].tokens[0] != "levels") {
    for (const LocalMinimumRecord& m : parse_report(text).report.records) {
      LevelRow row;
      row.energy = m.energy;
      row.frequency = m.occurrences;
      if (m.parameter_count >= 0) row.parameters = m.parameter_count;
      row.max_cosine = m.max_inner_product;
      if (m.symmetry_order > 0) row.symmetries = static_cast<long>(m.symmetry_order);
      rows.push_back(row);
    }
    return rows;
  }
  if (lines[0].tokens.size() != 1) parse_error(lines[0].number, "expected 'levels'");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2 && l.tokens.size() != 5) parse_error(l.number, "expected 2 or 5 columns");
    LevelRow row;
    row.energy = to_double(l.tokens[0], l.number);
    row.frequency = to_long(l.tokens[1], l.number);
    if (l.tokens.size() == 5) {
      row.parameters = static_cast<int>(to_long(l.tokens[2], l.number));
      row.max_cosine = to_double(l.tokens[3], l.number);
      row.symmetries = to_long(l.tokens[4], l.number);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sphere
