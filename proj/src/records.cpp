#include "dlambert/records.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace dlambert {

namespace {

using ordered_json = nlohmann::ordered_json;

u64 parse_u64(std::string_view text, std::string_view field) {
  u64 value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("bad integer '" + std::string(text) + "' in field " + std::string(field));
  }
  return value;
}

int pattern_rank(const std::string& pattern) {
  if (pattern == kSolvePattern) return -1;
  if (auto id = parse_pattern_id(pattern)) return static_cast<int>(*id);
  return 1000;
}

std::string join_solutions(const std::vector<u64>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<u64> split_solutions(std::string_view text) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t next = text.find(' ', pos);
    const std::size_t end = next == std::string_view::npos ? text.size() : next;
    out.push_back(parse_u64(text.substr(pos, end - pos), "solutions"));
    pos = end + 1;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::vector<std::string> split_csv(std::string_view row) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char ch = row[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) throw ConfigError("unterminated quote in CSV row");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

const char* to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json-lines";
}

bool record_less(const ResultRecord& a, const ResultRecord& b) {
  return std::forward_as_tuple(a.p, a.e, a.g, a.c, pattern_rank(a.pattern), a.pattern) <
         std::forward_as_tuple(b.p, b.e, b.g, b.c, pattern_rank(b.pattern), b.pattern);
}

std::string witness_string(const Witness& w) {
  std::string out;
  for (const auto& [key, value] : w.values) {
    if (!out.empty()) out.push_back(';');
    out += key + "=" + to_decimal(value);
  }
  return out;
}

ResultRecord record_from_report(const PatternReport& report, u64 m_p, u64 m_pe,
                                u64 elapsed_us) {
  ResultRecord r;
  r.p = report.input.p;
  r.e = report.input.e;
  r.g = report.input.g;
  r.c = report.input.c;
  r.pattern = to_string(report.id);
  r.verdict = to_string(report.verdict);
  r.m_p = m_p;
  r.m_pe = m_pe;
  r.elapsed_us = elapsed_us;
  if (report.witness) {
    r.solutions = report.witness->solutions;
    if (auto it = report.witness->values.find("sum"); it != report.witness->values.end()) {
      r.sum = to_decimal(it->second);
    }
    r.witness = witness_string(*report.witness);
  }
  return r;
}

std::string to_json_line(const ResultRecord& r) {
  ordered_json j;
  j["p"] = std::to_string(r.p);
  j["e"] = std::to_string(r.e);
  j["g"] = std::to_string(r.g);
  j["c"] = std::to_string(r.c);
  j["pattern"] = r.pattern;
  j["verdict"] = r.verdict;
  auto sols = ordered_json::array();
  for (u64 x : r.solutions) sols.push_back(std::to_string(x));
  j["solutions"] = std::move(sols);
  j["sum"] = r.sum;
  j["m_p"] = std::to_string(r.m_p);
  j["m_pe"] = std::to_string(r.m_pe);
  j["witness"] = r.witness;
  j["elapsed_us"] = std::to_string(r.elapsed_us);
  return j.dump();
}

ResultRecord from_json_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed json record: ") + ex.what());
  }
  auto text = [&](const char* key) -> std::string {
    if (!j.contains(key) || !j[key].is_string()) {
      throw ConfigError(std::string("json record lacks string field ") + key);
    }
    return j[key].get<std::string>();
  };
  ResultRecord r;
  r.p = parse_u64(text("p"), "p");
  r.e = parse_u64(text("e"), "e");
  r.g = parse_u64(text("g"), "g");
  r.c = parse_u64(text("c"), "c");
  r.pattern = text("pattern");
  r.verdict = text("verdict");
  if (!j.contains("solutions") || !j["solutions"].is_array()) {
    throw ConfigError("json record lacks solutions array");
  }
  for (const auto& s : j["solutions"]) {
    if (!s.is_string()) throw ConfigError("solutions must be decimal strings");
    r.solutions.push_back(parse_u64(s.get<std::string>(), "solutions"));
  }
  r.sum = text("sum");
  r.m_p = parse_u64(text("m_p"), "m_p");
  r.m_pe = parse_u64(text("m_pe"), "m_pe");
  r.witness = text("witness");
  r.elapsed_us = parse_u64(text("elapsed_us"), "elapsed_us");
  return r;
}

std::string to_csv_row(const ResultRecord& r) {
  const std::string fields[] = {std::to_string(r.p),     std::to_string(r.e),
                                std::to_string(r.g),     std::to_string(r.c),
                                r.pattern,               r.verdict,
                                join_solutions(r.solutions), r.sum,
                                std::to_string(r.m_p),   std::to_string(r.m_pe),
                                r.witness,               std::to_string(r.elapsed_us)};
  std::string out;
  for (std::size_t i = 0; i < std::size(fields); ++i) {
    if (i != 0) out.push_back(',');
    out += csv_field(fields[i]);
  }
  return out;
}

ResultRecord from_csv_row(std::string_view row) {
  const auto f = split_csv(row);
  if (f.size() != 12) {
    throw ConfigError("csv row has " + std::to_string(f.size()) + " fields, expected 12");
  }
  ResultRecord r;
  r.p = parse_u64(f[0], "p");
  r.e = parse_u64(f[1], "e");
  r.g = parse_u64(f[2], "g");
  r.c = parse_u64(f[3], "c");
  r.pattern = f[4];
  r.verdict = f[5];
  r.solutions = split_solutions(f[6]);
  r.sum = f[7];
  r.m_p = parse_u64(f[8], "m_p");
  r.m_pe = parse_u64(f[9], "m_pe");
  r.witness = f[10];
  r.elapsed_us = parse_u64(f[11], "elapsed_us");
  return r;
}

void write_records(std::ostream& out, OutputFormat format, const std::vector<ResultRecord>& records) {
  if (format == OutputFormat::csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) out << to_csv_row(r) << '\n';
  } else {
    for (const auto& r : records) out << to_json_line(r) << '\n';
  }
}

std::vector<ResultRecord> read_records(std::istream& in, OutputFormat format) {
  std::vector<ResultRecord> out;
  std::string line;
  if (format == OutputFormat::csv) {
    if (!std::getline(in, line) || line != kCsvHeader) {
      throw ConfigError("csv file does not start with the expected header");
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(format == OutputFormat::csv ? from_csv_row(line) : from_json_line(line));
  }
  return out;
}

void write_records_file(const std::string& path, OutputFormat format,
                        const std::vector<ResultRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_records(out, format, records);
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

std::vector<ResultRecord> read_records_file(const std::string& path, OutputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return read_records(in, format);
}

}  // namespace dlambert
