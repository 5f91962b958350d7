#pragma once

/**
 * @file records.hpp
 * @brief Machine-readable sweep results.
 *
 * Two formats are supported:
 *
 *  - json-lines: one JSON object per line, UTF-8. Every integer is written
 *    as a decimal string so consumers limited to doubles do not truncate.
 *    Keys appear in the fixed order of kCsvHeader.
 *  - csv: the header line kCsvHeader followed by one row per record.
 *    Solutions are space separated inside their column; fields containing
 *    a comma, quote or newline are double-quoted with quotes doubled.
 */

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dlambert/modarith.hpp"
#include "dlambert/patterns.hpp"

namespace dlambert {

inline constexpr std::string_view kCsvHeader =
    "p,e,g,c,pattern,verdict,solutions,sum,m_p,m_pe,witness,elapsed_us";

/// Pattern name used for plain solve records.
inline constexpr std::string_view kSolvePattern = "solve";
inline constexpr std::string_view kSolvedVerdict = "solved";

struct ResultRecord {
  u64 p = 0;
  u64 e = 0;
  u64 g = 0;
  u64 c = 0;
  std::string pattern;
  std::string verdict;
  std::vector<u64> solutions;
  std::string sum;  // decimal; extended-window sums can exceed 64 bits
  u64 m_p = 0;
  u64 m_pe = 0;
  std::string witness;  // "key=value;key=value"
  u64 elapsed_us = 0;

  bool operator==(const ResultRecord&) const = default;
};

enum class OutputFormat { json_lines, csv };

const char* to_string(OutputFormat format);

/// Sort key: (p, e, g, c, pattern) with "solve" before pattern ids in enum order.
bool record_less(const ResultRecord& a, const ResultRecord& b);

ResultRecord record_from_report(const PatternReport& report, u64 m_p, u64 m_pe,
                                u64 elapsed_us);

std::string witness_string(const Witness& w);

std::string to_json_line(const ResultRecord& r);
ResultRecord from_json_line(std::string_view line);

std::string to_csv_row(const ResultRecord& r);
ResultRecord from_csv_row(std::string_view row);

void write_records(std::ostream& out, OutputFormat format, const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_records(std::istream& in, OutputFormat format);

void write_records_file(const std::string& path, OutputFormat format,
                        const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_records_file(const std::string& path, OutputFormat format);

}  // namespace dlambert
