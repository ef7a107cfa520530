#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dee/bounds.hpp"
#include "dee/graph.hpp"

namespace dee {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct ReportOptions {
  int precision = 6;  // significant digits
};

/// x rounded to `precision` significant digits, negative zero folded to zero.
double round_significant(double x, int precision);
/// "%.<precision>g" formatting.
std::string format_number(double x, int precision);
/// Plain number when representable, otherwise "<rest> + e^<exponent>".
std::string format_exp_sum(const ExpSum& v, int precision);

/// FNV-1a 64-bit digest of the input bytes as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

struct ReportInput {
  const Graph& graph;
  const BoundsReport& bounds;
  std::optional<std::string> family;  // set when the graph was generated
  std::string_view source_text;       // digested for provenance
};

/// Single JSON object, keys in a fixed order:
/// graph, profile, spectrum, dee, bounds, provenance.
nlohmann::ordered_json report_json(const ReportInput& in, const ReportOptions& opt = {});
std::string report_table(const ReportInput& in, const ReportOptions& opt = {});

struct SweepRow {
  int n = 0;
  std::optional<BoundsReport> report;
  std::string error;  // set when report is absent
};

/// One row per order in [start, end], in ascending order. Instances run
/// concurrently; a failing instance becomes an error row.
std::vector<SweepRow> run_sweep(FamilyTag family, int start, int end);

std::string sweep_csv(FamilyTag family, const std::vector<SweepRow>& rows, const ReportOptions& opt = {});
nlohmann::ordered_json sweep_json(FamilyTag family, const std::vector<SweepRow>& rows,
                                  const ReportOptions& opt = {});

}  // namespace dee
