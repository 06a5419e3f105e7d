#ifndef QUDIT_MAGIC_REPORT_HPP_
#define QUDIT_MAGIC_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qudit_magic/distillation.hpp"

namespace qudit_magic {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  nlohmann::ordered_json grids = nlohmann::ordered_json::object();
  std::string version = kToolkitVersion;
  std::optional<double> wall_clock_seconds;

  nlohmann::ordered_json to_json() const;
};

// 9 significant digits, shortest of fixed/scientific as printf %.9g.
std::string format_real(long double value);

using CsvRow = std::vector<std::string>;

// Manifest as a leading "# manifest: {...}" comment line (wall clock
// omitted so reruns are byte-identical), then the header and rows.
std::string to_csv(const RunManifest& manifest, const CsvRow& header,
                   const std::vector<CsvRow>& rows);

// {"manifest": ..., "results": ...}.
std::string to_json_report(const RunManifest& manifest,
                           const nlohmann::ordered_json& results);

struct TableCell {
  int d = 0;
  int m = 0;
  std::optional<Real> value;  // absent where no protocol exists
};

inline const std::vector<int> kTableDimensions{2, 3, 5, 7, 11, 13, 17, 19};
inline constexpr int kTableMaxLevel = 4;

std::vector<TableCell> threshold_table(Real tol);
std::vector<TableCell> gamma_star_table();

}  // namespace qudit_magic

#endif  // QUDIT_MAGIC_REPORT_HPP_
