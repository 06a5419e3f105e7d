#include "qudit_magic/report.hpp"

#include <cstdio>
#include <sstream>

#include "qudit_magic/analysis.hpp"
#include "qudit_magic/parallel.hpp"

namespace qudit_magic {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["tolerances"] = tolerances;
  j["grids"] = grids;
  j["version"] = version;
  if (wall_clock_seconds) j["wall_clock_seconds"] = *wall_clock_seconds;
  return j;
}

std::string format_real(long double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9Lg", value);
  return buf;
}

std::string to_csv(const RunManifest& manifest, const CsvRow& header,
                   const std::vector<CsvRow>& rows) {
  RunManifest stable = manifest;
  stable.wall_clock_seconds.reset();
  std::ostringstream os;
  os << "# manifest: " << stable.to_json().dump() << '\n';
  auto write = [&](const CsvRow& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  };
  write(header);
  for (const auto& r : rows) write(r);
  return os.str();
}

std::string to_json_report(const RunManifest& manifest,
                           const nlohmann::ordered_json& results) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest.to_json();
  j["results"] = results;
  return j.dump(2) + '\n';
}

std::vector<TableCell> threshold_table(Real tol) {
  std::vector<TableCell> cells;
  for (int d : kTableDimensions) {
    for (int m = 1; m <= kTableMaxLevel; ++m) cells.push_back(TableCell{d, m, std::nullopt});
  }
  parallel_for(cells.size(), [&](std::size_t i) {
    if (protocol_applicable(cells[i].d, cells[i].m)) {
      cells[i].value = threshold_depolarizing(cells[i].d, cells[i].m, tol).epsilon_star;
    }
  });
  return cells;
}

std::vector<TableCell> gamma_star_table() {
  std::vector<TableCell> cells;
  for (int d : kTableDimensions) {
    for (int m = 1; m <= kTableMaxLevel; ++m) {
      TableCell c{d, m, std::nullopt};
      if (protocol_applicable(d, m)) c.value = gamma_star(d, m);
      cells.push_back(c);
    }
  }
  return cells;
}

}  // namespace qudit_magic
