#pragma once

// Command implementations behind the qdeficit CLI. Each command computes a
// structured result and renders it to text; the executable only parses
// flags, reads inputs and writes the rendered text.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qdeficit/classical.hpp"
#include "qdeficit/monogamy.hpp"

namespace qdeficit {

enum class OutputFormat { csv, json, text };

OutputFormat parse_output_format(const std::string& s);  // throws InvalidArgument
LogBase parse_log_base(const std::string& s);            // throws InvalidArgument

// table1 ---------------------------------------------------------------------

struct Table1Row {
  std::string state;
  int n = 0;
  double d_pair_n = 0.0;
  double d_bipart_n = 0.0;
  double delta_n = 0.0;
};

// W and WWBAR rows for n = 1..5.
std::vector<Table1Row> table1_rows(LogBase base = LogBase::nats);
std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format, LogBase base);

// fig1 -----------------------------------------------------------------------

struct Fig1Config {
  ThetaGrid grid;
  std::vector<int> n_set = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  LogBase base = LogBase::nats;
  int n_max = kDefaultPowerLimit;
};

ThetaSweep run_fig1(const Fig1Config& config);
std::string render_fig1(const ThetaSweep& sweep, const Fig1Config& config, OutputFormat format);

// deficit --------------------------------------------------------------------

struct DeficitResult {
  DeficitReport report;
  ResidualTangle tangle;
  std::vector<PowerScanRow> scan;  // n = 1..max(r, 1), or the whole range if r is absent
};

DeficitResult run_deficit(const StateSpec& spec, LogBase base, int n_max);
nlohmann::json deficit_json(const DeficitResult& result);
std::string render_deficit(const DeficitResult& result, OutputFormat format);

// classical-scan -------------------------------------------------------------

struct ClassicalScanConfig {
  int samples = 10000;
  Dims3 dims = {2, 2, 2};
  std::uint64_t seed = 0;
  int n_max = kDefaultPowerLimit;
  LogBase base = LogBase::nats;
};

struct ClassicalScanRow {
  std::string label;  // per-instance seed, or "input" for a loaded pmf
  MITriple triple;
  std::optional<int> min_n;
  InequalityReport inequalities;
};

struct ClassicalScanSummary {
  int samples = 0;
  std::array<int, 5> violations{};  // same order as InequalityReport::slacks()
  int no_finite_r = 0;
  double no_finite_r_fraction = 0.0;
};

struct ClassicalScanResult {
  std::vector<ClassicalScanRow> rows;
  ClassicalScanSummary summary;
};

// Instance k uses seed + k.
ClassicalScanResult run_classical_scan(const ClassicalScanConfig& config);
ClassicalScanResult run_classical_single(const JointPMF3& pmf, LogBase base, int n_max);

// {"dims": [nx, ny, nz], "p": [...]} with p indexed [x][y][z] row-major.
JointPMF3 parse_pmf(std::string_view json_text);

std::string render_classical_rows(const ClassicalScanResult& result, OutputFormat format);
nlohmann::json classical_summary_json(const ClassicalScanResult& result,
                                      const ClassicalScanConfig& config);

}  // namespace qdeficit
