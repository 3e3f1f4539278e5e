#include "qdeficit/commands.hpp"

#include <iomanip>
#include <sstream>

#include "qdeficit/errors.hpp"
#include "qdeficit/format.hpp"

namespace qdeficit {

using nlohmann::json;

namespace {

json num(double v) { return round_significant(v); }

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json optional_num(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
std::string optional_text(const std::optional<double>& v) {
  return v ? format_number(*v) : "none";
}

const char* kInequalityNames[5] = {"strong_subadditivity", "four_term", "reversed_monogamy",
                                   "discard_z", "discard_x"};

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  throw InvalidArgument("unknown format '" + s + "' (expected csv, json or text)");
}

LogBase parse_log_base(const std::string& s) {
  if (s == "nats") return LogBase::nats;
  if (s == "bits") return LogBase::bits;
  throw InvalidArgument("unknown log base '" + s + "' (expected nats or bits)");
}

// ---------------------------------------------------------------------------
// table1

std::vector<Table1Row> table1_rows(LogBase base) {
  std::vector<Table1Row> rows;
  for (NamedState s : {NamedState::W, NamedState::WWBAR}) {
    const DeficitReport report = deficit_report(s, base);
    for (const PowerScanRow& r : power_scan(report, 5))
      rows.push_back({to_string(s), r.n, r.q_pair_n, r.q_bipart_n, r.delta_n});
  }
  return rows;
}

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format, LogBase base) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      out << "state,n,d_pair_n,d_bipart_n,delta_n\n";
      for (const auto& r : rows)
        out << r.state << ',' << r.n << ',' << format_number(r.d_pair_n) << ','
            << format_number(r.d_bipart_n) << ',' << format_number(r.delta_n) << '\n';
      break;
    case OutputFormat::json: {
      json j = {{"base", to_string(base)}, {"rows", json::array()}};
      for (const auto& r : rows)
        j["rows"].push_back({{"state", r.state},
                             {"n", r.n},
                             {"d_pair_n", num(r.d_pair_n)},
                             {"d_bipart_n", num(r.d_bipart_n)},
                             {"delta_n", num(r.delta_n)}});
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::text:
      out << std::left << std::setw(7) << "state" << std::right << std::setw(3) << "n"
          << std::setw(10) << "D_AB^n" << std::setw(10) << "D_A:BC^n" << std::setw(10) << "delta"
          << '\n';
      for (const auto& r : rows)
        out << std::left << std::setw(7) << r.state << std::right << std::setw(3) << r.n
            << std::setw(10) << format_fixed3(r.d_pair_n) << std::setw(10)
            << format_fixed3(r.d_bipart_n) << std::setw(10) << format_fixed3(r.delta_n) << '\n';
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// fig1

ThetaSweep run_fig1(const Fig1Config& config) {
  const std::vector<double> grid = make_theta_grid(config.grid);
  return theta_sweep(grid, config.n_set, config.base, config.n_max);
}

std::string render_fig1(const ThetaSweep& sweep, const Fig1Config& config, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::json) {
    json j = {{"base", to_string(config.base)},
              {"n_set", config.n_set},
              {"n_max", config.n_max},
              {"points", json::array()}};
    std::size_t row = 0;
    for (const ThetaPoint& p : sweep.points) {
      json jp = {{"theta", num(p.theta)},
                 {"d_AB", num(p.report.d_AB)},
                 {"d_AC", num(p.report.d_AC)},
                 {"d_A_BC", num(p.report.d_A_BC)},
                 {"r", optional_int(p.tangle.r)},
                 {"tau_q", optional_num(p.tangle.tau_q)},
                 {"rows", json::array()}};
      for (std::size_t k = 0; k < config.n_set.size(); ++k, ++row) {
        const ThetaSweepRow& r = sweep.rows[row];
        jp["rows"].push_back({{"n", r.n},
                              {"d_pair_n", num(r.d_pair_n)},
                              {"d_bipart_n", num(r.d_bipart_n)},
                              {"delta_n", num(r.delta_n)}});
      }
      j["points"].push_back(std::move(jp));
    }
    out << j.dump(2) << '\n';
    return out.str();
  }

  out << "theta,n,d_pair_n,d_bipart_n,delta_n,min_r\n";
  std::size_t row = 0;
  for (const ThetaPoint& p : sweep.points)
    for (std::size_t k = 0; k < config.n_set.size(); ++k, ++row) {
      const ThetaSweepRow& r = sweep.rows[row];
      out << format_number(r.theta) << ',' << r.n << ',' << format_number(r.d_pair_n) << ','
          << format_number(r.d_bipart_n) << ',' << format_number(r.delta_n) << ','
          << optional_text(p.tangle.r) << '\n';
    }
  return out.str();
}

// ---------------------------------------------------------------------------
// deficit

DeficitResult run_deficit(const StateSpec& spec, LogBase base, int n_max) {
  DeficitResult res;
  res.report = deficit_report(spec, base);
  res.tangle = min_monogamy_power(res.report, n_max);
  res.scan = power_scan(res.report, res.tangle.r ? *res.tangle.r : n_max);
  return res;
}

json deficit_json(const DeficitResult& result) {
  const DeficitReport& r = result.report;
  json scan = json::array();
  for (const PowerScanRow& row : result.scan)
    scan.push_back({{"n", row.n},
                    {"d_AB_n", num(row.q_pair_n)},
                    {"d_AC_n", num(row.q_pair_ac_n)},
                    {"d_A_BC_n", num(row.q_bipart_n)},
                    {"delta_n", num(row.delta_n)}});
  return {{"state", to_json(r.state)},
          {"base", to_string(r.base)},
          {"d_AB", num(r.d_AB)},
          {"d_AC", num(r.d_AC)},
          {"d_A_BC", num(r.d_A_BC)},
          {"r", optional_int(result.tangle.r)},
          {"tau_q", optional_num(result.tangle.tau_q)},
          {"degenerate_marginal", r.degenerate_marginal},
          {"scan", std::move(scan)}};
}

std::string render_deficit(const DeficitResult& result, OutputFormat format) {
  if (format == OutputFormat::json) return deficit_json(result).dump(2) + "\n";
  const DeficitReport& r = result.report;
  std::ostringstream out;
  out << "state,base,d_AB,d_AC,d_A_BC,r,tau_q,degenerate_marginal\n"
      << describe(r.state) << ',' << to_string(r.base) << ',' << format_number(r.d_AB) << ','
      << format_number(r.d_AC) << ',' << format_number(r.d_A_BC) << ','
      << optional_text(result.tangle.r) << ',' << optional_text(result.tangle.tau_q) << ','
      << (r.degenerate_marginal ? "true" : "false") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// classical-scan

namespace {

ClassicalScanRow classical_row(const JointPMF3& pmf, std::string label, LogBase base, int n_max) {
  ClassicalScanRow row;
  row.label = std::move(label);
  row.inequalities = verify_inequality_chain(pmf, base);
  row.triple = mi_triple(pmf, base);
  row.min_n = min_mi_power(row.triple, n_max);
  return row;
}

void summarize(ClassicalScanResult& res) {
  ClassicalScanSummary& s = res.summary;
  s = {};
  s.samples = static_cast<int>(res.rows.size());
  for (const auto& row : res.rows) {
    const auto holds = row.inequalities.holds();
    for (std::size_t k = 0; k < holds.size(); ++k)
      if (!holds[k]) ++s.violations[k];
    if (!row.min_n) ++s.no_finite_r;
  }
  s.no_finite_r_fraction = s.samples > 0 ? double(s.no_finite_r) / s.samples : 0.0;
}

}  // namespace

ClassicalScanResult run_classical_scan(const ClassicalScanConfig& config) {
  if (config.samples < 1) throw InvalidArgument("samples must be at least 1");
  ClassicalScanResult res;
  res.rows.reserve(static_cast<std::size_t>(config.samples));
  for (int k = 0; k < config.samples; ++k) {
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(k);
    res.rows.push_back(
        classical_row(sample_pmf(config.dims, seed), std::to_string(seed), config.base, config.n_max));
  }
  summarize(res);
  return res;
}

ClassicalScanResult run_classical_single(const JointPMF3& pmf, LogBase base, int n_max) {
  ClassicalScanResult res;
  res.rows.push_back(classical_row(pmf, "input", base, n_max));
  summarize(res);
  return res;
}

JointPMF3 parse_pmf(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("pmf is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("p"))
    throw InvalidArgument("pmf needs 'dims' and 'p' fields");
  const json& d = j["dims"];
  if (!d.is_array() || d.size() != 3) throw InvalidArgument("'dims' must be three integers");
  Dims3 dims{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!d[k].is_number_integer()) throw InvalidArgument("'dims' must be three integers");
    dims[k] = d[k].get<int>();
  }
  if (!j["p"].is_array()) throw InvalidArgument("'p' must be an array of numbers");
  std::vector<double> p;
  for (const json& v : j["p"]) {
    if (!v.is_number()) throw InvalidArgument("'p' must be an array of numbers");
    p.push_back(v.get<double>());
  }
  return JointPMF3(dims, std::move(p));
}

std::string render_classical_rows(const ClassicalScanResult& result, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::json) {
    json rows = json::array();
    for (const auto& r : result.rows) {
      json slacks = json::object();
      const auto s = r.inequalities.slacks();
      for (std::size_t k = 0; k < s.size(); ++k) slacks[kInequalityNames[k]] = num(s[k]);
      rows.push_back({{"seed", r.label},
                      {"x", num(r.triple.x)},
                      {"y", num(r.triple.y)},
                      {"z", num(r.triple.z)},
                      {"h_xz", num(r.triple.h_xz)},
                      {"min_n", optional_int(r.min_n)},
                      {"slacks", std::move(slacks)}});
    }
    out << rows.dump(2) << '\n';
    return out.str();
  }
  out << "seed,x,y,z,h_xz,min_n";
  for (const char* name : kInequalityNames) out << ",slack_" << name;
  out << '\n';
  for (const auto& r : result.rows) {
    out << r.label << ',' << format_number(r.triple.x) << ',' << format_number(r.triple.y) << ','
        << format_number(r.triple.z) << ',' << format_number(r.triple.h_xz) << ','
        << optional_text(r.min_n);
    for (double s : r.inequalities.slacks()) out << ',' << format_number(s);
    out << '\n';
  }
  return out.str();
}

json classical_summary_json(const ClassicalScanResult& result, const ClassicalScanConfig& config) {
  json violations = json::object();
  int total = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    violations[kInequalityNames[k]] = result.summary.violations[k];
    total += result.summary.violations[k];
  }
  return {{"samples", result.summary.samples},
          {"dims", config.dims},
          {"seed", config.seed},
          {"base", to_string(config.base)},
          {"n_max", config.n_max},
          {"violations", std::move(violations)},
          {"total_violations", total},
          {"no_finite_r", result.summary.no_finite_r},
          {"no_finite_r_fraction", num(result.summary.no_finite_r_fraction)}};
}

}  // namespace qdeficit
