// qdeficit: deficit monogamy tables, theta sweeps, single-state reports and
// the classical mutual-information scan.
//
// Exit codes: 0 success, 2 bad input, 3 numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdeficit/commands.hpp"
#include "qdeficit/errors.hpp"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitNumeric = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdeficit::InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw qdeficit::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

std::string inline_or_file(const std::string& inline_json, const std::string& path,
                           const char* what) {
  if (inline_json.empty() == path.empty())
    throw qdeficit::InvalidArgument(std::string("give exactly one of --") + what + " or --" + what +
                                    "-file");
  return path.empty() ? inline_json : read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qdeficit;

  CLI::App app{"Quantum deficit monogamy and classical mutual-information checks"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string base_name = "nats";
  std::string format_name;
  std::string out_path;
  int n_max = kDefaultPowerLimit;
  app.add_option("--base", base_name, "Logarithm base: nats or bits")->capture_default_str();
  app.add_option("--n-max", n_max, "Largest power searched for monogamy")->capture_default_str();
  app.add_option("--format", format_name, "Output format: csv, json (table1 also: text)");
  app.add_option("--out", out_path, "Output file (default: stdout)");

  auto* table1 = app.add_subcommand("table1", "Integer powers of the deficit for W and WWBAR");

  Fig1Config fig1_cfg;
  auto* fig1 = app.add_subcommand("fig1", "delta_n versus theta for cos(t/2)|000> + sin(t/2)|W>");
  fig1->add_option("--theta-start", fig1_cfg.grid.start)->capture_default_str();
  fig1->add_option("--theta-stop", fig1_cfg.grid.stop)->capture_default_str();
  fig1->add_option("--theta-step", fig1_cfg.grid.step)->capture_default_str();
  fig1->add_option("--n-set", fig1_cfg.n_set, "Powers to emit (comma separated)")->delimiter(',');

  std::string state_json, state_file;
  auto* deficit = app.add_subcommand("deficit", "Deficit report and minimal monogamous power");
  deficit->add_option("--state", state_json, R"(Inline spec, e.g. '{"name":"W"}')");
  deficit->add_option("--state-file", state_file, "File holding a JSON state spec");

  ClassicalScanConfig scan_cfg;
  std::vector<int> dims_list = {2, 2, 2};
  std::string pmf_json, pmf_file, summary_path;
  auto* scan = app.add_subcommand("classical-scan", "Entropy inequality and power-finder scan");
  scan->add_option("--samples", scan_cfg.samples)->capture_default_str();
  scan->add_option("--dims", dims_list, "Alphabet sizes |X|,|Y|,|Z|")->delimiter(',')->expected(3);
  scan->add_option("--seed", scan_cfg.seed)->capture_default_str();
  scan->add_option("--pmf", pmf_json, "Inline JSON pmf {\"dims\":[..],\"p\":[..]} instead of sampling");
  scan->add_option("--pmf-file", pmf_file, "File holding a JSON pmf");
  scan->add_option("--summary-out", summary_path, "Summary JSON file (csv format; default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    const LogBase base = parse_log_base(base_name);

    if (*table1) {
      const OutputFormat fmt = parse_output_format(format_name.empty() ? "text" : format_name);
      write_output(out_path, render_table1(table1_rows(base), fmt, base));
    } else {
      const OutputFormat fmt = parse_output_format(format_name.empty() ? "csv" : format_name);
      if (fmt == OutputFormat::text) throw InvalidArgument("text format is only available for table1");

      if (*fig1) {
        fig1_cfg.base = base;
        fig1_cfg.n_max = n_max;
        write_output(out_path, render_fig1(run_fig1(fig1_cfg), fig1_cfg, fmt));
      } else if (*deficit) {
        const StateSpec spec = parse_state_spec(inline_or_file(state_json, state_file, "state"));
        const DeficitResult res = run_deficit(spec, base, n_max);
        write_output(out_path, render_deficit(res, fmt));
      } else if (*scan) {
        scan_cfg.base = base;
        scan_cfg.n_max = n_max;
        scan_cfg.dims = {dims_list.at(0), dims_list.at(1), dims_list.at(2)};
        ClassicalScanResult res;
        if (!pmf_json.empty() || !pmf_file.empty()) {
          const JointPMF3 pmf = parse_pmf(inline_or_file(pmf_json, pmf_file, "pmf"));
          scan_cfg.dims = pmf.dims();
          scan_cfg.samples = 1;
          res = run_classical_single(pmf, base, n_max);
        } else {
          res = run_classical_scan(scan_cfg);
        }
        const nlohmann::json summary = classical_summary_json(res, scan_cfg);
        if (fmt == OutputFormat::json) {
          const nlohmann::json doc = {
              {"summary", summary},
              {"rows", nlohmann::json::parse(render_classical_rows(res, OutputFormat::json))}};
          write_output(out_path, doc.dump(2) + "\n");
        } else {
          write_output(out_path, render_classical_rows(res, OutputFormat::csv));
          if (summary_path.empty())
            std::cerr << summary.dump(2) << '\n';
          else
            write_output(summary_path, summary.dump(2) + "\n");
        }
      }
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return 0;
}
