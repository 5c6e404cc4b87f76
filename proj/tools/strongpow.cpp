#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "strongpow/errors.hpp"
#include "strongpow/graph.hpp"
#include "strongpow/group.hpp"
#include "strongpow/invariants.hpp"
#include "strongpow/spectral.hpp"
#include "strongpow/verify.hpp"

#ifndef STRONGPOW_KNOWN_DISCREPANCIES
#define STRONGPOW_KNOWN_DISCREPANCIES "data/known_discrepancies.json"
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("bad number in range: '" + text + "'");
  return v;
}

// "a..b" or a single "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const std::size_t lo = parse_count(text.substr(0, dots));
  const std::size_t hi = dots == std::string::npos ? lo : parse_count(text.substr(dots + 2));
  if (lo < 1 || lo > hi) throw UsageError("invalid range '" + text + "'");
  return {lo, hi};
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::ios_base::failure("cannot write " + path);
}

int cmd_build(const std::string& spec, const std::string& format, const std::string& matrix,
              const std::string& out_path) {
  const auto g = strongpow::parse_group_spec(spec);
  const auto graph = strongpow::strong_power_graph(g);
  std::ostringstream out;
  if (format == "json") {
    out << strongpow::to_json(graph) << '\n';
  } else if (format == "dot") {
    strongpow::write_dot(out, graph);
  } else {
    const auto m = matrix == "adjacency" ? strongpow::adjacency(graph) : strongpow::laplacian(graph);
    strongpow::write_matrix_market(out, m);
  }
  emit(out_path, out.str());
  return kExitPass;
}

int cmd_invariants(const std::string& spec, const std::string& format) {
  const auto g = strongpow::parse_group_spec(spec);
  const auto bundle = strongpow::compute_invariants(spec, g);
  std::cout << (format == "json" ? strongpow::bundle_to_json(bundle)
                                 : strongpow::bundle_to_table(bundle));
  return kExitPass;
}

int cmd_verify(const std::string& family, const std::string& range,
               std::vector<std::string> checks, const std::string& format,
               const std::string& known_path, const std::string& out_path) {
  strongpow::VerifyRequest req;
  req.family = family == "corpus" ? strongpow::Family::corpus : strongpow::Family::cyclic;
  std::tie(req.n_min, req.n_max) = parse_range(range);
  req.checks = checks.empty() ? strongpow::all_check_names() : std::move(checks);
  req.threads = strongpow::default_thread_count();

  const auto known = strongpow::load_known_discrepancies(known_path);
  auto report = strongpow::run_verify(req);
  strongpow::apply_known(report, known);

  emit(out_path, format == "json" ? strongpow::report_to_json(report)
                                  : strongpow::report_to_tsv(report));
  std::cerr << "agree " << report.count(strongpow::CheckStatus::agree) << ", disagree "
            << report.count(strongpow::CheckStatus::disagree) << " ("
            << report.unexplained() << " unexplained), skipped "
            << report.count(strongpow::CheckStatus::skipped) << '\n';
  return report.unexplained() == 0 ? kExitPass : kExitMismatch;
}

int cmd_sweep(const std::string& range, const std::vector<std::string>& columns,
              const std::string& out_path) {
  const auto [lo, hi] = parse_range(range);
  emit(out_path, strongpow::sweep_csv(lo, hi, columns, strongpow::default_thread_count()));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong power graphs of finite groups: construction, invariants, verification"};
  app.require_subcommand(1);

  std::string group, format, matrix = "laplacian", out_path, family = "cyclic", range,
                             known_path = STRONGPOW_KNOWN_DISCREPANCIES;
  std::vector<std::string> checks, columns;

  auto* build = app.add_subcommand("build", "Write the strong power graph of a group");
  build->add_option("--group", group, "Group spec, e.g. zn:12, dihedral:4")->required();
  build->add_option("--format", format, "json, dot or mtx")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "dot", "mtx"}));
  build->add_option("--matrix", matrix, "Matrix for mtx output")
      ->check(CLI::IsMember({"laplacian", "adjacency"}));
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* inv = app.add_subcommand("invariants", "Print every computed invariant of one group");
  inv->add_option("--group", group, "Group spec")->required();
  inv->add_option("--format", format, "table or json")
      ->default_val("table")
      ->check(CLI::IsMember({"table", "json"}));

  auto* verify = app.add_subcommand("verify", "Compare closed forms against oracles");
  verify->add_option("--family", family, "cyclic or corpus")
      ->check(CLI::IsMember({"cyclic", "corpus"}));
  verify->add_option("--range", range, "Inclusive order range a..b")->required();
  verify->add_option("--checks", checks, "Comma-separated check names (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(strongpow::all_check_names()));
  verify->add_option("--format", format, "tsv or json")
      ->default_val("tsv")
      ->check(CLI::IsMember({"tsv", "json"}));
  verify->add_option("--known", known_path, "Known-discrepancy list (JSON)");
  verify->add_option("--out", out_path, "Report file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "CSV table of invariants for cyclic orders");
  sweep->add_option("--range", range, "Inclusive order range a..b")->required();
  sweep->add_option("--columns", columns, "Comma-separated subset of columns")
      ->delimiter(',')
      ->check(CLI::IsMember(strongpow::sweep_columns()));
  sweep->add_option("--out", out_path, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) return cmd_build(group, format, matrix, out_path);
    if (*inv) return cmd_invariants(group, format);
    if (*verify) return cmd_verify(family, range, checks, format, known_path, out_path);
    if (*sweep) return cmd_sweep(range, columns, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
