// bohr: radius solver, table reproduction, equation audit and verification
// suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohr/commands.hpp"
#include "bohr/parallel.hpp"

namespace {

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  bool open(const std::string& path) {
    if (path.empty() || path == "-") return true;
    file.open(path, std::ios::binary);
    stream = &file;
    return static_cast<bool>(file);
  }
};

std::optional<bohr::Format> format_or_report(const std::string& s) {
  auto f = bohr::parse_format(s);
  if (!f) std::cerr << "error: unknown format '" << s << "' (csv, md, json, text)\n";
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Bohr radii: solve, reproduce tables, audit, verify"};
  app.require_subcommand(1);

  std::string out_path;
  unsigned threads = 0;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)");

  // radius
  auto* radius = app.add_subcommand("radius", "Minimal positive root of a radius problem");
  std::string config_path;
  std::vector<std::pair<std::string, std::optional<std::string>>> flags = {
      {"theorem", {}}, {"family", {}}, {"N", {}},      {"m", {}},    {"p", {}},
      {"mode", {}},    {"stride", {}}, {"coeffs", {}}, {"head", {}}, {"extended_p", {}},
      {"tol", {}},     {"scan_step", {}}, {"format", {}},
  };
  radius->add_option("--config", config_path, "Flat key = value file; flags override it");
  for (auto& [key, value] : flags) radius->add_option("--" + key, value);

  // tables
  auto* tables = app.add_subcommand("tables", "Recompute the printed root tables");
  std::vector<std::string> table_ids;
  std::string tables_format = "csv";
  tables->add_option("ids", table_ids, "R1..R16 or all")->default_str("all");
  tables->add_option("--format", tables_format, "csv, md or json");

  // audit
  auto* audit = app.add_subcommand("audit", "Printed equations against the general theorems");
  std::string audit_format = "csv";
  audit->add_option("--format", audit_format, "csv, md or json");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::string verify_format = "csv";
  verify->add_option("suite", suite, "lemmas, inequalities, sharpness or all");
  verify->add_option("--seed", seed, "Monte-Carlo seed");
  verify->add_option("--format", verify_format, "csv, md or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bohr::kExitUsage;
  }

  bohr::set_thread_count(threads);
  Output out;
  if (!out.open(out_path)) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return bohr::kExitUsage;
  }

  try {
    if (radius->parsed()) {
      bohr::RunConfig config;
      if (!config_path.empty()) bohr::apply_config_file(config, config_path);
      for (const auto& [key, value] : flags)
        if (value) config.set(key, *value);
      return bohr::cmd_radius(config, *out.stream, std::cerr);
    }
    if (tables->parsed()) {
      const auto f = format_or_report(tables_format);
      if (!f) return bohr::kExitUsage;
      return bohr::cmd_tables(table_ids, *f, *out.stream, std::cerr);
    }
    if (audit->parsed()) {
      const auto f = format_or_report(audit_format);
      if (!f) return bohr::kExitUsage;
      return bohr::cmd_audit(*f, *out.stream, std::cerr);
    }
    if (verify->parsed()) {
      const auto f = format_or_report(verify_format);
      if (!f) return bohr::kExitUsage;
      return bohr::cmd_verify(suite, seed, *f, *out.stream, std::cerr);
    }
  } catch (const bohr::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bohr::kExitUsage;
  } catch (const bohr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bohr::kExitNumerical;
  }
  return bohr::kExitUsage;
}
