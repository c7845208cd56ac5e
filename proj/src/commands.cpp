#include "bohr/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "bohr/catalog.hpp"
#include "bohr/parallel.hpp"
#include "bohr/suites.hpp"
#include "bohr/verify.hpp"

namespace bohr {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  const std::string text(trim(v));
  char* end = nullptr;
  const double d = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(d))
    throw UsageError(std::string(key) + ": not a number: '" + text + "'");
  return d;
}

int parse_int(std::string_view key, std::string_view v) {
  v = trim(v);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw UsageError(std::string(key) + ": not an integer: '" + std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  v = trim(v);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError(std::string(key) + ": expected true or false");
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "theorem") {
    theorem = value;
  } else if (key == "family") {
    family = value;
  } else if (key == "N") {
    N = parse_int(key, value);
  } else if (key == "m") {
    m = value;
  } else if (key == "p") {
    p = parse_double(key, value);
  } else if (key == "mode") {
    mode = value;
  } else if (key == "stride") {
    stride = parse_int(key, value);
  } else if (key == "coeffs") {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    std::size_t i = 0;
    std::string_view rest = value;
    while (!rest.empty()) {
      if (i == 3) throw UsageError("coeffs: at most three values (c0,c1,c2)");
      const auto comma = rest.find(',');
      c[i++] = parse_double(key, rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (i == 0) throw UsageError("coeffs: empty");
    coeffs = c;
  } else if (key == "head") {
    head = parse_double(key, value);
  } else if (key == "extended_p") {
    extended_p = parse_bool(key, value);
  } else if (key == "tol") {
    tol = parse_double(key, value);
  } else if (key == "scan_step") {
    scan_step = parse_double(key, value);
  } else if (key == "format") {
    const auto f = parse_format(value);
    if (!f) throw UsageError("format: expected text, csv, md or json");
    format = *f;
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    config.set(line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
}

ArgumentPower parse_argument_power(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "infinity") return ArgumentPower::infinite();
  const int m = parse_int("m", s);
  if (m < 1) throw UsageError("m must be a positive integer or inf");
  return ArgumentPower(m);
}

WeightFamily make_family(const RunConfig& c) {
  try {
    const std::string& f = c.family;
    if (f == "power") return WeightFamily::power(c.N, c.head);
    if (f == "even") return WeightFamily::even_power(c.N, c.head);
    if (f == "odd") return WeightFamily::odd_power(c.N, c.head);
    if (f == "strided") return WeightFamily::strided_power(c.stride, c.N, c.head);
    if (f == "linear") return WeightFamily::linear(c.N, c.head);
    if (f == "affine") return WeightFamily::affine(c.N, c.head);
    if (f == "quadratic") return WeightFamily::quadratic(c.N, c.head);
    if (f == "poly") return WeightFamily::polynomial(c.N, c.coeffs, c.head);
    if (f == "none" || f == "empty") return WeightFamily::empty(c.head);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + c.family +
                   "' (power, even, odd, strided, linear, affine, quadratic, poly, none)");
}

RadiusProblem make_problem(const RunConfig& c) {
  RadiusProblem problem;
  const auto theorem = parse_theorem(c.theorem);
  if (!theorem) throw UsageError("unknown theorem '" + c.theorem + "' (T1..T4)");
  problem.theorem = *theorem;
  problem.p = c.p;
  problem.m = parse_argument_power(c.m);
  problem.family = make_family(c);
  problem.allow_extended_p = c.extended_p;
  if (c.mode != "canonical") {
    constexpr std::string_view prefix = "literal:";
    if (c.mode.rfind(prefix, 0) != 0)
      throw UsageError("mode must be canonical or literal:<tag>, got '" + c.mode + "'");
    const auto tag = parse_literal_tag(std::string_view(c.mode).substr(prefix.size()));
    if (!tag) throw UsageError("unknown literal equation '" + c.mode + "'");
    problem.literal = *tag;
  }
  if (!(c.tol > 0.0)) throw UsageError("tol must be positive");
  if (!(c.scan_step > 0.0 && c.scan_step < 1.0)) throw UsageError("scan_step must lie in (0,1)");
  try {
    validate(problem);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return problem;
}

RootOptions make_root_options(const RunConfig& c) {
  RootOptions o;
  o.bracket_width = c.tol;
  o.scan_step = c.scan_step;
  return o;
}

int cmd_radius(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RadiusProblem problem;
  try {
    problem = make_problem(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  RootResult r;
  try {
    r = solve(problem, make_root_options(config));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (config.format == Format::Text) {
    out << "root     " << format_number(r.root) << '\n'
        << "bracket  [" << format_number(r.lo) << ", " << format_number(r.hi) << "]\n"
        << "residual " << format_number(r.residual) << '\n'
        << "mode     " << config.mode << '\n'
        << "problem  " << to_string(problem.theorem) << ' ' << problem.family.describe()
        << " m=" << problem.m.to_string() << " p=" << format_number(problem.p) << '\n';
    return kExitOk;
  }
  Table t;
  t.columns = {"theorem", "family", "m", "p", "mode", "root", "lo", "hi", "residual", "iterations"};
  t.rows.push_back({to_string(problem.theorem), problem.family.describe(), problem.m.to_string(),
                    problem.p, config.mode, r.root, r.lo, r.hi, r.residual,
                    static_cast<long long>(r.iterations)});
  render(t, config.format, out);
  return kExitOk;
}

int cmd_tables(const std::vector<std::string>& ids, Format format, std::ostream& out,
               std::ostream& err) {
  std::vector<const TableSpec*> selected;
  const bool all = ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end();
  if (all) {
    for (const auto& t : golden_tables()) selected.push_back(&t);
  } else {
    for (const auto& id : ids) {
      const TableSpec* t = find_table(id);
      if (!t) {
        err << "error: unknown table id '" << id << "' (R1..R16 or all)\n";
        return kExitUsage;
      }
      selected.push_back(t);
    }
  }

  struct Job {
    const TableSpec* table;
    const GoldenCell* cell;
  };
  std::vector<Job> jobs;
  for (const auto* t : selected)
    for (const auto& c : t->cells) jobs.push_back({t, &c});

  struct Outcome {
    double computed = std::nan("");
    std::string error;
  };
  std::vector<Outcome> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    try {
      results[i].computed = solve(literal_problem(jobs[i].table->tag, jobs[i].cell->params)).root;
    } catch (const Error& e) {
      results[i].error = e.what();
    }
  });

  Table t;
  t.columns = {"table_id", "m", "N", "p", "computed", "golden", "delta", "pass"};
  long failures = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& [table, cell] = jobs[i];
    const double delta = results[i].computed - cell->golden;
    const bool pass = std::abs(delta) <= kGoldenTolerance;
    if (!pass) ++failures;
    const auto& ax = table->axes;
    t.rows.push_back({std::string(table->id),
                      ax.m ? Cell{static_cast<long long>(cell->params.m)} : Cell{},
                      ax.N ? Cell{static_cast<long long>(cell->params.N)} : Cell{},
                      ax.p ? Cell{cell->params.p} : Cell{}, results[i].computed, cell->golden,
                      delta, pass});
    std::ostringstream where;
    where << table->id << " m=" << cell->params.m << " N=" << cell->params.N
          << " p=" << format_number(cell->params.p);
    if (cell->anomaly)
      t.notes.push_back("anomaly " + where.str() + ": printed \"" + std::string(cell->printed) +
                        "\"; " + std::string(*cell->anomaly));
    if (!results[i].error.empty())
      t.notes.push_back("solver error " + where.str() + ": " + results[i].error);
  }
  t.notes.push_back("cells " + std::to_string(jobs.size()) + ", failed " +
                    std::to_string(failures) + ", tolerance " + format_number(kGoldenTolerance));
  render(t, format, out);
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_audit(Format format, std::ostream& out, std::ostream&) {
  struct Job {
    LiteralTag tag;
    LiteralParams params;
  };
  std::vector<Job> jobs;
  for (const auto& t : golden_tables())
    for (const auto& c : t.cells) jobs.push_back({t.tag, c.params});

  std::vector<AuditRecord> records(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { records[i] = audit(jobs[i].tag, jobs[i].params); });

  Table t;
  t.columns = {"tag", "m", "N", "p", "root_literal", "root_canonical", "root_difference",
               "cross_residual", "verdict", "note"};
  struct Summary {
    int rows = 0;
    int consistent = 0;
    double max_difference = 0.0;
    double max_cross = 0.0;
  };
  std::map<int, Summary> per_tag;
  for (const auto& r : records) {
    std::optional<double> diff;
    if (r.root_literal && r.root_canonical) diff = std::abs(*r.root_literal - *r.root_canonical);
    t.rows.push_back({to_string(r.tag), static_cast<long long>(r.params.m),
                      static_cast<long long>(r.params.N), r.params.p, optional_cell(r.root_literal),
                      optional_cell(r.root_canonical), optional_cell(diff),
                      optional_cell(r.cross_residual), to_string(r.verdict), r.note});
    auto& s = per_tag[static_cast<int>(r.tag)];
    ++s.rows;
    if (r.verdict == Verdict::Consistent) ++s.consistent;
    if (diff) s.max_difference = std::max(s.max_difference, *diff);
    if (r.cross_residual) s.max_cross = std::max(s.max_cross, *r.cross_residual);
  }
  std::string consistent_tags;
  for (const auto& [tag, s] : per_tag) {
    const std::string name = to_string(static_cast<LiteralTag>(tag));
    if (s.consistent == s.rows) {
      consistent_tags += (consistent_tags.empty() ? "" : " ") + name;
      continue;
    }
    t.notes.push_back(name + " discrepant in " + std::to_string(s.rows - s.consistent) + " of " +
                      std::to_string(s.rows) + " rows, max root difference " +
                      format_number(s.max_difference) + ", max cross residual " +
                      format_number(s.max_cross));
  }
  t.notes.push_back("consistent: " + consistent_tags);
  t.notes.push_back("threshold " + format_number(kAuditThreshold));
  render(t, format, out);
  return kExitOk;
}

int cmd_verify(std::string_view suite, std::uint64_t seed, Format format, std::ostream& out,
               std::ostream& err) {
  if (!is_known_suite(suite)) {
    err << "error: unknown suite '" << suite << "' (lemmas, inequalities, sharpness, all)\n";
    return kExitUsage;
  }
  SuiteReport report;
  try {
    report = run_suite(suite, seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  Table t;
  t.columns = {"suite", "seed", "check", "pass", "metric", "value"};
  for (const auto& c : report.checks) {
    for (const auto& [metric, value] : c.metrics)
      t.rows.push_back({report.suite, std::to_string(seed), c.name, c.pass, metric, value});
    if (!c.detail.empty()) t.notes.push_back(c.name + ": " + c.detail);
  }
  t.notes.push_back(std::string("overall ") + (report.pass() ? "pass" : "fail"));
  render(t, format, out);
  return report.pass() ? kExitOk : kExitFailure;
}

}  // namespace bohr
