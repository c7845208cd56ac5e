#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/errors.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"

namespace bohr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Bad flag or config value. Maps to kExitUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Problem descriptor for `radius`, filled from a key=value file and then from
// command-line flags.
struct RunConfig {
  std::string theorem = "T1";
  std::string family = "power";
  int N = 1;
  std::string m = "1";
  double p = 1.0;
  std::string mode = "canonical";  // canonical | literal:RkEq
  int stride = 2;
  std::array<double, 3> coeffs{1.0, 0.0, 0.0};
  double head = 1.0;
  bool extended_p = false;  // T1 with p in (0,2]
  double tol = 1e-12;
  double scan_step = 1e-3;
  Format format = Format::Text;

  // Recognised keys: theorem family N m p mode stride coeffs head
  // extended_p tol scan_step format. Throws UsageError on unknown keys or bad values.
  void set(std::string_view key, std::string_view value);
};

// Lines "key = value"; '#' starts a comment.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

ArgumentPower parse_argument_power(std::string_view s);
WeightFamily make_family(const RunConfig& config);
// Throws UsageError when the descriptor fails validation.
RadiusProblem make_problem(const RunConfig& config);
RootOptions make_root_options(const RunConfig& config);

int cmd_radius(const RunConfig& config, std::ostream& out, std::ostream& err);

// ids: table ids ("R1".."R16") or {"all"}.
int cmd_tables(const std::vector<std::string>& ids, Format format,
               std::ostream& out, std::ostream& err);

int cmd_audit(Format format, std::ostream& out, std::ostream& err);

int cmd_verify(std::string_view suite, std::uint64_t seed, Format format,
               std::ostream& out, std::ostream& err);

}  // namespace bohr
