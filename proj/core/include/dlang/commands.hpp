#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace dlang {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int unstable = 2;
inline constexpr int residual = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::ok;
  /// The report (stdout).
  std::string output;
  /// Diagnostics (stderr).
  std::string errors;
};

struct CommonOptions {
  std::optional<std::string> place;
  std::optional<int> precision;
  bool json = false;
};

struct CheckOptions : CommonOptions {};

struct IntersectOptions : CommonOptions {
  std::optional<int> degree;
  std::optional<int> modulus_cap;
  bool verify = false;
  /// Worker threads for the orbit scan; never affects the report.
  unsigned threads = 1;
};

struct ExplogOptions : CommonOptions {
  /// Exact coefficients printed; 4 when unset.
  std::optional<int> terms;
  std::optional<std::string> at;
};

struct PlacesOptions : CommonOptions {
  std::optional<std::string> at;
};

struct OrbitOptions : CommonOptions {
  std::optional<int> degree;
};

CommandResult cmd_check(const std::filesystem::path& file, const CheckOptions& opt = {});
CommandResult cmd_intersect(const std::filesystem::path& file, const IntersectOptions& opt = {});
CommandResult cmd_explog(const std::filesystem::path& file, const ExplogOptions& opt = {});
CommandResult cmd_places(const std::filesystem::path& file, const PlacesOptions& opt = {});
CommandResult cmd_orbit(const std::filesystem::path& file, const OrbitOptions& opt = {});

}  // namespace dlang
