#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace eqcell {

struct CliRequest {
  /// validate | euler | homology | lefschetz | subdivide | orbit-point | total-space
  std::string command;
  std::filesystem::path document;
  std::optional<std::string> coefficients;
  std::optional<int> times;
  std::optional<std::filesystem::path> out;
  std::optional<std::string> orbit;
  std::optional<std::string> object;
  bool json = false;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int internal_error = 1;
inline constexpr int invalid_input = 2;
/// `lefschetz` found a class with λ != 0.
inline constexpr int nonzero_lefschetz = 3;
}  // namespace exit_code

struct CliResult {
  int exit_code = exit_code::success;
  std::string output;
  std::string error;
};

CliResult run(const CliRequest& request);

}  // namespace eqcell
