#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace solvspin::cli {

enum class Command { Validate, Curvature, Nilsoliton, Extend, KillingInvariant, KillingHalfspace, Classify };
enum class Format { Text, Json };
enum class Backend { Exact, Float };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);
std::string to_string(Backend b);

/// SOLVSPIN_BACKEND: "exact" (default) or "float". Throws std::invalid_argument otherwise.
Backend backend_from_env();

struct JobSpec {
  Command command = Command::Validate;
  /// Files, directories, or a half-space model string ("halfspace n=... r=... signs=...").
  std::vector<std::string> inputs;
  Format format = Format::Text;
  int k_bound = 1;
  int m_bound = 1;
  std::optional<int> eps0;
  double tol = 1e-9;
  Backend backend = Backend::Exact;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

/// Report for a single input (file contents or a half-space model string).
nlohmann::json run_one(const JobSpec& job, const std::string& input);

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  nlohmann::json report;
};

/// Runs every input. A directory input becomes a batch over its regular files,
/// processed in parallel and reported in name order, followed by a summary.
RunResult run(const JobSpec& job);

std::string render_text(const nlohmann::json& report);

std::string sha256_hex(const std::string& bytes);

/// The report with its timing fields removed, for comparisons across runs.
nlohmann::json without_timing(nlohmann::json report);

}  // namespace solvspin::cli
