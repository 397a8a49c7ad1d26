#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/algebra.hpp"

namespace qg {

struct RandomMatrixSpec {
  std::size_t n = 3;
  int range = 2;
};

// G(A, B) given explicitly, by a seeded random A with B = (A^t)^-1, or GL_q(2).
struct InstanceConfig {
  AlgebraKind kind = AlgebraKind::GLq;
  ScalarMatrix a, b;
  std::optional<RandomMatrixSpec> random;
  std::optional<Scalar> q;
  // Second object for the Galois and cogroupoid checks: (C, D) directly or
  // (F^t A F, F^-1 B (F^t)^-1) from a conjugator F.
  std::optional<std::pair<ScalarMatrix, ScalarMatrix>> cd;
  std::optional<ScalarMatrix> conjugator;
};

struct ProbeConfig {
  int weight_bound = 6;
  int slack = 2;
  int laurent_window = 2;
};

struct RunConfig {
  std::string name;
  InstanceConfig instance;
  int degree_bound = 6;
  ProbeConfig probe;
  std::vector<std::string> checks;
  std::filesystem::path cache_dir;
  std::filesystem::path report_path;
  std::optional<std::uint64_t> seed;
};

// Fixed execution and report order.
const std::vector<std::string>& known_checks();

// Throws ConfigInvalid on unknown keys, unknown checks, malformed matrices or a
// random instance without a seed.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& file);

enum class CheckStatus { Pass, Fail, Uncertified, Skipped };
const char* status_name(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  int certified_degree = 0;
  std::size_t items = 0;
  std::vector<std::string> witnesses;                        // failing items, in normal form
  std::vector<std::pair<std::string, std::string>> details;  // ordered key/value data for the tables
  double seconds = 0;
};

struct RunReport {
  std::string config_name;
  std::string instance;
  std::vector<CheckOutcome> checks;
};

// Resolved matrices of the instance (random draws applied).
std::pair<ScalarMatrix, ScalarMatrix> instance_matrices(const RunConfig& cfg);

RunReport run_config(const RunConfig& cfg);
// 0 when everything passes, 1 on any failure, 2 when the only problems are uncertified checks.
int exit_code(const RunReport& r);

// Deterministic JSON; timings live in a separate "timing" object that is omitted when include_timing is false.
std::string report_json(const RunReport& r, bool include_timing = true);
RunReport report_from_json(const std::string& text);
std::string report_markdown(const RunReport& r);

}  // namespace qg
