#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sz5::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kBudgetExhausted = 2, kInputError = 3 };

struct Request {
  std::string command;
  /// MGF text of the input graph. Ignored when `named` is set and by enumerate4v.
  std::string input;
  /// Catalog name ("W1", "T:1,3,3", ...) used instead of `input`.
  std::optional<std::string> named;
  int k = 5;
  /// Comma-separated residues, one per vertex.
  std::optional<std::string> beta;
  std::int64_t budget = 0;
  int jobs = 0;
  std::string format = "json";
  /// Verdict cache file (append-only).
  std::optional<std::string> cache;
  int min_edges = 12;
  int max_edges = 13;
  int mu_max = 4;
};

struct Report {
  int exit_code = kHolds;
  std::string output;
};

/// Commands: weight, contractible, szk, orient, mod-orient, circular, asf,
/// reduce, discharge, scan, trees, enumerate4v. The report carries
/// {command, input_hash, verdict, witness?, certificate?, budget_used}.
Report run(const Request& request);

}  // namespace sz5::cli
