#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubsupport/analyses.hpp"
#include "mubsupport/serialization.hpp"

namespace mubsupport {

enum class OutputFormat { json, csv, table };
OutputFormat parse_format(const std::string& text);

struct RunConfig {
  std::string command;
  int d = 0;
  bool symmetry = true;
  bool prefilter = false;
  bool marathon = false;
  bool timings = false;
  OutputFormat format = OutputFormat::json;
  std::string checkpoint;
  int workers = 1;
};

/// Explicit request, else MUB_WORKERS, else the hardware thread count.
int resolve_workers(int requested);

/// Throws InvalidDimension unless d is prime.
void validate_dimension(int d);

struct Table1Row {
  int d = 0;
  BigRational T;
  /// yes, no, numeric-no or unknown
  std::string achievable;
  std::optional<int> sharp;
  /// theorem, search or paper-numeric
  std::string provenance;
  std::string sharp_provenance;
};

struct Table1Options {
  int max_d = 13;
  /// Also run the d = 13 saturation search (about a quarter hour on one core).
  bool extended = false;
  bool marathon = false;
  int workers = 1;
};

std::vector<Table1Row> cmd_table1(const Table1Options& options);
Json to_json(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct VerifyAllReport {
  int d = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
};

VerifyAllReport cmd_verify_all(int d, std::uint64_t fuzz_samples = 10000, std::uint64_t seed = 1);
Json to_json(const VerifyAllReport& report);

/// Reads a state file. Malformed JSON raises ParseError naming the line.
StateVector ingest_state(const std::string& path);
StateVector parse_state_text(const std::string& text);

}  // namespace mubsupport
