#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mubsupport/mub.hpp"

namespace mubsupport {

struct SaturationOptions {
  /// Enumerate only canonical shift classes of the first zero set.
  bool symmetry = true;
  bool float_prefilter = false;
  /// Empty disables checkpointing.
  std::string checkpoint_path;
  int workers = 1;
  /// Required for d >= 17.
  bool marathon = false;
  /// Stop after this many further work items (0 = run to completion).
  std::size_t max_items = 0;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// A candidate with support (d+1)/2 in three or more bases.
struct SaturationHit {
  int j1 = 0;
  int j2 = 0;
  std::vector<int> z1;
  std::vector<int> z2;
  std::vector<int> sizes;
  StateVector state;
};

/// Per basis pair: candidate count, smallest overall support seen and the
/// smallest support among the bases other than j1, j2.
struct PairSummary {
  int j1 = 0;
  int j2 = 0;
  std::uint64_t candidates = 0;
  int min_total = 0;
  int min_other = 0;

  friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

struct SearchReport {
  std::string mode = "saturation";
  int dim = 0;
  bool symmetry = true;
  bool float_prefilter = false;
  std::uint64_t work_items_total = 0;
  std::uint64_t work_items_done = 0;
  std::uint64_t pairs_examined = 0;
  std::uint64_t kernel_solves = 0;
  /// Rays whose residue zeros needed more than one embedding.
  std::uint64_t escalations = 0;
  /// Candidates settled by the float screen alone.
  std::uint64_t float_decided = 0;
  std::vector<SaturationHit> hits;
  std::vector<PairSummary> pairs;
  /// Overall support -> candidate count.
  std::map<int, std::uint64_t> total_histogram;
  /// Number of bases at support (d+1)/2 -> candidate count.
  std::map<int, std::uint64_t> half_histogram;
  std::string checkpoint_id;
  bool complete = false;
  bool resumed = false;
  double elapsed_seconds = 0.0;
};

/// Enumerates rays fixed by (d-1)/2 zeros in each of two bases and records any
/// with support (d+1)/2 in a third basis. Work items are (j1, j2, Z1) with
/// j1 in 1..d and j2 in {0, j1+1..d}; each unordered basis pair appears once.
/// The B-shift moves every Z^j (j >= 1) by the same amount and fixes Z^0, so
/// with symmetry on Z1 ranges over shift-class representatives only.
SearchReport saturation_search(int d, const SaturationOptions& options = {});

/// Rough single-worker wall time in seconds, for the marathon warning.
double saturation_time_estimate(int d, int workers);

}  // namespace mubsupport
