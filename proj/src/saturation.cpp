#include "mubsupport/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include <json.hpp>

#include "mubsupport/errors.hpp"
#include "mubsupport/kernel.hpp"
#include "mubsupport/number_theory.hpp"
#include "mubsupport/residue_profiler.hpp"
#include "mubsupport/support.hpp"

namespace mubsupport {

namespace {

using nlohmann::json;

constexpr const char* kCheckpointFormat = "mub-saturation-checkpoint";
constexpr int kCheckpointVersion = 1;
// every this many float-settled candidates is also decided exactly
constexpr std::uint64_t kFloatAuditStride = 64;

struct WorkItem {
  int j1;
  int j2;
  std::vector<int> z1;
};

struct ItemResult {
  std::uint64_t candidates = 0;
  std::uint64_t escalations = 0;
  std::uint64_t float_decided = 0;
  int min_total = 0;
  int min_other = 0;
  std::map<int, std::uint64_t> total_histogram;
  std::map<int, std::uint64_t> half_histogram;
  std::vector<SaturationHit> hits;
};

std::vector<WorkItem> build_items(int d, bool symmetry) {
  const int n = (d - 1) / 2;
  const auto first_sets = symmetry ? canonical_class_representatives(d, n) : all_subsets(d, n);
  std::vector<WorkItem> items;
  for (int j1 = 1; j1 <= d; ++j1) {
    std::vector<int> partners{0};
    for (int j2 = j1 + 1; j2 <= d; ++j2) partners.push_back(j2);
    for (int j2 : partners) {
      for (const auto& z1 : first_sets) items.push_back({j1, j2, z1});
    }
  }
  return items;
}

class ItemRunner {
 public:
  ItemRunner(const MubSet& mubs, bool prefilter)
      : mubs_(mubs), residue_(mubs), float_(mubs), prefilter_(prefilter),
        second_sets_(all_subsets(mubs.dim(), (mubs.dim() - 1) / 2)) {}

  ItemResult run(const WorkItem& item) const {
    const int d = mubs_.dim();
    const int half = (d + 1) / 2;
    ItemResult out;
    out.min_total = (d + 1) * d + 1;
    out.min_other = d + 1;
    std::vector<BasisIndex> rows;
    rows.reserve(d - 1);
    for (const auto& z2 : second_sets_) {
      rows.clear();
      for (int k : item.z1) rows.push_back({item.j1, k});
      for (int k : z2) rows.push_back({item.j2, k});

      std::vector<std::vector<int>> zeros;
      std::optional<std::vector<std::vector<int>>> screened;
      if (prefilter_) screened = float_.ray(rows);
      const bool audit = screened && out.candidates % kFloatAuditStride == 0;
      if (screened && !audit) {
        zeros = std::move(*screened);
        ++out.float_decided;
      } else {
        RayZeros exact = residue_.ray(rows);
        if (!exact.unique) {
          throw TheoremViolation("rows from bases " + std::to_string(item.j1) + " and " +
                                 std::to_string(item.j2) + " are linearly dependent");
        }
        if (exact.embeddings_used > 1) ++out.escalations;
        if (audit && *screened != exact.zeros) {
          throw TheoremViolation("float screen disagrees with the exact zero pattern");
        }
        zeros = std::move(exact.zeros);
      }
      ++out.candidates;

      int total = 0;
      int at_half = 0;
      int min_other = d + 1;
      std::vector<int> sizes(d + 1);
      for (int j = 0; j <= d; ++j) {
        sizes[j] = d - static_cast<int>(zeros[j].size());
        total += sizes[j];
        if (sizes[j] == half) ++at_half;
        if (j != item.j1 && j != item.j2) min_other = std::min(min_other, sizes[j]);
      }
      if (sizes[item.j1] + sizes[item.j2] < d + 1) {
        throw TheoremViolation("pair inequality fails on bases " + std::to_string(item.j1) + ", " +
                               std::to_string(item.j2));
      }
      ++out.total_histogram[total];
      ++out.half_histogram[at_half];
      out.min_total = std::min(out.min_total, total);
      out.min_other = std::min(out.min_other, min_other);
      if (at_half >= 3) out.hits.push_back({item.j1, item.j2, item.z1, z2, sizes, {}});
    }
    return out;
  }

 private:
  const MubSet& mubs_;
  ResidueProfiler residue_;
  FloatProfiler float_;
  bool prefilter_;
  std::vector<std::vector<int>> second_sets_;
};

struct Aggregate {
  std::uint64_t done = 0;
  std::uint64_t kernel_solves = 0;
  std::uint64_t escalations = 0;
  std::uint64_t float_decided = 0;
  std::map<int, std::uint64_t> total_histogram;
  std::map<int, std::uint64_t> half_histogram;
  std::vector<PairSummary> pairs;
  std::vector<SaturationHit> hits;

  void merge(const WorkItem& item, const ItemResult& r) {
    ++done;
    kernel_solves += r.candidates;
    escalations += r.escalations;
    float_decided += r.float_decided;
    for (const auto& [k, v] : r.total_histogram) total_histogram[k] += v;
    for (const auto& [k, v] : r.half_histogram) half_histogram[k] += v;
    if (pairs.empty() || pairs.back().j1 != item.j1 || pairs.back().j2 != item.j2) {
      pairs.push_back({item.j1, item.j2, 0, r.min_total, r.min_other});
    }
    PairSummary& p = pairs.back();
    p.candidates += r.candidates;
    p.min_total = std::min(p.min_total, r.min_total);
    p.min_other = std::min(p.min_other, r.min_other);
    hits.insert(hits.end(), r.hits.begin(), r.hits.end());
  }
};

json key_json(const WorkItem& item) { return {{"j1", item.j1}, {"j2", item.j2}, {"z1", item.z1}}; }

json histogram_json(const std::map<int, std::uint64_t>& h) {
  json out = json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

std::map<int, std::uint64_t> histogram_from_json(const json& j) {
  std::map<int, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<std::uint64_t>();
  return out;
}

json checkpoint_json(int d, const SaturationOptions& options, const std::vector<WorkItem>& items,
                     const Aggregate& agg) {
  json pairs = json::array();
  for (const auto& p : agg.pairs) {
    pairs.push_back({{"j1", p.j1}, {"j2", p.j2}, {"candidates", p.candidates},
                     {"min_total", p.min_total}, {"min_other", p.min_other}});
  }
  json hits = json::array();
  for (const auto& h : agg.hits) {
    hits.push_back({{"j1", h.j1}, {"j2", h.j2}, {"z1", h.z1}, {"z2", h.z2}, {"sizes", h.sizes}});
  }
  json out = {{"format", kCheckpointFormat},
              {"version", kCheckpointVersion},
              {"d", d},
              {"symmetry", options.symmetry},
              {"float_prefilter", options.float_prefilter},
              {"work_items_total", items.size()},
              {"completed", agg.done},
              {"kernel_solves", agg.kernel_solves},
              {"escalations", agg.escalations},
              {"float_decided", agg.float_decided},
              {"total_histogram", histogram_json(agg.total_histogram)},
              {"half_histogram", histogram_json(agg.half_histogram)},
              {"pairs", pairs},
              {"hits", hits}};
  out["last_key"] = agg.done == 0 ? json(nullptr) : key_json(items[agg.done - 1]);
  return out;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResumeError("cannot write checkpoint " + tmp);
    out << text;
    out.flush();
    if (!out) throw ResumeError("short write on checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Aggregate load_checkpoint(const std::string& path, int d, const SaturationOptions& options,
                          const std::vector<WorkItem>& items) {
  std::ifstream in(path);
  if (!in) throw ResumeError("cannot read checkpoint " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ResumeError("checkpoint " + path + " is not valid JSON: " + e.what());
  }
  auto mismatch = [&](const std::string& what) {
    return ResumeError("checkpoint " + path + " does not match this run: " + what);
  };
  Aggregate agg;
  try {
    if (j.at("format") != kCheckpointFormat || j.at("version") != kCheckpointVersion) {
      throw mismatch("unknown format");
    }
    if (j.at("d").get<int>() != d) throw mismatch("dimension");
    if (j.at("symmetry").get<bool>() != options.symmetry) throw mismatch("symmetry flag");
    if (j.at("float_prefilter").get<bool>() != options.float_prefilter) throw mismatch("prefilter flag");
    if (j.at("work_items_total").get<std::uint64_t>() != items.size()) throw mismatch("work item count");
    agg.done = j.at("completed").get<std::uint64_t>();
    if (agg.done > items.size()) throw mismatch("completed count exceeds work items");
    const json expected = agg.done == 0 ? json(nullptr) : key_json(items[agg.done - 1]);
    if (j.at("last_key") != expected) throw mismatch("last work-item key");
    agg.kernel_solves = j.at("kernel_solves").get<std::uint64_t>();
    agg.escalations = j.at("escalations").get<std::uint64_t>();
    agg.float_decided = j.at("float_decided").get<std::uint64_t>();
    agg.total_histogram = histogram_from_json(j.at("total_histogram"));
    agg.half_histogram = histogram_from_json(j.at("half_histogram"));
    for (const auto& p : j.at("pairs")) {
      agg.pairs.push_back({p.at("j1").get<int>(), p.at("j2").get<int>(),
                           p.at("candidates").get<std::uint64_t>(), p.at("min_total").get<int>(),
                           p.at("min_other").get<int>()});
    }
    for (const auto& h : j.at("hits")) {
      agg.hits.push_back({h.at("j1").get<int>(), h.at("j2").get<int>(),
                          h.at("z1").get<std::vector<int>>(), h.at("z2").get<std::vector<int>>(),
                          h.at("sizes").get<std::vector<int>>(), {}});
    }
  } catch (const json::exception& e) {
    throw ResumeError("checkpoint " + path + " is missing or has malformed fields: " + e.what());
  }
  return agg;
}

}  // namespace

double saturation_time_estimate(int d, int workers) {
  // measured throughput of the residue engine, scaled by d^3 per solve
  const double per_solve = 2.0e-6 * d * d * d / 125.0;
  const int n = (d - 1) / 2;
  const double solves = static_cast<double>(d) * (d + 1) / 2.0 *
                        static_cast<double>(binomial(d, n)) / d * static_cast<double>(binomial(d, n));
  return solves * per_solve / std::max(1, workers);
}

SearchReport saturation_search(int d, const SaturationOptions& options) {
  require_prime(d);
  if (d < 3) throw InvalidDimension("saturation search needs an odd prime");
  if (d >= 23) throw InvalidDimension("saturation search supports d <= 19");
  if (d >= 17 && !options.marathon) {
    throw InvalidDimension("d = " + std::to_string(d) + " is a marathon run; pass --marathon");
  }
  const auto start = std::chrono::steady_clock::now();
  const MubSet mubs = build_mub_set(d);
  const auto items = build_items(d, options.symmetry);

  Aggregate agg;
  bool resumed = false;
  if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
    agg = load_checkpoint(options.checkpoint_path, d, options, items);
    resumed = true;
  }

  std::size_t limit = items.size();
  if (options.max_items > 0) limit = std::min<std::size_t>(limit, agg.done + options.max_items);

  const ItemRunner runner(mubs, options.float_prefilter);
  std::mutex mutex;
  std::vector<std::optional<ItemResult>> results(items.size());
  std::atomic<std::size_t> next{agg.done};
  std::atomic<bool> failed{false};
  std::exception_ptr failure;

  auto worker = [&] {
    while (!failed) {
      const std::size_t i = next.fetch_add(1);
      if (i >= limit) return;
      try {
        ItemResult r = runner.run(items[i]);
        std::lock_guard lock(mutex);
        results[i] = std::move(r);
        // merge the finished prefix in key order
        while (agg.done < limit && results[agg.done]) {
          const std::size_t slot = agg.done;
          agg.merge(items[slot], *results[slot]);
          results[slot].reset();
          if (!options.checkpoint_path.empty()) {
            write_atomically(options.checkpoint_path, checkpoint_json(d, options, items, agg).dump(1));
          }
          if (options.progress) options.progress(agg.done, items.size());
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report;
  report.dim = d;
  report.symmetry = options.symmetry;
  report.float_prefilter = options.float_prefilter;
  report.work_items_total = items.size();
  report.work_items_done = agg.done;
  report.pairs_examined = agg.pairs.size();
  report.kernel_solves = agg.kernel_solves;
  report.escalations = agg.escalations;
  report.float_decided = agg.float_decided;
  report.total_histogram = agg.total_histogram;
  report.half_histogram = agg.half_histogram;
  report.pairs = agg.pairs;
  report.complete = agg.done == items.size();
  report.resumed = resumed;
  report.checkpoint_id = "d" + std::to_string(d) + (options.symmetry ? "-sym" : "-full") +
                         (options.float_prefilter ? "-float" : "-exact") + "-" +
                         std::to_string(agg.done) + "of" + std::to_string(items.size());
  for (auto& hit : agg.hits) {
    KernelSystem system{d, {}};
    for (int k : hit.z1) system.rows.push_back({hit.j1, k});
    for (int k : hit.z2) system.rows.push_back({hit.j2, k});
    hit.state = kernel_ray(system, mubs);
    if (support_profile(hit.state, mubs).sizes != hit.sizes) {
      throw TheoremViolation("exact profile of a search hit disagrees with the residue engine");
    }
    report.hits.push_back(std::move(hit));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mubsupport
