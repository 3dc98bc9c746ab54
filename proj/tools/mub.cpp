#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mubsupport/analyses.hpp"
#include "mubsupport/commands.hpp"
#include "mubsupport/errors.hpp"
#include "mubsupport/monomial.hpp"
#include "mubsupport/serialization.hpp"

using namespace mubsupport;

namespace {

bool on_off(const std::string& value, const std::string& flag) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw ParseError(flag + " takes on|off");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string profile_table(const SupportProfile& p) {
  std::string out = "basis  support\n";
  for (std::size_t j = 0; j < p.sizes.size(); ++j) {
    out += std::to_string(j) + "      " + std::to_string(p.sizes[j]) + "\n";
  }
  out += "total  " + std::to_string(p.total) + "  (T = " + format_rational(complete_bound(p.dim)) + ", " +
         to_string(check_complete_bound(p)) + ")\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Support sizes of quantum states in complete sets of mutually unbiased bases"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string state_path;
  std::string symmetry = "on";
  std::string prefilter = "off";
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::string matrix = "F";
  int j = 0;
  int k = 0;
  int max_order = 0;
  int max_d = 13;
  bool extended = false;
  bool witnesses = false;

  auto add_format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("--format", format, "Output format (" + choices + ")")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Emit the standard basis set as JSON");
  gen->add_option("d", cfg.d, "Prime dimension")->required();

  auto* profile = app.add_subcommand("profile", "Support profile of a state file");
  profile->add_option("d", cfg.d, "Prime dimension")->required();
  profile->add_option("--state", state_path, "State JSON {dim, entries}")->required();
  add_format(profile, "json|csv|table");

  auto* verify = app.add_subcommand("verify-all", "Run every structural check for one dimension");
  verify->add_option("d", cfg.d, "Prime dimension <= 13")->required();
  verify->add_option("--samples", samples, "Random states for the pair-inequality fuzz (default 10000)");
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* monomial = app.add_subcommand("verify-monomial", "Monomial decomposition of H_k^dag H_j H_t");
  monomial->add_option("d", cfg.d, "Prime dimension")->required();
  monomial->add_option("--j", j, "Label j (all pairs when omitted)");
  monomial->add_option("--k", k, "Label k");

  auto* minors = app.add_subcommand("minors", "Certify that square submatrices are nonsingular");
  minors->add_option("d", cfg.d, "Prime dimension")->required();
  minors->add_flag("--exhaustive", exhaustive, "Every submatrix (d <= 7)");
  minors->add_option("--samples", samples, "Random submatrices instead");
  minors->add_option("--matrix", matrix, "F, H (uses --j) or P (H_k^dag H_j)")->capture_default_str();
  minors->add_option("--j", j, "Label j");
  minors->add_option("--k", k, "Label k");
  minors->add_option("--max-order", max_order, "Largest minor order (default d)");
  minors->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* classify = app.add_subcommand("classify-d3", "All saturating qutrit states");

  auto* search = app.add_subcommand("search-saturation", "Search for support (d+1)/2 in three bases");
  search->add_option("d", cfg.d, "Odd prime dimension")->required();
  search->add_option("--symmetry", symmetry, "on|off")->capture_default_str();
  search->add_option("--prefilter", prefilter, "on|off")->capture_default_str();
  search->add_option("--checkpoint", cfg.checkpoint, "Checkpoint file; resumed when present");
  search->add_flag("--marathon", cfg.marathon, "Allow d = 17, 19");
  search->add_option("--workers", cfg.workers, "Worker threads (default MUB_WORKERS or all cores)");
  search->add_flag("--timings", cfg.timings, "Include wall time in the report");
  add_format(search, "json|table");

  auto* sharp = app.add_subcommand("sharp-bound", "Sharp lower bound on the overall support");
  sharp->add_option("d", cfg.d, "2, 3, 5 or 7")->required();
  sharp->add_flag("--witnesses", witnesses, "Include every witness state");
  sharp->add_flag("--timings", cfg.timings, "Include wall time in the d = 7 findings");

  auto* table = app.add_subcommand("table1", "Lower and sharp bounds for every prime up to --max-d");
  table->add_option("--max-d", max_d, "Largest dimension")->capture_default_str();
  table->add_flag("--extended", extended, "Also run the d = 13 search");
  table->add_flag("--marathon", cfg.marathon, "Allow dimensions above 13");
  table->add_option("--workers", cfg.workers, "Worker threads");
  add_format(table, "json|csv|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    cfg.format = parse_format(format);
    if (*gen) {
      validate_dimension(cfg.d);
      print(to_json(build_mub_set(cfg.d)));
    } else if (*profile) {
      validate_dimension(cfg.d);
      const StateVector psi = ingest_state(state_path);
      if (psi.dim != cfg.d) throw DimensionMismatch("state file has dim " + std::to_string(psi.dim));
      const auto p = support_profile(psi, build_mub_set(cfg.d));
      if (cfg.format == OutputFormat::csv) {
        std::cout << profile_csv(p);
      } else if (cfg.format == OutputFormat::table) {
        std::cout << profile_table(p);
      } else {
        print(to_json(p));
      }
    } else if (*verify) {
      const auto report = cmd_verify_all(cfg.d, samples == 0 ? 10000 : samples, seed);
      print(to_json(report));
      if (!report.passed()) return 2;
    } else if (*monomial) {
      validate_dimension(cfg.d);
      const MubSet mubs = build_mub_set(cfg.d);
      if (cfg.d == 2) {
        const auto rel = qubit_monomial_relations();
        print({{"d", 2}, {"M_monomial", rel.m_is_monomial}, {"M_prime_monomial", rel.m_prime_is_monomial}});
      } else if (j != 0 || k != 0) {
        print(to_json(monomial_decompose(mubs, j, k)));
      } else {
        Json all = Json::array();
        for (int a = 1; a <= cfg.d; ++a) {
          for (int b = 1; b <= cfg.d; ++b) {
            if (a != b) all.push_back(to_json(monomial_decompose(mubs, a, b)));
          }
        }
        print({{"d", cfg.d}, {"decompositions", all}});
      }
    } else if (*minors) {
      validate_dimension(cfg.d);
      MinorSelector selector;
      if (matrix == "F") {
        selector.kind = MinorMatrix::fourier;
      } else if (matrix == "H") {
        selector = {MinorMatrix::hadamard, j, 1};
      } else if (matrix == "P") {
        selector = {MinorMatrix::product, j, k};
      } else {
        throw ParseError("--matrix takes F, H or P");
      }
      MinorsOptions options;
      options.max_order = max_order;
      options.seed = seed;
      options.exhaustive = exhaustive || samples == 0;
      if (samples > 0) options.samples = samples;
      if (exhaustive && samples > 0) throw ParseError("choose --exhaustive or --samples");
      Json out = to_json(minors_certify(cfg.d, selector, options));
      out["matrix"] = selector.describe();
      out["d"] = cfg.d;
      out["mode"] = options.exhaustive ? "exhaustive" : "sampled";
      print(out);
    } else if (*classify) {
      Json states = Json::array();
      const MubSet mubs = build_mub_set(3);
      for (const auto& psi : classify_d3()) {
        Json s = to_json(psi);
        s["sizes"] = support_profile(psi, mubs).sizes;
        states.push_back(s);
      }
      print({{"mode", "d3-classify"}, {"count", states.size()}, {"states", states}});
    } else if (*search) {
      validate_dimension(cfg.d);
      cfg.symmetry = on_off(symmetry, "--symmetry");
      cfg.prefilter = on_off(prefilter, "--prefilter");
      SaturationOptions options;
      options.symmetry = cfg.symmetry;
      options.float_prefilter = cfg.prefilter;
      options.checkpoint_path = cfg.checkpoint;
      options.marathon = cfg.marathon;
      options.workers = resolve_workers(cfg.workers);
      if (cfg.d >= 17 && cfg.marathon) {
        std::fprintf(stderr, "estimated wall time: %.1f hours on %d workers\n",
                     saturation_time_estimate(cfg.d, options.workers) / 3600.0, options.workers);
      }
      const SearchReport report = saturation_search(cfg.d, options);
      if (cfg.format == OutputFormat::table) {
        std::cout << "d " << report.dim << ": " << report.kernel_solves << " rays, " << report.hits.size()
                  << " hits\n";
        std::cout << "j1  j2  rays        min S  min other\n";
        for (const auto& p : report.pairs) {
          std::printf("%-3d %-3d %-11llu %-6d %d\n", p.j1, p.j2, static_cast<unsigned long long>(p.candidates),
                      p.min_total, p.min_other);
        }
      } else {
        print(to_json(report, cfg.timings));
      }
    } else if (*sharp) {
      validate_dimension(cfg.d);
      SaturationOptions options;
      options.workers = resolve_workers(0);
      Json out = to_json(sharp_bound(cfg.d, options), witnesses);
      if (cfg.d == 7) out["d7_findings"] = to_json(support5_triple_search(), cfg.timings);
      print(out);
    } else if (*table) {
      Table1Options options;
      options.max_d = max_d;
      options.extended = extended;
      options.marathon = cfg.marathon;
      options.workers = resolve_workers(cfg.workers);
      const auto rows = cmd_table1(options);
      if (cfg.format == OutputFormat::table) {
        std::cout << table1_text(rows);
      } else if (cfg.format == OutputFormat::csv) {
        std::cout << table1_csv(rows);
      } else {
        print(to_json(rows));
      }
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (const ResumeError& e) {
    std::cerr << "resume error: " << e.what() << '\n';
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
