#include "mubsupport/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mubsupport/errors.hpp"
#include "mubsupport/number_theory.hpp"

namespace mubsupport {

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "table") return OutputFormat::table;
  throw ParseError("unknown output format '" + text + "'");
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MUB_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) throw ParseError("MUB_WORKERS must be a positive integer");
    return static_cast<int>(n);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void validate_dimension(int d) { require_prime(d); }

std::vector<Table1Row> cmd_table1(const Table1Options& options) {
  if (options.max_d > 13 && !options.marathon) throw InvalidDimension("table rows beyond d = 13 need --marathon");
  std::vector<Table1Row> rows;
  SaturationOptions search;
  search.workers = options.workers;
  search.marathon = options.marathon;
  for (int d = 2; d <= options.max_d; ++d) {
    if (!is_prime(d)) continue;
    Table1Row row;
    row.d = d;
    row.T = complete_bound(d);
    if (d == 2) {
      row.achievable = "no";
      row.provenance = "theorem";
    } else if (d == 3) {
      row.achievable = classify_d3().empty() ? "no" : "yes";
      row.provenance = "theorem";
    } else if (d <= 7 || d == 11 || (d == 13 && options.extended) || d >= 17) {
      const SearchReport report = saturation_search(d, search);
      row.achievable = report.hits.empty() ? (d <= 7 ? "no" : "numeric-no") : "yes";
      row.provenance = d <= 7 ? "theorem" : "search";
    } else {
      row.achievable = "numeric-no";
      row.provenance = "paper-numeric";
    }
    if (d <= 7) {
      const BoundReport bound = sharp_bound(d, search);
      row.sharp = bound.sharp;
      row.sharp_provenance = d == 7 ? "search" : "theorem";
    } else {
      row.sharp_provenance = "unknown";
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const std::vector<Table1Row>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"d", r.d},
                   {"T", format_rational(r.T)},
                   {"achievable", r.achievable},
                   {"achievable_provenance", r.provenance},
                   {"T_s", r.sharp ? Json(*r.sharp) : Json(nullptr)},
                   {"T_s_provenance", r.sharp_provenance}});
  }
  return {{"mode", "table1"}, {"rows", out}};
}

namespace {

std::string display_rational(const BigRational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string mark(const Table1Row& r) {
  if (r.achievable == "yes") return "yes";
  if (r.achievable == "no") return "no";
  if (r.achievable == "numeric-no") return "(no)";
  return "?";
}

std::string sharp_text(const Table1Row& r) {
  if (!r.sharp) return "?";
  const std::string v = std::to_string(*r.sharp);
  return r.sharp_provenance == "search" ? "(" + v + ")" : v;
}

}  // namespace

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "d" << std::setw(8) << "T(d)" << std::setw(13) << "achievable" << "T_s(d)\n";
  for (const auto& r : rows) {
    out << std::setw(8) << r.d << std::setw(8) << display_rational(r.T) << std::setw(13) << mark(r) << sharp_text(r)
        << '\n';
  }
  return out.str();
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "d,T,achievable,achievable_provenance,T_s,T_s_provenance\n";
  for (const auto& r : rows) {
    out << r.d << ',' << format_rational(r.T) << ',' << r.achievable << ',' << r.provenance << ','
        << (r.sharp ? std::to_string(*r.sharp) : "") << ',' << r.sharp_provenance << '\n';
  }
  return out.str();
}

bool VerifyAllReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyAllReport cmd_verify_all(int d, std::uint64_t fuzz_samples, std::uint64_t seed) {
  validate_dimension(d);
  if (d > 13) throw InvalidDimension("verify-all supports d <= 13");
  const MubSet mubs = build_mub_set(d);
  VerifyAllReport report;
  report.d = d;
  report.checks.push_back(check_unitarity(mubs));
  report.checks.push_back(check_unbiasedness(mubs));
  report.checks.push_back(check_generation_identity(mubs));
  report.checks.push_back(check_monomial_all(mubs, d <= 7));
  report.checks.push_back(check_root_frequency(mubs));
  report.checks.push_back(check_identical_entries(mubs));

  auto minors = [&](const MinorSelector& selector, bool exhaustive) {
    CheckResult c{"minors " + selector.describe(), true, {}, 0};
    MinorsOptions options;
    options.exhaustive = exhaustive;
    options.samples = 1000;
    options.seed = seed;
    try {
      c.cases = minors_certify(mubs, selector, options).checked;
    } catch (const TheoremViolation& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report.checks.push_back(c);
  };
  if (d > 2) {
    const bool exhaustive = d <= 7;
    minors({MinorMatrix::fourier, 1, 1}, exhaustive);
    for (int j = 2; j <= d; ++j) minors({MinorMatrix::hadamard, j, 1}, exhaustive);
    if (d <= 5) {
      for (int k = 1; k <= d; ++k) {
        for (int j = 1; j <= d; ++j) {
          if (j != k) minors({MinorMatrix::product, j, k}, true);
        }
      }
    }
  }

  const FuzzReport fuzz = fuzz_pair_inequalities(d, fuzz_samples, seed);
  CheckResult c{"pair inequalities (random states)", true, fuzz.first_failure, fuzz.samples};
  c.passed = fuzz.pair_violations == 0 && fuzz.product_violations == 0 && fuzz.symmetry_violations == 0;
  report.checks.push_back(c);
  return report;
}

Json to_json(const VerifyAllReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"mode", "verify-all"}, {"d", report.d}, {"passed", report.passed()}, {"checks", checks}};
}

StateVector parse_state_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n');
    throw ParseError("malformed state file at line " + std::to_string(line) + ": " + e.what());
  }
  return state_from_json(j);
}

StateVector ingest_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str());
}

}  // namespace mubsupport
