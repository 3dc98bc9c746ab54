#include "mubsupport/serialization.hpp"

#include <sstream>

#include "mubsupport/errors.hpp"

namespace mubsupport {

Json to_json(const Cyclotomic& value, int order) {
  Json out = Json::array();
  const Cyclotomic placed = value.in_order(order);
  for (const auto& c : placed.coeffs()) out.push_back(format_rational(c));
  return out;
}

Cyclotomic cyclotomic_from_json(const Json& j, int order) {
  if (!j.is_array() || static_cast<int>(j.size()) != field_degree(order)) {
    throw ParseError("a field element needs an array of " + std::to_string(field_degree(order)) + " rationals");
  }
  std::vector<BigRational> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw ParseError("coefficients must be \"num/den\" strings or integers");
    }
  }
  return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

Json to_json(const StateVector& psi) {
  Json entries = Json::array();
  for (int x = 0; x < psi.dim; ++x) entries.push_back(to_json(psi.entries(x), psi.order()));
  Json out = {{"dim", psi.dim}};
  if (!psi.label.empty()) out["label"] = psi.label;
  out["entries"] = entries;
  return out;
}

StateVector state_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a state must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw ParseError("state needs an integer \"dim\"");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("state needs an \"entries\" array");
  const int dim = j["dim"].get<int>();
  const auto& raw = j["entries"];
  if (raw.empty()) throw ParseError("state has no entries");
  if (static_cast<int>(raw.size()) != dim) {
    throw ParseError("state has " + std::to_string(raw.size()) + " entries for dim " + std::to_string(dim));
  }
  const int order = field_order_for_dimension(dim);
  std::vector<Cyclotomic> entries;
  for (const auto& e : raw) entries.push_back(cyclotomic_from_json(e, order));
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  StateVector psi = make_state(dim, entries, label);
  if (psi.is_zero()) throw DegenerateState("state is the zero vector");
  return psi;
}

Json to_json(const MubSet& mubs) {
  Json bases = Json::array();
  for (const auto& basis : mubs.bases()) {
    Json b = {{"label", basis.index()}};
    if (basis.is_computational()) {
      b["kind"] = "computational";
    } else {
      b["kind"] = "hadamard";
      Json rows = Json::array();
      for (int x = 0; x < mubs.dim(); ++x) {
        Json row = Json::array();
        for (int k = 0; k < mubs.dim(); ++k) row.push_back(basis.exponent(x, k));
        rows.push_back(row);
      }
      b["exponents"] = rows;
    }
    bases.push_back(b);
  }
  return {{"dim", mubs.dim()}, {"root_order", mubs.order()}, {"scaling", "sqrt(d)"}, {"bases", bases}};
}

MubSet mub_set_from_json(const Json& j) {
  try {
    const int dim = j.at("dim").get<int>();
    MubSet mubs = build_mub_set(dim);
    if (j.at("root_order").get<int>() != mubs.order()) throw ParseError("root order does not match dim");
    const auto& bases = j.at("bases");
    if (static_cast<int>(bases.size()) != mubs.size()) throw ParseError("expected d + 1 bases");
    for (int b = 0; b < mubs.size(); ++b) {
      const auto& entry = bases.at(b);
      if (entry.at("label").get<int>() != b) throw ParseError("bases must be listed in label order");
      const MubBasis& basis = mubs.basis(b);
      if (basis.is_computational()) {
        if (entry.at("kind") != "computational") throw ParseError("basis 0 must be computational");
        continue;
      }
      const auto& rows = entry.at("exponents");
      for (int x = 0; x < dim; ++x) {
        for (int k = 0; k < dim; ++k) {
          if (rows.at(x).at(k).get<int>() != basis.exponent(x, k)) {
            throw ParseError("basis " + std::to_string(b) + " differs from the standard set");
          }
        }
      }
    }
    return mubs;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed basis set: ") + e.what());
  }
}

Json to_json(const SupportProfile& profile) {
  Json pairs = Json::array();
  for (const auto& p : check_all_pairs(profile)) {
    pairs.push_back({{"j", p.j}, {"k", p.k}, {"sum", p.sum}, {"sum_slack", p.sum_slack},
                     {"product", p.product}, {"product_slack", p.product_slack}, {"ok", p.ok()}});
  }
  return {{"dim", profile.dim},
          {"sizes", profile.sizes},
          {"total", profile.total},
          {"T", format_rational(complete_bound(profile.dim))},
          {"complete_bound", to_string(check_complete_bound(profile))},
          {"equal_support", equal_support_condition(profile)},
          {"pairs", pairs}};
}

std::string profile_csv(const SupportProfile& profile) {
  std::ostringstream out;
  out << "j,k,size_j,size_k,sum,sum_slack,product,product_slack\n";
  for (const auto& p : check_all_pairs(profile)) {
    out << p.j << ',' << p.k << ',' << profile.sizes[p.j] << ',' << profile.sizes[p.k] << ',' << p.sum << ','
        << p.sum_slack << ',' << p.product << ',' << p.product_slack << '\n';
  }
  return out.str();
}

Json to_json(const MonomialDecomposition& m) {
  Json phases = Json::array();
  for (const auto& p : m.phases) phases.push_back(to_json(p, m.dim));
  return {{"dim", m.dim}, {"j", m.j}, {"k", m.k}, {"chi", m.chi}, {"t", m.t}, {"jacobi", m.jacobi},
          {"scale", m.scale}, {"permutation", m.permutation}, {"phase_exponents", m.phase_exponents},
          {"phases", phases}};
}

namespace {

Json histogram(const std::map<int, std::uint64_t>& h) {
  Json out = Json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

Json to_json(const SearchReport& report, bool timings) {
  Json hits = Json::array();
  for (const auto& h : report.hits) {
    hits.push_back({{"j1", h.j1}, {"j2", h.j2}, {"z1", h.z1}, {"z2", h.z2}, {"sizes", h.sizes},
                    {"state", to_json(h.state)}});
  }
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back({{"j1", p.j1}, {"j2", p.j2}, {"candidates", p.candidates}, {"min_total", p.min_total},
                     {"min_other", p.min_other}});
  }
  Json out = {{"mode", report.mode},
              {"d", report.dim},
              {"symmetry", report.symmetry},
              {"float_prefilter", report.float_prefilter},
              {"complete", report.complete},
              {"counts",
               {{"work_items", report.work_items_total},
                {"work_items_done", report.work_items_done},
                {"pairs_examined", report.pairs_examined},
                {"kernel_solves", report.kernel_solves},
                {"escalations", report.escalations},
                {"float_decided", report.float_decided},
                {"hits", report.hits.size()}}},
              {"hits", hits},
              {"total_histogram", histogram(report.total_histogram)},
              {"half_histogram", histogram(report.half_histogram)},
              {"pairs", pairs},
              {"checkpoint_id", report.checkpoint_id}};
  if (timings) out["timings"] = {{"elapsed_seconds", report.elapsed_seconds}, {"resumed", report.resumed}};
  return out;
}

Json to_json(const BoundReport& report, bool include_witnesses) {
  Json out = {{"mode", "sharp-bound"},
              {"d", report.dim},
              {"T", format_rational(report.T)},
              {"T_s", report.sharp ? Json(*report.sharp) : Json(nullptr)},
              {"achievable", to_string(report.achievable)},
              {"witness_count", report.witnesses.size()},
              {"notes", report.notes}};
  if (include_witnesses) {
    Json w = Json::array();
    for (const auto& psi : report.witnesses) w.push_back(to_json(psi));
    out["witnesses"] = w;
  }
  return out;
}

Json to_json(const Support5Report& report, bool timings) {
  Json samples = Json::array();
  for (const auto& h : report.sample_triples) {
    samples.push_back({{"bases", {h.bases[0], h.bases[1], h.bases[2]}},
                       {"zeros", {h.zeros[0], h.zeros[1], h.zeros[2]}},
                       {"sizes", h.sizes}});
  }
  Json out = {{"mode", "support5-triples"},
              {"d", 7},
              {"three_five",
               {{"rays", report.rays_3_5},
                {"rays_with_sizes_3_5", report.rays_3_5_with_profile},
                {"min_other_support", report.min_other_3_5},
                {"forces_full_support", report.three_five_forces_full()}}},
              {"pairs", {{"exist", report.pairs_exist()}}},
              {"triples",
               {{"systems", report.systems_2_2_2},
                {"degenerate", report.degenerate_2_2_2},
                {"rays_with_sizes_5_5_5", report.triples},
                {"min_other_support", report.min_other_triples},
                {"forces_full_support", report.triples_force_full()},
                {"samples", samples}}},
              {"four_five_five",
               {{"systems", report.systems_3_2_2},
                {"singular", report.singular_3_2_2},
                {"excluded", report.no_four_five_five()}}},
              {"no_four_bases_at_most_five", report.no_four_at_most_five()}};
  if (report.pair_witness) {
    out["pairs"]["witness"] = to_json(*report.pair_witness);
    out["pairs"]["profile"] = report.pair_profile.sizes;
  }
  if (report.triple_witness) {
    out["triples"]["witness"] = to_json(*report.triple_witness);
    out["triples"]["profile"] = report.triple_profile.sizes;
  }
  if (timings) out["timings"] = {{"elapsed_seconds", report.elapsed_seconds}};
  return out;
}

Json to_json(const MinorsReport& report) {
  return {{"checked", report.checked}, {"per_order", report.per_order}, {"all_nonzero", true}};
}

Json to_json(const CheckResult& check) {
  Json out = {{"name", check.name}, {"passed", check.passed}, {"cases", check.cases}};
  if (!check.detail.empty()) out["detail"] = check.detail;
  return out;
}

}  // namespace mubsupport
