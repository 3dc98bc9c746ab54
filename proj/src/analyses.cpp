#include "mubsupport/analyses.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <string>

#include "mubsupport/errors.hpp"
#include "mubsupport/exact_linalg.hpp"
#include "mubsupport/monomial.hpp"
#include "mubsupport/number_theory.hpp"
#include "mubsupport/residue_profiler.hpp"

namespace mubsupport {

namespace {

std::string join(const std::vector<int>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::vector<BasisIndex> rows_for(int basis, const std::vector<int>& zeros) {
  std::vector<BasisIndex> out;
  for (int k : zeros) out.push_back({basis, k});
  return out;
}

void append(std::vector<BasisIndex>& rows, int basis, const std::vector<int>& zeros) {
  for (int k : zeros) rows.push_back({basis, k});
}

int count_of(const std::vector<int>& values, int v) {
  return static_cast<int>(std::count(values.begin(), values.end(), v));
}

/// Removes one occurrence of each listed value; false if one is missing.
bool remove_values(std::vector<int>& values, const std::vector<int>& remove) {
  for (int v : remove) {
    auto it = std::find(values.begin(), values.end(), v);
    if (it == values.end()) return false;
    values.erase(it);
  }
  return true;
}

bool all_at_least(const std::vector<int>& values, int floor) {
  return std::all_of(values.begin(), values.end(), [floor](int v) { return v >= floor; });
}

// Zero sets for one basis: canonical shift representatives when this basis is
// the one carrying the B-shift quotient, all subsets otherwise.
std::vector<std::vector<int>> zero_set_choices(int d, int size, bool canonical) {
  return canonical ? canonical_class_representatives(d, size) : all_subsets(d, size);
}

StateVector combine(const MubBasis& basis, const std::vector<Cyclotomic>& coeffs) {
  const int d = basis.dim();
  const int order = basis.order();
  StateVector out{d, CycVector(d), {}};
  for (int x = 0; x < d; ++x) {
    if (basis.is_computational()) {
      out.entries(x) = coeffs[x].in_order(order);
      continue;
    }
    CyclicAccumulator sum(order);
    for (int k = 0; k < d; ++k) {
      if (!coeffs[k].is_zero()) sum.add_times_root(coeffs[k], basis.exponent(x, k));
    }
    out.entries(x) = sum.result();
  }
  return out;
}

}  // namespace

std::vector<StateVector> classify_d3() {
  const MubSet mubs = build_mub_set(3);
  std::vector<StateVector> found;
  for (int z0 = 0; z0 < 3; ++z0) {
    for (int j = 1; j <= 3; ++j) {
      for (int kappa = 0; kappa < 3; ++kappa) {
        const StateVector psi = kernel_ray({3, {{0, z0}, {j, kappa}}}, mubs);
        const auto profile = support_profile(psi, mubs);
        if (!equal_support_condition(profile)) continue;
        const bool seen = std::any_of(found.begin(), found.end(),
                                      [&](const StateVector& s) { return same_ray(s, psi); });
        if (!seen) found.push_back(psi);
      }
    }
  }
  if (found.size() != 9) {
    throw TheoremViolation("d = 3 classification found " + std::to_string(found.size()) +
                           " saturating rays instead of 9");
  }
  for (std::size_t i = 0; i < found.size(); ++i) found[i].label = "saturating-" + std::to_string(i);
  return found;
}

RestrictionReport verify_lemma5(int d) {
  if (d != 5) throw InvalidDimension("the restriction lemma is stated for d = 5");
  const MubSet mubs = build_mub_set(d);
  RestrictionReport report;
  report.min_total = (d + 1) * d;
  const auto pairs = all_subsets(d, 2);
  for (int j = 0; j <= d; ++j) {
    for (int jp = j + 1; jp <= d; ++jp) {
      for (const auto& z : pairs) {
        for (const auto& zp : pairs) {
          std::vector<BasisIndex> rows = rows_for(j, z);
          append(rows, jp, zp);
          const StateVector psi = kernel_ray({d, rows}, mubs);
          const auto profile = support_profile(psi, mubs);
          ++report.rays;
          report.min_total = std::min(report.min_total, profile.total);
          for (int b = 0; b <= d; ++b) {
            const int expected = (b == j || b == jp) ? 3 : 5;
            if (profile.sizes[b] != expected) {
              throw TheoremViolation("support (3,3) ray with profile " + join(profile.sizes) +
                                     " on bases " + std::to_string(j) + "," + std::to_string(jp));
            }
            if (b == j || b == jp) continue;
            for (int x3 = 0; x3 < d; ++x3) {
              std::vector<BasisIndex> square = rows;
              square.push_back({b, x3});
              ++report.determinants;
              if (determinant(constraint_matrix(mubs, square)).is_zero()) {
                throw TheoremViolation("singular 5x5 system on bases " + std::to_string(j) + "," +
                                       std::to_string(jp) + "," + std::to_string(b));
              }
            }
          }
        }
      }
    }
  }
  return report;
}

std::string MinorSelector::describe() const {
  switch (kind) {
    case MinorMatrix::fourier: return "F";
    case MinorMatrix::hadamard: return "H_" + std::to_string(j);
    case MinorMatrix::product: return "H_" + std::to_string(k) + "^dag H_" + std::to_string(j);
  }
  return "?";
}

MinorsReport minors_certify(int d, const MinorSelector& selector, const MinorsOptions& options) {
  return minors_certify(build_mub_set(d), selector, options);
}

MinorsReport minors_certify(const MubSet& mubs, const MinorSelector& selector, const MinorsOptions& options) {
  const int d = mubs.dim();
  CycMatrix m;
  switch (selector.kind) {
    case MinorMatrix::fourier:
      m = mubs.basis(1).matrix();
      break;
    case MinorMatrix::hadamard:
      if (selector.j < 1 || selector.j > d) throw InvalidDimension("H_j needs j in 1..d");
      m = mubs.basis(selector.j).matrix();
      break;
    case MinorMatrix::product:
      if (selector.j < 1 || selector.j > d || selector.k < 1 || selector.k > d || selector.j == selector.k) {
        throw InvalidDimension("H_k^dag H_j needs distinct j, k in 1..d");
      }
      m = transition_matrix(mubs, selector.k, selector.j);
      break;
  }
  const int max_order = options.max_order <= 0 ? d : std::min(options.max_order, d);
  MinorsReport report;
  report.per_order.assign(max_order + 1, 0);

  auto check = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
    const int r = static_cast<int>(rows.size());
    CycMatrix sub(r, r);
    for (int a = 0; a < r; ++a) {
      for (int b = 0; b < r; ++b) sub(a, b) = m(rows[a], cols[b]);
    }
    if (determinant(sub).is_zero()) {
      throw TheoremViolation("vanishing minor of " + selector.describe() + " at d=" + std::to_string(d) +
                             " rows " + join(rows) + " cols " + join(cols));
    }
    ++report.checked;
    ++report.per_order[r];
  };

  if (options.exhaustive) {
    if (d > 7) throw InvalidDimension("exhaustive minors need d <= 7; use sampling");
    for (int r = 1; r <= max_order; ++r) {
      const auto subsets = all_subsets(d, r);
      for (const auto& rows : subsets) {
        for (const auto& cols : subsets) check(rows, cols);
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::vector<int> idx(d);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      const int r = 1 + static_cast<int>(rng() % max_order);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<int> rows(idx.begin(), idx.begin() + r);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<int> cols(idx.begin(), idx.begin() + r);
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      check(rows, cols);
    }
  }
  return report;
}

std::vector<StateVector> two_term_states(int d) {
  const MubSet mubs = build_mub_set(d);
  const int step = mubs.order() / d;
  std::vector<StateVector> out;
  for (int j = 0; j <= d; ++j) {
    for (int k1 = 0; k1 < d; ++k1) {
      for (int k2 = k1 + 1; k2 < d; ++k2) {
        const StateVector a = mubs.column(j, k1);
        const StateVector b = mubs.column(j, k2);
        for (int n = 0; n < d; ++n) {
          StateVector psi{d, CycVector(d), "two-term j=" + std::to_string(j) + " k=" + std::to_string(k1) +
                                                "," + std::to_string(k2) + " n=" + std::to_string(n)};
          for (int x = 0; x < d; ++x) psi.entries(x) = a.entries(x) - b.entries(x).times_root(n * step);
          out.push_back(std::move(psi));
        }
      }
    }
  }
  return out;
}

bool pair_admissible(const std::vector<int>& sorted_sizes, int d) {
  return sorted_sizes.size() < 2 || sorted_sizes[0] + sorted_sizes[1] >= d + 1;
}

LadderResult admissible_profile_minimum(int d, const std::function<bool(const std::vector<int>&)>& admissible) {
  LadderResult result;
  result.min_total = (d + 1) * d + 1;
  std::vector<int> sizes;
  std::function<void(int)> walk = [&](int low) {
    if (static_cast<int>(sizes.size()) == d + 1) {
      if (!admissible(sizes)) return;
      ++result.profiles_admitted;
      const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
      if (total < result.min_total) {
        result.min_total = total;
        result.minimizer = sizes;
      }
      return;
    }
    for (int s = low; s <= d; ++s) {
      sizes.push_back(s);
      walk(s);
      sizes.pop_back();
    }
  };
  walk(1);
  return result;
}

Support5Report support5_triple_search() {
  constexpr int d = 7;
  const auto start = std::chrono::steady_clock::now();
  const MubSet mubs = build_mub_set(d);
  const ResidueProfiler profiler(mubs);
  Support5Report report;

  // (4, 2) zero splits
  report.min_other_3_5 = d + 1;
  for (int j1 = 0; j1 <= d; ++j1) {
    for (int j2 = 0; j2 <= d; ++j2) {
      if (j1 == j2) continue;
      const bool shift_first = j1 >= 1;
      for (const auto& z1 : zero_set_choices(d, 4, shift_first)) {
        for (const auto& z2 : zero_set_choices(d, 2, !shift_first)) {
          std::vector<BasisIndex> rows = rows_for(j1, z1);
          append(rows, j2, z2);
          const RayZeros ray = profiler.ray(rows);
          if (!ray.unique) throw TheoremViolation("six rows from two bases are dependent");
          const auto sizes = ray.sizes(d);
          ++report.rays_3_5;
          if (sizes[j1] == 3 && sizes[j2] == 5) ++report.rays_3_5_with_profile;
          for (int b = 0; b <= d; ++b) {
            if (b != j1 && b != j2) report.min_other_3_5 = std::min(report.min_other_3_5, sizes[b]);
          }
        }
      }
    }
  }

  // a support-(5,5) witness from a three-dimensional solution space
  {
    const std::vector<BasisIndex> rows{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const CycMatrix kernel = exact_kernel(mubs, rows);
    for (long a = 1; a <= 5 && !report.pair_witness; ++a) {
      for (long b = 1; b <= 5 && !report.pair_witness; ++b) {
        StateVector psi{d, CycVector(d), "support-5 pair"};
        for (int x = 0; x < d; ++x) {
          psi.entries(x) = kernel(x, 0) + Cyclotomic(a) * kernel(x, 1) + Cyclotomic(b) * kernel(x, 2);
        }
        if (psi.is_zero()) continue;
        const auto profile = support_profile(psi, mubs);
        if (profile.sizes[0] == 5 && profile.sizes[1] == 5) {
          report.pair_witness = normalized_ray(psi);
          report.pair_witness->label = "support-5 pair";
          report.pair_profile = profile;
        }
      }
    }
  }

  // (2, 2, 2) zero splits
  report.min_other_triples = d + 1;
  for (int a = 0; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      for (int c = b + 1; c <= d; ++c) {
        const int shifted = a >= 1 ? a : b;
        for (const auto& za : zero_set_choices(d, 2, shifted == a)) {
          for (const auto& zb : zero_set_choices(d, 2, shifted == b)) {
            for (const auto& zc : all_subsets(d, 2)) {
              std::vector<BasisIndex> rows = rows_for(a, za);
              append(rows, b, zb);
              append(rows, c, zc);
              ++report.systems_2_2_2;
              const RayZeros ray = profiler.ray(rows);
              if (!ray.unique) {
                ++report.degenerate_2_2_2;
                continue;
              }
              const auto sizes = ray.sizes(d);
              for (int o = 0; o <= d; ++o) {
                if (o != a && o != b && o != c) report.min_other_triples = std::min(report.min_other_triples, sizes[o]);
              }
              if (sizes[a] != 5 || sizes[b] != 5 || sizes[c] != 5) continue;
              ++report.triples;
              if (report.sample_triples.size() < 5) {
                TripleHit hit{{a, b, c}, {za, zb, zc}, sizes};
                report.sample_triples.push_back(hit);
              }
              if (!report.triple_witness) {
                const CycMatrix kernel = exact_kernel(mubs, rows);
                if (kernel.cols() != 1) throw TheoremViolation("residue and exact kernel ranks disagree");
                StateVector psi = normalized_ray({d, kernel.col(0), "support-5 triple"});
                psi.label = "support-5 triple";
                report.triple_profile = support_profile(psi, mubs);
                if (report.triple_profile.sizes != sizes) {
                  throw TheoremViolation("residue and exact profiles disagree");
                }
                report.triple_witness = psi;
              }
            }
          }
        }
      }
    }
  }

  // (3, 2, 2) zero splits: 7 x 7 systems
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      for (int c = b + 1; c <= d; ++c) {
        if (b == a || c == a) continue;
        const int shifted = a >= 1 ? a : b;
        for (const auto& za : zero_set_choices(d, 3, shifted == a)) {
          for (const auto& zb : zero_set_choices(d, 2, shifted == b)) {
            for (const auto& zc : all_subsets(d, 2)) {
              std::vector<BasisIndex> rows = rows_for(a, za);
              append(rows, b, zb);
              append(rows, c, zc);
              ++report.systems_3_2_2;
              if (profiler.is_singular(rows)) ++report.singular_3_2_2;
            }
          }
        }
      }
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

BoundReport sharp_bound(int d, const SaturationOptions& search_options) {
  if (d != 2 && d != 3 && d != 5 && d != 7) throw InvalidDimension("sharp bounds are implemented for d in {2,3,5,7}");
  const MubSet mubs = build_mub_set(d);
  BoundReport report;
  report.dim = d;
  report.T = complete_bound(d);
  report.achievable = Achievable::no;

  std::function<bool(const std::vector<int>&)> admissible = [d](const std::vector<int>& s) {
    return pair_admissible(s, d);
  };
  std::vector<StateVector> candidates;

  if (d == 2) {
    report.notes.push_back("T(2) is not an integer");
    candidates.push_back(basis_state(2, 0));
  } else if (d == 3) {
    candidates = classify_d3();
    report.achievable = Achievable::yes;
    report.notes.push_back("nine saturating rays from the exhaustive classification");
  } else if (d == 5) {
    const SearchReport search = saturation_search(5, search_options);
    const RestrictionReport lemma = verify_lemma5(5);
    const bool no_three_threes = search.complete && search.hits.empty();
    report.notes.push_back("saturation search: " + std::to_string(search.hits.size()) + " hits in " +
                           std::to_string(search.kernel_solves) + " rays");
    report.notes.push_back("support (3,3) forces support 5 elsewhere: " + std::to_string(lemma.determinants) +
                           " nonsingular 5x5 systems");
    admissible = [no_three_threes](const std::vector<int>& s) {
      if (!pair_admissible(s, 5)) return false;
      const int threes = count_of(s, 3);
      if (no_three_threes && threes >= 3) return false;
      if (threes == 2) {
        std::vector<int> rest = s;
        remove_values(rest, {3, 3});
        return all_at_least(rest, 5);
      }
      return true;
    };
    candidates = two_term_states(5);
  } else {
    const SearchReport search = saturation_search(7, search_options);
    const Support5Report s5 = support5_triple_search();
    const bool no_three_fours = search.complete && search.hits.empty();
    int four_four_floor = d + 1;
    for (const auto& p : search.pairs) four_four_floor = std::min(four_four_floor, p.min_other);
    if (!search.complete) four_four_floor = 1;
    const bool three_five = s5.three_five_forces_full();
    const bool no_455 = s5.no_four_five_five();
    const bool five_five_five = s5.triples_force_full();
    report.notes.push_back("saturation search: " + std::to_string(search.hits.size()) + " hits; support (4,4) leaves >= " +
                           std::to_string(four_four_floor) + " elsewhere");
    report.notes.push_back(std::string("support (3,5) forces 7 elsewhere: ") + (three_five ? "yes" : "no"));
    report.notes.push_back(std::string("no sizes <= (4,5,5): ") + (no_455 ? "yes" : "no") + " (" +
                           std::to_string(s5.singular_3_2_2) + " singular of " + std::to_string(s5.systems_3_2_2) + ")");
    report.notes.push_back(std::string("support (5,5,5) forces 7 elsewhere: ") + (five_five_five ? "yes" : "no") +
                           " (" + std::to_string(s5.triples) + " such rays)");
    admissible = [=](const std::vector<int>& s) {
      if (!pair_admissible(s, 7)) return false;
      const int fours = count_of(s, 4);
      const int fives = count_of(s, 5);
      if (no_three_fours && fours >= 3) return false;
      if (fours == 2) {
        std::vector<int> rest = s;
        remove_values(rest, {4, 4});
        if (!all_at_least(rest, four_four_floor)) return false;
      }
      if (three_five && count_of(s, 3) >= 1 && fives >= 1) {
        std::vector<int> rest = s;
        remove_values(rest, {3, 5});
        if (!all_at_least(rest, 7)) return false;
      }
      if (no_455 && fours >= 1 && fives >= 2) return false;
      if (five_five_five && fives >= 3) {
        std::vector<int> rest = s;
        remove_values(rest, {5, 5, 5});
        if (!all_at_least(rest, 7)) return false;
      }
      return true;
    };
    candidates = two_term_states(7);
  }

  const LadderResult ladder = admissible_profile_minimum(d, admissible);
  report.notes.push_back("profile ladder minimum " + std::to_string(ladder.min_total) + " at " + join(ladder.minimizer));

  for (const auto& psi : candidates) {
    const auto profile = support_profile(psi, mubs);
    if (profile.total != ladder.min_total) {
      throw TheoremViolation("witness " + psi.label + " has total " + std::to_string(profile.total) +
                             ", expected " + std::to_string(ladder.min_total));
    }
  }
  std::vector<StateVector> distinct;
  for (const auto& psi : candidates) {
    const StateVector ray = normalized_ray(psi);
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const StateVector& s) {
      for (int x = 0; x < d; ++x) {
        if (s.entries(x) != ray.entries(x)) return false;
      }
      return true;
    });
    if (seen) throw TheoremViolation("duplicate witness ray " + psi.label);
    distinct.push_back(ray);
    distinct.back().label = psi.label;
  }
  report.sharp = ladder.min_total;
  report.witnesses = std::move(distinct);
  return report;
}

CheckResult check_unitarity(const MubSet& mubs) {
  CheckResult out{"unitarity", true, {}, 0};
  const int d = mubs.dim();
  for (int j = 1; j <= d; ++j) {
    const CycMatrix h = mubs.basis(j).matrix();
    const CycMatrix g = exact_product(exact_adjoint(h), h);
    ++out.cases;
    for (int a = 0; a < d && out.passed; ++a) {
      for (int b = 0; b < d && out.passed; ++b) {
        const Cyclotomic expected = a == b ? Cyclotomic(static_cast<long>(d)) : Cyclotomic(0L);
        if (g(a, b) != expected) {
          out.passed = false;
          out.detail = "H_" + std::to_string(j) + "^dag H_" + std::to_string(j) + " differs from dI at (" +
                       std::to_string(a) + "," + std::to_string(b) + ")";
        }
      }
    }
  }
  return out;
}

CheckResult check_unbiasedness(const MubSet& mubs) {
  CheckResult out{"unbiasedness", true, {}, 0};
  const int d = mubs.dim();
  const Cyclotomic target(static_cast<long>(d));
  for (int j = 1; j <= d; ++j) {
    for (int jp = 0; jp < j; ++jp) {
      const CycMatrix t = transition_matrix(mubs, jp, j);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          ++out.cases;
          // basis 0 is unscaled, so its overlaps are units
          const Cyclotomic modulus = t(a, b) * t(a, b).conj();
          const Cyclotomic expected = jp == 0 ? Cyclotomic(1L) : target;
          if (out.passed && modulus != expected) {
            out.passed = false;
            out.detail = "bases " + std::to_string(jp) + "," + std::to_string(j) + " overlap (" + std::to_string(a) +
                         "," + std::to_string(b) + ") has |z|^2 = " + modulus.to_string();
          }
        }
      }
    }
  }
  return out;
}

CheckResult check_generation_identity(const MubSet& mubs) {
  CheckResult out{"generation identity", true, {}, 0};
  const int d = mubs.dim();
  const StateVector seed = mubs.column(1, 0);
  for (int j = 1; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      ++out.cases;
      const StateVector built = apply_D(apply_B(seed, k), j - 1);
      const StateVector target = mubs.column(j, k);
      for (int x = 0; x < d; ++x) {
        if (out.passed && built.entries(x) != target.entries(x)) {
          out.passed = false;
          out.detail = "D^" + std::to_string(j - 1) + " B^" + std::to_string(k) + " phi_0^1 differs from phi_" +
                       std::to_string(k) + "^" + std::to_string(j);
        }
      }
    }
  }
  return out;
}

CheckResult check_monomial_all(const MubSet& mubs, bool uniqueness) {
  CheckResult out{"monomial decomposition", true, {}, 0};
  const int d = mubs.dim();
  if (d == 2) {
    const auto rel = qubit_monomial_relations();
    out.cases = 2;
    out.passed = rel.m_is_monomial && rel.m_prime_is_monomial;
    if (!out.passed) out.detail = "qubit relation matrices are not monomial";
    return out;
  }
  for (int j = 1; j <= d; ++j) {
    for (int k = 1; k <= d; ++k) {
      if (j == k) continue;
      ++out.cases;
      try {
        const auto m = monomial_decompose(mubs, j, k);
        if (!uniqueness) continue;
        for (int tp = 1; tp <= d; ++tp) {
          if (tp != m.t && !monomial_negative_check(mubs, j, k, tp)) {
            out.passed = false;
            out.detail = "t' = " + std::to_string(tp) + " gives a zero entry for j=" + std::to_string(j) +
                         " k=" + std::to_string(k);
            return out;
          }
        }
      } catch (const TheoremViolation& e) {
        out.passed = false;
        out.detail = e.what();
        return out;
      }
    }
  }
  return out;
}

CheckResult check_root_frequency(const MubSet& mubs) {
  CheckResult out{"root frequency", true, {}, 0};
  const int d = mubs.dim();
  if (d == 2) return out;
  for (int j = 1; j <= d; ++j) {
    for (int k = 0; k < d; ++k) {
      std::vector<int> counts(d, 0);
      for (int x = 0; x < d; ++x) ++counts[mubs.basis(j).exponent(x, k)];
      for (int n = 0; n < d; ++n) {
        ++out.cases;
        // column 0 of F is all ones
        bool ok = counts[n] <= 2;
        if (j == 1) ok = k == 0 ? counts[n] == (n == 0 ? d : 0) : counts[n] == 1;
        if (out.passed && !ok) {
          out.passed = false;
          out.detail = "w^" + std::to_string(n) + " appears " + std::to_string(counts[n]) + " times in phi_" +
                       std::to_string(k) + "^" + std::to_string(j);
        }
      }
    }
  }
  return out;
}

CheckResult check_identical_entries(const MubSet& mubs) {
  CheckResult out{"identical entries", true, {}, 0};
  const int d = mubs.dim();
  if (d == 2) return out;
  for (int j1 = 1; j1 <= d; ++j1) {
    for (int j2 = j1; j2 <= d; ++j2) {
      for (int k1 = 0; k1 < d; ++k1) {
        for (int k2 = 0; k2 < d; ++k2) {
          if (j1 == j2 && k1 >= k2) continue;
          std::vector<int> counts(d, 0);
          for (int x = 0; x < d; ++x) {
            ++counts[mod_floor(mubs.basis(j1).exponent(x, k1) - mubs.basis(j2).exponent(x, k2), d)];
          }
          for (int n = 0; n < d; ++n) {
            ++out.cases;
            const bool ok = j1 == j2 ? counts[n] == 1 : counts[n] <= 2;
            if (out.passed && !ok) {
              out.passed = false;
              out.detail = "phi_" + std::to_string(k1) + "^" + std::to_string(j1) + " and phi_" + std::to_string(k2) +
                           "^" + std::to_string(j2) + " agree up to w^" + std::to_string(n) + " in " +
                           std::to_string(counts[n]) + " entries";
            }
          }
        }
      }
    }
  }
  return out;
}

StateVector random_state(int d, std::mt19937_64& rng) {
  const MubSet& mubs = [d]() -> const MubSet& {
    thread_local std::vector<MubSet> cache;
    for (const auto& m : cache) {
      if (m.dim() == d) return m;
    }
    cache.push_back(build_mub_set(d));
    return cache.back();
  }();
  const int order = mubs.order();
  auto random_coefficient = [&]() {
    long p = static_cast<long>(rng() % 7) - 3;
    if (p == 0) p = 1;
    const long q = 1 + static_cast<long>(rng() % 3);
    BigRational r(p, q);
    r.canonicalize();
    return Cyclotomic(r).in_order(order).times_root(static_cast<long>(rng() % order));
  };
  auto sparse_in = [&](int basis, int terms) {
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Cyclotomic> coeffs(d, Cyclotomic::zero(order));
    for (int t = 0; t < terms; ++t) coeffs[idx[t]] = random_coefficient();
    return combine(mubs.basis(basis), coeffs);
  };
  while (true) {
    StateVector psi;
    if (rng() % 5 == 4) {
      const int b1 = static_cast<int>(rng() % (d + 1));
      const int b2 = static_cast<int>(rng() % (d + 1));
      psi = sparse_in(b1, 1 + static_cast<int>(rng() % std::min(2, d)));
      const StateVector other = sparse_in(b2, 1 + static_cast<int>(rng() % std::min(2, d)));
      for (int x = 0; x < d; ++x) psi.entries(x) += other.entries(x);
    } else {
      psi = sparse_in(static_cast<int>(rng() % (d + 1)), 1 + static_cast<int>(rng() % d));
    }
    if (!psi.is_zero()) {
      psi.label = "random";
      return psi;
    }
  }
}

FuzzReport fuzz_pair_inequalities(int d, std::uint64_t samples, std::uint64_t seed) {
  require_prime(d);
  const MubSet mubs = build_mub_set(d);
  const int order = mubs.order();
  std::mt19937_64 rng(seed);
  FuzzReport report;
  auto fail = [&report](const std::string& what) {
    if (report.first_failure.empty()) report.first_failure = what;
  };
  for (std::uint64_t s = 0; s < samples; ++s) {
    const StateVector psi = random_state(d, rng);
    const auto profile = support_profile(psi, mubs);
    ++report.samples;
    for (const auto& pair : check_all_pairs(profile)) {
      if (!pair.sum_ok) {
        ++report.pair_violations;
        fail("sum bound fails for profile " + join(profile.sizes));
      }
      if (!pair.product_ok) {
        ++report.product_violations;
        fail("product bound fails for profile " + join(profile.sizes));
      }
    }
    const int j = static_cast<int>(rng() % (d + 1));
    const MubBasis& basis = mubs.basis(j);
    const auto coeffs = basis.coefficients(psi);
    std::vector<Cyclotomic> rephased, permuted(d), conjugated;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int k = 0; k < d; ++k) {
      rephased.push_back(coeffs[k].times_root(static_cast<long>(rng() % order)));
      permuted[perm[k]] = coeffs[k];
      conjugated.push_back(coeffs[k].conj());
    }
    for (const auto* variant : {&rephased, &permuted, &conjugated}) {
      if (support_size(combine(basis, *variant), basis) != profile.sizes[j]) {
        ++report.symmetry_violations;
        fail("support in basis " + std::to_string(j) + " changed under a coefficient symmetry");
      }
    }
  }
  return report;
}

}  // namespace mubsupport
