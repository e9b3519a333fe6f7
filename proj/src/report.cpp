#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <set>

#include "permcm/bases.hpp"

namespace permcm {

std::vector<std::uint32_t> prime_divisors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

CMReport cm_report(const PermutationGroup& g, const CMReportOptions& options) {
  CMReport r;
  r.group = serialize_group(g);
  r.order = g.order();
  auto rr = rr_subgroup(g);
  r.grr = serialize_group(rr.group);
  r.grr_index = rr.index;
  r.primes = options.primes ? *options.primes : prime_divisors(rr.index);
  r.prediction = rr.index == 1;
  bool algebraic_cm = true;
  for (auto p : r.primes) {
    auto c = minimal_generator_count(g, p);
    PrimeVerdict v{c.expected, c.count, c.count == c.expected};
    algebraic_cm = algebraic_cm && v.cm;
    r.algebraic[p] = v;
  }
  if (options.topological) r.topological = is_cm_complex(build_quotient_complex(g), Domain::Z()).cm;
  r.agree = algebraic_cm == r.prediction && (!r.topological || *r.topological == r.prediction);
  return r;
}

namespace {

std::string conjugacy_key(const PermutationGroup& g) {
  std::map<CycleStructure, int> types;
  for (const auto& e : g.elements()) ++types[cycle_structure(e)];
  std::vector<std::size_t> orbit_sizes;
  std::vector<bool> seen(static_cast<std::size_t>(g.degree()) + 1, false);
  for (int x = 1; x <= g.degree(); ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(g, x, [](const Permutation& p, int y) { return p(y); });
    for (int y : orb) seen[y] = true;
    orbit_sizes.push_back(orb.size());
  }
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  std::string key = std::to_string(g.order()) + "|";
  for (const auto& [cs, count] : types) {
    for (const auto& [len, mult] : cs) key += std::to_string(len) + "^" + std::to_string(mult) + ".";
    key += ":" + std::to_string(count) + ",";
  }
  key += "|";
  for (auto s : orbit_sizes) key += std::to_string(s) + ",";
  return key;
}

bool conjugate(const PermutationGroup& a, const PermutationGroup& b, const PermutationGroup& sym) {
  if (a.order() != b.order()) return false;
  for (const auto& x : sym.elements()) {
    Permutation xi = x.inverse();
    bool ok = true;
    for (const auto& gen : a.generators())
      if (!b.contains(x * gen * xi)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<PermutationGroup> subgroup_class_representatives(int n) {
  PermutationGroup sym = PermutationGroup::symmetric(n);
  // One generator per cyclic subgroup.
  std::vector<Permutation> cyclic;
  std::set<std::vector<Permutation>> seen_cyclic;
  for (const auto& x : sym.elements()) {
    PermutationGroup c(n, {x});
    if (seen_cyclic.insert(c.elements()).second) cyclic.push_back(x);
  }
  std::vector<PermutationGroup> reps;
  std::vector<std::string> keys;
  std::map<std::string, std::vector<std::size_t>> by_key;
  auto add = [&](const PermutationGroup& h) {
    std::string key = conjugacy_key(h);
    for (std::size_t i : by_key[key])
      if (conjugate(h, reps[i], sym)) return;
    by_key[key].push_back(reps.size());
    reps.push_back(h);
    keys.push_back(key);
  };
  add(PermutationGroup::trivial(n));
  // Every subgroup is generated by a maximal subgroup and one more cyclic
  // subgroup, so extending class representatives reaches every class.
  for (std::size_t i = 0; i < reps.size(); ++i) {
    PermutationGroup h = reps[i];
    for (const auto& c : cyclic) {
      if (h.contains(c)) continue;
      std::vector<Permutation> gens = h.generators();
      if (gens.size() == 1 && gens[0].is_identity()) gens.clear();
      gens.push_back(c);
      add(PermutationGroup(n, gens));
    }
  }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (reps[a].order() != reps[b].order()) return reps[a].order() < reps[b].order();
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return serialize_group(reps[a]) < serialize_group(reps[b]);
  });
  std::vector<PermutationGroup> out;
  for (auto i : order) out.push_back(reps[i]);
  return out;
}

SurveyResult survey(int n, const CMReportOptions& options, int jobs) {
  auto groups = subgroup_class_representatives(n);
  SurveyResult res;
  res.n = n;
  res.reports.resize(groups.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (std::size_t i = 0; i < groups.size(); ++i) {
    try {
      res.reports[i] = cm_report(groups[i], options);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (const auto& r : res.reports) res.all_agree = res.all_agree && r.agree;
  return res;
}

}  // namespace permcm
