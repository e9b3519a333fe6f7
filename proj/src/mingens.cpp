#include <omp.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "permcm/bases.hpp"

namespace permcm {

namespace {

// Exponent vectors of up to 8 variables packed one byte per variable.
using Packed = std::uint64_t;

int byte_at(Packed m, int i) { return static_cast<int>(m >> (8 * i) & 0xFF); }

Packed permute(const Permutation& g, Packed m, int n) {
  Packed r = 0;
  for (int i = 0; i < n; ++i) r |= static_cast<Packed>(byte_at(m, i)) << (8 * g.image0(i));
  return r;
}

void compositions(int n, int d, int i, Packed cur, std::vector<Packed>& out) {
  if (i == n - 1) {
    out.push_back(cur | static_cast<Packed>(d) << (8 * i));
    return;
  }
  for (int e = d; e >= 0; --e) compositions(n, d - e, i + 1, cur | static_cast<Packed>(e) << (8 * i), out);
}

// Orbit monomials of one degree: each column is one G-orbit.
struct DegreeData {
  std::vector<Packed> reps;                      // column -> representative
  std::vector<std::vector<Packed>> members;      // column -> orbit
  std::unordered_map<Packed, std::uint32_t> col; // every monomial -> column
};

DegreeData orbit_columns(const PermutationGroup& g, int d, std::mt19937_64* shuffle) {
  int n = g.degree();
  std::vector<Packed> monos;
  compositions(n, d, 0, 0, monos);
  DegreeData dd;
  dd.col.reserve(monos.size() * 2);
  for (Packed m : monos) {
    if (dd.col.count(m)) continue;
    std::vector<Packed> orb;
    for (const auto& e : g.elements()) orb.push_back(permute(e, m, n));
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    auto id = static_cast<std::uint32_t>(dd.reps.size());
    for (Packed x : orb) dd.col.emplace(x, id);
    dd.reps.push_back(orb.front());
    dd.members.push_back(std::move(orb));
  }
  if (shuffle) {
    std::vector<std::uint32_t> perm(dd.reps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), *shuffle);
    DegreeData s;
    s.col.reserve(dd.col.size());
    for (auto old : perm) {
      auto id = static_cast<std::uint32_t>(s.reps.size());
      s.reps.push_back(dd.reps[old]);
      for (Packed x : dd.members[old]) s.col.emplace(x, id);
      s.members.push_back(std::move(dd.members[old]));
    }
    return s;
  }
  return dd;
}

std::vector<std::uint32_t> subsets_of_size(int n, int i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (__builtin_popcount(s) == i) out.push_back(s);
  return out;
}

Packed add_subset(Packed m, std::uint32_t s) {
  while (s) {
    int b = __builtin_ctz(s);
    s &= s - 1;
    m += Packed{1} << (8 * b);
  }
  return m;
}

// Row-echelon rank over F_p; returns pivot flags per column.
std::vector<char> eliminate(std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols, std::uint32_t p,
                            bool parallel, std::size_t& rank) {
  std::vector<char> pivot(cols, 0);
  rank = 0;
  std::size_t nrows = rows.size();
  for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
    std::size_t r = rank;
    while (r < nrows && rows[r][c] == 0) ++r;
    if (r == nrows) continue;
    std::swap(rows[r], rows[rank]);
    auto& pr = rows[rank];
    std::uint64_t inv = 1, base = pr[c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t k = c; k < cols; ++k) pr[k] = static_cast<std::uint32_t>(pr[k] * inv % p);
    const std::size_t lo = rank + 1;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t q = lo; q < nrows; ++q) {
      std::uint64_t f = rows[q][c];
      if (!f) continue;
      auto& row = rows[q];
      for (std::size_t k = c; k < cols; ++k)
        row[k] = static_cast<std::uint32_t>((row[k] + (p - f) * pr[k]) % p);
    }
    pivot[c] = 1;
    ++rank;
  }
  return pivot;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

void check_inputs(const PermutationGroup& g, std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw NotPrime(std::to_string(p) + " is not a prime below 2^31");
  if (g.degree() > 8) throw IndexOutOfRange("generator counts are limited to degree 8");
}

}  // namespace

GeneratorCount minimal_generator_count(const PermutationGroup& g, std::uint32_t p,
                                       std::optional<std::uint64_t> shuffle_seed) {
  check_inputs(g, p);
  int n = g.degree();
  int top = n * (n - 1) / 2;
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  struct Row {
    std::vector<std::uint32_t> v;
    int max_index;  // largest i with a_i > 0 in sigma^a * w
  };
  std::vector<DegreeData> deg;
  std::vector<std::vector<std::uint32_t>> gens;  // W_d as columns
  std::vector<std::vector<Row>> rows_at;
  GeneratorCount out;
  out.expected = factorial(n) / g.order();

  for (int d = 0; d <= top; ++d) {
    deg.push_back(orbit_columns(g, d, rng ? &*rng : nullptr));
    const DegreeData& cur = deg[d];
    std::size_t cols = cur.reps.size();

    // mult[i][c] lists the degree d-i columns feeding column c under sigma_i.
    std::vector<std::vector<std::vector<std::uint32_t>>> mult(n + 1);
    for (int i = 1; i <= std::min(n, d); ++i) {
      const DegreeData& src = deg[d - i];
      auto subsets = subsets_of_size(n, i);
      mult[i].assign(cols, {});
      for (std::size_t c = 0; c < cols; ++c) {
        Packed r = cur.reps[c];
        for (auto s : subsets) {
          bool divides = true;
          for (std::uint32_t t = s; t; t &= t - 1)
            if (byte_at(r, __builtin_ctz(t)) == 0) divides = false;
          if (!divides) continue;
          Packed q = r;
          for (std::uint32_t t = s; t; t &= t - 1) q -= Packed{1} << (8 * __builtin_ctz(t));
          mult[i][c].push_back(src.col.at(q));
        }
      }
    }

    struct Job {
      int i;
      const std::vector<std::uint32_t>* source;  // null for a generator
      std::uint32_t gen_col;
    };
    std::vector<Job> jobs;
    for (int i = 1; i <= std::min(n, d); ++i) {
      for (auto w : gens[d - i]) jobs.push_back({i, nullptr, w});
      for (const auto& r : rows_at[d - i])
        if (r.max_index <= i) jobs.push_back({i, &r.v, 0});
    }
    std::vector<Row> rows(jobs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const Job& job = jobs[j];
      std::vector<std::uint32_t> v(cols, 0);
      for (std::size_t c = 0; c < cols; ++c) {
        std::uint64_t acc = 0;
        for (auto s : mult[job.i][c]) acc += job.source ? (*job.source)[s] : (s == job.gen_col ? 1u : 0u);
        v[c] = static_cast<std::uint32_t>(acc % p);
      }
      rows[j] = Row{std::move(v), job.i};
    }

    std::vector<std::vector<std::uint32_t>> work;
    work.reserve(rows.size());
    for (const auto& r : rows) work.push_back(r.v);
    std::size_t rank = 0;
    auto pivot = eliminate(work, cols, p, true, rank);
    std::vector<std::uint32_t> w;
    for (std::size_t c = 0; c < cols; ++c)
      if (!pivot[c]) w.push_back(static_cast<std::uint32_t>(c));
    out.per_degree.push_back(w.size());
    out.count += w.size();
    gens.push_back(std::move(w));
    rows_at.push_back(std::move(rows));
    if (d >= n) rows_at[d - n].clear();
  }
  return out;
}

GeneratorCount minimal_generator_count_reference(const PermutationGroup& g, std::uint32_t p) {
  check_inputs(g, p);
  int n = g.degree();
  int top = n * (n - 1) / 2;
  std::vector<DegreeData> deg;
  GeneratorCount out;
  out.expected = factorial(n) / g.order();
  for (int d = 0; d <= top; ++d) {
    deg.push_back(orbit_columns(g, d, nullptr));
    const DegreeData& cur = deg[d];
    std::size_t cols = cur.reps.size();
    std::unordered_map<Packed, std::uint32_t> rep_col;
    for (std::size_t c = 0; c < cols; ++c) rep_col.emplace(cur.reps[c], static_cast<std::uint32_t>(c));
    std::vector<std::vector<std::uint32_t>> rows;
    for (int i = 1; i <= std::min(n, d); ++i) {
      auto subsets = subsets_of_size(n, i);
      for (const auto& orbit : deg[d - i].members) {
        // sigma_i times the orbit monomial, read off at representatives.
        std::vector<std::uint32_t> row(cols, 0);
        for (Packed m : orbit)
          for (auto s : subsets) {
            auto it = rep_col.find(add_subset(m, s));
            if (it != rep_col.end()) row[it->second] = (row[it->second] + 1) % p;
          }
        rows.push_back(std::move(row));
      }
    }
    std::size_t rank = 0;
    eliminate(rows, cols, p, false, rank);
    out.per_degree.push_back(cols - rank);
    out.count += cols - rank;
  }
  return out;
}

}  // namespace permcm
