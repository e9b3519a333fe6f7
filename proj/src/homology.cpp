#include <omp.h>

#include <algorithm>
#include <climits>
#include <exception>
#include <set>

#include "permcm/qcomplex.hpp"

namespace permcm {

namespace {

void add_closure(const Simplex& facet, std::vector<std::set<Simplex>>& levels) {
  std::size_t k = facet.size();
  if (levels.size() < k + 1) levels.resize(k + 1);
  for (std::uint32_t sel = 0; sel < (1u << k); ++sel) {
    Simplex s;
    for (std::size_t i = 0; i < k; ++i)
      if (sel >> i & 1u) s.push_back(facet[i]);
    levels[s.size()].insert(std::move(s));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(const std::vector<Simplex>& facets) {
  std::vector<std::set<Simplex>> levels(1);
  levels[0].insert(Simplex{});
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    add_closure(f, levels);
  }
  for (auto& l : levels) by_dim_.emplace_back(l.begin(), l.end());
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::vector<Simplex>> by_dim) {
  SimplicialComplex k;
  for (auto& level : by_dim) {
    for (auto& s : level) std::sort(s.begin(), s.end());
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  if (by_dim.empty()) by_dim.push_back({Simplex{}});
  k.by_dim_ = std::move(by_dim);
  return k;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (const auto& l : by_dim_) c += l.size();
  return c;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.size() >= by_dim_.size()) return false;
  const auto& l = by_dim_[s.size()];
  return std::binary_search(l.begin(), l.end(), s);
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  const auto& l = by_dim_.at(s.size());
  auto it = std::lower_bound(l.begin(), l.end(), s);
  if (it == l.end() || *it != s) throw NotAFace("simplex is not a face of the complex");
  return static_cast<std::size_t>(it - l.begin());
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    std::set<Simplex> covered;
    if (k + 1 < by_dim_.size()) {
      for (const auto& t : by_dim_[k + 1])
        for (std::size_t i = 0; i < t.size(); ++i) {
          Simplex s = t;
          s.erase(s.begin() + static_cast<long>(i));
          covered.insert(std::move(s));
        }
    }
    for (const auto& s : by_dim_[k])
      if (!covered.count(s)) out.push_back(s);
  }
  return out;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> v;
  if (by_dim_.size() > 1)
    for (const auto& s : by_dim_[1]) v.push_back(s[0]);
  return v;
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& face) {
  Simplex a = face;
  std::sort(a.begin(), a.end());
  if (!k.contains(a)) throw NotAFace("link of a simplex that is not a face");
  std::vector<std::vector<Simplex>> levels;
  for (int d = static_cast<int>(a.size()) - 1; d <= k.dimension(); ++d) {
    for (const auto& t : k.faces(d)) {
      if (!std::includes(t.begin(), t.end(), a.begin(), a.end())) continue;
      Simplex b;
      std::set_difference(t.begin(), t.end(), a.begin(), a.end(), std::back_inserter(b));
      if (levels.size() < b.size() + 1) levels.resize(b.size() + 1);
      levels[b.size()].push_back(std::move(b));
    }
  }
  return SimplicialComplex::from_faces(std::move(levels));
}

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long entry(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(col, LLONG_MIN));
  return (it != row.end() && it->first == col) ? it->second : 0;
}

// row + factor * pivot_row
SparseRow combine(const SparseRow& row, long long factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, checked_mul(factor, pivot[j].second));
      ++j;
    } else {
      long long v = checked_add(row[i].second, checked_mul(factor, pivot[j].second));
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SmithResult smith_invariants_dense(std::vector<std::vector<mpz_class>> a) {
  SmithResult res;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block; otherwise fold in a row.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
done:
  res.rank = diag.size();
  for (auto& d : diag)
    if (d > 1) res.nonunit_factors.push_back(d);
  std::sort(res.nonunit_factors.begin(), res.nonunit_factors.end());
  return res;
}

SmithResult smith_invariants(std::vector<SparseRow> rows, int ncols) {
  std::size_t nrows = rows.size();
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols));
  for (std::size_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(static_cast<int>(r));
  std::vector<bool> alive(nrows, true);
  std::size_t unit_rank = 0;

  // Eliminate with unit pivots while they exist; each contributes an
  // invariant factor 1 and leaves an equivalent smaller matrix.
  bool progress = true;
  try {
    while (progress) {
      progress = false;
      for (std::size_t r = 0; r < nrows; ++r) {
        if (!alive[r] || rows[r].empty()) continue;
        int best = -1;
        std::size_t best_cost = 0;
        long long pv = 0;
        for (const auto& [c, v] : rows[r])
          if ((v == 1 || v == -1) && (best < 0 || col_rows[c].size() < best_cost)) {
            best = c;
            best_cost = col_rows[c].size();
            pv = v;
          }
        if (best < 0) continue;
        std::vector<int> touched = col_rows[best];
        for (int r2 : touched) {
          if (static_cast<std::size_t>(r2) == r || !alive[r2]) continue;
          long long a = entry(rows[r2], best);
          if (a == 0) continue;
          SparseRow updated = combine(rows[r2], checked_mul(-a, pv), rows[r]);
          for (const auto& [c, v] : updated)
            if (entry(rows[r2], c) == 0) col_rows[c].push_back(r2);
          rows[r2] = std::move(updated);
        }
        alive[r] = false;
        rows[r].clear();
        col_rows[best].clear();
        ++unit_rank;
        progress = true;
      }
      for (auto& cr : col_rows) {
        cr.erase(std::remove_if(cr.begin(), cr.end(), [&](int r2) { return !alive[r2]; }), cr.end());
      }
    }
  } catch (const Overflow&) {
    // Fall through to exact dense elimination on the current state.
  }

  std::vector<int> used_cols;
  std::vector<std::size_t> live_rows;
  for (std::size_t r = 0; r < nrows; ++r)
    if (alive[r] && !rows[r].empty()) {
      live_rows.push_back(r);
      for (const auto& [c, v] : rows[r]) used_cols.push_back(c);
    }
  std::sort(used_cols.begin(), used_cols.end());
  used_cols.erase(std::unique(used_cols.begin(), used_cols.end()), used_cols.end());
  SmithResult res;
  if (!live_rows.empty()) {
    std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(used_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) {
        auto j = std::lower_bound(used_cols.begin(), used_cols.end(), c) - used_cols.begin();
        dense[i][static_cast<std::size_t>(j)] = mpz_class(static_cast<long>(v));
      }
    res = smith_invariants_dense(std::move(dense));
  }
  res.rank += unit_rank;
  return res;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (free_rank == 1) s = "Z";
  else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s.empty() ? "0" : s;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& k, bool reduced) {
  int dim = k.dimension();
  // ranks[d + 1] = rank of the boundary map out of dimension d, for d = -1..dim+1.
  std::vector<SmithResult> snf(static_cast<std::size_t>(dim + 3));
  for (int d = 0; d <= dim; ++d) {
    if (d == 0 && !reduced) continue;
    const auto& src = k.faces(d);
    std::vector<SparseRow> rows;
    rows.reserve(src.size());
    for (const auto& s : src) {
      SparseRow row;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex b = s;
        b.erase(b.begin() + static_cast<long>(i));
        row.emplace_back(static_cast<int>(k.index_of(b)), (i % 2 == 0) ? 1 : -1);
      }
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    snf[static_cast<std::size_t>(d + 1)] = smith_invariants(std::move(rows), static_cast<int>(k.faces(d - 1).size()));
  }
  std::vector<HomologyGroup> out;
  for (int d = -1; d <= dim; ++d) {
    std::size_t cells = (d == -1) ? (reduced ? 1 : 0) : k.faces(d).size();
    HomologyGroup h;
    std::size_t rank_out = snf[static_cast<std::size_t>(d + 1)].rank;
    const SmithResult& in = snf[static_cast<std::size_t>(d + 2)];
    h.free_rank = cells - rank_out - in.rank;
    h.torsion = in.nonunit_factors;
    out.push_back(std::move(h));
  }
  return out;
}

bool homology_vanishes(const std::vector<HomologyGroup>& h, int dim, Domain coefficients) {
  const HomologyGroup& g = h.at(static_cast<std::size_t>(dim + 1));
  switch (coefficients.kind) {
    case DomainKind::Z: return g.is_zero();
    case DomainKind::Q: return g.free_rank == 0;
    case DomainKind::Fp: return betti_number(h, dim, coefficients) == 0;
  }
  return false;
}

std::size_t betti_number(const std::vector<HomologyGroup>& h, int dim, Domain field) {
  const HomologyGroup& g = h.at(static_cast<std::size_t>(dim + 1));
  std::size_t b = g.free_rank;
  if (field.kind != DomainKind::Fp) return b;
  mpz_class p = field.p;
  for (const auto& t : g.torsion)
    if (t % p == 0) ++b;
  if (dim >= 0)
    for (const auto& t : h[static_cast<std::size_t>(dim)].torsion)
      if (t % p == 0) ++b;
  return b;
}

namespace {

std::optional<CMWitness> first_failure(const SimplicialComplex& lk, Domain coefficients) {
  auto h = homology(lk, true);
  for (int i = -1; i < lk.dimension(); ++i)
    if (!homology_vanishes(h, i, coefficients)) return CMWitness{{}, i, h[static_cast<std::size_t>(i + 1)]};
  return std::nullopt;
}

}  // namespace

CMResult is_cm_complex(const QuotientComplex& k, Domain coefficients) {
  std::size_t nf = k.size();
  std::vector<std::optional<CMWitness>> found(nf);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t f = 0; f < nf; ++f) {
    try {
      auto w = first_failure(upper_interval_complex(k, f), coefficients);
      if (w && f != 0) w->chain = {f};
      found[f] = std::move(w);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  CMResult r;
  for (std::size_t f = 0; f < nf; ++f)
    if (found[f]) {
      r.cm = false;
      r.witness = found[f];
      break;
    }
  return r;
}

CMResult is_cm_complex_reference(const QuotientComplex& k, Domain coefficients) {
  SimplicialComplex delta = order_complex(k);
  CMResult r;
  for (int d = -1; d <= delta.dimension(); ++d) {
    for (const auto& s : delta.faces(d)) {
      auto w = first_failure(link(delta, s), coefficients);
      if (w) {
        w->chain.assign(s.begin(), s.end());
        r.cm = false;
        r.witness = std::move(w);
        return r;
      }
    }
  }
  return r;
}

}  // namespace permcm
