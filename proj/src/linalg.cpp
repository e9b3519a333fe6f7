#include "permcm/linalg.hpp"

namespace permcm {

namespace {

// Arithmetic happens over Q, or over Fp through normalize(); Z is
// treated as Q and checked by the callers.
Domain work_domain(Domain d) { return d.kind == DomainKind::Fp ? d : Domain::Q(); }

}  // namespace

Matrix to_matrix(const std::vector<std::vector<int>>& m) {
  Matrix out;
  for (const auto& row : m) {
    std::vector<mpq_class> r;
    for (int v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

mpq_class determinant(Matrix m, Domain domain) {
  Domain w = work_domain(domain);
  std::size_t n = m.size();
  for (auto& row : m) {
    if (row.size() != n) throw SizeMismatch("determinant of a non-square matrix");
    for (auto& x : row) x = w.normalize(x);
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = w.normalize(det * m[c][c]);
    mpq_class inv = w.inverse(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = w.normalize(m[r][c] * inv);
      for (std::size_t k = c; k < n; ++k) m[r][k] = w.normalize(m[r][k] - f * m[c][k]);
    }
  }
  return domain.kind == DomainKind::Z ? det : domain.normalize(det);
}

std::size_t matrix_rank(Matrix m, Domain domain) {
  Domain w = work_domain(domain);
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (auto& row : m)
    for (auto& x : row) x = w.normalize(x);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    mpq_class inv = w.inverse(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = w.normalize(m[r][c] * inv);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = w.normalize(m[r][k] - f * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

Matrix inverse(const Matrix& m, Domain domain) {
  Domain w = work_domain(domain);
  std::size_t n = m.size();
  Matrix a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw SystemUnsolvable("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = w.normalize(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw SystemUnsolvable("matrix is singular over " + domain.to_string());
    std::swap(a[p], a[c]);
    mpq_class inv = w.inverse(a[c][c]);
    for (auto& x : a[c]) x = w.normalize(x * inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = w.normalize(a[r][k] - f * a[c][k]);
    }
  }
  Matrix out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i][n + j];
      if (domain.kind == DomainKind::Z && v.get_den() != 1)
        throw SystemUnsolvable("matrix is invertible over Q but not over Z");
      out[i][j] = v;
    }
  return out;
}

std::optional<std::vector<mpq_class>> solve_left(const Matrix& m, const std::vector<mpq_class>& v, Domain domain) {
  // x * m = v  <=>  m^T x^T = v^T; eliminate on the augmented transpose.
  Domain w = work_domain(domain);
  std::size_t rows = m.size(), cols = v.size();
  Matrix a(cols, std::vector<mpq_class>(rows + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) a[j][i] = w.normalize(m[i][j]);
    a[j][rows] = w.normalize(v[j]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    std::size_t p = r;
    while (p < cols && a[p][c] == 0) ++p;
    if (p == cols) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = w.inverse(a[r][c]);
    for (auto& x : a[r]) x = w.normalize(x * inv);
    for (std::size_t q = 0; q < cols; ++q) {
      if (q == r || a[q][c] == 0) continue;
      mpq_class f = a[q][c];
      for (std::size_t k = 0; k <= rows; ++k) a[q][k] = w.normalize(a[q][k] - f * a[r][k]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < cols; ++q)
    if (a[q][rows] != 0) return std::nullopt;
  std::vector<mpq_class> x(rows, 0);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][rows];
  if (domain.kind == DomainKind::Z)
    for (const auto& e : x)
      if (e.get_den() != 1) return std::nullopt;
  return x;
}

std::vector<mpq_class> RowSpan::reduce(std::vector<mpq_class> v) const {
  for (auto& x : v) x = field_.normalize(x);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    mpq_class f = v[pivots_[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) v[j] = field_.normalize(v[j] - f * rows_[k][j]);
  }
  return v;
}

bool RowSpan::contains(const std::vector<mpq_class>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

bool RowSpan::add(const std::vector<mpq_class>& v) {
  auto r = reduce(v);
  std::size_t p = 0;
  while (p < width_ && r[p] == 0) ++p;
  if (p == width_) return false;
  mpq_class inv = field_.inverse(r[p]);
  for (auto& x : r) x = field_.normalize(x * inv);
  // Keep earlier rows reduced at the new pivot.
  for (auto& row : rows_) {
    mpq_class f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) row[j] = field_.normalize(row[j] - f * r[j]);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace permcm
