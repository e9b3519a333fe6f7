#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "permcm/polyring.hpp"

namespace permcm {

using Matrix = std::vector<std::vector<mpq_class>>;

Matrix to_matrix(const std::vector<std::vector<int>>& m);

// Determinant computed over Q, then normalized into the domain.
mpq_class determinant(Matrix m, Domain domain);
std::size_t matrix_rank(Matrix m, Domain domain);
// Inverse over the domain; throws SystemUnsolvable when the matrix is not
// invertible there (for Z: inverse must be integral).
Matrix inverse(const Matrix& m, Domain domain);
// Row vector x with x * m = v, or nullopt.
std::optional<std::vector<mpq_class>> solve_left(const Matrix& m, const std::vector<mpq_class>& v, Domain domain);

// Incrementally maintained row space over a field.
class RowSpan {
 public:
  RowSpan(std::size_t width, Domain field) : width_(width), field_(field) {}
  bool contains(const std::vector<mpq_class>& v) const;
  // Adds v; returns false (and does nothing) if already in the span.
  bool add(const std::vector<mpq_class>& v);
  std::size_t dimension() const { return rows_.size(); }

 private:
  std::vector<mpq_class> reduce(std::vector<mpq_class> v) const;

  std::size_t width_;
  Domain field_;
  std::vector<std::vector<mpq_class>> rows_;  // each with a leading 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace permcm
