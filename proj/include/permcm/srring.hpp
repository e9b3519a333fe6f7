#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permcm/permgrp.hpp"
#include "permcm/polyring.hpp"

namespace permcm {

// Subsets of [n] are bitmasks with bit i-1 standing for element i.
using Subset = std::uint32_t;

std::vector<int> subset_elements(Subset s);
Subset subset_from_elements(const std::vector<int>& elements);
std::string subset_to_string(Subset s);  // "{1,2}"
// Lexicographic comparison of the sorted element lists.
bool subset_lex_less(Subset a, Subset b);

// A monomial of the Stanley-Reisner ring of B_n minus the empty set: a
// product of y_U over a chain of subsets, with multiplicities.
class ChainMonomial {
 public:
  using Factor = std::pair<Subset, int>;  // (subset, exponent)

  ChainMonomial() = default;
  explicit ChainMonomial(int n);
  // Returns nullopt when the distinct subsets do not form a chain.
  static std::optional<ChainMonomial> from_factors(int n, std::vector<Factor> factors);
  static ChainMonomial y(int n, Subset u, int exp = 1);

  int n() const { return n_; }
  // Sorted by decreasing cardinality; subsets strictly nested.
  const std::vector<Factor>& factors() const& { return f_; }
  std::vector<Factor> factors() && { return std::move(f_); }
  bool is_one() const { return f_.empty(); }
  int degree() const;
  std::vector<int> fine_grade() const;

  ChainMonomial act(const Permutation& p) const;

  std::string to_string() const;  // y{2}*y{1,2}^2*y{1,2,3}

  friend bool operator==(const ChainMonomial& a, const ChainMonomial& b) { return a.n_ == b.n_ && a.f_ == b.f_; }
  friend bool operator<(const ChainMonomial& a, const ChainMonomial& b);

 private:
  int n_ = 0;
  std::vector<Factor> f_;
};

std::optional<ChainMonomial> s_multiply(const ChainMonomial& a, const ChainMonomial& b);
std::vector<int> fine_grade(const ChainMonomial& m);

Monomial garsia(const ChainMonomial& m);
ChainMonomial garsia_inverse(const Monomial& m);

class SPolynomial {
 public:
  using TermMap = std::map<ChainMonomial, mpq_class>;

  SPolynomial() : SPolynomial(1, Domain::Z()) {}
  SPolynomial(int n, Domain domain) : n_(n), domain_(domain) {}
  static SPolynomial constant(int n, Domain domain, const mpq_class& c);
  static SPolynomial from_monomial(const ChainMonomial& m, Domain domain, const mpq_class& c = 1);

  int n() const { return n_; }
  const Domain& domain() const { return domain_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const ChainMonomial& m, const mpq_class& c);
  mpq_class coefficient(const ChainMonomial& m) const;

  SPolynomial operator+(const SPolynomial& o) const;
  SPolynomial operator-(const SPolynomial& o) const;
  SPolynomial operator*(const SPolynomial& o) const;
  SPolynomial& operator+=(const SPolynomial& o);
  SPolynomial& operator-=(const SPolynomial& o);
  SPolynomial scaled(const mpq_class& c) const;
  SPolynomial pow(unsigned k) const;

  std::string to_string() const;

  friend bool operator==(const SPolynomial& a, const SPolynomial& b) {
    return a.n_ == b.n_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SPolynomial& o) const;

  int n_;
  Domain domain_;
  TermMap terms_;
};

Polynomial garsia(const SPolynomial& f);
SPolynomial garsia_inverse(const Polynomial& f);

SPolynomial act(const Permutation& p, const SPolynomial& f);
bool is_invariant(const PermutationGroup& g, const SPolynomial& f);

std::vector<ChainMonomial> s_orbit(const PermutationGroup& g, const ChainMonomial& m);
SPolynomial s_orbit_monomial(const PermutationGroup& g, const ChainMonomial& m, Domain domain = Domain::Z());

SPolynomial theta(int n, int i, Domain domain = Domain::Z());
// prod theta_i^{a_i}
SPolynomial theta_monomial(int n, const std::vector<int>& a, Domain domain = Domain::Z());
// Input must be a full S_n-orbit monomial; returns the exponents a with
// prod theta_i^{a_i} equal to it.
std::vector<int> s_orbit_to_theta(const SPolynomial& orbit);

}  // namespace permcm
