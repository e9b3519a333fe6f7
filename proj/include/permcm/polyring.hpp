#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permcm/errors.hpp"
#include "permcm/permgrp.hpp"

namespace permcm {

enum class DomainKind { Z, Q, Fp };

// Coefficient domain.  All coefficients are held as mpq_class and brought
// to canonical form by normalize(): integers for Z, reduced fractions for
// Q, representatives 0..p-1 for Fp.
struct Domain {
  DomainKind kind = DomainKind::Z;
  std::uint32_t p = 0;

  static Domain Z() { return {DomainKind::Z, 0}; }
  static Domain Q() { return {DomainKind::Q, 0}; }
  static Domain Fp(std::uint32_t prime);

  bool is_field() const { return kind != DomainKind::Z; }
  mpq_class normalize(const mpq_class& value) const;
  bool is_unit(const mpq_class& value) const;
  // Multiplicative inverse of a unit.
  mpq_class inverse(const mpq_class& value) const;
  std::string to_string() const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.kind == b.kind && a.p == b.p; }
};

bool is_prime(std::uint64_t p);
// "z", "q" or "fp:<p>".
Domain parse_domain(const std::string& text);

class Monomial {
 public:
  using Exp = std::uint16_t;

  Monomial() = default;
  explicit Monomial(int nvars);
  explicit Monomial(const std::vector<int>& exponents);

  int nvars() const { return n_; }
  int operator[](int i) const { return e_[i]; }  // 0-based variable index
  void set(int i, int value);
  int total_degree() const;
  bool is_one() const;
  std::vector<int> exponents() const;

  Monomial operator*(const Monomial& o) const;

  std::string to_string(char var = 'x') const;
  // Paper-style abbreviation: x1^2*x2*x3 -> "1^2 2 3"; the empty monomial is "∅".
  std::string label() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  // Plain lexicographic comparison of exponent vectors.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.e_ < b.e_;
  }

  std::size_t hash() const;

 private:
  std::array<Exp, kMaxDegree> e_{};
  int n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded-lex, larger first: higher total degree, then lexicographically
// larger exponent vector (x1 > x2 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using Shape = std::vector<int>;

Shape shape(const Monomial& m);
// Degree first, then leftmost differing part.
std::strong_ordering deglex_compare(const Shape& a, const Shape& b);
Shape add_shapes(const Shape& a, const Shape& b);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpq_class, GrlexGreater>;

  Polynomial() : Polynomial(1, Domain::Z()) {}
  Polynomial(int nvars, Domain domain);
  static Polynomial constant(int nvars, Domain domain, const mpq_class& c);
  static Polynomial from_monomial(const Monomial& m, Domain domain, const mpq_class& c = 1);
  static Polynomial variable(int nvars, Domain domain, int index1);

  int nvars() const { return n_; }
  const Domain& domain() const { return domain_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const mpq_class& c);
  mpq_class coefficient(const Monomial& m) const;
  int total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(const mpq_class& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial with_domain(Domain d) const;

  // Terms whose shape equals the given shape.
  Polynomial shape_part(const Shape& s) const;
  // The deglex-largest shape among the terms (requires nonzero).
  Shape leading_shape() const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  int n_;
  Domain domain_;
  TermMap terms_;
};

Polynomial act(const Permutation& p, const Polynomial& f);
Monomial act(const Permutation& p, const Monomial& m);

bool is_invariant(const PermutationGroup& g, const Polynomial& f);

// Index-matching definition: some ordering of the indices sorts both
// exponent vectors weakly decreasingly.
bool stacks_up(const Monomial& a, const Monomial& b);
// Additivity characterisation: shape(ab) = shape(a) + shape(b).
bool stacks_up_by_shape(const Monomial& a, const Monomial& b);

std::vector<Monomial> monomial_orbit(const PermutationGroup& g, const Monomial& m);
Polynomial orbit_monomial(const PermutationGroup& g, const Monomial& m, Domain domain = Domain::Z());
// Sum of orbit monomials over each term's orbit; coefficients are read off
// the representative term, so for an invariant f this returns f.
Polynomial orbit_sum(const PermutationGroup& g, const Polynomial& f);

Polynomial elementary_symmetric(int n, int i, Domain domain = Domain::Z());

struct SpecialDecomposition {
  bool is_special = false;
  Monomial associated_special;
  std::vector<int> sigma_exponents;  // sigma_exponents[i-1] = exponent of sigma_i
};

bool is_special(const Monomial& m);
SpecialDecomposition special_decompose(const Monomial& m);

// Monomial prod sigma_i^{a_i} written in the variables s_1..s_n.
Monomial sigma_monomial(const std::vector<int>& a);

// Substitute sigma_i for s_i in a polynomial over s_1..s_n.
Polynomial substitute_sigma(const Polynomial& f_in_s);

Polynomial ftsp_represent(const Polynomial& f);

// Polynomial expression parser: integer (or a/b) coefficients, xK, ^, *,
// +, -, parentheses.  The variable letter is configurable so the same
// grammar reads polynomials in s1..sn.
Polynomial parse_polynomial(const std::string& expr, int nvars, Domain domain, char var = 'x');

}  // namespace permcm
