#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permcm/linalg.hpp"
#include "permcm/permgrp.hpp"
#include "permcm/polyring.hpp"
#include "permcm/qcomplex.hpp"
#include "permcm/srring.hpp"

namespace permcm {

// Coefficients are polynomials in s_1..s_n (s_i standing for sigma_i on
// the R side, theta_i on the S side), keyed by face index.
struct GoebelDecomposition {
  int n = 0;
  Domain domain;
  std::map<std::size_t, Polynomial> coefficients;

  Polynomial reconstruct(const QuotientComplex& k) const;
};

GoebelDecomposition goebel_decompose(const QuotientComplex& k, const Polynomial& f);

struct Shelling {
  std::vector<std::size_t> facets;         // face indices
  std::vector<std::size_t> minimal_faces;  // alpha_j, face indices
};

struct ShellingCheck {
  bool ok = false;
  std::size_t failed_at = 0;  // position of the first facet that is not appendable
  std::vector<std::size_t> minimal_faces;
};

// Tests a (possibly partial) facet order step by step.
ShellingCheck check_shelling(const QuotientComplex& k, const std::vector<std::size_t>& order);

enum class SearchStatus { Found, NotFound, BudgetExceeded };
std::string to_string(SearchStatus s);

struct ShellingSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Shelling> shelling;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultShellingBudget = 1000000;
// kDefaultShellingBudget unless PERMCM_BUDGET is set.
std::size_t default_shelling_budget();
ShellingSearch find_shelling(const QuotientComplex& k, std::size_t budget = default_shelling_budget());

struct ShellingBasis {
  std::vector<std::size_t> faces;
  std::vector<Polynomial> r_side;
  std::vector<SPolynomial> s_side;
};

ShellingBasis shelling_basis(const QuotientComplex& k, const Shelling& shelling);

struct CellBasis {
  std::vector<std::size_t> faces;
  Domain domain;
  mpq_class determinant = 0;
};

struct SupportViolation {
  std::size_t face;        // face whose facet vector was solved
  std::size_t basis_face;  // basis face with nonzero coefficient outside the rank set
};

struct CellBasisReport {
  bool ok = false;
  mpq_class determinant = 0;
  bool determinant_is_unit = false;
  std::vector<SupportViolation> violations;
};

CellBasisReport verify_cell_basis(const QuotientComplex& k, const std::vector<std::size_t>& faces, Domain domain);

enum class GreedyOrder {
  // Within a rank-set level, larger facet vectors (facet j weighted 2^j) first.
  FacetVectorDescending,
  // Within a rank-set level, canonical representative order.
  Representative,
};

struct GreedyResult {
  bool ok = false;
  CellBasis basis;
  CellBasisReport report;
  std::string diagnostics;
};

GreedyResult greedy_cell_basis(const QuotientComplex& k, Domain domain,
                               GreedyOrder order = GreedyOrder::FacetVectorDescending);

// Experimental: whether the two greedy orders yield cell bases whose
// incidence determinants agree up to sign.  Not an invariant.
struct DeterminantComparison {
  bool both_found = false;
  mpq_class first = 0;
  mpq_class second = 0;
  bool agree = false;
};

DeterminantComparison compare_greedy_determinants(const QuotientComplex& k, Domain domain);

struct Representation {
  int n = 0;
  Domain domain;
  std::vector<std::size_t> basis;
  std::map<std::size_t, Polynomial> coefficients;  // basis face -> polynomial in s

  Polynomial reconstruct(const QuotientComplex& k) const;
  SPolynomial reconstruct_s(const QuotientComplex& k) const;
};

Representation represent_on_basis(const QuotientComplex& k, const Polynomial& f,
                                  const std::vector<std::size_t>& basis, Domain domain);
Representation represent_s_on_basis(const QuotientComplex& k, const SPolynomial& f,
                                    const std::vector<std::size_t>& basis, Domain domain);

struct GeneratorCount {
  std::size_t count = 0;
  std::size_t expected = 0;
  std::vector<std::size_t> per_degree;  // index d = 0..n(n-1)/2
};

// Generator-based count with OpenMP row generation and elimination.  A
// seed shuffles the orbit-monomial column order.
GeneratorCount minimal_generator_count(const PermutationGroup& g, std::uint32_t p,
                                       std::optional<std::uint64_t> shuffle_seed = std::nullopt);
// Serial count from the spanning set sigma_i * (orbit monomials of degree d-i).
GeneratorCount minimal_generator_count_reference(const PermutationGroup& g, std::uint32_t p);

struct PrimeVerdict {
  std::size_t expected = 0;
  std::size_t count = 0;
  bool cm = false;
};

struct CMReport {
  std::string group;
  std::size_t order = 0;
  std::string grr;
  std::size_t grr_index = 0;
  std::vector<std::uint32_t> primes;
  bool prediction = false;  // CM predicted iff the index is 1
  std::map<std::uint32_t, PrimeVerdict> algebraic;
  std::optional<bool> topological;
  bool agree = false;
};

struct CMReportOptions {
  // Primes to test instead of those dividing the index.
  std::optional<std::vector<std::uint32_t>> primes;
  bool topological = false;
};

std::vector<std::uint32_t> prime_divisors(std::size_t n);
CMReport cm_report(const PermutationGroup& g, const CMReportOptions& options = {});

// Subgroups of S_n up to conjugacy, in a deterministic order.
std::vector<PermutationGroup> subgroup_class_representatives(int n);

struct SurveyResult {
  int n = 0;
  std::vector<CMReport> reports;
  bool all_agree = true;
};

SurveyResult survey(int n, const CMReportOptions& options, int jobs = 1);

}  // namespace permcm
