#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permcm/permgrp.hpp"
#include "permcm/polyring.hpp"
#include "permcm/srring.hpp"

namespace permcm {

// Strict chain of subsets, largest first; never contains {} or [n].
using Chain = std::vector<Subset>;

struct ChainHash {
  std::size_t operator()(const Chain& c) const;
};

// Fixed-width bitset over the facets of a complex.
class FacetSet {
 public:
  FacetSet() = default;
  explicit FacetSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
  std::size_t count() const;
  std::vector<int> to_vector() const;
  std::string to_string() const;  // "1 0 1" style without spaces: "101"

  // Compares the sets as binary numbers with facet j weighted 2^j.
  static int compare_value(const FacetSet& a, const FacetSet& b);

  friend bool operator==(const FacetSet& a, const FacetSet& b) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Face {
  Chain repr;                 // canonical representative
  std::uint32_t rank_set = 0; // bit k-1 set for rank k
  std::size_t orbit_size = 0;

  int rank() const { return __builtin_popcount(rank_set); }
  std::vector<int> ranks() const;
};

// The quotient of the barycentric subdivision of the simplex boundary by a
// permutation group.  Faces are G-orbits of chains; faces()[0] is the empty
// face.  Faces are ordered by rank-set size, rank set, then representative.
class QuotientComplex {
 public:
  static QuotientComplex build(const PermutationGroup& g);

  const PermutationGroup& group() const { return group_; }
  int degree() const { return group_.degree(); }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  // Face indices of the facets, in face order.
  const std::vector<std::size_t>& facets() const { return facets_; }
  std::size_t facet_position(std::size_t face) const;

  Chain canonicalize(const Chain& c) const;
  std::size_t face_of_chain(const Chain& c) const;
  std::optional<std::size_t> find_face(const Chain& c) const;
  // Face whose special monomial is (a G-image of) m; m must be special.
  std::size_t face_of_monomial(const Monomial& m) const;

  bool leq(std::size_t a, std::size_t b) const;
  // All faces <= f, including f, sorted.
  // Faces weakly below / above f (f included), ascending.
  const std::vector<std::size_t>& below(std::size_t f) const { return below_[f]; }
  const std::vector<std::size_t>& above(std::size_t f) const { return above_[f]; }
  // The unique face <= f with the given rank set (a subset of f's).
  std::size_t subface(std::size_t f, std::uint32_t rank_set) const;

  const FacetSet& facet_set(std::size_t f) const { return incidence_[f]; }
  std::vector<int> facet_vector(std::size_t f) const { return incidence_[f].to_vector(); }

  ChainMonomial chain_monomial(std::size_t f) const;
  Monomial special_monomial(std::size_t f) const;
  // Lex-largest monomial of the face's orbit monomial, written "1^2 2 3".
  std::string label(std::size_t f) const;
  std::optional<std::size_t> face_by_label(const std::string& label) const;

 private:
  explicit QuotientComplex(PermutationGroup g) : group_(std::move(g)) {}

  PermutationGroup group_;
  std::vector<Face> faces_;
  std::vector<std::size_t> facets_;
  std::vector<std::size_t> facet_pos_;
  std::unordered_map<Chain, std::size_t, ChainHash> chain_index_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<std::size_t>> above_;
  std::vector<FacetSet> incidence_;
};

QuotientComplex build_quotient_complex(const PermutationGroup& g);

Polynomial face_to_orbit_monomial(const QuotientComplex& k, std::size_t face, Domain domain = Domain::Z());
SPolynomial face_to_s_orbit_monomial(const QuotientComplex& k, std::size_t face, Domain domain = Domain::Z());

// Rows are facet vectors of the given faces.
std::vector<std::vector<int>> incidence_matrix(const QuotientComplex& k, const std::vector<std::size_t>& faces);

using Simplex = std::vector<int>;  // sorted vertex ids

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Faces are the downward closure of the given facets.
  explicit SimplicialComplex(const std::vector<Simplex>& facets);
  static SimplicialComplex from_faces(std::vector<std::vector<Simplex>> by_dim);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
  // faces(d) for d = -1..dimension(); faces(-1) = { {} }.
  const std::vector<Simplex>& faces(int d) const { return by_dim_[d + 1]; }
  std::size_t face_count() const;
  bool contains(const Simplex& s) const;
  std::size_t index_of(const Simplex& s) const;  // within faces(|s|-1)
  std::vector<Simplex> facets() const;
  std::vector<int> vertices() const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;  // each level sorted
};

SimplicialComplex link(const SimplicialComplex& k, const Simplex& face);

// Order complex of the face poset of the quotient without its empty face;
// vertex ids are face indices.
SimplicialComplex order_complex(const QuotientComplex& k);
// Order complex of the open upper interval above face f.
SimplicialComplex upper_interval_complex(const QuotientComplex& k, std::size_t f);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors >= 2, each dividing the next

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/2"
  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

// Element k of the result is the group in dimension k-1, for k-1 = -1..dim.
std::vector<HomologyGroup> homology(const SimplicialComplex& k, bool reduced = true);

// Homology in dimension dim with field or integer coefficients vanishes
// (fields via universal coefficients).
bool homology_vanishes(const std::vector<HomologyGroup>& h, int dim, Domain coefficients);
std::size_t betti_number(const std::vector<HomologyGroup>& h, int dim, Domain field);

struct SmithResult {
  std::size_t rank = 0;
  std::vector<mpz_class> nonunit_factors;  // invariant factors > 1, ascending
};

// Rows given as (column, value) lists.
using SparseRow = std::vector<std::pair<int, long long>>;
SmithResult smith_invariants(std::vector<SparseRow> rows, int ncols);
SmithResult smith_invariants_dense(std::vector<std::vector<mpz_class>> m);

struct CMWitness {
  std::vector<std::size_t> chain;  // quotient faces; empty for the whole complex
  int dim = 0;
  HomologyGroup group;
};

struct CMResult {
  bool cm = true;
  std::optional<CMWitness> witness;
};

// Checks homology of every upper interval P_{>a}, a a face including the
// empty face.  Links of chains in the order complex are joins of such an
// interval with boolean lower and middle intervals (spheres), so this is
// equivalent to checking every link.  Parallel over faces.
CMResult is_cm_complex(const QuotientComplex& k, Domain coefficients);
// Literal check of every link in the order complex; serial.
CMResult is_cm_complex_reference(const QuotientComplex& k, Domain coefficients);

struct SigmaCrossCheck {
  std::size_t sigma_size = 0;
  std::size_t face_count = 0;
  bool well_defined = true;
  bool bijective = true;
  bool order_preserving = true;
  bool order_reflecting = true;
  bool ok() const { return well_defined && bijective && order_preserving && order_reflecting; }
};

// Builds the poset of pairs (double coset G pi Y_J, J) and compares it with
// the chain-orbit construction.
SigmaCrossCheck cross_check_double_cosets(const QuotientComplex& k);

}  // namespace permcm
