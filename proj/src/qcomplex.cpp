#include "permcm/qcomplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace permcm {

std::size_t ChainHash::operator()(const Chain& c) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Subset s : c) {
    h ^= s;
    h *= 0x100000001b3ull;
  }
  return h ^ c.size();
}

std::size_t FacetSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<int> FacetSet::to_vector() const {
  std::vector<int> v(size_);
  for (std::size_t i = 0; i < size_; ++i) v[i] = test(i) ? 1 : 0;
  return v;
}

std::string FacetSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < size_; ++i) s += test(i) ? '1' : '0';
  return s;
}

int FacetSet::compare_value(const FacetSet& a, const FacetSet& b) {
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w] ? -1 : 1;
  }
  return 0;
}

std::vector<int> Face::ranks() const {
  std::vector<int> r;
  for (int k = 0; k < 32; ++k)
    if (rank_set >> k & 1u) r.push_back(k + 1);
  return r;
}

namespace {

void enumerate_chains(Subset parent, Chain& cur, std::vector<Chain>& out) {
  out.push_back(cur);
  // Nonempty proper submasks of parent.
  for (Subset v = (parent - 1) & parent; v != 0; v = (v - 1) & parent) {
    cur.push_back(v);
    enumerate_chains(v, cur, out);
    cur.pop_back();
  }
}

std::uint32_t rank_set_of(const Chain& c) {
  std::uint32_t r = 0;
  for (Subset s : c) r |= 1u << (__builtin_popcount(s) - 1);
  return r;
}

bool face_order_less(const Face& a, const Face& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.rank_set != b.rank_set) return a.ranks() < b.ranks();
  return a.repr < b.repr;
}

}  // namespace

QuotientComplex QuotientComplex::build(const PermutationGroup& g) {
  QuotientComplex k(g);
  int n = g.degree();
  Subset full = (n >= 32) ? ~Subset{0} : ((Subset{1} << n) - 1);

  std::vector<Chain> chains;
  Chain cur;
  enumerate_chains(full, cur, chains);

  // Permutations acting on masks through byte lookup tables when n <= 8.
  const auto& elems = g.elements();
  std::vector<std::array<std::uint8_t, 256>> tables;
  if (n <= 8) {
    tables.resize(elems.size());
    for (std::size_t e = 0; e < elems.size(); ++e)
      for (Subset s = 0; s < 256; ++s) tables[e][s] = static_cast<std::uint8_t>(elems[e].apply_mask(s & full));
  }
  auto image = [&](std::size_t e, Subset s) -> Subset {
    return n <= 8 ? tables[e][s] : elems[e].apply_mask(s);
  };

  std::unordered_map<Chain, std::size_t, ChainHash> provisional;
  provisional.reserve(chains.size() * 2);
  std::vector<Face> faces;
  std::vector<Chain> orbit;
  for (const auto& c : chains) {
    if (provisional.count(c)) continue;
    orbit.clear();
    for (std::size_t e = 0; e < elems.size(); ++e) {
      Chain img(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) img[i] = image(e, c[i]);
      orbit.push_back(std::move(img));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    std::size_t id = faces.size();
    faces.push_back({orbit.front(), rank_set_of(c), orbit.size()});
    for (auto& o : orbit) provisional.emplace(std::move(o), id);
  }

  std::vector<std::size_t> perm(faces.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return face_order_less(faces[a], faces[b]); });
  std::vector<std::size_t> new_id(faces.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = i;
    k.faces_.push_back(faces[perm[i]]);
  }
  k.chain_index_.reserve(provisional.size() * 2);
  for (auto& [c, id] : provisional) k.chain_index_.emplace(c, new_id[id]);

  std::size_t nf = k.faces_.size();
  k.below_.assign(nf, {});
  k.above_.assign(nf, {});
  for (std::size_t f = 0; f < nf; ++f) {
    const Chain& r = k.faces_[f].repr;
    std::size_t len = r.size();
    auto& b = k.below_[f];
    for (std::uint32_t sel = 0; sel < (1u << len); ++sel) {
      Chain sub;
      for (std::size_t i = 0; i < len; ++i)
        if (sel >> i & 1u) sub.push_back(r[i]);
      b.push_back(k.chain_index_.at(sub));
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (std::size_t x : b) k.above_[x].push_back(f);
  }

  std::uint32_t full_ranks = n >= 2 ? ((1u << (n - 1)) - 1) : 0u;
  k.facet_pos_.assign(nf, static_cast<std::size_t>(-1));
  for (std::size_t f = 0; f < nf; ++f)
    if (k.faces_[f].rank_set == full_ranks) {
      k.facet_pos_[f] = k.facets_.size();
      k.facets_.push_back(f);
    }
  k.incidence_.assign(nf, FacetSet(k.facets_.size()));
  for (std::size_t j = 0; j < k.facets_.size(); ++j)
    for (std::size_t x : k.below_[k.facets_[j]]) k.incidence_[x].set(j);
  return k;
}

QuotientComplex build_quotient_complex(const PermutationGroup& g) { return QuotientComplex::build(g); }

std::size_t QuotientComplex::facet_position(std::size_t face) const {
  if (face >= faces_.size() || facet_pos_[face] == static_cast<std::size_t>(-1))
    throw ForeignFace("face is not a facet");
  return facet_pos_[face];
}

std::optional<std::size_t> QuotientComplex::find_face(const Chain& c) const {
  auto it = chain_index_.find(c);
  if (it == chain_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuotientComplex::face_of_chain(const Chain& c) const {
  auto f = find_face(c);
  if (!f) throw ForeignFace("chain is not a chain of proper nonempty subsets of [n]");
  return *f;
}

Chain QuotientComplex::canonicalize(const Chain& c) const { return faces_[face_of_chain(c)].repr; }

std::size_t QuotientComplex::face_of_monomial(const Monomial& m) const {
  if (m.nvars() != degree()) throw DegreeMismatch("monomial degree differs from complex degree");
  if (!is_special(m)) throw ForeignFace("monomial " + m.to_string() + " is not special");
  Chain c;
  ChainMonomial chain = garsia_inverse(m);
  for (const auto& [u, e] : chain.factors()) c.push_back(u);
  return face_of_chain(c);
}

bool QuotientComplex::leq(std::size_t a, std::size_t b) const {
  const auto& bl = below_.at(b);
  return std::binary_search(bl.begin(), bl.end(), a);
}

std::size_t QuotientComplex::subface(std::size_t f, std::uint32_t rank_set) const {
  const Face& face = faces_.at(f);
  if ((rank_set & face.rank_set) != rank_set) throw ForeignFace("rank set is not contained in the face's");
  Chain sub;
  for (Subset s : face.repr)
    if (rank_set >> (__builtin_popcount(s) - 1) & 1u) sub.push_back(s);
  return chain_index_.at(sub);
}

ChainMonomial QuotientComplex::chain_monomial(std::size_t f) const {
  std::vector<ChainMonomial::Factor> fs;
  for (Subset s : faces_.at(f).repr) fs.emplace_back(s, 1);
  return *ChainMonomial::from_factors(degree(), fs);
}

Monomial QuotientComplex::special_monomial(std::size_t f) const { return garsia(chain_monomial(f)); }

std::string QuotientComplex::label(std::size_t f) const {
  Monomial best = special_monomial(f);
  for (const auto& g : group_.elements()) {
    Monomial m = act(g, best);
    if (best < m) best = m;
  }
  return best.label();
}

std::optional<std::size_t> QuotientComplex::face_by_label(const std::string& label) const {
  int n = degree();
  Monomial m(n);
  std::istringstream in(label);
  std::string tok;
  while (in >> tok) {
    if (tok == "∅") continue;
    auto caret = tok.find('^');
    int var = 0, exp = 1;
    try {
      var = std::stoi(tok.substr(0, caret));
      if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (var < 1 || var > n || exp < 1) return std::nullopt;
    m.set(var - 1, m[var - 1] + exp);
  }
  if (!is_special(m)) return std::nullopt;
  return face_of_monomial(m);
}

Polynomial face_to_orbit_monomial(const QuotientComplex& k, std::size_t face, Domain domain) {
  if (face >= k.size()) throw ForeignFace("face index out of range");
  return orbit_monomial(k.group(), k.special_monomial(face), domain);
}

SPolynomial face_to_s_orbit_monomial(const QuotientComplex& k, std::size_t face, Domain domain) {
  if (face >= k.size()) throw ForeignFace("face index out of range");
  return s_orbit_monomial(k.group(), k.chain_monomial(face), domain);
}

std::vector<std::vector<int>> incidence_matrix(const QuotientComplex& k, const std::vector<std::size_t>& faces) {
  std::vector<std::vector<int>> m;
  for (std::size_t f : faces) {
    if (f >= k.size()) throw ForeignFace("face index out of range");
    m.push_back(k.facet_vector(f));
  }
  return m;
}

SimplicialComplex order_complex(const QuotientComplex& k) { return upper_interval_complex(k, 0); }

SimplicialComplex upper_interval_complex(const QuotientComplex& k, std::size_t f) {
  int n = k.degree();
  std::uint32_t base = k.faces().at(f).rank_set;
  std::vector<int> rest;
  for (int r = 1; r <= n - 1; ++r)
    if (!(base >> (r - 1) & 1u)) rest.push_back(r);
  std::vector<Simplex> simplices;
  for (std::size_t facet : k.facets()) {
    if (!k.leq(f, facet)) continue;
    std::vector<int> order = rest;
    do {
      Simplex s;
      std::uint32_t ranks = base;
      for (int r : order) {
        ranks |= 1u << (r - 1);
        s.push_back(static_cast<int>(k.subface(facet, ranks)));
      }
      std::sort(s.begin(), s.end());
      simplices.push_back(std::move(s));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  return SimplicialComplex(simplices);
}

SigmaCrossCheck cross_check_double_cosets(const QuotientComplex& k) {
  const PermutationGroup& g = k.group();
  int n = g.degree();
  PermutationGroup sym = PermutationGroup::symmetric(n);
  Transversal t = lex_transversal(sym, g);
  std::size_t ncos = t.reps.size();

  struct Element {
    std::uint32_t j;       // generators s_j = (j, j+1) of the Young subgroup
    std::size_t block;     // double coset id within this J
    std::size_t face;
  };
  std::vector<Element> elems;
  // block_of[J][coset] = double coset id
  std::vector<std::vector<std::size_t>> block_of(std::size_t{1} << (n > 1 ? n - 1 : 0));
  SigmaCrossCheck result;
  std::uint32_t all = n >= 2 ? ((1u << (n - 1)) - 1) : 0u;
  for (std::uint32_t j = 0; j <= all; ++j) {
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i)
      if (j >> (i - 1) & 1u) gens.push_back(Permutation::from_cycles(n, {{i, i + 1}}));
    PermutationGroup young(n, gens);
    auto blocks = double_cosets(sym, g, young);
    block_of[j].assign(ncos, 0);
    std::uint32_t kset = all & ~j;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::optional<std::size_t> face;
      for (std::size_t rep : blocks[b]) {
        block_of[j][rep] = b;
        const Permutation& pi = t.reps[rep];
        Chain c;
        for (int r = n - 1; r >= 1; --r) {
          if (!(kset >> (r - 1) & 1u)) continue;
          c.push_back(pi.apply_mask((1u << r) - 1));
        }
        std::size_t fc = k.face_of_chain(c);
        if (face && *face != fc) result.well_defined = false;
        face = fc;
      }
      elems.push_back({j, b, *face});
    }
  }
  result.sigma_size = elems.size();
  result.face_count = k.size();

  std::vector<int> hits(k.size(), 0);
  for (const auto& e : elems) ++hits[e.face];
  for (int h : hits)
    if (h != 1) result.bijective = false;
  if (elems.size() != k.size()) result.bijective = false;

  // A representative coset for each element, to test double coset containment.
  std::vector<std::size_t> rep_coset(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& bo = block_of[elems[i].j];
    rep_coset[i] = static_cast<std::size_t>(std::find(bo.begin(), bo.end(), elems[i].block) - bo.begin());
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      // (D,J) <= (D',J') iff J contains J' and D contains D'.
      bool sigma_le = (elems[a].j & elems[b].j) == elems[b].j &&
                      block_of[elems[a].j][rep_coset[b]] == elems[a].block;
      bool face_le = k.leq(elems[a].face, elems[b].face);
      if (sigma_le && !face_le) result.order_preserving = false;
      if (face_le && !sigma_le) result.order_reflecting = false;
    }
  }
  return result;
}

}  // namespace permcm
