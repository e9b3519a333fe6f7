#include "permcm/bases.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

namespace permcm {

namespace {

Monomial s_power(int n, const std::vector<int>& exps) {
  Monomial m(n);
  for (int i = 0; i < n; ++i) m.set(i, exps[i]);
  return m;
}

SPolynomial substitute_theta(const Polynomial& f_in_s) {
  int n = f_in_s.nvars();
  SPolynomial r(n, f_in_s.domain());
  for (const auto& [m, c] : f_in_s.terms()) r += theta_monomial(n, m.exponents(), f_in_s.domain()).scaled(c);
  return r;
}

}  // namespace

Polynomial GoebelDecomposition::reconstruct(const QuotientComplex& k) const {
  Polynomial r(n, domain);
  for (const auto& [face, coeff] : coefficients)
    r += substitute_sigma(coeff) * face_to_orbit_monomial(k, face, domain);
  return r;
}

GoebelDecomposition goebel_decompose(const QuotientComplex& k, const Polynomial& f) {
  int n = k.degree();
  if (f.nvars() != n) throw DegreeMismatch("polynomial degree differs from complex degree");
  if (!is_invariant(k.group(), f)) throw NotInvariant("polynomial is not invariant under the group");
  Domain dom = f.domain();
  GoebelDecomposition out{n, dom, {}};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    Shape lam = rest.leading_shape();
    // The grlex-largest term of the leading shape.
    auto it = std::find_if(rest.terms().begin(), rest.terms().end(),
                           [&](const auto& t) { return shape(t.first) == lam; });
    Monomial m = it->first;
    mpq_class c = it->second;
    SpecialDecomposition d = special_decompose(m);
    std::size_t face = k.face_of_monomial(d.associated_special);
    Polynomial term = Polynomial::from_monomial(s_power(n, d.sigma_exponents), dom, c);
    auto [slot, inserted] = out.coefficients.try_emplace(face, Polynomial(n, dom));
    slot->second += term;
    if (slot->second.is_zero()) out.coefficients.erase(slot);
    rest -= substitute_sigma(term) * orbit_monomial(k.group(), d.associated_special, dom);
    if (rest.coefficient(m) != 0) throw NotInvariant("Goebel step did not remove its leading term");
  }
  if (!(out.reconstruct(k) == f)) throw NotInvariant("Goebel decomposition failed to reproduce the input");
  return out;
}

ShellingCheck check_shelling(const QuotientComplex& k, const std::vector<std::size_t>& order) {
  ShellingCheck res;
  std::vector<char> covered(k.size(), 0);
  std::unordered_set<std::size_t> seen;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t facet = order[pos];
    k.facet_position(facet);
    if (!seen.insert(facet).second) {
      res.failed_at = pos;
      return res;
    }
    std::uint32_t meet = ~0u;
    bool any = false;
    for (std::size_t x : k.below(facet))
      if (!covered[x]) {
        meet &= k.faces()[x].rank_set;
        any = true;
      }
    std::size_t minimal = any ? k.subface(facet, meet) : facet;
    if (!any || covered[minimal]) {
      res.failed_at = pos;
      return res;
    }
    res.minimal_faces.push_back(minimal);
    for (std::size_t x : k.below(facet)) covered[x] = 1;
  }
  res.ok = true;
  res.failed_at = order.size();
  return res;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

std::size_t default_shelling_budget() {
  if (const char* env = std::getenv("PERMCM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultShellingBudget;
}

namespace {

class ShellingSearcher {
 public:
  ShellingSearcher(const QuotientComplex& k, std::size_t budget)
      : k_(k), budget_(budget), cover_(k.size(), 0), used_(k.facets().size(), 0) {}

  ShellingSearch run() {
    ShellingSearch out;
    try {
      if (dfs()) {
        out.status = SearchStatus::Found;
        out.shelling = Shelling{order_, minimal_};
      } else {
        out.status = SearchStatus::NotFound;
      }
    } catch (const BudgetExceeded&) {
      out.status = SearchStatus::BudgetExceeded;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  std::optional<std::size_t> appendable(std::size_t facet) const {
    std::uint32_t meet = ~0u;
    for (std::size_t x : k_.below(facet))
      if (!cover_[x]) meet &= k_.faces()[x].rank_set;
    std::size_t minimal = k_.subface(facet, meet);
    if (cover_[minimal]) return std::nullopt;
    return minimal;
  }

  bool dfs() {
    if (++nodes_ > budget_) throw BudgetExceeded("shelling search exceeded its node budget");
    if (order_.size() == used_.size()) return true;
    std::string key(used_.begin(), used_.end());
    if (failed_.count(key)) return false;
    for (std::size_t j = 0; j < used_.size(); ++j) {
      if (used_[j]) continue;
      std::size_t facet = k_.facets()[j];
      auto minimal = appendable(facet);
      if (!minimal) continue;
      used_[j] = 1;
      order_.push_back(facet);
      minimal_.push_back(*minimal);
      for (std::size_t x : k_.below(facet)) ++cover_[x];
      if (dfs()) return true;
      for (std::size_t x : k_.below(facet)) --cover_[x];
      minimal_.pop_back();
      order_.pop_back();
      used_[j] = 0;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const QuotientComplex& k_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<int> cover_;
  std::string used_;
  std::vector<std::size_t> order_, minimal_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

ShellingSearch find_shelling(const QuotientComplex& k, std::size_t budget) {
  return ShellingSearcher(k, budget).run();
}

ShellingBasis shelling_basis(const QuotientComplex& k, const Shelling& shelling) {
  if (shelling.facets.size() != k.facets().size()) throw InvalidShelling("shelling does not list every facet");
  ShellingCheck chk;
  try {
    chk = check_shelling(k, shelling.facets);
  } catch (const ForeignFace&) {
    throw InvalidShelling("shelling lists a face that is not a facet");
  }
  if (!chk.ok) throw InvalidShelling("facet at position " + std::to_string(chk.failed_at) + " is not appendable");
  if (!shelling.minimal_faces.empty() && shelling.minimal_faces != chk.minimal_faces)
    throw InvalidShelling("minimal faces do not match the shelling");
  // Unitriangularity of the incidence matrix in shelling order.
  for (std::size_t j = 0; j < chk.minimal_faces.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      bool le = k.leq(chk.minimal_faces[j], shelling.facets[i]);
      if (le != (i == j)) throw InvalidShelling("incidence matrix is not unitriangular");
    }
  ShellingBasis b;
  b.faces = chk.minimal_faces;
  for (std::size_t f : b.faces) {
    b.r_side.push_back(face_to_orbit_monomial(k, f));
    b.s_side.push_back(face_to_s_orbit_monomial(k, f));
  }
  return b;
}

namespace {

Domain field_for(Domain d) { return d.kind == DomainKind::Z ? Domain::Q() : d; }

std::vector<mpq_class> facet_row(const QuotientComplex& k, std::size_t f) {
  std::vector<mpq_class> v;
  for (int x : k.facet_vector(f)) v.emplace_back(x);
  return v;
}

}  // namespace

CellBasisReport verify_cell_basis(const QuotientComplex& k, const std::vector<std::size_t>& faces, Domain domain) {
  std::size_t r = k.facets().size();
  if (faces.size() != r)
    throw SizeMismatch("cell basis needs " + std::to_string(r) + " faces, got " + std::to_string(faces.size()));
  for (std::size_t f : faces)
    if (f >= k.size()) throw ForeignFace("face index out of range");
  CellBasisReport rep;
  Matrix m;
  for (std::size_t f : faces) m.push_back(facet_row(k, f));
  rep.determinant = determinant(m, domain);
  rep.determinant_is_unit = domain.is_unit(rep.determinant);
  Domain field = field_for(domain);
  if (determinant(m, field) == 0) return rep;
  Matrix inv = inverse(m, field);
  for (std::size_t a = 0; a < k.size(); ++a) {
    auto v = facet_row(k, a);
    std::uint32_t ra = k.faces()[a].rank_set;
    for (std::size_t j = 0; j < r; ++j) {
      mpq_class x = 0;
      for (std::size_t i = 0; i < r; ++i) x += v[i] * inv[i][j];
      x = field.normalize(x);
      if (x == 0) continue;
      std::uint32_t rb = k.faces()[faces[j]].rank_set;
      if ((rb & ra) != rb) rep.violations.push_back({a, faces[j]});
    }
  }
  rep.ok = rep.determinant_is_unit && rep.violations.empty();
  return rep;
}

GreedyResult greedy_cell_basis(const QuotientComplex& k, Domain domain, GreedyOrder order) {
  std::vector<std::size_t> idx(k.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (order == GreedyOrder::FacetVectorDescending) {
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const Face& fa = k.faces()[a];
      const Face& fb = k.faces()[b];
      if (fa.rank_set != fb.rank_set) return a < b;  // face order already groups rank sets
      return FacetSet::compare_value(k.facet_set(a), k.facet_set(b)) > 0;
    });
  }
  std::size_t r = k.facets().size();
  RowSpan span(r, field_for(domain));
  GreedyResult res;
  res.basis.domain = domain;
  for (std::size_t f : idx) {
    if (res.basis.faces.size() == r) break;
    if (span.add(facet_row(k, f))) res.basis.faces.push_back(f);
  }
  if (res.basis.faces.size() < r) {
    res.diagnostics = "only " + std::to_string(res.basis.faces.size()) + " independent facet vectors found";
    return res;
  }
  res.report = verify_cell_basis(k, res.basis.faces, domain);
  res.basis.determinant = res.report.determinant;
  res.ok = res.report.ok;
  if (!res.ok) {
    if (!res.report.determinant_is_unit)
      res.diagnostics = "incidence determinant " + res.report.determinant.get_str() + " is not a unit";
    else
      res.diagnostics = std::to_string(res.report.violations.size()) + " support violations";
  }
  return res;
}

Polynomial Representation::reconstruct(const QuotientComplex& k) const {
  Polynomial r(n, domain);
  for (const auto& [face, coeff] : coefficients)
    r += substitute_sigma(coeff) * face_to_orbit_monomial(k, face, domain);
  return r;
}

SPolynomial Representation::reconstruct_s(const QuotientComplex& k) const {
  SPolynomial r(n, domain);
  for (const auto& [face, coeff] : coefficients)
    r += substitute_theta(coeff) * face_to_s_orbit_monomial(k, face, domain);
  return r;
}

DeterminantComparison compare_greedy_determinants(const QuotientComplex& k, Domain domain) {
  DeterminantComparison c;
  auto a = greedy_cell_basis(k, domain, GreedyOrder::FacetVectorDescending);
  auto b = greedy_cell_basis(k, domain, GreedyOrder::Representative);
  c.both_found = a.ok && b.ok;
  c.first = a.basis.determinant;
  c.second = b.basis.determinant;
  c.agree = c.both_found && abs(c.first) == abs(c.second);
  return c;
}

namespace {

// Expresses special S-side orbit monomials y_tau through the basis:
// y_tau = sum_j X[tau][j] theta_{K \ J_j} b_j, one linear system per rank set K.
class StratumSolver {
 public:
  StratumSolver(const QuotientComplex& k, const std::vector<std::size_t>& basis, Domain domain)
      : k_(k), basis_(basis), domain_(domain) {}

  struct Stratum {
    std::vector<std::size_t> rows;  // positions into basis
    std::vector<std::size_t> cols;  // faces with rank set K
    Matrix x;                       // x[col][row]
  };

  const Stratum& get(std::uint32_t rank_set) {
    auto it = cache_.find(rank_set);
    if (it != cache_.end()) return it->second;
    Stratum s;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      std::uint32_t rj = k_.faces()[basis_[j]].rank_set;
      if ((rj & rank_set) == rj) s.rows.push_back(j);
    }
    for (std::size_t f = 0; f < k_.size(); ++f)
      if (k_.faces()[f].rank_set == rank_set) s.cols.push_back(f);
    if (s.rows.size() != s.cols.size())
      throw SystemUnsolvable("stratum system for a rank set is not square (" + std::to_string(s.rows.size()) +
                             " basis faces, " + std::to_string(s.cols.size()) + " faces)");
    Matrix a(s.rows.size(), std::vector<mpq_class>(s.cols.size()));
    for (std::size_t i = 0; i < s.rows.size(); ++i)
      for (std::size_t c = 0; c < s.cols.size(); ++c) a[i][c] = k_.leq(basis_[s.rows[i]], s.cols[c]) ? 1 : 0;
    s.x = inverse(a, domain_);
    return cache_.emplace(rank_set, std::move(s)).first->second;
  }

 private:
  const QuotientComplex& k_;
  const std::vector<std::size_t>& basis_;
  Domain domain_;
  std::map<std::uint32_t, Stratum> cache_;
};

// Adds the decomposition of an invariant S-polynomial to out.
void decompose_s(const QuotientComplex& k, SPolynomial h, const std::vector<std::size_t>& basis,
                 StratumSolver& solver, std::map<std::size_t, Polynomial>& out) {
  int n = k.degree();
  Domain dom = h.domain();
  while (!h.is_zero()) {
    ChainMonomial m = h.terms().begin()->first;
    mpq_class c = h.terms().begin()->second;
    SPolynomial orbit = s_orbit_monomial(k.group(), m, dom);
    for (const auto& [x, v] : orbit.terms())
      if (h.coefficient(x) != c) throw NotInvariant("S-polynomial is not invariant under the group");
    h -= orbit.scaled(c);
    // G m = theta^f G m_star with m_star squarefree and free of y_[n].
    std::vector<int> f(n, 0);
    Chain star;
    for (const auto& [u, e] : m.factors()) {
      int size = __builtin_popcount(u);
      if (size == n) {
        f[n - 1] += e;
      } else {
        f[size - 1] += e - 1;
        star.push_back(u);
      }
    }
    std::size_t tau = k.face_of_chain(star);
    std::uint32_t kset = k.faces()[tau].rank_set;
    const auto& st = solver.get(kset);
    std::size_t col = static_cast<std::size_t>(std::find(st.cols.begin(), st.cols.end(), tau) - st.cols.begin());
    for (std::size_t i = 0; i < st.rows.size(); ++i) {
      const mpq_class& x = st.x[col][i];
      if (x == 0) continue;
      std::size_t j = st.rows[i];
      std::vector<int> e = f;
      std::uint32_t extra = kset & ~k.faces()[basis[j]].rank_set;
      for (int r = 1; r < n; ++r)
        if (extra >> (r - 1) & 1u) ++e[r - 1];
      auto [slot, inserted] = out.try_emplace(basis[j], Polynomial(n, dom));
      slot->second.add_term(s_power(n, e), c * x);
    }
  }
}

void drop_zero(std::map<std::size_t, Polynomial>& m) {
  for (auto it = m.begin(); it != m.end();) it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

}  // namespace

Representation represent_s_on_basis(const QuotientComplex& k, const SPolynomial& f,
                                    const std::vector<std::size_t>& basis, Domain domain) {
  if (f.n() != k.degree()) throw DegreeMismatch("S-polynomial degree differs from complex degree");
  if (!(f.domain() == domain)) throw DomainMismatch("S-polynomial domain differs from requested domain");
  StratumSolver solver(k, basis, domain);
  Representation rep{k.degree(), domain, basis, {}};
  decompose_s(k, f, basis, solver, rep.coefficients);
  drop_zero(rep.coefficients);
  if (!(rep.reconstruct_s(k) == f)) throw SystemUnsolvable("representation failed to reproduce the input");
  return rep;
}

Representation represent_on_basis(const QuotientComplex& k, const Polynomial& f,
                                  const std::vector<std::size_t>& basis, Domain domain) {
  int n = k.degree();
  if (f.nvars() != n) throw DegreeMismatch("polynomial degree differs from complex degree");
  if (!(f.domain() == domain)) throw DomainMismatch("polynomial domain differs from requested domain");
  if (!is_invariant(k.group(), f)) throw NotInvariant("polynomial is not invariant under the group");
  StratumSolver solver(k, basis, domain);
  Representation rep{n, domain, basis, {}};
  Polynomial rest = f;
  while (!rest.is_zero()) {
    Shape lam = rest.leading_shape();
    std::map<std::size_t, Polynomial> layer_rep;
    decompose_s(k, garsia_inverse(rest.shape_part(lam)), basis, solver, layer_rep);
    for (const auto& [face, coeff] : layer_rep) {
      auto [slot, inserted] = rep.coefficients.try_emplace(face, Polynomial(n, domain));
      slot->second += coeff;
      rest -= substitute_sigma(coeff) * face_to_orbit_monomial(k, face, domain);
    }
    if (!rest.is_zero() && deglex_compare(rest.leading_shape(), lam) >= 0)
      throw SystemUnsolvable("leading shape did not decrease");
  }
  drop_zero(rep.coefficients);
  if (!(rep.reconstruct(k) == f)) throw SystemUnsolvable("representation failed to reproduce the input");
  return rep;
}

}  // namespace permcm
