#include "permcm/srring.hpp"

#include <algorithm>

namespace permcm {

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(__builtin_ctz(s) + 1);
    s &= s - 1;
  }
  return out;
}

Subset subset_from_elements(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxDegree) throw PointOutOfRange("subset element out of range");
    s |= 1u << (e - 1);
  }
  return s;
}

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e);
  }
  return out + "}";
}

bool subset_lex_less(Subset a, Subset b) {
  auto ea = subset_elements(a), eb = subset_elements(b);
  return ea < eb;
}

ChainMonomial::ChainMonomial(int n) : n_(n) {
  if (n < 1 || n > kMaxDegree) throw IndexOutOfRange("ring degree out of range");
}

std::optional<ChainMonomial> ChainMonomial::from_factors(int n, std::vector<Factor> factors) {
  ChainMonomial m(n);
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
    int pa = __builtin_popcount(a.first), pb = __builtin_popcount(b.first);
    if (pa != pb) return pa > pb;
    return a.first < b.first;
  });
  for (const auto& [u, e] : factors) {
    if (u == 0 || (n < 32 && (u >> n) != 0)) throw IndexOutOfRange("subset not a nonempty subset of [n]");
    if (e < 0) throw IndexOutOfRange("negative exponent");
    if (e == 0) continue;
    if (!m.f_.empty() && m.f_.back().first == u) {
      m.f_.back().second += e;
      continue;
    }
    if (!m.f_.empty()) {
      Subset prev = m.f_.back().first;
      if ((u & prev) != u) return std::nullopt;
    }
    m.f_.emplace_back(u, e);
  }
  return m;
}

ChainMonomial ChainMonomial::y(int n, Subset u, int exp) { return *from_factors(n, {{u, exp}}); }

int ChainMonomial::degree() const {
  int d = 0;
  for (const auto& [u, e] : f_) d += __builtin_popcount(u) * e;
  return d;
}

std::vector<int> ChainMonomial::fine_grade() const {
  std::vector<int> g(n_, 0);
  for (const auto& [u, e] : f_) g[__builtin_popcount(u) - 1] += e;
  return g;
}

ChainMonomial ChainMonomial::act(const Permutation& p) const {
  if (p.degree() != n_) throw DegreeMismatch("permutation and chain monomial degrees differ");
  ChainMonomial r(n_);
  r.f_.reserve(f_.size());
  for (const auto& [u, e] : f_) r.f_.emplace_back(p.apply_mask(u), e);
  return r;
}

std::string ChainMonomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += "y" + subset_to_string(it->first);
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s;
}

bool operator<(const ChainMonomial& a, const ChainMonomial& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  std::size_t k = std::min(a.f_.size(), b.f_.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [ua, ea] = a.f_[i];
    const auto& [ub, eb] = b.f_[i];
    if (ua != ub) {
      int pa = __builtin_popcount(ua), pb = __builtin_popcount(ub);
      if (pa != pb) return pa > pb;
      return subset_lex_less(ua, ub);
    }
    if (ea != eb) return ea < eb;
  }
  return a.f_.size() < b.f_.size();
}

std::optional<ChainMonomial> s_multiply(const ChainMonomial& a, const ChainMonomial& b) {
  if (a.n() != b.n()) throw DegreeMismatch("chain monomials of different degree");
  std::vector<ChainMonomial::Factor> all = a.factors();
  all.insert(all.end(), b.factors().begin(), b.factors().end());
  return ChainMonomial::from_factors(a.n(), std::move(all));
}

std::vector<int> fine_grade(const ChainMonomial& m) { return m.fine_grade(); }

Monomial garsia(const ChainMonomial& m) {
  Monomial r(m.n());
  for (const auto& [u, e] : m.factors())
    for (int j : subset_elements(u)) r.set(j - 1, r[j - 1] + e);
  return r;
}

ChainMonomial garsia_inverse(const Monomial& m) {
  int n = m.nvars();
  std::vector<int> levels = m.exponents();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (!levels.empty() && levels.back() == 0) levels.pop_back();
  std::vector<ChainMonomial::Factor> factors;
  for (std::size_t t = 0; t < levels.size(); ++t) {
    int mult = levels[t] - (t + 1 < levels.size() ? levels[t + 1] : 0);
    Subset u = 0;
    for (int j = 0; j < n; ++j)
      if (m[j] >= levels[t]) u |= 1u << j;
    factors.emplace_back(u, mult);
  }
  return *ChainMonomial::from_factors(n, std::move(factors));
}

SPolynomial SPolynomial::constant(int n, Domain domain, const mpq_class& c) {
  SPolynomial p(n, domain);
  p.add_term(ChainMonomial(n), c);
  return p;
}

SPolynomial SPolynomial::from_monomial(const ChainMonomial& m, Domain domain, const mpq_class& c) {
  SPolynomial p(m.n(), domain);
  p.add_term(m, c);
  return p;
}

void SPolynomial::add_term(const ChainMonomial& m, const mpq_class& c) {
  if (m.n() != n_) throw DegreeMismatch("chain monomial has wrong degree");
  mpq_class v = domain_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second = domain_.normalize(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class SPolynomial::coefficient(const ChainMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void SPolynomial::check_compatible(const SPolynomial& o) const {
  if (n_ != o.n_) throw DegreeMismatch("S-polynomials of different degree");
  if (!(domain_ == o.domain_)) throw DomainMismatch("S-polynomials over different domains");
}

SPolynomial& SPolynomial::operator+=(const SPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SPolynomial& SPolynomial::operator-=(const SPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SPolynomial SPolynomial::operator+(const SPolynomial& o) const {
  SPolynomial r = *this;
  r += o;
  return r;
}

SPolynomial SPolynomial::operator-(const SPolynomial& o) const {
  SPolynomial r = *this;
  r -= o;
  return r;
}

SPolynomial SPolynomial::operator*(const SPolynomial& o) const {
  check_compatible(o);
  SPolynomial r(n_, domain_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_)
      if (auto ab = s_multiply(a, b)) r.add_term(*ab, ca * cb);
  return r;
}

SPolynomial SPolynomial::scaled(const mpq_class& c) const {
  SPolynomial r(n_, domain_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

SPolynomial SPolynomial::pow(unsigned k) const {
  SPolynomial result = constant(n_, domain_, 1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string SPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += m.to_string();
    }
  }
  return s;
}

Polynomial garsia(const SPolynomial& f) {
  Polynomial r(f.n(), f.domain());
  for (const auto& [m, c] : f.terms()) r.add_term(garsia(m), c);
  return r;
}

SPolynomial garsia_inverse(const Polynomial& f) {
  SPolynomial r(f.nvars(), f.domain());
  for (const auto& [m, c] : f.terms()) r.add_term(garsia_inverse(m), c);
  return r;
}

SPolynomial act(const Permutation& p, const SPolynomial& f) {
  SPolynomial r(f.n(), f.domain());
  for (const auto& [m, c] : f.terms()) r.add_term(m.act(p), c);
  return r;
}

bool is_invariant(const PermutationGroup& g, const SPolynomial& f) {
  for (const auto& gen : g.generators())
    if (!(act(gen, f) == f)) return false;
  return true;
}

std::vector<ChainMonomial> s_orbit(const PermutationGroup& g, const ChainMonomial& m) {
  if (g.degree() != m.n()) throw DegreeMismatch("group and chain monomial degrees differ");
  return orbit_of(g, m, [](const Permutation& p, const ChainMonomial& x) { return x.act(p); });
}

SPolynomial s_orbit_monomial(const PermutationGroup& g, const ChainMonomial& m, Domain domain) {
  SPolynomial r(m.n(), domain);
  for (const auto& x : s_orbit(g, m)) r.add_term(x, 1);
  return r;
}

SPolynomial theta(int n, int i, Domain domain) {
  if (i < 1 || i > n) throw IndexOutOfRange("theta index out of range");
  SPolynomial r(n, domain);
  for (Subset u = 1; u < (Subset{1} << n); ++u)
    if (__builtin_popcount(u) == i) r.add_term(ChainMonomial::y(n, u), 1);
  return r;
}

SPolynomial theta_monomial(int n, const std::vector<int>& a, Domain domain) {
  SPolynomial r = SPolynomial::constant(n, domain, 1);
  for (int i = 0; i < n; ++i)
    if (a[i] > 0) r = r * theta(n, i + 1, domain).pow(static_cast<unsigned>(a[i]));
  return r;
}

std::vector<int> s_orbit_to_theta(const SPolynomial& orbit) {
  if (orbit.is_zero()) throw NotAnOrbitMonomial("zero is not an orbit monomial");
  int n = orbit.n();
  const ChainMonomial& m = orbit.terms().begin()->first;
  if (!(s_orbit_monomial(PermutationGroup::symmetric(n), m, orbit.domain()) == orbit))
    throw NotAnOrbitMonomial("input is not a full S_n-orbit monomial");
  std::vector<int> a = m.fine_grade();
  if (!(theta_monomial(n, a, orbit.domain()) == orbit))
    throw NotAnOrbitMonomial("theta expansion does not reproduce the orbit monomial");
  return a;
}

}  // namespace permcm
