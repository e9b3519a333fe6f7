#include "permcm/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permcm {

Domain Domain::Fp(std::uint32_t prime) {
  if (prime >= (1u << 31) || !is_prime(prime))
    throw NotPrime(std::to_string(prime) + " is not a prime below 2^31");
  return {DomainKind::Fp, prime};
}

mpq_class Domain::normalize(const mpq_class& value) const {
  switch (kind) {
    case DomainKind::Z:
      if (value.get_den() != 1)
        throw NonIntegerCoefficientInZMode("coefficient " + value.get_str() + " is not an integer");
      return value;
    case DomainKind::Q: {
      mpq_class v = value;
      v.canonicalize();
      return v;
    }
    case DomainKind::Fp: {
      mpz_class pp = p;
      mpz_class den = value.get_den() % pp;
      if (den == 0) throw DomainMismatch("denominator divisible by p = " + std::to_string(p));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
      mpz_class num = value.get_num() % pp;
      mpz_class r = (num * inv) % pp;
      if (r < 0) r += pp;
      return mpq_class(r);
    }
  }
  return value;
}

bool Domain::is_unit(const mpq_class& value) const {
  mpq_class v = normalize(value);
  if (kind == DomainKind::Z) return v == 1 || v == -1;
  return v != 0;
}

mpq_class Domain::inverse(const mpq_class& value) const {
  if (!is_unit(value)) throw DomainMismatch(value.get_str() + " is not a unit in " + to_string());
  if (kind == DomainKind::Fp) return normalize(mpq_class(1) / normalize(value));
  return normalize(mpq_class(1) / value);
}

std::string Domain::to_string() const {
  switch (kind) {
    case DomainKind::Z: return "z";
    case DomainKind::Q: return "q";
    case DomainKind::Fp: return "fp:" + std::to_string(p);
  }
  return "?";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Domain parse_domain(const std::string& text) {
  if (text == "z" || text == "Z") return Domain::Z();
  if (text == "q" || text == "Q") return Domain::Q();
  if (text.rfind("fp:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(3, "expected a prime after 'fp:'");
    return Domain::Fp(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw ParseError(0, "unknown coefficient domain '" + text + "' (use z, q or fp:<p>)");
}

Monomial::Monomial(int nvars) : n_(nvars) {
  if (nvars < 1 || nvars > kMaxDegree) throw IndexOutOfRange("number of variables out of range");
}

Monomial::Monomial(const std::vector<int>& exponents) : Monomial(static_cast<int>(exponents.size())) {
  for (int i = 0; i < n_; ++i) set(i, exponents[i]);
}

void Monomial::set(int i, int value) {
  if (value < 0 || value > 0xFFFF) throw IndexOutOfRange("exponent out of range");
  e_[i] = static_cast<Exp>(value);
}

int Monomial::total_degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::is_one() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i]) return false;
  return true;
}

std::vector<int> Monomial::exponents() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

Monomial Monomial::operator*(const Monomial& o) const {
  if (n_ != o.n_) throw DegreeMismatch("monomials in different numbers of variables");
  Monomial r(n_);
  for (int i = 0; i < n_; ++i) r.set(i, e_[i] + o.e_[i]);
  return r;
}

std::string Monomial::to_string(char var) const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!e_[i]) continue;
    if (!s.empty()) s += '*';
    s += var;
    s += std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Monomial::label() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!e_[i]) continue;
    if (!s.empty()) s += ' ';
    s += std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "∅" : s;
}

std::size_t Monomial::hash() const {
  std::size_t h = 14695981039346656037ull;
  for (int i = 0; i < n_; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Shape shape(const Monomial& m) {
  Shape s = m.exponents();
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

std::strong_ordering deglex_compare(const Shape& a, const Shape& b) {
  if (a.size() != b.size()) throw LengthMismatch("shapes of different lengths");
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

Shape add_shapes(const Shape& a, const Shape& b) {
  if (a.size() != b.size()) throw LengthMismatch("shapes of different lengths");
  Shape r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Polynomial::Polynomial(int nvars, Domain domain) : n_(nvars), domain_(domain) {}

Polynomial Polynomial::constant(int nvars, Domain domain, const mpq_class& c) {
  Polynomial p(nvars, domain);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, Domain domain, const mpq_class& c) {
  Polynomial p(m.nvars(), domain);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, Domain domain, int index1) {
  Monomial m(nvars);
  m.set(index1 - 1, 1);
  return from_monomial(m, domain);
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.nvars() != n_) throw DegreeMismatch("monomial has wrong number of variables");
  mpq_class v = domain_.normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second = domain_.normalize(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.total_degree();
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (n_ != o.n_) throw DegreeMismatch("polynomials in different numbers of variables");
  if (!(domain_ == o.domain_)) throw DomainMismatch("polynomials over different domains");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(n_, domain_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add_term(a * b, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r(n_, domain_);
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(n_, domain_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::with_domain(Domain d) const {
  Polynomial r(n_, d);
  for (const auto& [m, v] : terms_) r.add_term(m, v);
  return r;
}

Polynomial Polynomial::shape_part(const Shape& s) const {
  Polynomial r(n_, domain_);
  for (const auto& [m, v] : terms_)
    if (shape(m) == s) r.terms_.emplace(m, v);
  return r;
}

Shape Polynomial::leading_shape() const {
  if (terms_.empty()) throw IndexOutOfRange("leading shape of the zero polynomial");
  Shape best = shape(terms_.begin()->first);
  for (const auto& [m, v] : terms_) {
    Shape s = shape(m);
    if (deglex_compare(s, best) > 0) best = s;
  }
  return best;
}

std::string Polynomial::to_string(char var) const {
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
      s += m.to_string(var);
    }
  }
  return s;
}

Monomial act(const Permutation& p, const Monomial& m) {
  if (p.degree() != m.nvars()) throw DegreeMismatch("permutation and monomial degrees differ");
  Monomial r(m.nvars());
  for (int i = 0; i < m.nvars(); ++i) r.set(p.image0(i), m[i]);
  return r;
}

Polynomial act(const Permutation& p, const Polynomial& f) {
  if (p.degree() != f.nvars()) throw DegreeMismatch("permutation and polynomial degrees differ");
  Polynomial r(f.nvars(), f.domain());
  for (const auto& [m, c] : f.terms()) r.add_term(act(p, m), c);
  return r;
}

bool is_invariant(const PermutationGroup& g, const Polynomial& f) {
  if (g.degree() != f.nvars()) throw DegreeMismatch("group and polynomial degrees differ");
  for (const auto& gen : g.generators())
    if (!(act(gen, f) == f)) return false;
  return true;
}

bool stacks_up(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DegreeMismatch("monomials in different numbers of variables");
  // A common weakly decreasing ordering exists iff no pair of indices is
  // strictly discordant.
  for (int i = 0; i < a.nvars(); ++i)
    for (int j = 0; j < a.nvars(); ++j)
      if (a[i] > a[j] && b[i] < b[j]) return false;
  return true;
}

bool stacks_up_by_shape(const Monomial& a, const Monomial& b) {
  return shape(a * b) == add_shapes(shape(a), shape(b));
}

std::vector<Monomial> monomial_orbit(const PermutationGroup& g, const Monomial& m) {
  if (g.degree() != m.nvars()) throw DegreeMismatch("group and monomial degrees differ");
  return orbit_of(g, m, [](const Permutation& p, const Monomial& x) { return act(p, x); });
}

Polynomial orbit_monomial(const PermutationGroup& g, const Monomial& m, Domain domain) {
  Polynomial r(m.nvars(), domain);
  for (const auto& x : monomial_orbit(g, m)) r.add_term(x, 1);
  return r;
}

Polynomial orbit_sum(const PermutationGroup& g, const Polynomial& f) {
  Polynomial r(f.nvars(), f.domain());
  std::map<Monomial, bool> done;
  for (const auto& [m, c] : f.terms()) {
    if (done.count(m)) continue;
    for (const auto& x : monomial_orbit(g, m)) {
      done[x] = true;
      r.add_term(x, c);
    }
  }
  return r;
}

Polynomial elementary_symmetric(int n, int i, Domain domain) {
  if (i < 1 || i > n) throw IndexOutOfRange("elementary symmetric index out of range");
  Polynomial r(n, domain);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    Monomial m(n);
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) m.set(j, 1);
    r.add_term(m, 1);
  }
  return r;
}

SpecialDecomposition special_decompose(const Monomial& m) {
  int n = m.nvars();
  // The chain y_{U_1}^{a_1} ... with U_t = {j : e_j >= v_t} is the Garsia
  // preimage of m.  Dropping multiplicities and the top set [n] leaves the
  // squarefree chain whose image is the associated special monomial.
  std::vector<int> levels = m.exponents();
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (!levels.empty() && levels.back() == 0) levels.pop_back();

  SpecialDecomposition d;
  d.sigma_exponents.assign(n, 0);
  d.associated_special = Monomial(n);
  for (std::size_t t = 0; t < levels.size(); ++t) {
    int mult = levels[t] - (t + 1 < levels.size() ? levels[t + 1] : 0);
    int size = 0;
    for (int j = 0; j < n; ++j)
      if (m[j] >= levels[t]) ++size;
    if (size == n) {
      d.sigma_exponents[n - 1] += mult;
      continue;
    }
    d.sigma_exponents[size - 1] += mult - 1;
    for (int j = 0; j < n; ++j)
      if (m[j] >= levels[t]) d.associated_special.set(j, d.associated_special[j] + 1);
  }
  d.is_special = std::all_of(d.sigma_exponents.begin(), d.sigma_exponents.end(), [](int v) { return v == 0; });
  return d;
}

bool is_special(const Monomial& m) {
  Shape s = shape(m);
  int n = m.nvars();
  if (s[n - 1] != 0) return false;
  for (int i = 0; i + 1 < n; ++i)
    if (s[i] - s[i + 1] > 1) return false;
  return true;
}

Monomial sigma_monomial(const std::vector<int>& a) { return Monomial(a); }

Polynomial substitute_sigma(const Polynomial& f_in_s) {
  int n = f_in_s.nvars();
  Domain dom = f_in_s.domain();
  std::vector<std::vector<Polynomial>> powers(n);
  auto sigma_pow = [&](int i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, dom, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * elementary_symmetric(n, i + 1, dom));
    return cache[k];
  };
  Polynomial r(n, dom);
  for (const auto& [m, c] : f_in_s.terms()) {
    Polynomial t = Polynomial::constant(n, dom, c);
    for (int i = 0; i < n; ++i)
      if (m[i]) t = t * sigma_pow(i, m[i]);
    r += t;
  }
  return r;
}

Polynomial ftsp_represent(const Polynomial& f) {
  int n = f.nvars();
  if (!is_invariant(PermutationGroup::symmetric(n), f)) throw NotSymmetric("polynomial is not symmetric");
  Polynomial rest = f;
  Polynomial result(n, f.domain());
  while (!rest.is_zero()) {
    Shape lam = rest.leading_shape();
    mpq_class c = rest.coefficient(Monomial(lam));
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = lam[i] - (i + 1 < n ? lam[i + 1] : 0);
    Polynomial layer = Polynomial::from_monomial(sigma_monomial(a), f.domain(), c);
    result += layer;
    rest -= substitute_sigma(layer);
  }
  if (!(substitute_sigma(result) == f)) throw NotSymmetric("symmetric reduction failed to reproduce input");
  return result;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, int n, Domain d, char var) : s_(s), n_(n), d_(d), var_(var) {}

  Polynomial parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Polynomial term() {
    Polynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      mpz_class k = integer();
      if (k > 1000) throw ParseError(at, "exponent too large");
      return base.pow(static_cast<unsigned>(k.get_ui()));
    }
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      mpq_class v(integer());
      if (eat('/')) {
        mpz_class den = integer();
        if (den == 0) throw ParseError(at, "zero denominator");
        v = mpq_class(v.get_num(), den);
        v.canonicalize();
        if (d_.kind == DomainKind::Z && v.get_den() != 1)
          throw NonIntegerCoefficientInZMode("coefficient at position " + std::to_string(at) +
                                             " is not an integer");
      }
      return Polynomial::constant(n_, d_, v);
    }
    if (c == var_) {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(pos_, std::string("expected variable index after '") + var_ + "'");
      mpz_class k = integer();
      if (k < 1 || k > n_)
        throw ParseError(at, std::string("variable ") + var_ + k.get_str() + " outside 1.." + std::to_string(n_));
      return Polynomial::variable(n_, d_, static_cast<int>(k.get_si()));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  int n_;
  Domain d_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& expr, int nvars, Domain domain, char var) {
  return PolyParser(expr, nvars, domain, var).parse();
}

}  // namespace permcm
