#include <doctest.h>

#include <set>

#include "../support/random.hpp"

using namespace permcm;

namespace {

// Chain monomials of a given degree, built from all chains of nonempty subsets.
void chain_monomials(int n, int degree, std::vector<ChainMonomial::Factor>& cur, Subset last,
                     std::vector<ChainMonomial>& out) {
  if (degree == 0) {
    out.push_back(*ChainMonomial::from_factors(n, cur));
    return;
  }
  Subset full = (1u << n) - 1;
  for (Subset s = 1; s <= full; ++s) {
    if ((s & last) != last || s == last) continue;
    int size = __builtin_popcount(s);
    for (int e = 1; e * size <= degree; ++e) {
      cur.emplace_back(s, e);
      chain_monomials(n, degree - e * size, cur, s, out);
      cur.pop_back();
    }
  }
}

std::size_t binomial(int a, int b) {
  std::size_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
  return r;
}

// A random chain monomial with fine grade a: prod y_{pi[1..k]}^{a_k}.
ChainMonomial with_fine_grade(std::mt19937_64& rng, int n, const std::vector<int>& a) {
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i + 1;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<ChainMonomial::Factor> f;
  for (int k = 1; k <= n; ++k)
    if (a[k - 1]) f.emplace_back(subset_from_elements({pts.begin(), pts.begin() + k}), a[k - 1]);
  return *ChainMonomial::from_factors(n, f);
}

SPolynomial finely_homogeneous(std::mt19937_64& rng, int n, const std::vector<int>& a) {
  SPolynomial f(n, Domain::Z());
  for (int t = 0; t < 3; ++t) f.add_term(with_fine_grade(rng, n, a), 1 + static_cast<long>(rng() % 4));
  return f;
}

std::vector<int> random_grade(std::mt19937_64& rng, int n) {
  std::vector<int> a(n);
  for (auto& x : a) x = static_cast<int>(rng() % 3);
  return a;
}

}  // namespace

TEST_CASE("Garsia map is a bijection onto all monomials") {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 8; ++d) {
      std::vector<ChainMonomial> all;
      std::vector<ChainMonomial::Factor> cur;
      chain_monomials(n, d, cur, 0, all);
      std::set<Monomial> images;
      for (const auto& m : all) {
        auto x = garsia(m);
        CHECK(x.total_degree() == d);
        images.insert(x);
        CHECK(garsia_inverse(x) == m);
      }
      CHECK(images.size() == all.size());
      CHECK(images.size() == binomial(n + d - 1, d));  // all monomials of degree d
    }
}

TEST_CASE("Garsia map is equivariant") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto x = testing_support::random_monomial(rng, n, 8);
    auto m = garsia_inverse(x);
    for (int i = 1; i < n; ++i) {
      auto t = Permutation::from_cycles(n, {{i, i + 1}});
      CHECK(garsia(m.act(t)) == act(t, x));
    }
  }
}

TEST_CASE("Garsia map is multiplicative up to lower shapes") {
  std::mt19937_64 rng(22);
  int nonzero = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto f = finely_homogeneous(rng, n, random_grade(rng, n));
    auto g = finely_homogeneous(rng, n, random_grade(rng, n));
    auto h = f * g;
    if (h.is_zero()) continue;
    ++nonzero;
    auto gh = garsia(h);
    Shape lambda = gh.leading_shape();
    for (const auto& [m, c] : gh.terms()) CHECK(shape(m) == lambda);
    for (const auto& [m, c] : (garsia(f) * garsia(g) - gh).terms())
      CHECK(deglex_compare(shape(m), lambda) == std::strong_ordering::less);
  }
  CHECK(nonzero > 100);
}

TEST_CASE("distinct theta monomials have distinct fine grades") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> grades;
    std::size_t count = 0;
    std::vector<int> a(n, 0);
    // all exponent vectors with sum of i*a_i <= 8
    std::function<void(int, int)> rec = [&](int i, int budget) {
      if (i == n) {
        auto t = theta_monomial(n, a);
        std::set<std::vector<int>> local;
        for (const auto& [m, c] : t.terms()) local.insert(m.fine_grade());
        REQUIRE(local.size() == 1);
        grades.insert(*local.begin());
        ++count;
        return;
      }
      for (int e = 0; e * (i + 1) <= budget; ++e) {
        a[i] = e;
        rec(i + 1, budget - e * (i + 1));
      }
      a[i] = 0;
    };
    rec(0, 8);
    CHECK(grades.size() == count);
  }
}

TEST_CASE("symmetric multipliers do not kill invariants") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto sn = PermutationGroup::symmetric(n);
    PermutationGroup g(n, {sn.elements()[rng() % sn.order()]});
    auto s = theta_monomial(n, random_grade(rng, n)).scaled(1 + static_cast<long>(rng() % 3));
    auto f = s_orbit_monomial(g, with_fine_grade(rng, n, random_grade(rng, n)));
    REQUIRE(is_invariant(g, f));
    CHECK_FALSE((s * f).is_zero());
  }
}
