#include <doctest.h>

#include "permcm/srring.hpp"

using namespace permcm;

namespace {

Subset U(std::vector<int> e) { return subset_from_elements(e); }

ChainMonomial chain(int n, std::vector<std::pair<std::vector<int>, int>> f) {
  std::vector<ChainMonomial::Factor> factors;
  for (auto& [s, e] : f) factors.emplace_back(U(s), e);
  auto m = ChainMonomial::from_factors(n, factors);
  REQUIRE(m.has_value());
  return *m;
}

}  // namespace

TEST_CASE("subsets") {
  CHECK(subset_elements(U({1, 3})) == std::vector<int>{1, 3});
  CHECK(subset_to_string(U({1, 2})) == "{1,2}");
  CHECK(subset_lex_less(U({1, 2}), U({1, 3})));
  CHECK(subset_lex_less(U({1, 3}), U({2})));
}

TEST_CASE("chain monomials") {
  auto m = chain(3, {{{2}, 1}, {{1, 2}, 2}, {{1, 2, 3}, 1}});
  CHECK(m.to_string() == "y{2}*y{1,2}^2*y{1,2,3}");
  CHECK(m.degree() == 8);  // deg y_U = |U|
  CHECK_FALSE(ChainMonomial::from_factors(3, {{U({1}), 1}, {U({2, 3}), 1}}).has_value());
  CHECK(ChainMonomial(3).to_string() == "1");
}

TEST_CASE("garsia map") {
  auto m = chain(3, {{{2}, 1}, {{1, 2}, 2}, {{1, 2, 3}, 1}});
  CHECK(garsia(m) == Monomial(std::vector<int>{3, 4, 1}));
  CHECK(garsia_inverse(Monomial(std::vector<int>{3, 4, 1})) == m);
  CHECK(garsia(ChainMonomial(3)).is_one());
  CHECK(garsia_inverse(Monomial(3)).is_one());
  CHECK(garsia(ChainMonomial::y(3, U({1, 3}))) == Monomial(std::vector<int>{1, 0, 1}));
}

TEST_CASE("multiplication in the Stanley-Reisner ring") {
  auto y1 = ChainMonomial::y(3, U({1}));
  auto y12 = ChainMonomial::y(3, U({1, 2}));
  auto y23 = ChainMonomial::y(3, U({2, 3}));
  auto p = s_multiply(y1, y12);
  REQUIRE(p.has_value());
  CHECK(p->to_string() == "y{1}*y{1,2}");
  CHECK_FALSE(s_multiply(y1, y23).has_value());
  auto sq = s_multiply(y12, y12);
  REQUIRE(sq.has_value());
  CHECK(sq->to_string() == "y{1,2}^2");
}

TEST_CASE("fine grades") {
  CHECK(fine_grade(chain(3, {{{2}, 1}, {{1, 2}, 2}, {{1, 2, 3}, 1}})) == std::vector<int>{1, 2, 1});
  CHECK(fine_grade(ChainMonomial(4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(fine_grade(ChainMonomial::y(4, U({1, 2, 3, 4}))) == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("rank-row sums") {
  CHECK(theta(3, 1).to_string() == "y{1} + y{2} + y{3}");
  CHECK(theta(3, 2).size() == 3);
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) CHECK(garsia(theta(n, i)) == elementary_symmetric(n, i));
  CHECK_THROWS_AS(theta(3, 0), IndexOutOfRange);
  CHECK_THROWS_AS(theta(3, 4), IndexOutOfRange);
}

TEST_CASE("symmetric orbits as theta monomials") {
  auto s3 = PermutationGroup::symmetric(3);
  auto m = chain(3, {{{1}, 1}, {{1, 2}, 1}});
  CHECK(s_orbit_to_theta(s_orbit_monomial(s3, m)) == std::vector<int>{1, 1, 0});
  CHECK(s_orbit_to_theta(s_orbit_monomial(s3, ChainMonomial(3))) == std::vector<int>{0, 0, 0});
  CHECK(s_orbit_to_theta(s_orbit_monomial(s3, ChainMonomial::y(3, U({1, 2}), 2))) == std::vector<int>{0, 2, 0});
  CHECK(theta_monomial(3, {0, 2, 0}) == s_orbit_monomial(s3, ChainMonomial::y(3, U({1, 2}), 2)));
  auto c3 = parse_group("(1,2,3)", 3);
  CHECK_THROWS_AS(s_orbit_to_theta(s_orbit_monomial(c3, m)), NotAnOrbitMonomial);
}
