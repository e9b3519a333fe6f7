#include <doctest.h>

#include "../support/oracle.hpp"
#include "permcm/bases.hpp"

using namespace permcm;

namespace {

QuotientComplex complex_of(const std::string& spec, int n) { return build_quotient_complex(parse_group(spec, n)); }

std::size_t face(const QuotientComplex& k, const std::string& label) {
  auto f = k.face_by_label(label);
  REQUIRE(f.has_value());
  return *f;
}

std::vector<std::size_t> faces(const QuotientComplex& k, std::vector<std::string> labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(face(k, l));
  return out;
}

Polynomial S(const std::string& s, int n, Domain d = Domain::Z()) { return parse_polynomial(s, n, d, 's'); }
Monomial M(std::vector<int> e) { return Monomial(e); }

}  // namespace

TEST_CASE("Goebel decomposition") {
  auto k = complex_of("(1,2,3)", 3);
  auto f = orbit_monomial(k.group(), M({1, 0, 4}));
  auto d = goebel_decompose(k, f);
  REQUIRE(d.coefficients.size() == 4);
  CHECK(d.coefficients.at(k.face_of_monomial(M({2, 1, 0}))) == S("s1^2 - 2*s2", 3));
  CHECK(d.coefficients.at(k.face_of_monomial(M({2, 0, 1}))) == S("-s2", 3));
  CHECK(d.coefficients.at(k.face_of_monomial(M({1, 1, 0}))) == S("-2*s3", 3));
  CHECK(d.coefficients.at(k.face_of_monomial(M({1, 0, 0}))) == S("s1*s3", 3));
  CHECK(oracle::from(d.reconstruct(k)) == oracle::from(f));

  auto one = goebel_decompose(k, Polynomial::constant(3, Domain::Z(), 1));
  REQUIRE(one.coefficients.size() == 1);
  CHECK(one.coefficients.at(0) == S("1", 3));

  auto s2 = build_quotient_complex(PermutationGroup::symmetric(2));
  auto p = goebel_decompose(s2, parse_polynomial("x1^2 + x2^2", 2, Domain::Z()));
  REQUIRE(p.coefficients.size() == 2);
  CHECK(p.coefficients.at(s2.face_of_monomial(M({1, 0}))) == S("s1", 2));
  CHECK(p.coefficients.at(0) == S("-2*s2", 2));

  auto s2t = build_quotient_complex(PermutationGroup::trivial(2));
  auto q = goebel_decompose(s2t, parse_polynomial("x1^2 + x2^2", 2, Domain::Z()));
  CHECK(q.coefficients.at(s2t.face_of_monomial(M({1, 0}))) == S("s1", 2));
  CHECK(q.coefficients.at(s2t.face_of_monomial(M({0, 1}))) == S("s1", 2));
  CHECK(q.coefficients.at(0) == S("-2*s2", 2));

  CHECK_THROWS_AS(goebel_decompose(k, parse_polynomial("x1", 3, Domain::Z())), NotInvariant);
  CHECK_THROWS_AS(goebel_decompose(k, parse_polynomial("x1", 2, Domain::Z())), DegreeMismatch);
}

TEST_CASE("shellings of the D4 quotient") {
  auto k = complex_of("(1,2,3,4)(1,3)", 4);
  auto paper = faces(k, {"1^3 2 3^2", "1^3 2^2 3", "1^3 2^2 4"});
  auto check = check_shelling(k, paper);
  REQUIRE(check.ok);
  CHECK(check.minimal_faces == faces(k, {"∅", "1 2", "1^2 2 4"}));

  auto bad = check_shelling(k, faces(k, {"1^3 2 3^2", "1^3 2^2 4"}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed_at == 1);

  auto search = find_shelling(k);
  CHECK(search.status == SearchStatus::Found);
  REQUIRE(search.shelling.has_value());
  CHECK(check_shelling(k, search.shelling->facets).ok);

  auto basis = shelling_basis(k, Shelling{paper, check.minimal_faces});
  REQUIRE(basis.r_side.size() == 3);
  CHECK(basis.r_side[0] == Polynomial::constant(4, Domain::Z(), 1));
  CHECK(basis.r_side[1] == orbit_monomial(k.group(), M({1, 1, 0, 0})));
  CHECK(basis.r_side[2] == orbit_monomial(k.group(), M({2, 1, 0, 1})));
  CHECK(verify_cell_basis(k, basis.faces, Domain::Z()).ok);

  CHECK_THROWS_AS(shelling_basis(k, Shelling{faces(k, {"1^3 2 3^2", "1^3 2^2 4", "1^3 2^2 3"}), {}}), InvalidShelling);
}

TEST_CASE("shelling search edge cases") {
  auto s4 = build_quotient_complex(PermutationGroup::symmetric(4));
  auto one = find_shelling(s4);
  CHECK(one.status == SearchStatus::Found);
  CHECK(shelling_basis(s4, *one.shelling).faces == std::vector<std::size_t>{0});

  auto c4 = complex_of("(1,2,3,4)", 4);
  CHECK(find_shelling(c4).status == SearchStatus::NotFound);
  CHECK(find_shelling(c4, 2).status == SearchStatus::BudgetExceeded);
}

TEST_CASE("greedy cell bases") {
  auto k = complex_of("(1,2,3,4)(1,3)", 4);
  auto g = greedy_cell_basis(k, Domain::Q());
  REQUIRE(g.ok);
  CHECK(g.basis.faces == faces(k, {"∅", "1 3", "1^2 2 3"}));
  CHECK(abs(g.basis.determinant) == 1);

  auto rep = greedy_cell_basis(k, Domain::Q(), GreedyOrder::Representative);
  CHECK(rep.ok);

  auto s4 = greedy_cell_basis(build_quotient_complex(PermutationGroup::symmetric(4)), Domain::Q());
  CHECK(s4.ok);
  CHECK(s4.basis.faces == std::vector<std::size_t>{0});

  auto c4 = complex_of("(1,2,3,4)", 4);
  CHECK(greedy_cell_basis(c4, Domain::Q()).ok);
  auto f2 = greedy_cell_basis(c4, Domain::Fp(2));
  CHECK_FALSE(f2.ok);
  CHECK_FALSE(f2.diagnostics.empty());
}

TEST_CASE("cell basis verification") {
  auto k = complex_of("(1,2,3,4)(1,3)", 4);
  auto greedy = verify_cell_basis(k, faces(k, {"∅", "1 3", "1^2 2 3"}), Domain::Q());
  CHECK(greedy.ok);
  CHECK(abs(greedy.determinant) == 1);

  auto shell = verify_cell_basis(k, faces(k, {"∅", "1 2", "1^2 2 4"}), Domain::Z());
  CHECK(shell.ok);
  CHECK(shell.determinant == 1);

  auto facets = verify_cell_basis(k, k.facets(), Domain::Q());
  CHECK(facets.determinant_is_unit);
  CHECK_FALSE(facets.ok);
  CHECK_FALSE(facets.violations.empty());

  CHECK_THROWS_AS(verify_cell_basis(k, faces(k, {"∅"}), Domain::Q()), SizeMismatch);
}

TEST_CASE("representation on a basis") {
  auto k = complex_of("(1,2,3,4)(1,3)", 4);
  auto basis = faces(k, {"∅", "1 3", "1^2 2 3"});
  auto b = face(k, "1 3");
  auto r = represent_on_basis(k, face_to_orbit_monomial(k, b, Domain::Q()), basis, Domain::Q());
  REQUIRE(r.coefficients.size() == 1);
  CHECK(r.coefficients.at(b) == S("1", 4, Domain::Q()));

  auto shifted = represent_on_basis(k, elementary_symmetric(4, 1, Domain::Q()) * face_to_orbit_monomial(k, b, Domain::Q()),
                                    basis, Domain::Q());
  REQUIRE(shifted.coefficients.size() == 1);
  CHECK(shifted.coefficients.at(b) == S("s1", 4, Domain::Q()));

  auto shelling = faces(k, {"∅", "1 2", "1^2 2 4"});
  auto target = face_to_s_orbit_monomial(k, face(k, "1^2 2 3^2"));
  CHECK(target.to_string().find("y{1,3}*y{1,2,3}") != std::string::npos);
  auto rs = represent_s_on_basis(k, target, shelling, Domain::Z());
  REQUIRE(rs.coefficients.size() == 2);
  CHECK(rs.coefficients.at(0) == S("s2*s3", 4));
  CHECK(rs.coefficients.at(face(k, "1 2")) == S("-s3", 4));
  CHECK(rs.reconstruct_s(k) == target);
}

TEST_CASE("minimal generator counts") {
  auto d4 = parse_group("(1,2,3,4)(1,3)", 4);
  auto c = minimal_generator_count(d4, 2);
  CHECK(c.count == 3);
  CHECK(c.expected == 3);

  auto c4 = parse_group("(1,2,3,4)", 4);
  auto m = minimal_generator_count(c4, 2);
  CHECK(m.expected == 6);
  CHECK(m.count > 6);
  CHECK(minimal_generator_count(c4, 3).count == 6);

  for (unsigned p : {2u, 3u, 7u}) CHECK(minimal_generator_count(PermutationGroup::symmetric(4), p).count == 1);
  CHECK_THROWS_AS(minimal_generator_count(d4, 4), NotPrime);
}

TEST_CASE("Cohen-Macaulay reports") {
  auto d4 = cm_report(parse_group("(1,2,3,4)(1,3)", 4), {std::nullopt, true});
  CHECK(d4.grr_index == 1);
  CHECK(d4.prediction);
  CHECK(d4.primes.empty());
  CHECK(d4.topological == std::optional<bool>(true));
  CHECK(d4.agree);

  auto c4 = cm_report(parse_group("(1,2,3,4)", 4));
  CHECK(c4.grr_index == 2);
  CHECK_FALSE(c4.prediction);
  CHECK(c4.primes == std::vector<std::uint32_t>{2});
  CHECK_FALSE(c4.algebraic.at(2).cm);
  CHECK(c4.agree);

  auto forced = cm_report(parse_group("(1,2,3,4)(1,3)", 4), {std::vector<std::uint32_t>{2, 3}, false});
  CHECK(forced.algebraic.size() == 2);
  CHECK(forced.agree);

  CHECK(prime_divisors(12) == std::vector<std::uint32_t>{2, 3});
  CHECK(prime_divisors(1).empty());
}

TEST_CASE("subgroup classes and surveys") {
  std::vector<std::size_t> counts{1, 2, 4, 11};
  for (int n = 1; n <= 4; ++n) CHECK(subgroup_class_representatives(n).size() == counts[n - 1]);
  auto s3 = survey(3, {}, 1);
  CHECK(s3.reports.size() == 4);
  CHECK(s3.all_agree);
  auto s4 = survey(4, {std::nullopt, true}, 2);
  CHECK(s4.reports.size() == 11);
  CHECK(s4.all_agree);
}

TEST_CASE("greedy determinant comparison") {
  auto d = compare_greedy_determinants(complex_of("(1,2,3,4)(1,3)", 4), Domain::Q());
  CHECK(d.both_found);
  CHECK(d.agree);
}
