#pragma once

#include <set>
#include <vector>

#include "oracle.hpp"
#include "permcm/bases.hpp"

namespace testing_support {

inline std::set<oracle::Perm> elements_of(const permcm::PermutationGroup& g) {
  std::vector<oracle::Perm> gens;
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return oracle::closure(g.degree(), gens);
}

// Every subgroup of S_n, obtained by conjugating the class representatives.
inline std::vector<permcm::PermutationGroup> all_subgroups(int n) {
  auto sym = permcm::PermutationGroup::symmetric(n);
  std::set<std::vector<permcm::Permutation>> seen;
  std::vector<permcm::PermutationGroup> out;
  for (const auto& h : permcm::subgroup_class_representatives(n))
    for (const auto& x : sym.elements()) {
      std::vector<permcm::Permutation> gens;
      for (const auto& g : h.generators()) gens.push_back(x * g * x.inverse());
      permcm::PermutationGroup c(n, gens);
      if (seen.insert(c.elements()).second) out.push_back(c);
    }
  return out;
}

}  // namespace testing_support
