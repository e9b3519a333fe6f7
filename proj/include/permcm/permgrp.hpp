#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "permcm/errors.hpp"

namespace permcm {

inline constexpr int kMaxDegree = 16;

// A bijection of {1..n}.  Points are 1-based in the interface and stored
// 0-based in a fixed array so permutations are cheap value types.
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  explicit Permutation(int degree);
  // images[i-1] = image of point i (1-based values).
  static Permutation from_images(const std::vector<int>& images);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return degree_; }
  int operator()(int point) const { return img_[point - 1] + 1; }
  int image0(int i) const { return img_[i]; }
  std::vector<int> images() const;

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;

  // (p*q)(i) = p(q(i)): apply q first.
  Permutation operator*(const Permutation& q) const;

  // Image of a subset of [n] stored as a bitmask (bit i-1 for point i).
  std::uint32_t apply_mask(std::uint32_t mask) const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.img_ == b.img_;
  }
  // Lexicographic comparison of image sequences.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return std::lexicographical_compare(a.img_.begin(), a.img_.begin() + a.degree_,
                                        b.img_.begin(), b.img_.begin() + b.degree_);
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  int degree_ = 1;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

// Pairs (cycle length >= 2, multiplicity), sorted by length.
using CycleStructure = std::vector<std::pair<int, int>>;

CycleStructure cycle_structure(const Permutation& p);

inline constexpr std::size_t kDefaultGroupCap = 1000000;

class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators,
                   std::size_t cap = kDefaultGroupCap);

  static PermutationGroup trivial(int degree);
  static PermutationGroup symmetric(int degree);
  static PermutationGroup alternating(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  // Sorted lexicographically.
  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;
  bool is_transitive() const;
  bool is_normal_in(const PermutationGroup& ambient) const;

  std::string to_string() const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b);

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
};

std::vector<Permutation> elements(const PermutationGroup& group);

// Breadth-first orbit of item under the generators of group.
template <class T, class Action, class Less = std::less<T>>
std::vector<T> orbit_of(const PermutationGroup& group, const T& item, Action act,
                        Less less = Less{}) {
  std::set<T, Less> seen(less);
  std::deque<T> queue;
  seen.insert(item);
  queue.push_back(item);
  while (!queue.empty()) {
    T cur = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      T img = act(g, cur);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return std::vector<T>(seen.begin(), seen.end());
}

struct RRSubgroup {
  PermutationGroup group;
  std::size_t index;
};

bool is_rr_element(const Permutation& p);
RRSubgroup rr_subgroup(const PermutationGroup& group);

struct Transversal {
  std::vector<Permutation> reps;  // sorted lexicographically
  // coset_of[k] = index into reps of the coset of ambient.elements()[k]
  std::vector<std::size_t> coset_of;
};

// Right cosets {h*pi : h in sub}; each representative is lex-minimal.
Transversal lex_transversal(const PermutationGroup& ambient, const PermutationGroup& sub);

// Blocks of indices into lex_transversal(ambient, left).reps, one per
// double coset left*b*right.
std::vector<std::vector<std::size_t>> double_cosets(const PermutationGroup& ambient,
                                                    const PermutationGroup& left,
                                                    const PermutationGroup& right);

enum class HuffmanClass {
  Symmetric,
  Alternating,
  Wreath,
  AlternatingWreath,
  D10At5,
  A5At6,
  PSL27At7,
  AGL32At8,
  NotApplicable,
};

std::string to_string(HuffmanClass c);
HuffmanClass huffman_classify(const PermutationGroup& group);

// Cycle-notation parser.  Juxtaposed disjoint cycles form one generator;
// a cycle meeting the current generator's support, or an explicit ',' or
// ';' between cycles, starts a new generator.
PermutationGroup parse_group(const std::string& spec, int degree,
                             std::size_t cap = kDefaultGroupCap);
std::string serialize_group(const PermutationGroup& group);

}  // namespace permcm

template <>
struct std::hash<permcm::Permutation> {
  std::size_t operator()(const permcm::Permutation& p) const { return p.hash(); }
};
