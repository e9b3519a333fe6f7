#include "permcm/permgrp.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace permcm {

Permutation::Permutation(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw IndexOutOfRange("degree must be in 1.." + std::to_string(kMaxDegree));
  for (int i = 0; i < kMaxDegree; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > p.degree_ || seen[v - 1])
      throw PointOutOfRange("images do not form a bijection of 1.." + std::to_string(p.degree_));
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c(degree);
    const auto& cyc = *it;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > degree || b < 1 || b > degree)
        throw PointOutOfRange("point out of range 1.." + std::to_string(degree));
      c.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
    result = c * result;
  }
  return result;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = img_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int Permutation::order() const {
  int ord = 1;
  for (const auto& [len, mult] : cycle_structure(*this)) ord = std::lcm(ord, len);
  return ord;
}

Permutation Permutation::operator*(const Permutation& q) const {
  if (degree_ != q.degree_) throw DegreeMismatch("composing permutations of different degree");
  Permutation r(degree_);
  for (int i = 0; i < degree_; ++i) r.img_[i] = img_[q.img_[i]];
  return r;
}

std::uint32_t Permutation::apply_mask(std::uint32_t mask) const {
  std::uint32_t out = 0;
  while (mask) {
    int i = __builtin_ctz(mask);
    mask &= mask - 1;
    out |= 1u << img_[i];
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<bool> done(degree_, false);
  for (int i = 0; i < degree_; ++i) {
    if (done[i] || img_[i] == i) continue;
    s += '(';
    int j = i;
    bool first = true;
    while (!done[j]) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(j + 1);
      done[j] = true;
      j = img_[j];
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < degree_; ++i) {
    h ^= img_[i];
    h *= 1099511628211ull;
  }
  return h ^ static_cast<std::size_t>(degree_);
}

CycleStructure cycle_structure(const Permutation& p) {
  int n = p.degree();
  std::vector<bool> done(n, false);
  std::vector<int> count(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    int len = 0;
    for (int j = i; !done[j]; j = p.image0(j)) {
      done[j] = true;
      ++len;
    }
    if (len >= 2) ++count[len];
  }
  CycleStructure cs;
  for (int len = 2; len <= n; ++len)
    if (count[len]) cs.emplace_back(len, count[len]);
  return cs;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   std::size_t cap)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity()) gens_.push_back(g);
  }
  if (gens_.empty()) gens_.push_back(Permutation(degree));

  std::unordered_set<Permutation> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens_) {
      Permutation next = queue[head] * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
        queue.push_back(next);
      }
    }
  }
  elems_ = std::move(queue);
  std::sort(elems_.begin(), elems_.end());
}

PermutationGroup PermutationGroup::trivial(int degree) { return PermutationGroup(degree, {}); }

PermutationGroup PermutationGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  for (int i = 1; i < degree; ++i) gens.push_back(Permutation::from_cycles(degree, {{i, i + 1}}));
  return PermutationGroup(degree, gens);
}

PermutationGroup PermutationGroup::alternating(int degree) {
  std::vector<Permutation> gens;
  for (int i = 3; i <= degree; ++i) gens.push_back(Permutation::from_cycles(degree, {{1, 2, i}}));
  return PermutationGroup(degree, gens);
}

bool PermutationGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elems_.begin(), elems_.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermutationGroup::is_transitive() const {
  auto orb = orbit_of(*this, 1, [](const Permutation& g, int x) { return g(x); });
  return static_cast<int>(orb.size()) == degree_;
}

bool PermutationGroup::is_normal_in(const PermutationGroup& ambient) const {
  for (const auto& g : ambient.generators())
    for (const auto& h : gens_)
      if (!contains(g * h * g.inverse())) return false;
  return true;
}

std::string PermutationGroup::to_string() const { return serialize_group(*this); }

bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
  return a.is_subgroup_of(b) && b.is_subgroup_of(a);
}

std::vector<Permutation> elements(const PermutationGroup& group) { return group.elements(); }

bool is_rr_element(const Permutation& p) {
  auto cs = cycle_structure(p);
  if (cs.size() != 1) return false;
  auto [len, mult] = cs.front();
  return (len == 2 && (mult == 1 || mult == 2)) || (len == 3 && mult == 1);
}

RRSubgroup rr_subgroup(const PermutationGroup& group) {
  PermutationGroup sub = PermutationGroup::trivial(group.degree());
  std::vector<Permutation> gens;
  for (const auto& g : group.elements()) {
    if (!is_rr_element(g) || sub.contains(g)) continue;
    gens.push_back(g);
    sub = PermutationGroup(group.degree(), gens);
  }
  std::size_t index = group.order() / sub.order();
  return {std::move(sub), index};
}

namespace {

std::size_t element_index(const PermutationGroup& g, const Permutation& p) {
  const auto& e = g.elements();
  auto it = std::lower_bound(e.begin(), e.end(), p);
  return static_cast<std::size_t>(it - e.begin());
}

}  // namespace

Transversal lex_transversal(const PermutationGroup& ambient, const PermutationGroup& sub) {
  if (!sub.is_subgroup_of(ambient)) throw NotASubgroup("subgroup is not contained in ambient group");
  const auto& elems = ambient.elements();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  Transversal t;
  t.coset_of.assign(elems.size(), kUnset);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    if (t.coset_of[k] != kUnset) continue;
    std::size_t id = t.reps.size();
    t.reps.push_back(elems[k]);
    for (const auto& h : sub.elements()) t.coset_of[element_index(ambient, h * elems[k])] = id;
  }
  return t;
}

std::vector<std::vector<std::size_t>> double_cosets(const PermutationGroup& ambient,
                                                    const PermutationGroup& left,
                                                    const PermutationGroup& right) {
  if (!right.is_subgroup_of(ambient)) throw NotASubgroup("right group is not contained in ambient");
  Transversal t = lex_transversal(ambient, left);
  std::vector<std::size_t> parent(t.reps.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (const auto& r : right.generators()) {
      std::size_t j = t.coset_of[element_index(ambient, t.reps[i] * r)];
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(t.reps.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    std::size_t root = find(i);
    if (block_of[root] == static_cast<std::size_t>(-1)) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }
  return blocks;
}

std::string to_string(HuffmanClass c) {
  switch (c) {
    case HuffmanClass::Symmetric: return "S_n";
    case HuffmanClass::Alternating: return "A_n";
    case HuffmanClass::Wreath: return "Wreath(S_2 wr S_m)";
    case HuffmanClass::AlternatingWreath: return "A_n cap Wreath";
    case HuffmanClass::D10At5: return "D10@5";
    case HuffmanClass::A5At6: return "A5@6";
    case HuffmanClass::PSL27At7: return "PSL(2,7)@7";
    case HuffmanClass::AGL32At8: return "AGL(3,2)@8";
    case HuffmanClass::NotApplicable: return "NotApplicable";
  }
  return "?";
}

HuffmanClass huffman_classify(const PermutationGroup& group) {
  int n = group.degree();
  if (!group.is_transitive()) return HuffmanClass::NotApplicable;
  auto rr = rr_subgroup(group);
  if (rr.index != 1) return HuffmanClass::NotApplicable;
  if (n == 1) return HuffmanClass::Symmetric;

  bool transposition = false, three_cycle = false;
  for (const auto& g : group.elements()) {
    auto cs = cycle_structure(g);
    if (cs == CycleStructure{{2, 1}}) transposition = true;
    if (cs == CycleStructure{{3, 1}}) three_cycle = true;
  }
  auto factorial = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  std::size_t order = group.order();
  if (transposition && three_cycle) return HuffmanClass::Symmetric;
  if (three_cycle) return HuffmanClass::Alternating;
  if (transposition) {
    if (n % 2 == 0 && order == (std::size_t{1} << (n / 2)) * factorial(n / 2))
      return HuffmanClass::Wreath;
    throw Unclassifiable("transposition case does not match S_2 wr S_m");
  }
  if (n % 2 == 0 && n >= 4 && order == (std::size_t{1} << (n / 2 - 1)) * factorial(n / 2))
    return HuffmanClass::AlternatingWreath;
  if (n == 5 && order == 10) return HuffmanClass::D10At5;
  if (n == 6 && order == 60) return HuffmanClass::A5At6;
  if (n == 7 && order == 168) return HuffmanClass::PSL27At7;
  if (n == 8 && order == 1344) return HuffmanClass::AGL32At8;
  throw Unclassifiable("no case of the classification matches group of order " +
                       std::to_string(order) + " and degree " + std::to_string(n));
}

PermutationGroup parse_group(const std::string& spec, int degree, std::size_t cap) {
  if (degree < 1 || degree > kMaxDegree)
    throw IndexOutOfRange("degree must be in 1.." + std::to_string(kMaxDegree));
  std::vector<Permutation> gens;
  std::vector<std::vector<int>> current;
  std::uint32_t support = 0;
  auto flush = [&] {
    if (!current.empty()) gens.push_back(Permutation::from_cycles(degree, current));
    current.clear();
    support = 0;
  };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };
  bool have_cycle = false;  // a cycle (possibly "()") appeared in current generator
  while (true) {
    skip_ws();
    if (i >= spec.size()) break;
    char c = spec[i];
    if (c == ',' || c == ';') {
      if (!have_cycle) throw ParseError(i, "separator without preceding cycle");
      if (current.empty()) gens.push_back(Permutation(degree));
      flush();
      have_cycle = false;
      ++i;
      continue;
    }
    if (c != '(') throw ParseError(i, std::string("expected '(' but found '") + c + "'");
    ++i;
    std::vector<int> cycle;
    std::uint32_t cyc_mask = 0;
    while (true) {
      skip_ws();
      if (i >= spec.size()) throw ParseError(i, "unterminated cycle");
      if (spec[i] == ')') {
        ++i;
        break;
      }
      if (!cycle.empty()) {
        if (spec[i] == ',') {
          ++i;
          skip_ws();
        } else if (!std::isdigit(static_cast<unsigned char>(spec[i]))) {
          throw ParseError(i, "expected ',' or ')' inside cycle");
        }
      }
      std::size_t start = i;
      if (i >= spec.size() || !std::isdigit(static_cast<unsigned char>(spec[i])))
        throw ParseError(i, "expected a point number");
      long value = 0;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
        value = value * 10 + (spec[i] - '0');
        if (value > 1000000) throw ParseError(start, "point number too large");
        ++i;
      }
      if (value < 1 || value > degree)
        throw PointOutOfRange("point " + std::to_string(value) + " at position " +
                              std::to_string(start) + " is outside 1.." + std::to_string(degree));
      std::uint32_t bit = 1u << (value - 1);
      if (cyc_mask & bit) throw ParseError(start, "point repeated within a cycle");
      cyc_mask |= bit;
      cycle.push_back(static_cast<int>(value));
    }
    have_cycle = true;
    if (cycle.size() <= 1) continue;
    if (support & cyc_mask) flush();
    current.push_back(cycle);
    support |= cyc_mask;
  }
  if (have_cycle && current.empty()) gens.push_back(Permutation(degree));
  flush();
  return PermutationGroup(degree, gens, cap);
}

std::string serialize_group(const PermutationGroup& group) {
  std::string s;
  for (const auto& g : group.generators()) {
    if (!s.empty()) s += "; ";
    s += g.to_cycle_string();
  }
  return s;
}

}  // namespace permcm
