#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "adjstring/rational.hpp"

namespace adjstring {

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite group given by its full multiplication table. Elements are indices
/// 0..order-1; table sizes in the catalog stay small (<= 24), so invariants
/// are checked by exhaustive loops.
struct FiniteGroup {
  std::string name;
  std::size_t order = 1;
  std::vector<std::size_t> mult;  // order x order, row-major: mult[x*order+y] = x*y
  std::size_t identity = 0;
  std::vector<std::string> element_names;

  std::size_t op(std::size_t x, std::size_t y) const { return mult[x * order + y]; }

  std::size_t inverse(std::size_t x) const {
    for (std::size_t y = 0; y < order; ++y)
      if (op(x, y) == identity && op(y, x) == identity) return y;
    throw structural_error("FiniteGroup: element without inverse");
  }

  bool is_trivial() const { return order == 1; }

  void validate() const {
    if (order == 0 || mult.size() != order * order)
      throw structural_error("FiniteGroup: bad multiplication table size");
    for (auto v : mult)
      if (v >= order) throw structural_error("FiniteGroup: table entry out of range");
    for (std::size_t x = 0; x < order; ++x) {
      if (op(identity, x) != x || op(x, identity) != x)
        throw structural_error("FiniteGroup: identity is not two-sided");
      inverse(x);
    }
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y)
        for (std::size_t z = 0; z < order; ++z)
          if (op(op(x, y), z) != op(x, op(y, z)))
            throw structural_error("FiniteGroup: multiplication not associative");
  }

  bool operator==(const FiniteGroup& o) const {
    return order == o.order && mult == o.mult && identity == o.identity;
  }
};

inline FiniteGroup trivial_group() {
  FiniteGroup g;
  g.name = "1";
  g.order = 1;
  g.mult = {0};
  g.identity = 0;
  g.element_names = {"e"};
  return g;
}

inline FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.mult.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g.mult[x * n + y] = (x + y) % n;
  g.identity = 0;
  for (std::size_t x = 0; x < n; ++x) g.element_names.push_back("g" + std::to_string(x));
  return g;
}

namespace detail {
inline std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}
}  // namespace detail

/// Symmetric group on n letters; elements enumerated lexicographically, the
/// identity permutation first. Composition is (p*q)(i) = p(q(i)).
inline FiniteGroup symmetric_group(std::size_t n) {
  auto perms = detail::permutations_of(n);
  FiniteGroup g;
  g.name = "S" + std::to_string(n);
  g.order = perms.size();
  g.mult.resize(g.order * g.order);
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), c);
      g.mult[a * g.order + b] = std::size_t(it - perms.begin());
    }
  g.identity = 0;
  for (const auto& p : perms) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) s += std::to_string(p[i]);
    s += ")";
    g.element_names.push_back(s);
  }
  return g;
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// Group homomorphism as an element-index table. Not required to be
/// injective; quotient maps are first-class citizens here.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<std::size_t> map;  // per source element

  std::size_t operator()(std::size_t x) const { return map[x]; }

  void validate() const {
    if (map.size() != source.order) throw structural_error("GroupHom: wrong table length");
    if (map[source.identity] != target.identity)
      throw structural_error("GroupHom: identity not preserved");
    for (std::size_t x = 0; x < source.order; ++x)
      for (std::size_t y = 0; y < source.order; ++y)
        if (map[source.op(x, y)] != target.op(map[x], map[y]))
          throw structural_error("GroupHom: not multiplicative");
  }

  bool is_injective() const {
    std::vector<bool> seen(target.order, false);
    for (auto v : map) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
};

inline GroupHom identity_hom(const FiniteGroup& g) {
  GroupHom h;
  h.source = g;
  h.target = g;
  h.map.resize(g.order);
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

inline GroupHom hom_to_trivial(const FiniteGroup& g) {
  GroupHom h;
  h.source = g;
  h.target = trivial_group();
  h.map.assign(g.order, 0);
  return h;
}

/// C2 -> S3 sending the generator to the transposition swapping letters 0,1.
inline GroupHom c2_into_s3() {
  GroupHom h;
  h.source = cyclic_group(2);
  h.target = symmetric_group(3);
  auto perms = detail::permutations_of(3);
  std::vector<std::size_t> swap01 = {1, 0, 2};
  auto it = std::lower_bound(perms.begin(), perms.end(), swap01);
  h.map = {0, std::size_t(it - perms.begin())};
  return h;
}

/// The sign quotient S3 -> C2.
inline GroupHom s3_sign_to_c2() {
  GroupHom h;
  h.source = symmetric_group(3);
  h.target = cyclic_group(2);
  auto perms = detail::permutations_of(3);
  h.map.resize(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    h.map[i] = permutation_sign(perms[i]) == 1 ? 0 : 1;
  return h;
}

/// Multiplicative character with values in {+1, -1}.
struct Character {
  FiniteGroup group;
  std::vector<int> values;  // per element, +1 or -1

  int operator()(std::size_t x) const { return values[x]; }

  void validate() const {
    if (values.size() != group.order) throw structural_error("Character: wrong length");
    for (auto v : values)
      if (v != 1 && v != -1) throw structural_error("Character: value not +-1");
    if (values[group.identity] != 1)
      throw structural_error("Character: identity value must be +1");
    for (std::size_t x = 0; x < group.order; ++x)
      for (std::size_t y = 0; y < group.order; ++y)
        if (values[group.op(x, y)] != values[x] * values[y])
          throw structural_error("Character: not multiplicative");
  }

  bool is_trivial() const {
    for (auto v : values)
      if (v != 1) return false;
    return true;
  }
};

inline Character trivial_character(const FiniteGroup& g) {
  Character c;
  c.group = g;
  c.values.assign(g.order, 1);
  return c;
}

/// Sign character of C2 (or of any group where the table below multiplies).
inline Character sign_character_c2() {
  Character c;
  c.group = cyclic_group(2);
  c.values = {1, -1};
  return c;
}

inline Character sign_character_s3() {
  Character c;
  c.group = symmetric_group(3);
  auto perms = detail::permutations_of(3);
  for (const auto& p : perms) c.values.push_back(permutation_sign(p));
  return c;
}

}  // namespace adjstring
