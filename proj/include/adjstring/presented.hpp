#pragma once

#include <optional>
#include <vector>

#include "adjstring/graded.hpp"

namespace adjstring {

/// Semilinear group structure on a presented module: the group acts on the
/// ring through `ring_action` and on the module generators through matrices
/// of ring coefficients; w . g_j = sum_i gen_action[w][i][j] g_i.
struct ModuleTwist {
  FiniteGroup group;
  RingAction ring_action;
  std::vector<std::vector<std::vector<Poly>>> gen_action;  // [element][i][j]

  void validate(const GradedRing& ring, const std::vector<int>& gen_degrees) const {
    ring_action.validate();
    if (!(ring_action.ring == ring)) throw structural_error("ModuleTwist: ring mismatch");
    if (gen_action.size() != group.order)
      throw structural_error("ModuleTwist: one matrix per group element required");
    const std::size_t n = gen_degrees.size();
    for (std::size_t w = 0; w < group.order; ++w) {
      if (gen_action[w].size() != n)
        throw structural_error("ModuleTwist: generator action shape mismatch");
      for (std::size_t i = 0; i < n; ++i) {
        if (gen_action[w][i].size() != n)
          throw structural_error("ModuleTwist: generator action shape mismatch");
        for (std::size_t j = 0; j < n; ++j) {
          const Poly& p = gen_action[w][i][j];
          if (p.is_zero()) continue;
          auto d = p.homogeneous_degree(ring);
          if (!d || *d != gen_degrees[j] - gen_degrees[i])
            throw structural_error("ModuleTwist: entry degree must be deg(g_j) - deg(g_i)");
        }
      }
    }
    // identity element acts as the identity on generators
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Poly& p = gen_action[group.identity][i][j];
        bool want_one = (i == j);
        if (want_one && !(p == Poly::constant(ring.num_gens(), 1)))
          throw structural_error("ModuleTwist: identity generator action must be identity");
        if (!want_one && !p.is_zero())
          throw structural_error("ModuleTwist: identity generator action must be identity");
      }
  }
};

/// Finitely presented graded module: free generators in fixed degrees modulo
/// homogeneous relation rows (one ring coefficient per generator). The
/// degreewise preservation of relations by a twist is verified on windows,
/// at evaluation time.
struct PresentedModule {
  GradedRing ring;
  std::vector<int> gen_degrees;
  std::vector<std::vector<Poly>> relations;
  std::optional<ModuleTwist> twist;

  std::size_t num_gens() const { return gen_degrees.size(); }

  /// Common degree of a relation row: deg(p_i) + deg(g_i), equal across all
  /// nonzero entries.
  std::optional<int> relation_degree(std::size_t j) const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < num_gens(); ++i) {
      const Poly& p = relations[j][i];
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree(ring);
      if (!d) return std::nullopt;
      int total = *d + gen_degrees[i];
      if (!deg)
        deg = total;
      else if (*deg != total)
        return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
  }

  /// Upper bound on the support: the module vanishes above the top
  /// generator degree.
  int top_degree() const {
    int t = 0;
    bool any = false;
    for (int d : gen_degrees) {
      t = any ? std::max(t, d) : d;
      any = true;
    }
    return any ? t : 0;
  }

  void validate() const {
    ring.validate();
    for (const auto& row : relations) {
      if (row.size() != num_gens())
        throw structural_error("PresentedModule: relation row length mismatch");
    }
    for (std::size_t j = 0; j < relations.size(); ++j)
      if (!relation_degree(j))
        throw structural_error("PresentedModule: relation row not homogeneous");
    if (twist) twist->validate(ring, gen_degrees);
  }
};

inline PresentedModule free_module(const GradedRing& ring, std::vector<int> gen_degrees) {
  PresentedModule m;
  m.ring = ring;
  m.gen_degrees = std::move(gen_degrees);
  return m;
}

/// Free rank-1 module modulo one relation polynomial.
inline PresentedModule principal_quotient(const GradedRing& ring, const Poly& p) {
  PresentedModule m = free_module(ring, {0});
  m.relations.push_back({p});
  return m;
}

/// R/(g^power) for the i-th ring generator.
inline PresentedModule cyclic_quotient(const GradedRing& ring, std::size_t gen, unsigned power) {
  return principal_quotient(ring, Poly::generator(ring.num_gens(), gen, power));
}

inline PresentedModule zero_module(const GradedRing& ring) { return free_module(ring, {}); }

/// Suspension: raises all degrees by k, relations unchanged.
inline PresentedModule shift_module(const PresentedModule& m, int k) {
  PresentedModule r = m;
  for (auto& d : r.gen_degrees) d += k;
  return r;
}

/// Twists the group structure by a character; requires a twist carrying the
/// same group (or installs one over a trivially acting group when absent).
inline PresentedModule twist_by_character(const PresentedModule& m, const Character& chi) {
  PresentedModule r = m;
  if (!r.twist) {
    ModuleTwist t;
    t.group = chi.group;
    t.ring_action = trivial_ring_action(chi.group, m.ring);
    t.gen_action.resize(chi.group.order);
    for (std::size_t w = 0; w < chi.group.order; ++w) {
      t.gen_action[w].assign(m.num_gens(), std::vector<Poly>(m.num_gens(),
                                                            Poly::zero(m.ring.num_gens())));
      for (std::size_t i = 0; i < m.num_gens(); ++i)
        t.gen_action[w][i][i] = Poly::constant(m.ring.num_gens(), 1);
    }
    r.twist = std::move(t);
  }
  if (!(r.twist->group == chi.group))
    throw structural_error("twist_by_character: group mismatch");
  for (std::size_t w = 0; w < chi.group.order; ++w)
    if (chi(w) == -1)
      for (auto& row : r.twist->gen_action[w])
        for (auto& p : row) p = p.scaled(Rat(-1));
  return r;
}

/// Installs a semilinear structure with given ring action and trivial
/// generator action (each element fixes every generator).
inline PresentedModule with_trivial_gen_action(const PresentedModule& m, const RingAction& act) {
  PresentedModule r = m;
  ModuleTwist t;
  t.group = act.group;
  t.ring_action = act;
  t.gen_action.resize(act.group.order);
  for (std::size_t w = 0; w < act.group.order; ++w) {
    t.gen_action[w].assign(m.num_gens(),
                           std::vector<Poly>(m.num_gens(), Poly::zero(m.ring.num_gens())));
    for (std::size_t i = 0; i < m.num_gens(); ++i)
      t.gen_action[w][i][i] = Poly::constant(m.ring.num_gens(), 1);
  }
  r.twist = std::move(t);
  return r;
}

}  // namespace adjstring
