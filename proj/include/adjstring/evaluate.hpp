#pragma once

#include <map>
#include <vector>

#include "adjstring/presented.hpp"
#include "adjstring/window.hpp"

namespace adjstring {

/// Basis element of the free cover of a presented module in one degree:
/// the monomial `mono` times the module generator `gen`.
struct FreeBasisElt {
  std::size_t gen;
  Monomial mono;
};

/// A presented module evaluated on a window: the window data plus, per
/// degree, the free-cover basis and the projection/section of the cokernel.
/// The recorded bases are what lets maps be written down elementwise later.
struct EvaluatedModule {
  PresentedModule presentation;
  WindowModule wm;
  std::map<int, std::vector<FreeBasisElt>> free_basis;
  std::map<int, QuotientSpace> quot;
  std::map<int, std::vector<std::vector<Rat>>> relation_vectors;

  std::size_t dim(int n) const { return wm.dim(n); }

  /// Class of the free-cover element (gen, mono) in quotient coordinates.
  std::vector<Rat> class_of(std::size_t gen, const Monomial& mono) const {
    int n = presentation.gen_degrees[gen] + monomial_degree(presentation.ring, mono);
    const auto& basis = free_basis.at(n);
    std::vector<Rat> v(basis.size(), Rat(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].gen == gen && basis[k].mono == mono) {
        v[k] = 1;
        break;
      }
    return quot.at(n).proj.apply(v);
  }

  /// Quotient coordinates of the i-th module generator.
  std::vector<Rat> generator_vector(std::size_t i) const {
    return class_of(i, Monomial(presentation.ring.num_gens(), 0));
  }
};

namespace detail {

/// Coordinates of a homogeneous polynomial times a generator inside the
/// free-cover basis of its degree (entries land in the generator's block).
inline std::vector<Rat> free_coords(const GradedRing& ring,
                                    const std::vector<FreeBasisElt>& basis, std::size_t gen,
                                    const Poly& p) {
  std::vector<Rat> v(basis.size(), Rat(0));
  for (const auto& [mono, c] : p.terms()) {
    bool found = false;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].gen == gen && basis[k].mono == mono) {
        v[k] += c;
        found = true;
        break;
      }
    if (!found) throw structural_error("free_coords: term outside basis");
  }
  return v;
}

}  // namespace detail

/// Exact degreewise cokernel of the relation map of a presented module, with
/// induced generator and group action matrices and all bases recorded.
inline EvaluatedModule evaluate(const PresentedModule& M, DegreeWindow win) {
  M.validate();
  const GradedRing& R = M.ring;
  EvaluatedModule ev;
  ev.presentation = M;
  ev.wm.ring = R;
  ev.wm.win = win;
  if (M.twist) ev.wm.group = M.twist->group;

  // free bases and relation spans per degree
  std::map<int, std::vector<std::vector<Rat>>> rel_vectors;
  for (int n = win.lo; n <= win.hi; ++n) {
    std::vector<FreeBasisElt> basis;
    for (std::size_t i = 0; i < M.num_gens(); ++i)
      for (const auto& mono : monomial_basis(R, n - M.gen_degrees[i]))
        basis.push_back({i, mono});
    ev.free_basis[n] = std::move(basis);
  }
  for (std::size_t j = 0; j < M.relations.size(); ++j) {
    int ej = *M.relation_degree(j);
    for (int n = win.lo; n <= win.hi; ++n) {
      for (const auto& nu : monomial_basis(R, n - ej)) {
        Poly nup = Poly::from_monomial(nu, Rat(1));
        std::vector<Rat> v(ev.free_basis[n].size(), Rat(0));
        for (std::size_t i = 0; i < M.num_gens(); ++i) {
          Poly prod = nup * M.relations[j][i];
          auto w = detail::free_coords(R, ev.free_basis[n], i, prod);
          for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
        }
        rel_vectors[n].push_back(std::move(v));
      }
    }
  }
  for (int n = win.lo; n <= win.hi; ++n) {
    const auto& rels = rel_vectors[n];
    QMat span(ev.free_basis[n].size(), rels.size());
    for (std::size_t k = 0; k < rels.size(); ++k) span.set_col(k, rels[k]);
    ev.quot[n] = quotient_by_span(ev.free_basis[n].size(), span);
    ev.wm.dims[n] = ev.quot[n].dim();
  }

  // generator action: (i, mono) |-> (i, g * mono)
  ev.wm.gen_maps.resize(R.num_gens());
  for (std::size_t g = 0; g < R.num_gens(); ++g) {
    int dg = R.gen_degrees[g];
    for (int n = win.lo; n <= win.hi; ++n) {
      int m = n + dg;
      if (!win.contains(m)) continue;
      const auto& src = ev.free_basis[n];
      const auto& dst = ev.free_basis[m];
      QMat big(dst.size(), src.size());
      for (std::size_t k = 0; k < src.size(); ++k) {
        Monomial moved = src[k].mono;
        moved[g] += 1;
        for (std::size_t l = 0; l < dst.size(); ++l)
          if (dst[l].gen == src[k].gen && dst[l].mono == moved) {
            big(l, k) = 1;
            break;
          }
      }
      ev.wm.gen_maps[g][n] = ev.quot.at(m).proj * big * ev.quot.at(n).sect;
    }
  }

  // semilinear group action: (i, mono) |-> (w . mono) * sum_k q_{ki} g_k,
  // checked degreewise to preserve the relation submodule
  if (M.twist) {
    const auto& tw = *M.twist;
    ev.wm.group_maps.resize(tw.group.order);
    for (std::size_t w = 0; w < tw.group.order; ++w) {
      for (int n = win.lo; n <= win.hi; ++n) {
        const auto& basis = ev.free_basis[n];
        QMat big(basis.size(), basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
          Poly moved = tw.ring_action.act(w, Poly::from_monomial(basis[k].mono, Rat(1)));
          for (std::size_t i = 0; i < M.num_gens(); ++i) {
            Poly entry = tw.gen_action[w][i][basis[k].gen];
            if (entry.is_zero()) continue;
            auto v = detail::free_coords(R, basis, i, moved * entry);
            for (std::size_t l = 0; l < basis.size(); ++l) big(l, k) += v[l];
          }
        }
        for (const auto& rv : rel_vectors[n]) {
          auto img = ev.quot.at(n).proj.apply(big.apply(rv));
          for (const auto& x : img)
            if (x != 0)
              throw structural_error(
                  "evaluate: group action does not preserve the relation submodule at degree " +
                  std::to_string(n));
        }
        ev.wm.group_maps[w][n] = ev.quot.at(n).proj * big * ev.quot.at(n).sect;
      }
    }
  }
  ev.relation_vectors = std::move(rel_vectors);
  return ev;
}

inline std::map<int, std::size_t> hilbert_function(const PresentedModule& M, DegreeWindow win) {
  auto ev = evaluate(M, win);
  std::map<int, std::size_t> hf;
  for (int n = win.lo; n <= win.hi; ++n) hf[n] = ev.dim(n);
  return hf;
}

enum class TorsionVerdict { torsion_certified_on_window, not_torsion, inconclusive };

inline const char* to_string(TorsionVerdict v) {
  switch (v) {
    case TorsionVerdict::torsion_certified_on_window:
      return "torsion_certified_on_window";
    case TorsionVerdict::not_torsion:
      return "not_torsion";
    default:
      return "inconclusive";
  }
}

/// Window-sound torsion test. Certification needs the Hilbert function to
/// vanish on a trailing segment longer than the largest |generator degree|
/// and every module generator to be annihilated, inside the window, by a
/// power of every ring generator. A nonzero generator-power chain running
/// into the window edge exhibits a free direction instead.
inline TorsionVerdict is_torsion_on_window(const PresentedModule& M, DegreeWindow win) {
  auto ev = evaluate(M, win);
  const GradedRing& R = M.ring;
  const int L = -R.min_gen_degree();

  auto chain_hits_edge = [&](std::size_t i, std::size_t g) {
    // true when g^k . gen_i stays nonzero until no further step fits
    int n = M.gen_degrees[i];
    if (!win.contains(n)) return false;
    std::vector<Rat> v = ev.generator_vector(i);
    while (true) {
      bool nonzero = false;
      for (const auto& x : v)
        if (x != 0) nonzero = true;
      if (!nonzero) return false;
      int m = n + R.gen_degrees[g];
      if (!win.contains(m)) return true;  // ran into the edge while nonzero
      v = ev.wm.gen_map(g, n).apply(v);
      n = m;
    }
  };

  bool trailing_zero = win.length() >= L + 1;
  for (int n = win.lo; n <= win.lo + L && n <= win.hi; ++n)
    if (ev.dim(n) != 0) trailing_zero = false;

  bool all_annihilated = true;
  for (std::size_t i = 0; i < M.num_gens() && all_annihilated; ++i) {
    if (!win.contains(M.gen_degrees[i])) {
      all_annihilated = false;
      break;
    }
    for (std::size_t g = 0; g < R.num_gens(); ++g)
      if (chain_hits_edge(i, g)) all_annihilated = false;
  }

  if (R.num_gens() == 0) {
    // over Q every finitely presented module is its own finite-dimensional
    // window; torsion means zero is not required, any module qualifies
    return TorsionVerdict::torsion_certified_on_window;
  }
  if (trailing_zero && all_annihilated) return TorsionVerdict::torsion_certified_on_window;
  for (std::size_t i = 0; i < M.num_gens(); ++i)
    for (std::size_t g = 0; g < R.num_gens(); ++g)
      if (win.contains(M.gen_degrees[i]) && chain_hits_edge(i, g))
        return TorsionVerdict::not_torsion;
  return TorsionVerdict::inconclusive;
}

/// Builds the degreewise map out of a presented module determined by images
/// of its generators in a window module; `images[i]` lives in X at the i-th
/// generator degree. Throws when the images do not kill the relations.
inline WindowMap map_from_presentation(const EvaluatedModule& M, const WindowModule& X,
                                       const std::vector<std::vector<Rat>>& images,
                                       DegreeWindow on) {
  const GradedRing& R = M.presentation.ring;
  WindowMap f;
  f.degree = 0;
  f.domain = on;
  for (int n = on.lo; n <= on.hi; ++n) {
    const auto& basis = M.free_basis.at(n);
    QMat big(X.dim(n), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      int d = M.presentation.gen_degrees[basis[k].gen];
      QMat act = X.act_poly(Poly::from_monomial(basis[k].mono, Rat(1)), d);
      auto col = act.apply(images[basis[k].gen]);
      big.set_col(k, col);
    }
    auto rels = M.relation_vectors.find(n);
    if (rels != M.relation_vectors.end())
      for (const auto& rv : rels->second)
        for (const auto& x : big.apply(rv))
          if (x != 0)
            throw structural_error("map_from_presentation: images do not kill the relations");
    f.blocks[n] = big * M.quot.at(n).sect;
  }
  return f;
}

}  // namespace adjstring
