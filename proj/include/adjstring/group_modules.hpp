#pragma once

#include <vector>

#include "adjstring/groups.hpp"
#include "adjstring/matrix.hpp"

namespace adjstring {

/// Finite-dimensional module over the rational group algebra Q[G], stored as
/// one exact matrix per group element.
struct GroupAlgebraModule {
  FiniteGroup group;
  std::size_t dim = 0;
  std::vector<QMat> action;  // per element, dim x dim

  const QMat& act(std::size_t g) const { return action[g]; }

  void validate() const {
    if (action.size() != group.order)
      throw structural_error("GroupAlgebraModule: one matrix per element required");
    for (const auto& m : action)
      if (m.rows() != dim || m.cols() != dim)
        throw structural_error("GroupAlgebraModule: matrix shape mismatch");
    if (!action[group.identity].is_identity())
      throw structural_error("GroupAlgebraModule: identity must act as identity");
    for (std::size_t x = 0; x < group.order; ++x)
      for (std::size_t y = 0; y < group.order; ++y)
        if (!(action[x] * action[y] == action[group.op(x, y)]))
          throw structural_error("GroupAlgebraModule: action not multiplicative");
  }
};

inline GroupAlgebraModule trivial_module(const FiniteGroup& g, std::size_t dim = 1) {
  GroupAlgebraModule m;
  m.group = g;
  m.dim = dim;
  m.action.assign(g.order, QMat::identity(dim));
  return m;
}

/// The regular module Q[G] with basis the group elements, g acting by left
/// translation.
inline GroupAlgebraModule regular_module(const FiniteGroup& g) {
  GroupAlgebraModule m;
  m.group = g;
  m.dim = g.order;
  m.action.assign(g.order, QMat(g.order, g.order));
  for (std::size_t x = 0; x < g.order; ++x)
    for (std::size_t b = 0; b < g.order; ++b) m.action[x](g.op(x, b), b) = 1;
  return m;
}

inline GroupAlgebraModule character_module(const Character& chi) {
  GroupAlgebraModule m;
  m.group = chi.group;
  m.dim = 1;
  for (std::size_t x = 0; x < chi.group.order; ++x) {
    QMat a(1, 1);
    a(0, 0) = chi(x);
    m.action.push_back(a);
  }
  return m;
}

inline GroupAlgebraModule sign_module_c2() { return character_module(sign_character_c2()); }

/// Restriction along h: B -> A. Same underlying space, b acts as h(b).
inline GroupAlgebraModule restrict_group_module(const GroupHom& h, const GroupAlgebraModule& M) {
  if (!(M.group == h.target))
    throw structural_error("restrict_group_module: module is not over the hom target");
  GroupAlgebraModule r;
  r.group = h.source;
  r.dim = M.dim;
  for (std::size_t b = 0; b < h.source.order; ++b) r.action.push_back(M.act(h(b)));
  return r;
}

inline GroupAlgebraModule twist_by_character(const Character& chi, const GroupAlgebraModule& M) {
  if (!(M.group == chi.group))
    throw structural_error("twist_by_character: group mismatch");
  GroupAlgebraModule r = M;
  for (std::size_t x = 0; x < M.group.order; ++x)
    if (chi(x) == -1) r.action[x] = r.action[x].scaled(Rat(-1));
  return r;
}

/// Induction data: the quotient space QA (x) over QB of N, together with the
/// projection/section onto a chosen basis of the quotient. Pure tensors a(x)n
/// live at ambient index a*dim(N)+j.
struct InducedModule {
  GroupAlgebraModule module;
  QuotientSpace quot;  // ambient dimension |A| * dim N

  std::size_t ambient_index(std::size_t a, std::size_t j, std::size_t dimN) const {
    return a * dimN + j;
  }
};

/// QA tensor_{QB} N along h: B -> A, by the coequalizer of the relations
/// a h(b) (x) n  -  a (x) b n. Handles non-injective h.
inline InducedModule induce_group_module_full(const GroupHom& h, const GroupAlgebraModule& N) {
  if (!(N.group == h.source))
    throw structural_error("induce_group_module: module is not over the hom source");
  const FiniteGroup& A = h.target;
  const FiniteGroup& B = h.source;
  const std::size_t d = N.dim;
  const std::size_t amb = A.order * d;
  std::vector<std::vector<Rat>> rels;
  for (std::size_t a = 0; a < A.order; ++a)
    for (std::size_t b = 0; b < B.order; ++b)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> v(amb, Rat(0));
        v[A.op(a, h(b)) * d + j] += 1;
        for (std::size_t i = 0; i < d; ++i) v[a * d + i] -= N.act(b)(i, j);
        rels.push_back(std::move(v));
      }
  QMat span(amb, rels.size());
  for (std::size_t k = 0; k < rels.size(); ++k) span.set_col(k, rels[k]);
  InducedModule out;
  out.quot = quotient_by_span(amb, span);
  out.module.group = A;
  out.module.dim = out.quot.dim();
  for (std::size_t x = 0; x < A.order; ++x) {
    QMat big(amb, amb);  // x . (a (x) n) = (xa) (x) n
    for (std::size_t a = 0; a < A.order; ++a)
      for (std::size_t j = 0; j < d; ++j) big(A.op(x, a) * d + j, a * d + j) = 1;
    out.module.action.push_back(out.quot.proj * big * out.quot.sect);
  }
  return out;
}

inline GroupAlgebraModule induce_group_module(const GroupHom& h, const GroupAlgebraModule& N) {
  return induce_group_module_full(h, N).module;
}

/// Coinduction data: Hom_{QB}(QA, N) as the solution space of the
/// B-equivariance system; a function f is stored by its values f(a) stacked
/// over the elements of A.
struct CoinducedModule {
  GroupAlgebraModule module;
  QMat basis;        // ambient (|A|*dimN) x dim, columns are basis functions
  QMat coordinates;  // dim x ambient, left inverse of basis
};

inline CoinducedModule coinduce_group_module_full(const GroupHom& h, const GroupAlgebraModule& N) {
  if (!(N.group == h.source))
    throw structural_error("coinduce_group_module: module is not over the hom source");
  const FiniteGroup& A = h.target;
  const FiniteGroup& B = h.source;
  const std::size_t d = N.dim;
  const std::size_t amb = A.order * d;
  // f(h(b) a) = b . f(a) for all b, a
  LinearSystem sys(amb);
  for (std::size_t b = 0; b < B.order; ++b) {
    if (b == B.identity) continue;
    for (std::size_t a = 0; a < A.order; ++a)
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rat> row(amb, Rat(0));
        row[A.op(h(b), a) * d + i] += 1;
        for (std::size_t j = 0; j < d; ++j) row[a * d + j] -= N.act(b)(i, j);
        sys.add_row(row);
      }
  }
  CoinducedModule out;
  out.basis = sys.solution_basis();
  const std::size_t dim = out.basis.cols();
  // The basis columns are independent, so B^T X = I is consistent and
  // X^T is a left inverse of B.
  auto X = out.basis.transposed().solve_matrix(QMat::identity(dim));
  if (!X) throw structural_error("coinduce_group_module: dependent solution basis");
  out.coordinates = X->transposed();
  out.module.group = A;
  out.module.dim = dim;
  for (std::size_t x = 0; x < A.order; ++x) {
    QMat big(amb, amb);  // (x . f)(a) = f(ax)
    for (std::size_t a = 0; a < A.order; ++a)
      for (std::size_t i = 0; i < d; ++i) big(a * d + i, A.op(a, x) * d + i) = 1;
    QMat moved = big * out.basis;
    auto expressed = out.basis.solve_matrix(moved);
    if (!expressed)
      throw structural_error("coinduce_group_module: action does not preserve solution space");
    out.module.action.push_back(*expressed);
  }
  return out;
}

inline GroupAlgebraModule coinduce_group_module(const GroupHom& h, const GroupAlgebraModule& N) {
  return coinduce_group_module_full(h, N).module;
}

/// Averaging idempotent (1/|G|) sum of all action matrices.
inline QMat averaging_idempotent(const GroupAlgebraModule& M) {
  QMat e(M.dim, M.dim);
  for (std::size_t x = 0; x < M.group.order; ++x) e = e + M.act(x);
  return e.scaled(Rat(1, static_cast<long>(M.group.order)));
}

/// Basis of the invariant subspace, one column per basis vector.
inline QMat invariants(const GroupAlgebraModule& M) {
  QMat e = averaging_idempotent(M);
  // column space of e = image of the idempotent
  QMat et = e.transposed();
  QMat red = et;
  auto pivots = red.rref();
  QMat basis(M.dim, pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < M.dim; ++j) basis(j, r) = red(r, j);
  return basis;
}

/// Coinvariant quotient M / span{m - g m}.
inline QuotientSpace coinvariants(const GroupAlgebraModule& M) {
  std::vector<std::vector<Rat>> rels;
  for (std::size_t x = 0; x < M.group.order; ++x) {
    if (x == M.group.identity) continue;
    for (std::size_t j = 0; j < M.dim; ++j) {
      std::vector<Rat> v(M.dim, Rat(0));
      v[j] += 1;
      for (std::size_t i = 0; i < M.dim; ++i) v[i] -= M.act(x)(i, j);
      rels.push_back(std::move(v));
    }
  }
  QMat span(M.dim, rels.size());
  for (std::size_t k = 0; k < rels.size(); ++k) span.set_col(k, rels[k]);
  return quotient_by_span(M.dim, span);
}

/// Basis of the space of Q[G]-module maps M -> N (intertwiners), one column
/// per basis map; a map F is stored columnwise as a dim(N) x dim(M) matrix
/// flattened row-major.
inline std::vector<QMat> intertwiner_basis(const GroupAlgebraModule& M,
                                           const GroupAlgebraModule& N) {
  if (!(M.group == N.group)) throw structural_error("intertwiner_basis: group mismatch");
  const std::size_t unknowns = N.dim * M.dim;
  LinearSystem sys(unknowns);
  for (std::size_t x = 0; x < M.group.order; ++x) {
    if (x == M.group.identity) continue;
    // N.act(x) * F - F * M.act(x) = 0
    for (std::size_t i = 0; i < N.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) {
        std::vector<Rat> row(unknowns, Rat(0));
        for (std::size_t k = 0; k < N.dim; ++k) row[k * M.dim + j] += N.act(x)(i, k);
        for (std::size_t k = 0; k < M.dim; ++k) row[i * M.dim + k] -= M.act(x)(k, j);
        sys.add_row(row);
      }
  }
  QMat sol = sys.solution_basis();
  std::vector<QMat> basis;
  for (std::size_t c = 0; c < sol.cols(); ++c) {
    QMat F(N.dim, M.dim);
    for (std::size_t i = 0; i < N.dim; ++i)
      for (std::size_t j = 0; j < M.dim; ++j) F(i, j) = sol(i * M.dim + j, c);
    basis.push_back(F);
  }
  return basis;
}

/// For injective h, the canonical intertwiner QA (x)_{QB} N -> Hom_{QB}(QA, N)
/// sending a (x) n to the function x |-> [x a in h(B)] h^{-1}(x a) n.
inline QMat canonical_induction_to_coinduction(const GroupHom& h, const GroupAlgebraModule& N,
                                               const InducedModule& ind,
                                               const CoinducedModule& coind) {
  if (!h.is_injective())
    throw structural_error("canonical_induction_to_coinduction: hom must be injective");
  const FiniteGroup& A = h.target;
  const FiniteGroup& B = h.source;
  const std::size_t d = N.dim;
  const std::size_t amb = A.order * d;
  QMat big(amb, amb);  // value layout x coordinates (a (x) n) layout
  for (std::size_t a = 0; a < A.order; ++a)
    for (std::size_t x = 0; x < A.order; ++x) {
      std::size_t xa = A.op(x, a);
      for (std::size_t b = 0; b < B.order; ++b)
        if (h(b) == xa)
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) big(x * d + i, a * d + j) += N.act(b)(i, j);
    }
  // restrict to quotient coordinates on the source, function coordinates on target
  return coind.coordinates * big * ind.quot.sect;
}

}  // namespace adjstring
