#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adjstring/evaluate.hpp"
#include "adjstring/graded.hpp"

namespace adjstring {

/// A finite free basis of S over R along a ring map theta: R -> S, verified
/// degreewise on a window. Freeness is an input certificate: the catalog
/// supplies candidate bases and this module checks them.
struct VerifiedBasis {
  RingMap theta;
  std::vector<Poly> elements;  // over the target ring, basis element i
  std::vector<int> degrees;    // e_i <= 0, degree of element i
  DegreeWindow window;
  // s_i * s_j = sum_k theta(structure[i][j][k]) * s_k with structure in R
  std::vector<std::vector<std::vector<Poly>>> structure;

  std::size_t size() const { return elements.size(); }

  /// max |e_i - e_j|; how far the dual generators spread.
  int degree_span() const {
    int lo = 0, hi = 0;
    for (int e : degrees) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    return hi - lo;
  }

  bool is_identity_basis() const { return theta.is_identity() && size() == 1 && degrees[0] == 0; }

  /// The degree-n matrix of (+) _i Sigma^{e_i} R -> S, columns indexed by
  /// (i, monomial of R in degree n - e_i).
  QMat decomposition_matrix(int n) const {
    const GradedRing& R = theta.source;
    const GradedRing& S = theta.target;
    auto s_basis = monomial_basis(S, n);
    std::vector<std::vector<Rat>> cols;
    for (std::size_t i = 0; i < size(); ++i)
      for (const auto& nu : monomial_basis(R, n - degrees[i])) {
        Poly img = theta.apply(Poly::from_monomial(nu, Rat(1))) * elements[i];
        cols.push_back(poly_coords(S, img, s_basis));
      }
    QMat m(s_basis.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
    return m;
  }

  /// Rewrites a homogeneous element of S uniquely as sum_i theta(r_i) s_i;
  /// returns one R-polynomial per basis element. Exact degreewise solve.
  std::vector<Poly> rewrite(const Poly& s) const {
    const GradedRing& R = theta.source;
    const GradedRing& S = theta.target;
    std::vector<Poly> out(size(), Poly::zero(R.num_gens()));
    if (s.is_zero()) return out;
    auto nd = s.homogeneous_degree(S);
    if (!nd) throw structural_error("VerifiedBasis::rewrite: element not homogeneous");
    int n = *nd;
    auto s_basis = monomial_basis(S, n);
    QMat m = decomposition_matrix(n);
    auto sol = m.solve(poly_coords(S, s, s_basis));
    if (!sol)
      throw structural_error("VerifiedBasis::rewrite: decomposition failed at degree " +
                             std::to_string(n) + " (invalid certificate?)");
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (const auto& nu : monomial_basis(R, n - degrees[i])) {
        if ((*sol)[c] != 0) out[i].add_term(nu, (*sol)[c]);
        ++c;
      }
    return out;
  }
};

struct BasisCheck {
  std::optional<VerifiedBasis> basis;
  std::optional<int> failed_degree;
  std::string message;
  bool ok() const { return basis.has_value(); }
};

/// Checks that the candidate elements form a degreewise free R-basis of S on
/// the window and solves the structure-constant table. A failure reports the
/// first degree where the decomposition map is not bijective.
inline BasisCheck verify_basis_certificate(const RingMap& theta, std::vector<Poly> elements,
                                           DegreeWindow window) {
  theta.validate();
  const GradedRing& S = theta.target;
  VerifiedBasis vb;
  vb.theta = theta;
  vb.elements = std::move(elements);
  for (const auto& e : vb.elements) {
    auto d = e.homogeneous_degree(S);
    if (!d && e.is_zero()) d = 0;
    if (!d) {
      BasisCheck bad;
      bad.message = "basis element not homogeneous";
      return bad;
    }
    vb.degrees.push_back(*d);
  }
  vb.window = window;
  if (window.length() <= 2 * vb.degree_span())
    throw std::invalid_argument(
        "verify_basis_certificate: window must exceed twice the basis degree span");

  for (int n = window.hi; n >= window.lo; --n) {
    QMat m = vb.decomposition_matrix(n);
    std::size_t target_dim = monomial_basis(S, n).size();
    if (m.cols() != target_dim || m.rank() != target_dim) {
      BasisCheck bad;
      bad.failed_degree = n;
      bad.message = "decomposition map not bijective at degree " + std::to_string(n);
      return bad;
    }
  }

  vb.structure.assign(vb.size(), std::vector<std::vector<Poly>>(vb.size()));
  for (std::size_t i = 0; i < vb.size(); ++i)
    for (std::size_t j = 0; j < vb.size(); ++j)
      vb.structure[i][j] = vb.rewrite(vb.elements[i] * vb.elements[j]);

  BasisCheck out;
  out.basis = std::move(vb);
  return out;
}

/// Associativity of the solved structure-constant table:
/// sum_l c_{ijl} c_{lkm} = sum_l c_{jkl} c_{ilm} exactly in R.
inline bool structure_constants_associative(const VerifiedBasis& vb) {
  const std::size_t n = vb.size();
  const std::size_t nv = vb.theta.source.num_gens();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Poly lhs = Poly::zero(nv), rhs = Poly::zero(nv);
          for (std::size_t l = 0; l < n; ++l) {
            lhs = lhs + vb.structure[i][j][l] * vb.structure[l][k][m];
            rhs = rhs + vb.structure[j][k][l] * vb.structure[i][l][m];
          }
          if (!(lhs == rhs)) return false;
        }
  return true;
}

inline VerifiedBasis identity_basis(const GradedRing& r, DegreeWindow window) {
  auto chk = verify_basis_certificate(identity_ring_map(r),
                                      {Poly::constant(r.num_gens(), 1)}, window);
  if (!chk.ok()) throw structural_error("identity_basis: unexpected failure");
  return *chk.basis;
}

}  // namespace adjstring
