#pragma once

#include "adjstring/basis.hpp"
#include "adjstring/presented.hpp"

namespace adjstring {

/// Extension of scalars S (x)_R M as a presentation transform: generator
/// degrees are kept and every relation coefficient is pushed through the
/// ring map. Twisted inputs go through the twisted-module route instead.
inline PresentedModule extend_scalars(const RingMap& theta, const PresentedModule& M) {
  if (!(M.ring == theta.source))
    throw structural_error("extend_scalars: module ring does not match the map source");
  if (M.twist)
    throw structural_error("extend_scalars: twisted module (use the twisted functors)");
  PresentedModule out;
  out.ring = theta.target;
  out.gen_degrees = M.gen_degrees;
  for (const auto& row : M.relations) {
    std::vector<Poly> moved;
    for (const auto& p : row) moved.push_back(theta.apply(p));
    out.relations.push_back(std::move(moved));
  }
  return out;
}

/// Restriction of scalars along a verified basis: output generators are
/// (module generator) x (basis element) with degrees summed, and relations
/// are transported by rewriting every S-coefficient into basis coordinates.
/// Evaluates degreewise identically to N.
inline PresentedModule restrict_scalars(const VerifiedBasis& vb, const PresentedModule& N) {
  if (!(N.ring == vb.theta.target))
    throw structural_error("restrict_scalars: module ring does not match the basis target");
  if (N.twist)
    throw structural_error("restrict_scalars: twisted module (use the twisted functors)");
  const GradedRing& R = vb.theta.source;
  PresentedModule out;
  out.ring = R;
  for (std::size_t j = 0; j < N.num_gens(); ++j)
    for (std::size_t i = 0; i < vb.size(); ++i)
      out.gen_degrees.push_back(N.gen_degrees[j] + vb.degrees[i]);
  // one transported relation per (S-relation, basis element)
  for (const auto& row : N.relations) {
    for (std::size_t l = 0; l < vb.size(); ++l) {
      std::vector<Poly> moved(out.num_gens(), Poly::zero(R.num_gens()));
      for (std::size_t j = 0; j < N.num_gens(); ++j) {
        if (row[j].is_zero()) continue;
        auto coords = vb.rewrite(vb.elements[l] * row[j]);
        for (std::size_t i = 0; i < vb.size(); ++i)
          moved[j * vb.size() + i] = moved[j * vb.size() + i] + coords[i];
      }
      out.relations.push_back(std::move(moved));
    }
  }
  return out;
}

}  // namespace adjstring
