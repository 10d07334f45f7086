#pragma once

#include <map>
#include <optional>
#include <vector>

#include "adjstring/graded.hpp"
#include "adjstring/matrix.hpp"

namespace adjstring {

/// Closed degree interval [lo, hi] on which degreewise computations run.
struct DegreeWindow {
  int lo = 0;
  int hi = 0;

  bool contains(int n) const { return lo <= n && n <= hi; }
  int length() const { return hi - lo + 1; }

  DegreeWindow intersect(const DegreeWindow& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }
  DegreeWindow padded(int below, int above) const { return {lo - below, hi + above}; }
  bool empty() const { return lo > hi; }
  bool operator==(const DegreeWindow& o) const { return lo == o.lo && hi == o.hi; }
};

/// Exact degreewise realization of a graded module on a window: dimensions,
/// one matrix per ring generator per degree, and (optionally) one square
/// matrix per group element per degree for a semilinear group action.
struct WindowModule {
  GradedRing ring;
  std::optional<FiniteGroup> group;
  DegreeWindow win;
  std::map<int, std::size_t> dims;
  // gen_maps[g][n] : M_n -> M_{n + deg g}
  std::vector<std::map<int, QMat>> gen_maps;
  // group_maps[w][n] : M_n -> M_n
  std::vector<std::map<int, QMat>> group_maps;

  std::size_t dim(int n) const {
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
  }

  std::size_t group_order() const { return group ? group->order : 1; }

  /// Matrix of multiplication by the g-th ring generator on M_n; a zero
  /// matrix of the right shape when no block was stored.
  QMat gen_map(std::size_t g, int n) const {
    auto it = gen_maps[g].find(n);
    if (it != gen_maps[g].end()) return it->second;
    return QMat(dim(n + ring.gen_degrees[g]), dim(n));
  }

  QMat group_map(std::size_t w, int n) const {
    if (!group || group_maps.empty()) return QMat::identity(dim(n));
    auto it = group_maps[w].find(n);
    if (it == group_maps[w].end()) return QMat::identity(dim(n));
    return it->second;
  }

  /// Action of a homogeneous polynomial as a matrix M_n -> M_{n + deg p};
  /// generator maps commute, so factors are applied in generator order.
  QMat act_poly(const Poly& p, int n) const {
    auto pd = p.homogeneous_degree(ring);
    int d = pd ? *pd : 0;
    int target = n + d;
    QMat out(dim(target), dim(n));
    if (!win.contains(n) || !win.contains(target)) return out;
    for (const auto& [mono, coeff] : p.terms()) {
      QMat acc = QMat::identity(dim(n));
      int cur = n;
      for (std::size_t g = 0; g < mono.size(); ++g)
        for (unsigned e = 0; e < mono[g]; ++e) {
          acc = gen_map(g, cur) * acc;
          cur += ring.gen_degrees[g];
        }
      out = out + acc.scaled(coeff);
    }
    return out;
  }

  /// Structural checks: generator maps commute where both composites exist;
  /// group maps are invertible, satisfy the group law, and are semilinear
  /// over the supplied ring action.
  void validate(const RingAction* action = nullptr) const {
    const std::size_t ng = ring.num_gens();
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t h = 0; h < ng; ++h)
        for (int n = win.lo; n <= win.hi; ++n) {
          int dg = ring.gen_degrees[g], dh = ring.gen_degrees[h];
          if (!win.contains(n + dg + dh)) continue;
          QMat a = gen_map(h, n + dg) * gen_map(g, n);
          QMat b = gen_map(g, n + dh) * gen_map(h, n);
          if (!(a == b)) throw structural_error("WindowModule: generator maps do not commute");
        }
    if (group && !group_maps.empty()) {
      for (std::size_t w = 0; w < group->order; ++w)
        for (int n = win.lo; n <= win.hi; ++n)
          if (!group_map(w, n).inverse())
            throw structural_error("WindowModule: group map not invertible");
      for (std::size_t x = 0; x < group->order; ++x)
        for (std::size_t y = 0; y < group->order; ++y)
          for (int n = win.lo; n <= win.hi; ++n)
            if (!(group_map(x, n) * group_map(y, n) == group_map(group->op(x, y), n)))
              throw structural_error("WindowModule: group maps violate the group law");
      if (action) {
        for (std::size_t w = 0; w < group->order; ++w)
          for (std::size_t g = 0; g < ng; ++g)
            for (int n = win.lo; n <= win.hi; ++n) {
              int m = n + ring.gen_degrees[g];
              if (!win.contains(m)) continue;
              QMat lhs = group_map(w, m) * gen_map(g, n);
              QMat rhs = act_poly(action->images[w][g], n);
              rhs = rhs * group_map(w, n);
              if (!(lhs == rhs))
                throw structural_error("WindowModule: group action not semilinear");
            }
      }
    }
  }
};

/// Degree-t map between window modules, stored as one block per degree:
/// blocks[n] : M_n -> N_{n+t}.
struct WindowMap {
  int degree = 0;
  DegreeWindow domain;
  std::map<int, QMat> blocks;

  const QMat& block(int n) const {
    static const QMat empty;
    auto it = blocks.find(n);
    return it == blocks.end() ? empty : it->second;
  }
};

inline WindowMap identity_window_map(const WindowModule& m, DegreeWindow on) {
  WindowMap f;
  f.degree = 0;
  f.domain = on;
  for (int n = on.lo; n <= on.hi; ++n) f.blocks[n] = QMat::identity(m.dim(n));
  return f;
}

/// g after f; defined on the intersection of domains (shifted).
inline WindowMap compose(const WindowMap& g, const WindowMap& f) {
  WindowMap r;
  r.degree = f.degree + g.degree;
  r.domain = f.domain.intersect({g.domain.lo - f.degree, g.domain.hi - f.degree});
  for (int n = r.domain.lo; n <= r.domain.hi; ++n) r.blocks[n] = g.block(n + f.degree) * f.block(n);
  return r;
}

inline WindowMap subtract(const WindowMap& a, const WindowMap& b) {
  WindowMap r;
  r.degree = a.degree;
  r.domain = a.domain.intersect(b.domain);
  for (int n = r.domain.lo; n <= r.domain.hi; ++n) r.blocks[n] = a.block(n) - b.block(n);
  return r;
}

inline bool is_zero_on(const WindowMap& f, DegreeWindow on) {
  for (int n = on.lo; n <= on.hi; ++n)
    if (!f.block(n).is_zero()) return false;
  return true;
}

/// First degree in `on` where f differs from the identity, if any.
inline std::optional<int> first_non_identity_degree(const WindowMap& f, DegreeWindow on) {
  for (int n = on.lo; n <= on.hi; ++n)
    if (!f.block(n).is_identity()) return n;
  return std::nullopt;
}

inline bool degreewise_invertible(const WindowMap& f, DegreeWindow on) {
  for (int n = on.lo; n <= on.hi; ++n)
    if (!f.block(n).inverse()) return false;
  return true;
}

}  // namespace adjstring
