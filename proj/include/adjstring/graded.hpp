#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adjstring/groups.hpp"
#include "adjstring/matrix.hpp"
#include "adjstring/rational.hpp"

namespace adjstring {

/// Graded polynomial ring on finitely many generators. The repository-wide
/// degree convention: generator degrees are even and strictly NEGATIVE, and
/// suspension by k raises degree by k. A ring with no generators is Q.
struct GradedRing {
  std::string name;
  std::vector<std::string> gen_labels;
  std::vector<int> gen_degrees;

  std::size_t num_gens() const { return gen_labels.size(); }

  void validate() const {
    if (gen_labels.size() != gen_degrees.size())
      throw structural_error("GradedRing: label/degree length mismatch");
    for (int d : gen_degrees)
      if (d >= 0 || d % 2 != 0)
        throw structural_error("GradedRing: generator degrees must be even and negative");
    for (std::size_t i = 0; i < gen_labels.size(); ++i)
      for (std::size_t j = i + 1; j < gen_labels.size(); ++j)
        if (gen_labels[i] == gen_labels[j])
          throw structural_error("GradedRing: duplicate generator label");
  }

  std::optional<std::size_t> gen_index(const std::string& label) const {
    for (std::size_t i = 0; i < gen_labels.size(); ++i)
      if (gen_labels[i] == label) return i;
    return std::nullopt;
  }

  /// Most negative generator degree; 0 for the ring Q.
  int min_gen_degree() const {
    int m = 0;
    for (int d : gen_degrees) m = std::min(m, d);
    return m;
  }

  bool operator==(const GradedRing& o) const {
    return gen_labels == o.gen_labels && gen_degrees == o.gen_degrees;
  }
};

inline GradedRing rationals_ring() {
  GradedRing r;
  r.name = "Q";
  return r;
}

inline GradedRing polynomial_ring(const std::string& name, const std::string& gen, int degree) {
  GradedRing r;
  r.name = name;
  r.gen_labels = {gen};
  r.gen_degrees = {degree};
  r.validate();
  return r;
}

/// Monomial = exponent vector aligned with the ring's generator list.
using Monomial = std::vector<unsigned>;

inline int monomial_degree(const GradedRing& ring, const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += int(m[i]) * ring.gen_degrees[i];
  return d;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// All monomials of the given degree, in deterministic (lexicographic
/// exponent) order. Empty for positive degrees; {1} for degree 0.
inline std::vector<Monomial> monomial_basis(const GradedRing& ring, int degree) {
  std::vector<Monomial> out;
  if (degree > 0) return out;
  Monomial cur(ring.num_gens(), 0);
  // recursive enumeration over generators
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == ring.num_gens()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int d = ring.gen_degrees[i];
    for (unsigned e = 0;; ++e) {
      int used = int(e) * d;
      if (used < remaining) break;  // degrees negative: used decreases with e
      cur[i] = e;
      self(self, i + 1, remaining - used);
    }
    cur[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

/// Sparse polynomial over exact rationals. Terms keep a deterministic order
/// via the std::map; zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars, const Rat& c) {
    if (c != 0) terms_[Monomial(nvars, 0)] = c;
    nvars_ = nvars;
  }
  static Poly zero(std::size_t nvars) {
    Poly p;
    p.nvars_ = nvars;
    return p;
  }
  static Poly constant(std::size_t nvars, const Rat& c) { return Poly(nvars, c); }
  static Poly generator(std::size_t nvars, std::size_t i, unsigned power = 1) {
    Poly p;
    p.nvars_ = nvars;
    Monomial m(nvars, 0);
    m[i] = power;
    p.terms_[m] = 1;
    return p;
  }
  static Poly from_monomial(const Monomial& m, const Rat& c) {
    Poly p;
    p.nvars_ = m.size();
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    r.nvars_ = nvars_;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(monomial_mul(m1, m2), c1 * c2);
    return r;
  }
  Poly scaled(const Rat& c) const {
    Poly r;
    r.nvars_ = nvars_;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Degree when homogeneous over the given ring; nullopt for 0 or mixed.
  std::optional<int> homogeneous_degree(const GradedRing& ring) const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
      int d = monomial_degree(ring, m);
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
    return deg;
  }

  /// Substitutes the i-th generator by images[i]; result lives in the ring
  /// the images live in.
  Poly substitute(const std::vector<Poly>& images, std::size_t target_nvars) const {
    Poly r = Poly::zero(target_nvars);
    for (const auto& [m, c] : terms_) {
      Poly term = Poly::constant(target_nvars, c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) term = term * images[i];
      r = r + term;
    }
    return r;
  }

  std::string to_string(const GradedRing& ring) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring.gen_labels[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty())
        s += adjstring::to_string(c);
      else if (c == 1)
        s += mono;
      else if (c == -1)
        s += "-" + mono;
      else
        s += adjstring::to_string(c) + "*" + mono;
    }
    return s;
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Monomial, Rat> terms_;
};

/// Coordinates of a homogeneous polynomial in the monomial basis of its degree.
inline std::vector<Rat> poly_coords(const GradedRing& ring, const Poly& p,
                                    const std::vector<Monomial>& basis) {
  std::vector<Rat> v(basis.size(), Rat(0));
  for (const auto& [m, c] : p.terms()) {
    bool found = false;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == m) {
        v[i] = c;
        found = true;
        break;
      }
    if (!found) throw structural_error("poly_coords: monomial outside basis (degree mismatch?)");
  }
  return v;
}

/// Graded ring homomorphism determined by generator images; each image must
/// be homogeneous of the source generator's degree.
struct RingMap {
  GradedRing source;
  GradedRing target;
  std::vector<Poly> images;  // over target

  void validate() const {
    if (images.size() != source.num_gens())
      throw structural_error("RingMap: one image per source generator required");
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i].is_zero()) continue;
      auto d = images[i].homogeneous_degree(target);
      if (!d || *d != source.gen_degrees[i])
        throw structural_error("RingMap: image of '" + source.gen_labels[i] +
                               "' is not homogeneous of its degree");
    }
  }

  Poly apply(const Poly& p) const { return p.substitute(images, target.num_gens()); }

  bool is_identity() const {
    if (!(source == target)) return false;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!(images[i] == Poly::generator(target.num_gens(), i))) return false;
    return true;
  }
};

inline RingMap identity_ring_map(const GradedRing& r) {
  RingMap m;
  m.source = r;
  m.target = r;
  for (std::size_t i = 0; i < r.num_gens(); ++i)
    m.images.push_back(Poly::generator(r.num_gens(), i));
  return m;
}

/// Action of a finite group on a graded ring by graded automorphisms,
/// specified by generator images per group element.
struct RingAction {
  FiniteGroup group;
  GradedRing ring;
  std::vector<std::vector<Poly>> images;  // per element, per generator

  Poly act(std::size_t w, const Poly& p) const {
    return p.substitute(images[w], ring.num_gens());
  }

  bool is_trivial() const {
    for (std::size_t w = 0; w < group.order; ++w)
      for (std::size_t i = 0; i < ring.num_gens(); ++i)
        if (!(images[w][i] == Poly::generator(ring.num_gens(), i))) return false;
    return true;
  }

  void validate() const {
    if (images.size() != group.order)
      throw structural_error("RingAction: one image list per group element required");
    for (std::size_t w = 0; w < group.order; ++w) {
      if (images[w].size() != ring.num_gens())
        throw structural_error("RingAction: one image per ring generator required");
      for (std::size_t i = 0; i < ring.num_gens(); ++i) {
        auto d = images[w][i].homogeneous_degree(ring);
        if (!d || *d != ring.gen_degrees[i])
          throw structural_error("RingAction: image not homogeneous of generator degree");
      }
    }
    for (std::size_t i = 0; i < ring.num_gens(); ++i)
      if (!(images[group.identity][i] == Poly::generator(ring.num_gens(), i)))
        throw structural_error("RingAction: identity must act as identity");
    // composite of actions matches group multiplication, checked on generators
    for (std::size_t x = 0; x < group.order; ++x)
      for (std::size_t y = 0; y < group.order; ++y)
        for (std::size_t i = 0; i < ring.num_gens(); ++i)
          if (!(act(x, images[y][i]) == images[group.op(x, y)][i]))
            throw structural_error("RingAction: not compatible with group multiplication");
  }
};

inline RingAction trivial_ring_action(const FiniteGroup& g, const GradedRing& r) {
  RingAction a;
  a.group = g;
  a.ring = r;
  a.images.resize(g.order);
  for (std::size_t w = 0; w < g.order; ++w)
    for (std::size_t i = 0; i < r.num_gens(); ++i)
      a.images[w].push_back(Poly::generator(r.num_gens(), i));
  return a;
}

/// C2 acting on a univariate ring by negating the generator.
inline RingAction sign_ring_action(const GradedRing& r) {
  RingAction a;
  a.group = cyclic_group(2);
  a.ring = r;
  a.images.resize(2);
  for (std::size_t i = 0; i < r.num_gens(); ++i) {
    a.images[0].push_back(Poly::generator(r.num_gens(), i));
    a.images[1].push_back(Poly::generator(r.num_gens(), i).scaled(Rat(-1)));
  }
  return a;
}

}  // namespace adjstring
