#include <catch2/catch_amalgamated.hpp>

#include "adjstring/basis.hpp"
#include "adjstring/evaluate.hpp"
#include "adjstring/scalars.hpp"
#include "oracles.hpp"

using namespace adjstring;

namespace {

RingMap theta_d_to_c2() {
  RingMap t;
  t.source = polynomial_ring("Q[d]", "d", -4);
  t.target = polynomial_ring("Q[c]", "c", -2);
  t.images = {Poly::generator(1, 0, 2)};
  return t;
}

}  // namespace

TEST_CASE("basis certificate for {1, c} over Q[d]") {
  auto theta = theta_d_to_c2();
  auto chk = verify_basis_certificate(
      theta, {Poly::constant(1, 1), Poly::generator(1, 0)}, {-20, 0});
  REQUIRE(chk.ok());
  const auto& vb = *chk.basis;
  CHECK(vb.degrees == std::vector<int>{0, -2});
  // structure constants: c * c = d * 1
  CHECK(vb.structure[1][1][0] == Poly::generator(1, 0));
  CHECK(vb.structure[1][1][1].is_zero());
  CHECK(structure_constants_associative(vb));
}

TEST_CASE("identity basis verifies") {
  auto qc = polynomial_ring("Q[c]", "c", -2);
  auto vb = identity_basis(qc, {-20, 0});
  CHECK(vb.size() == 1);
  CHECK(structure_constants_associative(vb));
}

TEST_CASE("missing basis element fails at the first uncovered degree") {
  auto theta = theta_d_to_c2();
  auto chk = verify_basis_certificate(theta, {Poly::constant(1, 1)}, {-20, 0});
  REQUIRE_FALSE(chk.ok());
  CHECK(chk.failed_degree == -2);  // c is not hit
}

TEST_CASE("window precondition is enforced") {
  auto theta = theta_d_to_c2();
  CHECK_THROWS_AS(verify_basis_certificate(
                      theta, {Poly::constant(1, 1), Poly::generator(1, 0)}, {-3, 0}),
                  std::invalid_argument);
}

TEST_CASE("rewrite round-trips through the basis") {
  auto theta = theta_d_to_c2();
  auto vb = *verify_basis_certificate(theta, {Poly::constant(1, 1), Poly::generator(1, 0)},
                                      {-20, 0})
                 .basis;
  // c^5 = theta(d^2) * c
  auto coords = vb.rewrite(Poly::generator(1, 0, 5));
  CHECK(coords[0].is_zero());
  CHECK(coords[1] == Poly::generator(1, 0, 2));
}

TEST_CASE("extend_scalars on the catalog ring map") {
  auto theta = theta_d_to_c2();
  SECTION("free module goes to free module") {
    auto out = extend_scalars(theta, free_module(theta.source, {0}));
    CHECK(out.relations.empty());
    CHECK(out.ring == theta.target);
  }
  SECTION("Q[d]/(d^2) goes to Q[c]/(c^4)") {
    auto out = extend_scalars(theta, cyclic_quotient(theta.source, 0, 2));
    REQUIRE(out.relations.size() == 1);
    CHECK(out.relations[0][0] == Poly::generator(1, 0, 4));
    auto hf = hilbert_function(out, {-12, 0});
    auto expected = hilbert_function(cyclic_quotient(theta.target, 0, 4), {-12, 0});
    CHECK(hf == expected);
  }
  SECTION("identity map leaves the module unchanged") {
    auto id = identity_ring_map(theta.source);
    auto m = cyclic_quotient(theta.source, 0, 2);
    auto out = extend_scalars(id, m);
    CHECK(out.gen_degrees == m.gen_degrees);
    CHECK(out.relations[0][0] == m.relations[0][0]);
  }
  SECTION("ring mismatch is rejected") {
    CHECK_THROWS_AS(extend_scalars(theta, free_module(theta.target, {0})),
                    structural_error);
  }
}

TEST_CASE("extension Hilbert functions match the coequalizer oracle") {
  auto theta = theta_d_to_c2();
  DegreeWindow win{-16, 2};
  SECTION("named modules") {
    for (const auto& m : {free_module(theta.source, {0}),
                          cyclic_quotient(theta.source, 0, 2),
                          free_module(theta.source, {0, -2, 3})}) {
      auto out = extend_scalars(theta, m);
      auto hf = hilbert_function(out, win);
      auto oracle = oracles::tensor_hilbert_oracle(theta, m, win);
      CHECK(hf == oracle);
    }
  }
  SECTION("randomized presented modules") {
    oracles::ModuleSampler sampler(20260810);
    for (int trial = 0; trial < 8; ++trial) {
      auto m = sampler.sample(theta.source);
      auto hf = hilbert_function(extend_scalars(theta, m), win);
      auto oracle = oracles::tensor_hilbert_oracle(theta, m, win);
      INFO("trial " << trial);
      CHECK(hf == oracle);
    }
  }
}

TEST_CASE("restrict_scalars transports presentations") {
  auto theta = theta_d_to_c2();
  auto vb = *verify_basis_certificate(theta, {Poly::constant(1, 1), Poly::generator(1, 0)},
                                      {-20, 0})
                 .basis;
  DegreeWindow win{-12, 0};
  SECTION("Q[c] becomes free on degrees 0 and -2") {
    auto out = restrict_scalars(vb, free_module(theta.target, {0}));
    CHECK(out.gen_degrees == std::vector<int>{0, -2});
    CHECK(out.relations.empty());
    auto hf = hilbert_function(out, win);
    auto expected = hilbert_function(free_module(theta.target, {0}), win);
    CHECK(hf == expected);
  }
  SECTION("Q[c]/(c^2) restricts to two d-torsion generators") {
    auto n = cyclic_quotient(theta.target, 0, 2);
    auto out = restrict_scalars(vb, n);
    REQUIRE(out.gen_degrees == std::vector<int>{0, -2});
    auto hf = hilbert_function(out, win);
    CHECK(hf.at(0) == 1);
    CHECK(hf.at(-2) == 1);
    CHECK(hf.at(-4) == 0);
    CHECK(hf == hilbert_function(n, win));
  }
  SECTION("identity basis: restriction preserves everything") {
    auto qc = polynomial_ring("Q[c]", "c", -2);
    auto id_vb = identity_basis(qc, {-20, 0});
    auto n = cyclic_quotient(qc, 0, 3);
    auto out = restrict_scalars(id_vb, n);
    CHECK(hilbert_function(out, win) == hilbert_function(n, win));
  }
  SECTION("restriction preserves Hilbert functions on random modules") {
    oracles::ModuleSampler sampler(777);
    for (int trial = 0; trial < 8; ++trial) {
      auto n = sampler.sample(theta.target);
      auto out = restrict_scalars(vb, n);
      INFO("trial " << trial);
      CHECK(hilbert_function(out, win) == hilbert_function(n, win));
    }
  }
}
