#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adjstring/matrix.hpp"

using namespace adjstring;

namespace {

QMat from_rows(std::vector<std::vector<long>> rows) {
  QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rref, rank and kernel") {
  QMat a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(a.rank() == 2);
  QMat k = a.kernel_basis();
  REQUIRE(k.cols() == 1);
  // kernel vector is killed by a
  auto v = k.col(0);
  auto img = a.apply(v);
  for (const auto& x : img) CHECK(x == 0);
}

TEST_CASE("solve exact") {
  QMat a = from_rows({{2, 0}, {1, 3}});
  auto x = a.solve({Rat(1), Rat(0)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(-1, 6));

  QMat sing = from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(sing.solve({Rat(0), Rat(1)}).has_value());
}

TEST_CASE("determinant and inverse") {
  QMat a = from_rows({{1, 2}, {3, 4}});
  CHECK(a.determinant() == Rat(-2));
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());
  QMat sing = from_rows({{1, 2}, {2, 4}});
  CHECK(sing.determinant() == 0);
  CHECK_FALSE(sing.inverse().has_value());
}

TEST_CASE("determinant multiplicativity on random rational matrices") {
  std::mt19937_64 rng(12345);
  auto rand_rat = [&]() {
    long num = long(rng() % 7) - 3;
    long den = long(rng() % 3) + 1;
    return Rat(num, den);
  };
  for (int trial = 0; trial < 20; ++trial) {
    QMat a(3, 3), b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) = rand_rat();
        b(i, j) = rand_rat();
      }
    CHECK((a * b).determinant() == a.determinant() * b.determinant());
  }
}

TEST_CASE("quotient_by_span gives projection with section") {
  // Q^3 modulo span{(1,1,0),(0,0,2)} has dimension 1
  QMat span(3, 2);
  span(0, 0) = 1;
  span(1, 0) = 1;
  span(2, 1) = 2;
  auto q = quotient_by_span(3, span);
  CHECK(q.dim() == 1);
  CHECK((q.proj * q.sect).is_identity());
  // the relations project to zero
  for (std::size_t c = 0; c < span.cols(); ++c) {
    auto img = q.proj.apply(span.col(c));
    for (const auto& x : img) CHECK(x == 0);
  }
}

TEST_CASE("linear system solution basis") {
  LinearSystem sys(3);
  sys.add_row({Rat(1), Rat(-1), Rat(0)});
  QMat sol = sys.solution_basis();
  CHECK(sol.cols() == 2);
  LinearSystem none(2);
  none.add_row({Rat(1), Rat(0)});
  none.add_row({Rat(0), Rat(1)});
  CHECK(none.solution_basis().cols() == 0);
}
