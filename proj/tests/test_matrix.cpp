#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oforge/matrix.hpp"

using namespace oforge;

TEST_CASE("rref and rank") {
  Matrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  CHECK(m.rank() == 1);
  Matrix k = m.kernel_basis();
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("solve and inverse") {
  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(1, 0) = 0;
  a.at(1, 1) = 2;
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == Matrix::identity(2));

  Matrix b(2, 1);
  b.at(0, 0) = 3;
  b.at(1, 0) = 4;
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // inconsistent system
  Matrix s(2, 1);
  s.at(0, 0) = 1;
  s.at(1, 0) = 2;
  Matrix rhs(2, 1);
  rhs.at(0, 0) = 1;
  rhs.at(1, 0) = 3;
  CHECK(!s.solve(rhs).has_value());
}

TEST_CASE("quotient presentation") {
  // Q^3 / span{(1,1,0)}
  Matrix rels(3, 1);
  rels.at(0, 0) = 1;
  rels.at(1, 0) = 1;
  auto q = quotient_by_columns(3, rels);
  CHECK(q.proj.rows() == 2);
  CHECK(q.proj * q.section == Matrix::identity(2));
  CHECK((q.proj * rels).is_zero());
}

TEST_CASE("column space basis") {
  Matrix m(3, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 1) = 2;
  Matrix b = m.column_space_basis();
  CHECK(b.cols() == 1);
  CHECK(b.rank() == 1);
}
