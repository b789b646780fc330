#include <random>

#include "doctest.h"
#include "omega/linalg.hpp"

using namespace omega;

namespace {

Matrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> v;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    Vector row;
    for (int k : r) row.emplace_back(k);
    cols = row.size();
    v.push_back(std::move(row));
  }
  return Matrix::from_rows(v, cols);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::bernoulli_distribution sparse(0.4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!sparse(rng)) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  const Matrix a = from_ints({{1, 2}, {3, 4}});
  const Matrix b = from_ints({{0, 1}, {1, 0}});
  CHECK(a * b == from_ints({{2, 1}, {4, 3}}));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(a.transpose() == from_ints({{1, 3}, {2, 4}}));
  CHECK(Matrix::identity(2) * a == a);
  CHECK(a.apply({Scalar(1), Scalar(1)}) == Vector{Scalar(3), Scalar(7)});
  CHECK(Matrix::scalar(2, 5) == Scalar(5) * Matrix::identity(2));
  CHECK(a.column(1) == Vector{Scalar(2), Scalar(4)});
  CHECK((a - a).is_zero());
}

TEST_CASE("rref and rank") {
  const Matrix m = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const RowEchelon e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.matrix == from_ints({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);
}

TEST_CASE("rref is a projector and rank-nullity holds") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + trial % 5;
    const std::size_t c = 1 + (trial * 7) % 6;
    const Matrix m = random_matrix(rng, r, c);
    const RowEchelon e = rref(m);
    CHECK(rref(e.matrix).matrix == e.matrix);
    const auto kernel = kernel_basis(m);
    CHECK(e.rank + kernel.size() == c);
    for (const auto& k : kernel) CHECK(is_zero(m.apply(k)));
  }
}

TEST_CASE("solve_affine") {
  const Matrix a = from_ints({{1, 1, 0}, {0, 1, 1}});
  const AffineSpace s = solve_affine(a, {Scalar(1), Scalar(2)});
  CHECK(s.dimension() == 1);
  CHECK(s.contains({Scalar(1), Scalar(0), Scalar(2)}));
  CHECK(s.contains({Scalar(0), Scalar(1), Scalar(1)}));
  CHECK_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(0)}));
  const AffineSpace none = solve_affine(from_ints({{1, 1}, {1, 1}}), {Scalar(0), Scalar(1)});
  CHECK(none.is_empty());
  CHECK(none.dimension() == -1);
  CHECK(solve_affine(Matrix(0, 2), {}) == AffineSpace::whole(2));
}

TEST_CASE("sampled points satisfy the system") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix a = random_matrix(rng, 3, 5);
    Vector x0(5);
    for (auto& v : x0) v = d(rng);
    const Vector b = a.apply(x0);
    const AffineSpace s = solve_affine(a, b);
    REQUIRE_FALSE(s.is_empty());
    CHECK(s.contains(x0));
    std::vector<Scalar> params(s.basis().size());
    for (auto& p : params) p = Scalar(make_rational(d(rng), 1 + trial % 3));
    CHECK(a.apply(s.point_at(params)) == b);
  }
}

TEST_CASE("canonical form makes equal sets compare equal") {
  const Vector o1{Scalar(1), Scalar(1), Scalar(0)};
  const Vector o2{Scalar(2), Scalar(3), Scalar(0)};
  const std::vector<Vector> d1{{Scalar(1), Scalar(2), Scalar(0)}};
  const std::vector<Vector> d2{{Scalar(-2), Scalar(-4), Scalar(0)}};
  CHECK(AffineSpace::from(o1, d1) == AffineSpace::from(o2, d2));
  CHECK_FALSE(AffineSpace::from(o1, d1) == AffineSpace::point(o1));
}

TEST_CASE("intersect and restrict_parameters") {
  const AffineSpace whole = AffineSpace::whole(3);
  const AffineSpace plane = intersect(whole, from_ints({{1, 1, 1}}), {Scalar(3)});
  CHECK(plane.dimension() == 2);
  const AffineSpace line = intersect(plane, from_ints({{1, -1, 0}}), {Scalar(0)});
  CHECK(line.dimension() == 1);
  CHECK(line.contains({Scalar(1), Scalar(1), Scalar(1)}));
  CHECK(intersect(line, from_ints({{0, 0, 1}}), {Scalar(1)}) == AffineSpace::point({Scalar(1), Scalar(1), Scalar(1)}));
  CHECK(intersect(line, from_ints({{1, -1, 0}}), {Scalar(1)}).is_empty());
  // One parameter fixed to 2 in the line's own parametrization.
  const AffineSpace p = restrict_parameters(line, from_ints({{1}}), {Scalar(2)});
  CHECK(p.dimension() == 0);
  CHECK(line.contains(p.origin()));
}

TEST_CASE("linear algebra over Q(alpha)") {
  const Scalar a = Scalar::alpha();
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = a;
  // det = alpha^2 - 1, nonzero as a rational function.
  CHECK(rank(m) == 2);
  const AffineSpace s = solve_affine(m, {Scalar(1), Scalar(1)});
  REQUIRE(s.dimension() == 0);
  CHECK(s.origin()[0] == Scalar(1) / (a + Scalar(1)));
}
