#include <random>

#include "cagekit/errors.hpp"
#include "cagekit/linalg.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cagekit;
using th::r;
using th::vec;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t target_rank) {
  const Field q = Field::rationals();
  Matrix a(q, rows, target_rank), b(q, target_rank, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < target_rank; ++j) a(i, j) = r(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
  for (std::size_t i = 0; i < target_rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = r(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4);
  return a * b;
}

Matrix unit_square_eval() {
  // degree-2 monomials x^2, xy, xz, y^2, yz, z^2 at (0,0),(1,0),(0,1),(1,1)
  const long pts[4][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  std::vector<Vector> rows;
  for (auto& p : pts) {
    rows.push_back(vec({p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]}));
  }
  return Matrix::from_rows(th::Q(), rows);
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(th::Q(), 3)) == 3);
  CHECK(rank(Matrix(th::Q(), 2, 5)) == 0);
  const Matrix e = unit_square_eval();
  CHECK(rank(e) == 4);
  CHECK(oracle::rank(oracle::qmatrix(e)) == 4);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(th::Q(), 4)).dim() == 0);
  const auto k = kernel_basis(Matrix::from_rows(th::Q(), {vec({1, 1})}));
  REQUIRE(k.dim() == 1);
  CHECK(in_span(vec({1, -1}), k));
  const Matrix e = unit_square_eval();
  const auto k2 = kernel_basis(e);
  CHECK(k2.dim() == 2);
  // x(x - z) and y(y - z) in the basis above
  CHECK(in_span(vec({1, 0, -1, 0, 0, 0}), k2));
  CHECK(in_span(vec({0, 0, 0, 1, -1, 0}), k2));
}

TEST_CASE("in_span examples") {
  const SubspaceBasis e2 = span_of(th::Q(), 2, {vec({0, 1})});
  CHECK(in_span(vec({0, 0}), e2));
  CHECK_FALSE(in_span(vec({1, 0}), e2));
  CHECK(in_span(vec({2, -2}), span_of(th::Q(), 2, {vec({1, -1})})));
  CHECK_THROWS_AS(in_span(vec({1, 2, 3}), e2), ShapeError);
}

TEST_CASE("solve examples") {
  const auto x = solve(Matrix::identity(th::Q(), 3), vec({4, 5, 6}));
  REQUIRE(x);
  CHECK(*x == vec({4, 5, 6}));
  const auto y = solve(Matrix::from_rows(th::Q(), {vec({1, 1}), vec({1, -1})}), vec({2, 0}));
  REQUIRE(y);
  CHECK(*y == vec({1, 1}));
  CHECK_FALSE(solve(Matrix::from_rows(th::Q(), {vec({1, 1}), vec({2, 2})}), vec({1, 3})));
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_rows(th::Q(), {vec({2, 1}), vec({1, 1})});
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(*inv * a == Matrix::identity(th::Q(), 2));
  CHECK_FALSE(inverse(Matrix::from_rows(th::Q(), {vec({1, 2}), vec({2, 4})})));
}

TEST_CASE("random matrices: rank properties against the oracle") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 20, cols = 1 + rng() % 20, target = 1 + rng() % 20;
    const Matrix m = random_matrix(rng, rows, cols, target);
    const std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    CHECK(rk == row_reduce(m).pivots.size());
    if (rows <= 12 && cols <= 12) CHECK(rk == oracle::rank(oracle::qmatrix(m)));
    const auto k = kernel_basis(m);
    CHECK(k.dim() + rk == cols);
    for (const auto& v : k.vectors) CHECK(is_zero_vector(m * v));
  }
}

TEST_CASE("deterministic reduced forms") {
  std::mt19937_64 rng(5);
  const Matrix m = random_matrix(rng, 6, 9, 4);
  CHECK(row_reduce(m).reduced == row_reduce(m).reduced);
  // same row space, different generators -> identical canonical basis
  Matrix shuffled = m;
  shuffled.swap_rows(0, 5);
  CHECK(row_space(m).vectors == row_space(shuffled).vectors);
}

TEST_CASE("rank over an extension field") {
  const Field g = Field::extension({1, 0, 1}, "Q(i)");
  const FieldElement i = g.generator();
  // rows (1, i) and (i, -1) are dependent: second = i * first
  const Matrix m = Matrix::from_rows(g, {{g.one(), i}, {i, -g.one()}});
  CHECK(rank(m) == 1);
  CHECK(kernel_basis(m).dim() == 1);
}
