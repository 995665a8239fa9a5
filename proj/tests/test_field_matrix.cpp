#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gorcol/matrix.hpp"
#include "test_util.hpp"

using namespace gorcol;
using namespace gtest_util;

TEST_CASE("scalar arithmetic stays canonical") {
  Field q = Field::rationals();
  Scalar a = Scalar::of_fraction(3, 6, q);
  CHECK(a.str() == "1/2");
  CHECK((a + a).is_one());
  CHECK((a - a).is_zero());
  Scalar b = Scalar::of_fraction(-2, 4, q);
  CHECK(b.str() == "-1/2");
  CHECK((a / b).str() == "-1");

  Field f5 = Field::prime(5);
  Scalar c = Scalar::of_int(7, f5);
  CHECK(c.residue() == 2);
  CHECK((c * c).residue() == 4);
  CHECK((c.inverse() * c).is_one());
  CHECK(Scalar::of_int(-1, f5).residue() == 4);
}

TEST_CASE("field construction validates the modulus") {
  CHECK_THROWS_AS(Field::prime(4), ArithmeticError);
  CHECK_THROWS_AS(Field::prime(1), ArithmeticError);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(2147483647));
}

TEST_CASE("mixed field contexts are rejected") {
  Field q = Field::rationals();
  Field f2 = Field::prime(2);
  Scalar a = Scalar::one(q);
  Scalar b = Scalar::one(f2);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  DenseMatrix m(0, 2, q);
  CHECK_THROWS_AS(m.append_row({Scalar::one(f2), Scalar::zero(f2)}), FieldMismatchError);
}

TEST_CASE("rank examples") {
  Field q = Field::rationals();
  CHECK(rank(mat_of_ints(q, {{1, 0}, {0, 1}})) == 2);
  CHECK(rank(mat_of_ints(q, {{1, 2}, {2, 4}})) == 1);
  Field f2 = Field::prime(2);
  CHECK(rank(mat_of_ints(f2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel examples are canonical") {
  Field q = Field::rationals();
  auto k = kernel_basis(mat_of_ints(q, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec_of_ints(q, {1, -1}));

  CHECK(kernel_basis(mat_of_ints(q, {{1, 0}, {0, 1}})).empty());

  Field f2 = Field::prime(2);
  auto k2 = kernel_basis(mat_of_ints(f2, {{1, 1}, {1, 1}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == vec_of_ints(f2, {1, 1}));
}

TEST_CASE("row space membership") {
  Field q = Field::rationals();
  auto m = mat_of_ints(q, {{1, 0}});
  CHECK(row_space_membership(m, vec_of_ints(q, {2, 0})));
  CHECK_FALSE(row_space_membership(m, vec_of_ints(q, {0, 1})));
  DenseMatrix empty(0, 3, q);
  CHECK(row_space_membership(empty, vec_of_ints(q, {0, 0, 0})));
  CHECK_THROWS_AS(row_space_membership(m, vec_of_ints(q, {1, 2, 3})), DimensionError);
}

static DenseMatrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t rows,
                                 std::size_t cols) {
  DenseMatrix m(0, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < cols; ++j) row.push_back(Scalar::of_int(draw(rng, -4, 4), f));
    m.append_row(row);
  }
  return m;
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
  std::mt19937_64 rng(20240901);
  for (Field f : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + static_cast<std::size_t>(draw(rng, 0, 5));
      std::size_t cols = 1 + static_cast<std::size_t>(draw(rng, 0, 5));
      DenseMatrix m = random_matrix(f, rng, rows, cols);
      auto k = kernel_basis(m);
      CHECK(rank(m) + k.size() == cols);
      for (const auto& v : k) {
        for (std::size_t i = 0; i < rows; ++i) {
          Scalar dot = Scalar::zero(f);
          for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
          CHECK(dot.is_zero());
        }
      }
    }
  }
}

TEST_CASE("row permutation does not change rank or canonical kernel") {
  std::mt19937_64 rng(77);
  Field q = Field::rationals();
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 2 + static_cast<std::size_t>(draw(rng, 0, 4));
    std::size_t cols = 1 + static_cast<std::size_t>(draw(rng, 0, 5));
    DenseMatrix m = random_matrix(q, rng, rows, cols);
    std::vector<std::size_t> perm(rows);
    for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    DenseMatrix p(0, cols, q);
    for (auto i : perm) p.append_row(m.row(i));
    CHECK(rank(m) == rank(p));
    CHECK(kernel_basis(m) == kernel_basis(p));
    CHECK(rref(m) == rref(p));
  }
}

TEST_CASE("fp echelon agrees with dense rank over the same prime field") {
  std::mt19937_64 rng(5150);
  const std::uint64_t p = 2147483647;
  Field fp = Field::prime(p);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 1 + static_cast<std::size_t>(draw(rng, 0, 6));
    std::size_t cols = 1 + static_cast<std::size_t>(draw(rng, 0, 6));
    FpEchelon fe(p, cols);
    DenseMatrix m(0, cols, fp);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<std::pair<std::uint32_t, std::uint64_t>> sparse;
      std::vector<Scalar> dense;
      for (std::size_t j = 0; j < cols; ++j) {
        long long v = draw(rng, 0, 9);
        dense.push_back(Scalar::of_int(v, fp));
        if (v != 0) sparse.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint64_t>(v));
      }
      m.append_row(dense);
      fe.insert(sparse);
    }
    CHECK(fe.rank() == rank(m));
  }
}
