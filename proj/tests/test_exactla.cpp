#include <doctest.h>

#include "gradex/linalg.hpp"
#include "support.hpp"

using namespace gradex;
using testing::mat;
using testing::vec;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

std::uint64_t lcg(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 33;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::uint64_t& s) {
  Matrix A(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = f.from_int(static_cast<long>(lcg(s) % 5) - 2);
  return A;
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  CHECK(Q.add(Rational(1, 3), Rational(1, 6)) == Rational(1, 2));
  CHECK(Q.inv(Rational(-2, 3)) == Rational(-3, 2));
  CHECK(F3.reduce(Rational(-1)) == 2);
  CHECK(F3.reduce(Rational(1, 2)) == 2);
  CHECK(F2.mul(1, 1) == 1);
  CHECK(F3.pow(2, 3) == 2);
  CHECK_THROWS(Q.inv(0));
  CHECK_THROWS(Field::prime(4));
  CHECK(Q.name() != F2.name());
}

TEST_CASE("solve, kernel and rank on documented systems") {
  auto x = solve(Matrix::identity(Q, 2), vec({1, 2}));
  REQUIRE(x);
  CHECK(*x == vec({1, 2}));
  auto k = kernel_basis(mat(F2, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, 1}));
  CHECK(rank(mat(Q, {{2, 4}, {1, 2}})) == 1);
  CHECK_FALSE(solve(mat(Q, {{1, 1}, {1, 1}}), vec({1, 2})).has_value());
}

TEST_CASE("rank plus nullity equals columns on generated matrices") {
  std::uint64_t s = 7;
  for (const Field& f : {Q, F2, F3})
    for (int t = 0; t < 40; ++t) {
      std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 5;
      Matrix A = random_matrix(f, r, c, s);
      auto K = kernel_basis(A);
      CHECK(rank(A) + K.size() == c);
      for (const auto& v : K) CHECK(is_zero(A * v));
      Vector probe(c);
      for (std::size_t j = 0; j < c; ++j) probe[j] = f.from_int(static_cast<long>(j) + 1);
      Vector b = A * probe;
      auto sol = solve(A, b);
      REQUIRE(sol);
      CHECK(A * *sol == b);
    }
}

TEST_CASE("determinant and inverse agree") {
  Matrix A = mat(Q, {{2, 1}, {7, 4}});
  CHECK(determinant(A) == 1);
  auto inv = inverse(A);
  REQUIRE(inv);
  CHECK(A * *inv == Matrix::identity(Q, 2));
  CHECK_FALSE(inverse(mat(F2, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("subspaces keep a reduced echelon basis") {
  Subspace a(Q, 3, {vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 1, 1})});
  CHECK(a.dim() == 2);
  CHECK(a.contains(vec({1, 2, 1})));
  CHECK_FALSE(a.contains(vec({0, 0, 1})));
  Subspace b(Q, 3, {vec({0, 0, 1})});
  CHECK(a.sum(b) == Subspace::full(Q, 3));
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.coordinates(vec({1, 2, 1})).size() == 2);
}

TEST_CASE("invertible intertwiner on documented solution sets") {
  auto id = invertible_intertwiner(Matrix::identity(Q, 2), {}, 1);
  CHECK(id.outcome == SearchOutcome::found);
  CHECK(*id.matrix == Matrix::identity(Q, 2));

  std::vector<Matrix> all;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix E(F2, 2, 2);
    E(i / 2, i % 2) = 1;
    all.push_back(E);
  }
  auto any = invertible_intertwiner(Matrix(F2, 2, 2), all, 1);
  REQUIRE(any.outcome == SearchOutcome::found);
  CHECK(determinant(*any.matrix) != 0);

  // Oracle: of the 16 matrices over F_2 exactly 6 are invertible.
  int invertible = 0;
  for (int code = 0; code < 16; ++code) {
    Matrix M(F2, 2, 2);
    for (int b = 0; b < 4; ++b) M(b / 2, b % 2) = (code >> b) & 1;
    invertible += determinant(M) != 0;
  }
  CHECK(invertible == 6);

  Matrix nil = mat(Q, {{0, 1}, {0, 0}});
  CHECK(invertible_intertwiner(Matrix(Q, 2, 2), {nil}, 1).outcome == SearchOutcome::proven_none);
  CHECK(invertible_intertwiner(Matrix(F2, 2, 2), {mat(F2, {{0, 1}, {0, 0}})}, 1).outcome ==
        SearchOutcome::proven_none);
}

TEST_CASE("exhaustive and randomized intertwiner searches agree over finite fields") {
  std::uint64_t s = 99;
  for (int t = 0; t < 30; ++t) {
    const Field& f = t % 2 ? F3 : F2;
    std::size_t n = 2 + t % 2;
    std::size_t k = 1 + t % 3;
    Matrix P = random_matrix(f, n, n, s);
    std::vector<Matrix> K;
    for (std::size_t i = 0; i < k; ++i) K.push_back(random_matrix(f, n, n, s));
    auto ex = invertible_intertwiner(P, K, 5, 4096, SearchMode::exhaustive);
    auto rnd = invertible_intertwiner(P, K, 5, 4096, SearchMode::randomized);
    CHECK(ex.outcome != SearchOutcome::budget_exhausted);
    if (ex.outcome == SearchOutcome::found) {
      CHECK(determinant(*ex.matrix) != 0);
      CHECK(rnd.outcome == SearchOutcome::found);
    } else {
      CHECK(rnd.outcome != SearchOutcome::found);
    }
    if (rnd.matrix) CHECK(determinant(*rnd.matrix) != 0);
  }
}

TEST_CASE("intertwiner search over Q finds members of generic pencils") {
  Matrix A = mat(Q, {{1, 0}, {0, 0}}), B = mat(Q, {{0, 0}, {0, 1}});
  auto r = invertible_intertwiner(Matrix(Q, 2, 2), {A, B}, 3);
  REQUIRE(r.outcome == SearchOutcome::found);
  CHECK(determinant(*r.matrix) != 0);
  auto same = invertible_intertwiner(Matrix(Q, 2, 2), {A, B}, 3);
  CHECK(*same.matrix == *r.matrix);
}
