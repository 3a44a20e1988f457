#include <doctest.h>

#include <algorithm>

#include "gradex/concordance.hpp"
#include "gradex/errors.hpp"
#include "gradex/oracles.hpp"
#include "gradex/samples.hpp"
#include "support.hpp"

using namespace gradex;
using testing::el;
using testing::Z;

namespace {

const Field F2 = Field::prime(2);

std::vector<oracle::Vec> rows_where(const oracle::ClassifyTable& t, bool oracle::ElementRow::*flag) {
  std::vector<oracle::Vec> out;
  for (const auto& r : t.rows)
    if (r.*flag) out.push_back(r.coords);
  return out;
}

}  // namespace

TEST_CASE("units of the dual numbers over F2") {
  oracle::ClassifyTable t = oracle::exhaustive_classify(*samples::dual_numbers(F2));
  REQUIRE(t.rows.size() == 4);
  CHECK(rows_where(t, &oracle::ElementRow::unit) == std::vector<oracle::Vec>{{1, 0}, {1, 1}});
  CHECK(rows_where(t, &oracle::ElementRow::nilpotent) == std::vector<oracle::Vec>{{0, 0}, {0, 1}});
  CHECK_FALSE(t.simple);
  CHECK_FALSE(t.entire);
  CHECK_FALSE(t.reduced);
}

TEST_CASE("units and nilpotents of the group algebra of Z/2 over F2") {
  oracle::ClassifyTable t = oracle::exhaustive_classify(*samples::group_algebra(F2, FGAbelianGroup::cyclic(2)));
  CHECK(rows_where(t, &oracle::ElementRow::unit) == std::vector<oracle::Vec>{{0, 1}, {1, 0}});
  CHECK(rows_where(t, &oracle::ElementRow::nilpotent) == std::vector<oracle::Vec>{{0, 0}, {1, 1}});
  CHECK(rows_where(t, &oracle::ElementRow::homogeneous).size() == 3);
  CHECK(t.simple);
  CHECK(t.entire);
  CHECK(t.reduced);
}

TEST_CASE("submodules of F2[X]/(X^4) are the ideals generated by powers of x") {
  AlgebraPtr R = samples::truncated_polynomial(F2, 4, Z, el(Z, {1}));
  auto subs = oracle::graded_submodules(oracle::action_of(*R));
  REQUIRE(subs.size() == 5);
  for (std::size_t k = 0; k <= 4; ++k) {
    oracle::Basis want;
    for (std::size_t i = k; i < 4; ++i) {
      oracle::Vec v(4, 0);
      v[i] = 1;
      want.push_back(v);
    }
    CHECK(std::find(subs.begin(), subs.end(), want) != subs.end());
  }
  CHECK(oracle::nilradical(*R) == oracle::Basis{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto primes = oracle::graded_primes(*R);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0] == oracle::nilradical(*R));
}

TEST_CASE("oracle small-submodule answers on documented inclusions") {
  AlgebraPtr R = samples::truncated_polynomial(F2, 4, Z, el(Z, {1}));
  oracle::Action A = oracle::action_of(*R);
  CHECK(oracle::superfluous(A, {{0, 1, 0, 0}}).flag);
  CHECK(oracle::essential(A, {{0, 0, 0, 1}}).flag);
  oracle::SmallAnswer whole = oracle::superfluous(A, {{1, 0, 0, 0}});
  CHECK_FALSE(whole.flag);
  REQUIRE(whole.witness);

  oracle::Action P = oracle::action_of(*samples::product_field(F2, 2, Z));
  oracle::SmallAnswer e = oracle::essential(P, {{1, 0}});
  CHECK_FALSE(e.flag);
  REQUIRE(e.witness);
  CHECK(*e.witness == oracle::Basis{{0, 1}});
}

TEST_CASE("oracle linear algebra helpers") {
  CHECK(oracle::rref(2, {{1, 1}, {1, 1}, {0, 1}}, 2) == oracle::Basis{{1, 0}, {0, 1}});
  CHECK(oracle::intersect_all(3, 2, {}) == oracle::Basis{{1, 0}, {0, 1}});
  CHECK(oracle::intersect_all(3, 2, {{{1, 0}}, {{0, 1}}}).empty());
  CHECK(oracle::intersect_all(3, 2, {{{1, 1}}, {{1, 0}, {0, 1}}}) == oracle::Basis{{1, 1}});
}

TEST_CASE("oracle morphism counts") {
  GradedModule k = samples::residue_module(samples::dual_numbers(F2));
  CHECK(oracle::module_morphisms(k, k).size() == 2);
  AlgebraPtr P = samples::product_field(F2, 2, Z);
  // Orthogonal idempotent pairs summing to 1: identity, swap, and the two maps through one factor.
  CHECK(oracle::ring_morphisms(*P, *P).size() == 4);
}

TEST_CASE("oracles refuse infinite fields and oversized searches") {
  CHECK_THROWS(oracle::exhaustive_classify(*samples::dual_numbers()));
  CHECK_THROWS_AS(oracle::exhaustive_classify(*samples::truncated_polynomial(F2, 4, Z, el(Z, {1})), 8),
                  SizeGuardError);
}

TEST_CASE("main path and oracles agree on every finite-field ring") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    CAPTURE(name);
    OracleDiff d = oracle_diff(R);
    for (const auto& [check, ok] : d.checks) {
      CAPTURE(check);
      CHECK(ok);
    }
    CHECK(d.agree());
  }
}

TEST_CASE("main path and oracles agree on every finite-field module") {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    CAPTURE(name);
    OracleDiff d = oracle_diff(M);
    for (const auto& [check, ok] : d.checks) {
      CAPTURE(check);
      CHECK(ok);
    }
    CHECK(d.agree());
  }
}
