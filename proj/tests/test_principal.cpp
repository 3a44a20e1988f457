#include <doctest.h>

#include "gradex/errors.hpp"
#include "gradex/principal.hpp"
#include "gradex/samples.hpp"
#include "support.hpp"

using namespace gradex;
using testing::el;
using testing::Z;

namespace {

const Field Q = Field::rationals();

long deg(const GroupElement& g) { return g.coords[0].get_si(); }

// Dimension of the degree-d part of the submodule, spanned by X^k times the generators.
// Multiplying a column by X^k leaves its coefficient vector unchanged.
std::size_t component_dim(const PrincipalPresentation& P, long d) {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < P.gens.size(); ++j) {
    auto cd = P.column_degree(j);
    if (!cd || deg(*cd) > d) continue;
    Vector v(P.ambient.size());
    for (std::size_t r = 0; r < P.ambient.size(); ++r)
      if (P.gens[j][r]) v[r] = P.gens[j][r]->coeff;
    rows.push_back(v);
  }
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(Q, rows, P.ambient.size()));
}

// Same count predicted by a sum of shifted ideals <X^e>(s).
std::size_t predicted_dim(const PrincipalDecomposition& D, long d) {
  std::size_t n = 0;
  for (const auto& s : D.summands) n += d >= static_cast<long>(s.exponent) - deg(s.shift);
  return n;
}

// Rank over K(X), read off from evaluations at several points.
std::size_t generic_rank(const PrincipalPresentation& P) {
  std::size_t best = 0;
  for (long t = 1; t <= 6; ++t) {
    std::vector<Vector> cols;
    for (const auto& col : P.gens) {
      Vector v(P.ambient.size());
      for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r]) {
          Rational x = col[r]->coeff;
          for (std::size_t e = 0; e < col[r]->exponent; ++e) x *= t;
          v[r] = x;
        }
      cols.push_back(v);
    }
    best = std::max(best, rank(Matrix::from_rows(Q, cols, P.ambient.size())));
  }
  return best;
}

}  // namespace

TEST_CASE("corpus decompositions") {
  auto corpus = samples::principal_corpus();
  REQUIRE(corpus.size() == 5);
  const std::vector<std::size_t> ranks{1, 2, 1, 2, 3}, gens{1, 2, 2, 3, 3};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    PrincipalDecomposition D = decompose(corpus[i]);
    CHECK(D.free);
    CHECK(D.rank == ranks[i]);
    CHECK(D.generators == gens[i]);
    CHECK(D.rank == generic_rank(corpus[i]));
  }
  PrincipalDecomposition last = decompose(corpus[4]);
  REQUIRE(last.summands.size() == 3);
  CHECK(last.summands[1].shift == el(Z, {-2}));
  CHECK(last.summands[2].exponent == 3);
}

TEST_CASE("summand shifts reproduce the Hilbert function of the submodule") {
  for (const auto& P : samples::principal_corpus()) {
    PrincipalDecomposition D = decompose(P);
    for (long d = 0; d <= 8; ++d) {
      CAPTURE(d);
      CHECK(component_dim(P, d) == predicted_dim(D, d));
    }
  }
}

TEST_CASE("graded and coarse freeness agree with rank bounded by generators") {
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)})
    for (const auto& P : samples::principal_corpus(f)) {
      PrincipalSuiteReport r = principal_suite(P, samples::to_trivial(Z));
      CHECK(r.freeness_agrees);
      CHECK(r.rank_bound);
      CHECK(r.coarse.free);
      CHECK(r.coarse.rank == r.decomposition.rank);
      CHECK(r.decomposition.rank <= r.decomposition.generators);
    }
}

TEST_CASE("superfluousness of <X> does not survive coarsening") {
  SuperfluousCounterexample s = principal_superfluous(Q, Z, el(Z, {1}), samples::to_trivial(Z));
  CHECK(s.graded_superfluous);
  CHECK_FALSE(s.graded_certificate.empty());
  CHECK_FALSE(s.coarse_superfluous);
  REQUIRE(s.witness);
  CHECK(s.witness->to_string() == "X + 1");
  CHECK(*s.witness == Poly(Q, {Rational(1), Rational(1)}));
}

TEST_CASE("presentations are validated") {
  PrincipalPresentation bad = samples::principal_corpus()[2];
  bad.gens[0][1] = Monomial{Rational(1), 3};
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  PrincipalPresentation torsion = samples::principal_corpus()[0];
  torsion.group = FGAbelianGroup::cyclic(2);
  torsion.var_degree = el(torsion.group, {1});
  torsion.ambient = {torsion.group.zero()};
  CHECK_THROWS_AS(torsion.validate(), ValidationError);
}
