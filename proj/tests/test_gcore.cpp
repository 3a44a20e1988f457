#include <doctest.h>

#include <functional>

#include "gradex/algebra.hpp"
#include "gradex/functors.hpp"
#include "gradex/monoid.hpp"
#include "gradex/samples.hpp"
#include "support.hpp"

using namespace gradex;
using testing::el;
using testing::iv;
using testing::vec;
using testing::Z;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

// Every vector of F_p^n.
void for_each_vector(const Field& f, std::size_t n, const std::function<void(const Vector&)>& fn) {
  const unsigned long p = f.characteristic();
  Vector v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(v);
      return;
    }
    for (unsigned long c = 0; c < p; ++c) {
      v[i] = Rational(c);
      rec(i + 1);
    }
  };
  rec(0);
}

AlgebraPtr f2_group_algebra() { return samples::group_algebra(F2, FGAbelianGroup::cyclic(2)); }

AlgebraPtr zero_ring() { return GradedAlgebra::make(Z, Q, {}, {}, {}); }

}  // namespace

TEST_CASE("construction accepts documented algebras") {
  CHECK_NOTHROW(samples::ground(Q, Z));
  CHECK_NOTHROW(samples::ground(Q, FGAbelianGroup::cyclic(3)));
  AlgebraPtr R = samples::dual_numbers();
  CHECK(R->dim() == 2);
  CHECK(R->degree(1) == el(Z, {1}));
  CHECK(is_zero(R->multiply(R->basis_vector(1), R->basis_vector(1))));
}

TEST_CASE("construction reports the offending triple") {
  StructureBuilder b(2);
  b.set(0, 0, {{0, Rational(1)}});
  b.set(0, 1, {{1, Rational(1)}});
  b.set(1, 1, {{0, Rational(1)}});
  try {
    GradedAlgebra::make(Z, Q, {el(Z, {0}), el(Z, {1})}, b.build(), vec({1, 0}));
    FAIL("grading violation accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.fault() == AlgebraError::Fault::grading);
    CHECK(e.i() == 1);
    CHECK(e.j() == 1);
    CHECK(e.k() == 0);
  }

  std::vector<Rational> c(8);
  c[0] = 1;                   // x0 x0 = x0
  c[(0 * 2 + 1) * 2 + 1] = 1;  // x0 x1 = x1, but x1 x0 = 0
  try {
    GradedAlgebra::make(Z, Q, {el(Z, {0}), el(Z, {1})}, c, vec({1, 0}));
    FAIL("non-commutative table accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.fault() == AlgebraError::Fault::commutativity);
  }

  StructureBuilder u(2);
  u.set(0, 0, {{0, Rational(1)}});
  u.set(0, 1, {{1, Rational(1)}});
  CHECK_THROWS_AS(GradedAlgebra::make(Z, Q, {el(Z, {0}), el(Z, {1})}, u.build(), vec({0, 1})), AlgebraError);

  // x^2 = x and x * 1 = 2x is not associative.
  StructureBuilder a(2);
  a.set(0, 0, {{0, Rational(1)}});
  a.set(0, 1, {{1, Rational(2)}});
  a.set(1, 1, {{1, Rational(1)}});
  try {
    GradedAlgebra::make(Z, Q, {el(Z, {0}), el(Z, {0})}, a.build(), vec({1, 0}));
    FAIL("bad table accepted");
  } catch (const AlgebraError& e) {
    CHECK((e.fault() == AlgebraError::Fault::associativity || e.fault() == AlgebraError::Fault::unit));
  }
}

TEST_CASE("element classification on documented elements") {
  AlgebraPtr D = samples::dual_numbers();
  ElementClass x = classify_element(*D, vec({0, 1}));
  CHECK((!x.unit && !x.regular && x.nilpotent && x.homogeneous));

  AlgebraPtr G = f2_group_algebra();
  ElementClass e1 = classify_element(*G, vec({0, 1}));
  CHECK((e1.unit && e1.regular && !e1.nilpotent && e1.homogeneous));
  ElementClass sum = classify_element(*G, vec({1, 1}));
  CHECK((!sum.unit && !sum.regular && sum.nilpotent && !sum.homogeneous));
  AlgebraPtr coarse = coarsen(G, samples::to_trivial(FGAbelianGroup::cyclic(2)));
  CHECK(classify_element(*coarse, vec({1, 1})).homogeneous);

  ElementClass zero = classify_element(*D, vec({0, 0}));
  CHECK((!zero.unit && !zero.regular && zero.nilpotent && zero.homogeneous));
}

TEST_CASE("ring classification on documented rings") {
  RingClass g = classify_ring(*samples::gaussian_z2());
  CHECK(g.simple == Truth::yes);
  CHECK(g.entire == Truth::yes);
  CHECK(g.reduced == Truth::yes);

  AlgebraPtr G = f2_group_algebra();
  CHECK(classify_ring(*G).simple == Truth::yes);
  RingClass c = classify_ring(*coarsen(G, samples::to_trivial(FGAbelianGroup::cyclic(2))));
  CHECK(c.reduced == Truth::no);
  CHECK(c.simple == Truth::no);

  RingClass d = classify_ring(*samples::dual_numbers());
  CHECK((d.simple == Truth::no && d.entire == Truth::no && d.reduced == Truth::no));

  RingClass z = classify_ring(*zero_ring());
  CHECK((z.simple == Truth::no && z.entire == Truth::no && z.reduced == Truth::yes));

  // A basis idempotent refutes simplicity even over Q.
  RingClass prod = classify_ring(*samples::product_field(Q, 2, Z));
  CHECK(prod.simple == Truth::no);
  CHECK(prod.reduced == Truth::yes);
  // Q(sqrt 2) placed in degree 0 has a two-dimensional component and stays open.
  FGAbelianGroup T = FGAbelianGroup::trivial();
  RingClass ext = classify_ring(*samples::pure_extension(Q, 2, Rational(2), T, T.zero()));
  CHECK(ext.simple == Truth::undecided);
  CHECK(ext.reduced == Truth::yes);
}

TEST_CASE("nilradical and zerodivisor ideal on documented rings") {
  AlgebraPtr D = samples::dual_numbers();
  CHECK(nilradical(*D).space == Subspace(Q, 2, {vec({0, 1})}));
  CHECK(nilradical(*samples::gaussian_z2()).dim() == 0);
  AlgebraPtr coarse = coarsen(f2_group_algebra(), samples::to_trivial(FGAbelianGroup::cyclic(2)));
  CHECK(nilradical(*coarse).space == Subspace(F2, 2, {vec({1, 1})}));

  auto zd = zerodivisor_ideal(*samples::truncated_polynomial(F2, 2, Z, el(Z, {1})));
  REQUIRE(zd);
  CHECK(zd->space == Subspace(F2, 2, {vec({0, 1})}));
  CHECK(zerodivisor_ideal(*D).has_value());
  CHECK_FALSE(zerodivisor_ideal(*samples::product_field(Q, 2, Z)).has_value());
}

TEST_CASE("ideal operations on documented ideals") {
  AlgebraPtr D = samples::dual_numbers();
  GradedIdeal x = ideal_generated(*D, {vec({0, 1})});
  Quotient q = quotient_ring(D, x);
  CHECK(q.ring->dim() == 1);
  CHECK(q.ring->degree(0) == el(Z, {0}));
  IdealClass cls = ideal_class(D, x);
  CHECK((cls.maximal == Truth::yes && cls.prime == Truth::yes && cls.perfect == Truth::yes));
  GradedIdeal zero{Subspace::zero(Q, 2)};
  CHECK(radical(D, zero) == x);

  AlgebraPtr G = f2_group_algebra();
  CHECK(ideal_class(G, GradedIdeal{Subspace::zero(F2, 2)}).prime == Truth::yes);
  CHECK_THROWS_AS(ideal_generated(*G, {vec({1, 1})}), ValidationError);
}

TEST_CASE("graded spectra on documented rings") {
  auto s1 = spec_enumerate(samples::truncated_polynomial(F2, 2, Z, el(Z, {1})));
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].space == Subspace(F2, 2, {vec({0, 1})}));
  auto s2 = spec_enumerate(f2_group_algebra());
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].dim() == 0);
  auto s3 = spec_enumerate(samples::product_field(F2, 2, FGAbelianGroup::trivial()));
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].dim() == 1);
  CHECK(s3[1].dim() == 1);
  CHECK_FALSE(s3[0] == s3[1]);
}

TEST_CASE("element flags obey the implication chain and ignore the grading") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    CAPTURE(name);
    AlgebraPtr flat = coarsen(R, samples::to_trivial(R->group()));
    for_each_vector(R->field(), R->dim(), [&](const Vector& x) {
      ElementClass c = classify_element(*R, x);
      if (c.homogeneous) {
        if (c.unit) CHECK(c.regular);
        if (c.regular) CHECK_FALSE(is_zero(x));
        if (c.nilpotent && !is_zero(x)) CHECK_FALSE(c.regular);
      }
      ElementClass d = classify_element(*flat, x);
      CHECK((c.unit == d.unit && c.regular == d.regular && c.nilpotent == d.nilpotent));
    });
  }
}

TEST_CASE("reducedness is detected by squares of homogeneous elements") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    CAPTURE(name);
    bool square_zero = false;
    for_each_vector(R->field(), R->dim(), [&](const Vector& x) {
      if (!is_zero(x) && R->is_homogeneous(x) && is_zero(R->multiply(x, x))) square_zero = true;
    });
    CHECK(classify_ring(*R).reduced == to_truth(!square_zero));
  }
}

TEST_CASE("nilradical is the intersection of the graded primes over F_2") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    if (R->field().characteristic() != 2 || R->dim() > 4) continue;
    CAPTURE(name);
    Subspace meet = Subspace::full(F2, R->dim());
    for (const auto& P : spec_enumerate(R)) meet = meet.intersect(P.space);
    CHECK(meet == nilradical(*R).space);
  }
}

TEST_CASE("radicals are idempotent and perfect") {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    if (R->dim() > 3) continue;
    CAPTURE(name);
    for (const auto& s : graded_subspaces(R->field(), R->degrees())) {
      if (!is_graded_ideal(*R, s)) continue;
      GradedIdeal a{s};
      GradedIdeal r = radical(R, a);
      CHECK(radical(R, r) == r);
      CHECK(r.space.contains(a.space));
      CHECK(ideal_class(R, r).perfect == Truth::yes);
    }
  }
}

TEST_CASE("affine monoids on documented generators") {
  AffineMonoid N2(2, {iv({1, 0}), iv({0, 1})});
  CHECK(N2.sharp());
  CHECK(N2.diff_group() == FGAbelianGroup::integers(2));
  AffineMonoid Zm(1, {iv({1}), iv({-1})});
  CHECK_FALSE(Zm.sharp());
  CHECK(Zm.is_group());
  REQUIRE(Zm.unit_relation());
  AffineMonoid skew(2, {iv({1, 1}), iv({1, -1})});
  CHECK(skew.sharp());
  CHECK(skew.sharp_method() == "lp");
  CHECK(skew.diff_group() == FGAbelianGroup::integers(2));
  CHECK(skew.diff_basis() == testing::imat({{1, 0}, {1, 2}}));
  CHECK(Zm.diff_basis() == testing::imat({{1}}));
  CHECK(skew.contains(iv({2, 0})) == Truth::yes);
  CHECK(skew.contains(iv({1, 0})) == Truth::no);
  AffineMonoid dup(1, {iv({1}), iv({1}), iv({0})});
  CHECK(dup.generators().size() == 1);
}

TEST_CASE("monoid algebras inherit classification from the base") {
  MonoidAlgebra poly = samples::polynomial_coarse();
  RingClass pc = poly.classify();
  CHECK(pc.entire == Truth::yes);
  CHECK(pc.simple == Truth::no);
  const Vector one = vec({1});
  CHECK(poly.is_unit(poly.monomial(vec({2}), iv({0}))) == Truth::yes);
  CHECK(poly.is_unit(poly.monomial(one, iv({1}))) == Truth::no);
  CHECK(poly.is_unit(poly.add(poly.one(), poly.monomial(one, iv({1})))) == Truth::no);

  MonoidAlgebra L = samples::laurent();
  CHECK(L.classify().entire == Truth::yes);
  CHECK(L.classify().simple == Truth::yes);
  MonoidElement X = L.monomial(one, iv({1}));
  CHECK(L.is_unit(X) == Truth::yes);
  CHECK(L.multiply(X, L.monomial(one, iv({-1}))) == L.one());
  CHECK(L.degree_of(X) == el(Z, {1}));

  MonoidAlgebra dual_poly(samples::dual_numbers(), AffineMonoid(1, {iv({1})}), GradingMode::fine);
  CHECK(dual_poly.classify().reduced == Truth::no);
  CHECK(dual_poly.classify().entire == Truth::no);
}

TEST_CASE("d-graded monoid algebras check the grading matrix") {
  IntMatrix d(1, 1);
  d(0, 0) = 2;
  MonoidAlgebra R(samples::ground(Q, Z), AffineMonoid(1, {iv({1})}), GradingMode::d, d);
  CHECK(R.monomial_degree(0, iv({3})) == el(Z, {6}));
  CHECK_THROWS_AS(MonoidAlgebra(samples::ground(Q, Z), AffineMonoid(1, {iv({1})}), GradingMode::d, IntMatrix(2, 1)),
                  ValidationError);
}
