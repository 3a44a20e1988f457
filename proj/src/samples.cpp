#include "gradex/samples.hpp"

#include <algorithm>

namespace gradex::samples {

namespace {

FGAbelianGroup Z() { return FGAbelianGroup::integers(1); }

GroupElement at(const FGAbelianGroup& G, std::vector<long> c) {
  IntVector v;
  for (long x : c) v.emplace_back(x);
  return G.reduce(v);
}

}  // namespace

AlgebraPtr truncated_polynomial(const Field& f, std::size_t n, const FGAbelianGroup& G, const GroupElement& g) {
  StructureBuilder b(n);
  std::vector<GroupElement> degs;
  for (std::size_t k = 0; k < n; ++k) {
    degs.push_back(G.scale(Integer(static_cast<unsigned long>(k)), g));
    for (std::size_t l = k; l < n; ++l)
      if (k + l < n) b.set(k, l, {{k + l, Rational(1)}});
  }
  Vector unit(n);
  if (n > 0) unit[0] = 1;
  return GradedAlgebra::make(G, f, degs, b.build(), unit);
}

AlgebraPtr dual_numbers(const Field& f) { return truncated_polynomial(f, 2, Z(), at(Z(), {1})); }

AlgebraPtr pure_extension(const Field& f, std::size_t n, const Rational& a, const FGAbelianGroup& G,
                          const GroupElement& g) {
  StructureBuilder b(n);
  std::vector<GroupElement> degs;
  for (std::size_t k = 0; k < n; ++k) {
    degs.push_back(G.scale(Integer(static_cast<unsigned long>(k)), g));
    for (std::size_t l = k; l < n; ++l) {
      if (k + l < n) b.set(k, l, {{k + l, Rational(1)}});
      else b.set(k, l, {{k + l - n, f.reduce(a)}});
    }
  }
  Vector unit(n);
  unit[0] = 1;
  return GradedAlgebra::make(G, f, degs, b.build(), unit);
}

AlgebraPtr gaussian_z2() {
  FGAbelianGroup C2 = FGAbelianGroup::cyclic(2);
  return pure_extension(Field::rationals(), 2, Rational(-1), C2, at(C2, {1}));
}

AlgebraPtr group_algebra(const Field& f, const FGAbelianGroup& A) {
  auto elems = A.elements();
  const std::size_t n = elems.size();
  StructureBuilder b(n);
  Vector unit(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (elems[i].is_zero()) unit[i] = 1;
    for (std::size_t j = i; j < n; ++j) {
      GroupElement s = A.add(elems[i], elems[j]);
      std::size_t k = std::find(elems.begin(), elems.end(), s) - elems.begin();
      b.set(i, j, {{k, Rational(1)}});
    }
  }
  return GradedAlgebra::make(A, f, elems, b.build(), unit);
}

AlgebraPtr product_field(const Field& f, std::size_t k, const FGAbelianGroup& G) {
  StructureBuilder b(k);
  for (std::size_t i = 0; i < k; ++i) b.set(i, i, {{i, Rational(1)}});
  return GradedAlgebra::make(G, f, std::vector<GroupElement>(k, G.zero()), b.build(), Vector(k, Rational(1)));
}

AlgebraPtr exterior_square(const Field& f) {
  FGAbelianGroup Z2 = FGAbelianGroup::integers(2);
  StructureBuilder b(4);
  for (std::size_t i = 0; i < 4; ++i) b.set(0, i, {{i, Rational(1)}});
  b.set(1, 2, {{3, Rational(1)}});
  std::vector<GroupElement> degs{at(Z2, {0, 0}), at(Z2, {1, 0}), at(Z2, {0, 1}), at(Z2, {1, 1})};
  return GradedAlgebra::make(Z2, f, degs, b.build(), Vector{1, 0, 0, 0});
}

AlgebraPtr ground(const Field& f, const FGAbelianGroup& G) {
  StructureBuilder b(1);
  b.set(0, 0, {{0, Rational(1)}});
  return GradedAlgebra::make(G, f, {G.zero()}, b.build(), Vector{1});
}

MonoidAlgebra laurent(const Field& f) {
  return MonoidAlgebra(ground(f, FGAbelianGroup::trivial()), AffineMonoid(1, {{Integer(1)}, {Integer(-1)}}),
                       GradingMode::fine);
}

MonoidAlgebra polynomial_coarse(const Field& f) {
  return MonoidAlgebra(ground(f, FGAbelianGroup::trivial()), AffineMonoid(1, {{Integer(1)}}), GradingMode::coarse);
}

GroupHom reduction(long n) {
  IntMatrix m(1, 1);
  m(0, 0) = 1;
  return GroupHom(Z(), FGAbelianGroup::cyclic(n), m);
}

GroupHom to_trivial(const FGAbelianGroup& G) {
  return GroupHom(G, FGAbelianGroup::trivial(), IntMatrix(0, G.ngens()));
}

GroupHom multiplication(long k) {
  IntMatrix m(1, 1);
  m(0, 0) = k;
  return GroupHom(Z(), Z(), m);
}

GroupHom from_trivial(const FGAbelianGroup& G) {
  return GroupHom(FGAbelianGroup::trivial(), G, IntMatrix(G.ngens(), 0));
}

GradedModule residue_module(const AlgebraPtr& R) { return quotient_of_ring(R, graded_jacobson(*R)); }

GradedModule split_idempotent_module(const Field& f) {
  FGAbelianGroup G = Z();
  AlgebraPtr R = product_field(f, 2, G);
  Matrix e1(f, 2, 2), e2(f, 2, 2);
  e1(0, 0) = 1;
  e2(1, 1) = 1;
  return GradedModule::make(R, {at(G, {0}), at(G, {1})}, {e1, e2});
}

std::vector<PrincipalPresentation> principal_corpus(const Field& f) {
  FGAbelianGroup G = Z();
  auto d = [&](long x) { return at(G, {x}); };
  auto mono = [](long c, std::size_t k) -> PrincipalEntry { return Monomial{Rational(c), k}; };
  const PrincipalEntry z = std::nullopt;
  std::vector<PrincipalPresentation> out;
  out.push_back({G, f, d(1), {d(0)}, {{mono(1, 2)}}});
  out.push_back({G, f, d(1), {d(0), d(0)}, {{mono(1, 1), z}, {z, mono(1, 2)}}});
  out.push_back({G, f, d(1), {d(0), d(1)}, {{mono(1, 2), mono(1, 1)}, {mono(1, 3), mono(1, 2)}}});
  out.push_back({G, f, d(1), {d(0), d(0)}, {{mono(1, 1), mono(1, 1)}, {mono(1, 2), z}, {z, mono(1, 3)}}});
  out.push_back({G, f, d(1), {d(0), d(2), d(1)},
                 {{mono(2, 3), mono(1, 1), mono(-1, 2)}, {z, mono(1, 2), z}, {mono(1, 1), z, z}}});
  return out;
}

std::vector<NamedAlgebra> finite_field_rings() {
  const Field F2 = Field::prime(2), F3 = Field::prime(3);
  FGAbelianGroup C2 = FGAbelianGroup::cyclic(2), C3 = FGAbelianGroup::cyclic(3);
  std::vector<NamedAlgebra> out;
  out.push_back({"F2[X]/(X^2) over Z", truncated_polynomial(F2, 2, Z(), at(Z(), {1}))});
  out.push_back({"F2[X]/(X^4) over Z", truncated_polynomial(F2, 4, Z(), at(Z(), {1}))});
  AlgebraPtr fine = group_algebra(F2, C2);
  out.push_back({"F2[Z/2] fine", fine});
  out.push_back({"F2[Z/2] over 0", coarsen(fine, to_trivial(C2))});
  out.push_back({"F2 x F2 over Z", product_field(F2, 2, Z())});
  out.push_back({"F3[X]/(X^2) over Z", truncated_polynomial(F3, 2, Z(), at(Z(), {1}))});
  out.push_back({"F3[Z/3] fine", group_algebra(F3, C3)});
  out.push_back({"F3[X]/(X^2-1) over Z/2", pure_extension(F3, 2, Rational(1), C2, at(C2, {1}))});
  out.push_back({"F2[X,Y]/(X^2,Y^2) over Z^2", exterior_square(F2)});
  StructureBuilder b(2);
  b.set(0, 0, {{0, Rational(1)}});
  b.set(0, 1, {{1, Rational(1)}});
  b.set(1, 1, {{0, Rational(1)}, {1, Rational(1)}});
  FGAbelianGroup T = FGAbelianGroup::trivial();
  out.push_back({"F4 over 0", GradedAlgebra::make(T, F2, {T.zero(), T.zero()}, b.build(), Vector{1, 0})});
  return out;
}

std::vector<NamedModule> finite_field_modules() {
  std::vector<NamedModule> out;
  for (const auto& [name, R] : finite_field_rings()) {
    GradedModule reg = GradedModule::regular(R);
    out.push_back({name + ": R", reg});
    GradedIdeal J = graded_jacobson(*R);
    if (J.dim() > 0) {
      GradedModule k = residue_module(R);
      out.push_back({name + ": R/J", k});
      out.push_back({name + ": J", ideal_module(R, J)});
      if (R->dim() <= 2) out.push_back({name + ": R/J + R", direct_sum({k, reg}).module});
    }
    for (const auto& g : R->support())
      if (!g.is_zero()) {
        out.push_back({name + ": R(" + g.to_string() + ")", shift(reg, g)});
        break;
      }
  }
  out.push_back({"F2 x F2 over Z: split idempotents", split_idempotent_module()});
  return out;
}

}  // namespace gradex::samples
