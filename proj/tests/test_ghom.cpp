#include <doctest.h>

#include "gradex/errors.hpp"
#include "gradex/homological.hpp"
#include "gradex/samples.hpp"
#include "support.hpp"

using namespace gradex;
using testing::el;
using testing::Z;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

HilbertFunction hf(std::initializer_list<std::pair<long, std::size_t>> xs) {
  HilbertFunction h;
  for (auto [d, n] : xs) h[el(Z, {d})] = n;
  return h;
}

DimensionReport exact(DimensionKind k, std::size_t v, std::size_t cutoff) { return {k, v, cutoff}; }
DimensionReport unbounded(DimensionKind k, std::size_t cutoff) { return {k, std::nullopt, cutoff}; }

}  // namespace

TEST_CASE("projective and injective modules over the dual numbers") {
  AlgebraPtr R = samples::dual_numbers();
  GradedModule reg = GradedModule::regular(R), k = samples::residue_module(R);
  CHECK(is_projective(reg));
  CHECK(is_injective(reg));  // the dual numbers are self-injective
  CHECK_FALSE(is_projective(k));
  CHECK_FALSE(is_injective(k));
  CHECK(is_flat(reg));
  CHECK(is_injective_direct(reg));
  CHECK_FALSE(is_injective_direct(k));
}

TEST_CASE("split idempotent module is projective without being free") {
  GradedModule M = samples::split_idempotent_module();
  CHECK(is_projective(M));
  CHECK(is_injective(M));
  CHECK(freeness(M).free == Truth::no);
}

TEST_CASE("graded dual of the dual numbers") {
  GradedModule E = injective_cogenerator(samples::dual_numbers());
  CHECK(hilbert(E) == hf({{-1, 1}, {0, 1}}));
  CHECK(is_injective(E));
  CHECK(is_isomorphism(double_dual_evaluation(GradedModule::regular(samples::dual_numbers()))));
}

TEST_CASE("dual is involutive and exact across the corpus") {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    CAPTURE(name);
    GradedModule D = dual(M);
    CHECK(D.dim() == M.dim());
    CHECK(dual(D) == M);
    CHECK(is_isomorphism(double_dual_evaluation(M)));
    for (const Subspace& s : graded_submodules(M)) {
      Submodule L = submodule(M, s);
      QuotientModule P = quotient_module(M, s);
      ModuleMorphism di = dual(L.inclusion), dp = dual(P.projection);
      CHECK(is_epimorphism(di));
      CHECK(is_monomorphism(dp));
      CHECK(kernel(di).module.dim() == image(dp).module.dim());
      CHECK(compose(di, dp).matrix.is_zero());
    }
  }
}

TEST_CASE("cogenerator detects nonzero morphisms") {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    if (M.dim() > 3) continue;
    CAPTURE(name);
    for (const auto& u : module_morphisms(M, M))
      if (!u.matrix.is_zero()) CHECK(cogenerator_detects(u));
  }
}

TEST_CASE("minimal resolution of the residue field of the dual numbers") {
  AlgebraPtr R = samples::dual_numbers();
  FreeResolution r = resolution(samples::residue_module(R), 5);
  CHECK(r.verify());
  CHECK_FALSE(r.terminated);
  REQUIRE(r.betti.size() == 6);
  for (long i = 0; i <= 5; ++i) CHECK(r.betti[i] == BettiRow{{el(Z, {i}), 1}});
  CHECK(betti_table_text(r).find("5") != std::string::npos);
}

TEST_CASE("resolutions of projective modules stop at once") {
  FreeResolution r = resolution(GradedModule::regular(samples::dual_numbers()), 4);
  CHECK(r.terminated);
  CHECK(r.length == 0u);
  CHECK(r.verify());
  FreeResolution nm = resolution(samples::residue_module(samples::dual_numbers()), 3, false);
  CHECK(nm.verify());
  CHECK(nm.betti[0].at(el(Z, {0})) == 1);
  CHECK_THROWS_AS(resolution(GradedModule::regular(samples::dual_numbers()), 33), ValidationError);
}

TEST_CASE("dimensions on documented modules") {
  AlgebraPtr R = samples::dual_numbers();
  GradedModule reg = GradedModule::regular(R), k = samples::residue_module(R);
  using K = DimensionKind;
  CHECK(dimension(reg, K::projective, 6) == exact(K::projective, 0, 6));
  CHECK(dimension(reg, K::injective, 6) == exact(K::injective, 0, 6));
  CHECK(dimension(k, K::projective, 6) == unbounded(K::projective, 6));
  CHECK(dimension(k, K::flat, 6) == unbounded(K::flat, 6));
  CHECK(dimension(k, K::injective, 6) == unbounded(K::injective, 6));
  CHECK(dimension(k, K::projective, 6).to_string() == "≥6");

  // F2[X]/(X^4) modulo X^2 is a quotient of R with nonzero kernel: infinite dimension again.
  AlgebraPtr T = samples::truncated_polynomial(F2, 4, Z, el(Z, {1}));
  GradedModule q = quotient_of_ring(T, GradedIdeal{Subspace(F2, 4, {T->basis_vector(2), T->basis_vector(3)})});
  CHECK_FALSE(dimension(q, K::projective, 4).value.has_value());

  // Everything over a product of fields has dimension 0.
  for (const auto& M : {samples::split_idempotent_module(), GradedModule::regular(samples::product_field(F2, 3, Z))})
    for (K kind : {K::projective, K::injective, K::flat}) CHECK(dimension(M, kind, 4) == exact(kind, 0, 4));
}

TEST_CASE("dimension reports order by cutoff") {
  using K = DimensionKind;
  CHECK(at_most(exact(K::flat, 1, 6), exact(K::flat, 2, 6)));
  CHECK(at_most(exact(K::flat, 3, 6), unbounded(K::flat, 6)));
  CHECK_FALSE(at_most(unbounded(K::flat, 6), exact(K::flat, 3, 6)));
  CHECK(at_most(unbounded(K::flat, 6), unbounded(K::flat, 6)));
}

TEST_CASE("direct injective dimension agrees with the resolution route") {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    CAPTURE(name);
    CHECK(injective_dimension_direct(M, 4) == dimension(M, DimensionKind::injective, 4));
    CHECK(is_injective(M) == is_injective_direct(M));
  }
}

TEST_CASE("schanuel glue for one and two steps over the dual numbers") {
  AlgebraPtr R = samples::dual_numbers();
  GradedModule k = samples::residue_module(R);
  ExactSequence a = truncate(resolution(k, 1), 1);
  a.validate();
  ExactSequence b = pad(a, el(Z, {1}));
  b.validate();
  CHECK(hilbert(a.kernel().module) == hf({{1, 1}}));
  CHECK(hilbert(b.kernel().module) == hf({{1, 2}, {2, 1}}));
  SchanuelResult s = schanuel_glue(a, b);
  CHECK(s.verified);
  CHECK(is_isomorphism(s.iso));
  CHECK(s.source_hilbert == hf({{0, 1}, {1, 3}, {2, 1}}));
  CHECK(s.target_hilbert == s.source_hilbert);
  for (const auto& d : s.iso.source.degrees()) CHECK(d.coords.size() == 1);

  ExactSequence a2 = truncate(resolution(k, 2), 2);
  ExactSequence b2 = pad(a2, el(Z, {1}));
  SchanuelResult s2 = schanuel_glue(a2, b2);
  CHECK(s2.verified);
  CHECK(is_isomorphism(s2.iso));

  ExactSequence nm = truncate(resolution(k, 2, false), 2);
  CHECK(schanuel_glue(a2, nm).verified);
  CHECK_THROWS_AS(schanuel_glue(a, a2), ValidationError);
}

TEST_CASE("coarsening preserves homological dimensions") {
  FGAbelianGroup C2 = FGAbelianGroup::cyclic(2);
  AlgebraPtr R = samples::dual_numbers(F2);
  AlgebraPtr G = samples::group_algebra(F2, C2);
  struct Case {
    GradedModule M;
    GroupHom psi;
  };
  std::vector<Case> cases{
      {samples::residue_module(R), samples::to_trivial(Z)},
      {samples::residue_module(R), samples::reduction(2)},
      {GradedModule::regular(G), samples::to_trivial(C2)},
      {samples::residue_module(G), samples::to_trivial(C2)},
      {samples::split_idempotent_module(), samples::to_trivial(Z)},
  };
  for (const auto& c : cases) {
    DimensionComparison d = coarsen_dimension_compare(c.M, c.psi, 6);
    CHECK(d.ok());
    CHECK(d.pd_equal);
    CHECK(d.fd_equal);
    CHECK(d.betti_equal);
    if (kernel_data(c.psi).finite) {
      REQUIRE(d.id_equal.has_value());
      CHECK(*d.id_equal);
    }
  }
}

TEST_CASE("flatness matches injectivity of the character module") {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    CAPTURE(name);
    LambekCheck l = lambek_check(M);
    CHECK(l.agree());
    GradedModule E = injective_cogenerator(M.ring());
    CHECK(is_injective(E));
    GradedModule H = graded_hom(M, E).module;
    CHECK(at_most(dimension(H, DimensionKind::injective, 4), dimension(M, DimensionKind::flat, 4)));
  }
}
