#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "gradex/concordance.hpp"
#include "gradex/homological.hpp"
#include "gradex/oracles.hpp"
#include "gradex/samples.hpp"

using namespace gradex;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const FGAbelianGroup Z = FGAbelianGroup::integers(1);
const FGAbelianGroup C2 = FGAbelianGroup::cyclic(2);
const FGAbelianGroup C3 = FGAbelianGroup::cyclic(3);

GroupElement at(const FGAbelianGroup& G, std::vector<long> c) {
  IntVector v;
  for (long x : c) v.emplace_back(x);
  return G.reduce(v);
}

IntMatrix int_rows(std::vector<std::vector<long>> rows, std::size_t cols) {
  std::vector<IntVector> r;
  for (const auto& row : rows) {
    IntVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return IntMatrix::from_rows(r, cols);
}

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t count() const { return count_; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s << (i ? "; " : ": failed ") << failures_[i];
    if (failures_.size() > 5) s << "; ...";
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> failures_;
};

// x^2 computed from the structure constants in machine integers.
brute::Vec square(const GradedAlgebra& R, const brute::Vec& x) {
  oracle::Action A = oracle::action_of(R);
  return brute::act(A, A.p, x, x);
}

// ---------------------------------------------------------------------------

void torsion_dichotomy(Checker& c) {
  FGAbelianGroup Z2 = FGAbelianGroup::integers(2);
  struct Pair {
    std::string name;
    AlgebraPtr R;
    GroupHom psi;
  };
  std::vector<Pair> pairs{
      {"F2[Z/2] -> 0", samples::group_algebra(F2, C2), samples::to_trivial(C2)},
      {"F3[Z/3] -> 0", samples::group_algebra(F3, C3), samples::to_trivial(C3)},
      {"Q[X]/(X^2+1) -> 0", samples::gaussian_z2(), samples::to_trivial(C2)},
      {"Q[X]/(X^2) along Z -> Z/2", samples::dual_numbers(), samples::reduction(2)},
      {"F2[X]/(X^4) -> 0", samples::truncated_polynomial(F2, 4, Z, at(Z, {1})), samples::to_trivial(Z)},
      {"Q in degree 0 along Z^2 -> Z", samples::ground(Q, Z2), GroupHom(Z2, Z, int_rows({{1, 0}}, 2))},
      {"F2[X,Y]/(X^2,Y^2) along Z^2 -> Z", samples::exterior_square(F2), GroupHom(Z2, Z, int_rows({{1, 1}}, 2))},
      {"F2 x F2 -> 0", samples::product_field(F2, 2, Z), samples::to_trivial(Z)},
      {"F3[X]/(X^2-2) along Z/2 -> 0", samples::pure_extension(F3, 2, Rational(2), C2, at(C2, {1})),
       samples::to_trivial(C2)},
  };
  c.expect(pairs.size() >= 6, "fewer than six pairs");
  std::size_t torsionfree = 0;
  for (const auto& p : pairs) {
    CoarseningReport r = coarsening_report(p.R, p.psi);
    c.expect(r.reflected, p.name + ": a coarse flag is not reflected");
    if (r.kernel_torsionfree) {
      ++torsionfree;
      c.expect(r.preserved, p.name + ": entire or reduced lost");
      auto yes = [](Truth t) { return t == Truth::yes; };
      if (yes(r.fine.entire)) c.expect(yes(r.coarse.entire), p.name + ": entire lost");
      if (yes(r.fine.reduced)) c.expect(yes(r.coarse.reduced), p.name + ": reduced lost");
    }
    // Finite fields: every decided flag of both sides against enumeration.
    if (p.R->field().is_finite()) {
      oracle::ClassifyTable fine = oracle::exhaustive_classify(*p.R);
      oracle::ClassifyTable coarse = oracle::exhaustive_classify(*coarsen(p.R, p.psi));
      auto agrees = [](Truth t, bool b) { return t == Truth::undecided || (t == Truth::yes) == b; };
      c.expect(agrees(r.fine.simple, fine.simple) && agrees(r.fine.entire, fine.entire) &&
                   agrees(r.fine.reduced, fine.reduced),
               p.name + ": fine flags disagree with enumeration");
      c.expect(agrees(r.coarse.simple, coarse.simple) && agrees(r.coarse.entire, coarse.entire) &&
                   agrees(r.coarse.reduced, coarse.reduced),
               p.name + ": coarse flags disagree with enumeration");
    }
  }
  c.expect(torsionfree >= 3, "too few torsionfree-kernel pairs");

  CoarseningReport split = coarsening_report(pairs[0].R, pairs[0].psi);
  c.expect(split.fine.simple == Truth::yes, "F2[Z/2] fine is not certified simple");
  c.expect(split.coarse.reduced == Truth::no, "F2[Z/2] coarse is not certified non-reduced");
  c.expect(split.square_zero && *split.square_zero == Vector{1, 1}, "witness is not e0 + e1");
  c.expect(square(*pairs[0].R, {1, 1}) == brute::Vec{0, 0}, "(e0 + e1)^2 != 0");
}

// ---------------------------------------------------------------------------

bool homogeneous_sets_equal_by_enumeration(const GradedAlgebra& R, const GroupHom& psi) {
  std::vector<GroupElement> coarse;
  for (const auto& d : R.degrees()) coarse.push_back(psi(d));
  bool equal = true;
  brute::for_each_vec(static_cast<std::int64_t>(R.field().characteristic()), R.dim(), [&](const brute::Vec& v) {
    if (brute::homogeneous(R.degrees(), v) != brute::homogeneous(coarse, v)) equal = false;
  });
  return equal;
}

void simplicity_rigidity(Checker& c) {
  AlgebraPtr gauss = samples::gaussian_z2();
  GroupHom to0 = samples::to_trivial(C2);
  c.expect(!kernel_data(to0).torsionfree, "kernel of Z/2 -> 0 reported torsionfree");
  HomogeneityComparison g = compare_homogeneous_sets(*gauss, to0);
  c.expect(!g.equal, "Gaussian homogeneous sets reported equal");
  c.expect(g.witness && *g.witness == Vector{1, 1}, "witness is not x + 1");
  if (g.witness) {
    c.expect(!gauss->is_homogeneous(*g.witness), "x + 1 is homogeneous before coarsening");
    c.expect(coarsen(gauss, to0)->is_homogeneous(*g.witness), "x + 1 is not homogeneous after coarsening");
  }

  FGAbelianGroup ZC2(1, {Integer(2)}), ZC3(1, {Integer(3)});
  GroupHom lift2(C2, ZC2, int_rows({{0}, {1}}, 1)), lift3(C3, ZC3, int_rows({{0}, {1}}, 1));
  GroupHom proj2(ZC2, C2, int_rows({{0, 1}}, 2)), proj3(ZC3, C3, int_rows({{0, 1}}, 2));
  FGAbelianGroup Z2 = FGAbelianGroup::integers(2);
  AlgebraPtr f9 = samples::pure_extension(F3, 2, Rational(2), C2, at(C2, {1}));
  struct Pair {
    std::string name;
    AlgebraPtr R;
    GroupHom psi;
  };
  std::vector<Pair> pairs{
      {"F3[Z/2] fine, identity", samples::group_algebra(F3, C2), GroupHom::identity(C2)},
      {"F3[Z/2] in Z + Z/2 -> Z/2", extend_along(samples::group_algebra(F3, C2), lift2), proj2},
      {"F3[Z/3] in Z + Z/3 -> Z/3", extend_along(samples::group_algebra(F3, C3), lift3), proj3},
      {"F9 over Z/2 in Z + Z/2 -> Z/2", extend_along(f9, lift2), proj2},
      {"F3 in degree 0 along Z^2 -> Z", samples::ground(F3, Z2), GroupHom(Z2, Z, int_rows({{1, 0}}, 2))},
      // Not simple after coarsening; filtered out below.
      {"F3[X]/(X^2) -> 0", samples::truncated_polynomial(F3, 2, Z, at(Z, {1})), samples::to_trivial(Z)},
  };
  std::size_t qualifying = 0;
  for (const auto& p : pairs) {
    if (!kernel_data(p.psi).torsionfree) continue;
    AlgebraPtr C = coarsen(p.R, p.psi);
    if (classify_ring(*C).simple != Truth::yes) continue;
    c.expect(oracle::exhaustive_classify(*C).simple, p.name + ": coarsening not simple by enumeration");
    ++qualifying;
    bool enumerated = homogeneous_sets_equal_by_enumeration(*p.R, p.psi);
    c.expect(enumerated, p.name + ": enumeration finds differing homogeneous sets");
    c.expect(compare_homogeneous_sets(*p.R, p.psi).equal == enumerated, p.name + ": comparison disagrees");
  }
  c.expect(qualifying >= 4, "too few torsionfree samples with simple coarsening");
}

// ---------------------------------------------------------------------------

void adjoint_triple(Checker& c) {
  std::vector<AlgebraPtr> over_z{samples::dual_numbers(), samples::truncated_polynomial(Q, 3, Z, at(Z, {1})),
                                 samples::ground(Q, Z), samples::product_field(Q, 2, Z)};
  std::vector<AlgebraPtr> over_0{samples::ground(Q, FGAbelianGroup::trivial()),
                                 samples::product_field(Q, 2, FGAbelianGroup::trivial())};
  std::vector<RingMorphism> morphisms{identity_morphism(over_z[0]), identity_morphism(over_z[1])};
  struct Case {
    std::string name;
    GroupHom phi;
    std::vector<AlgebraPtr> f;
  };
  for (const auto& k : std::vector<Case>{{"identity", GroupHom::identity(Z), over_z},
                                         {"doubling", samples::multiplication(2), over_z},
                                         {"0 -> Z", samples::from_trivial(Z), over_0}}) {
    AdjunctionReport r = adjunction_check(k.phi, k.f, over_z, morphisms);
    c.expect(r.triangles_ok, k.name + ": triangle identities fail");
    c.expect(r.naturality_ok, k.name + ": naturality fails");
  }

  MonoidCorestriction laurent = corestrict_monoid(samples::laurent(), samples::from_trivial(Z));
  c.expect(laurent.zero, "Laurent corestriction along 0 -> Z is not the zero ring");

  Corestriction dbl = corestrict(samples::dual_numbers(), samples::multiplication(2));
  c.expect(*dbl.ring == *restrict_along(samples::dual_numbers(), samples::multiplication(2)),
           "corestriction of Q[X]/(X^2) along doubling differs from restriction");

  std::vector<AlgebraPtr> g2{samples::truncated_polynomial(F2, 2, Z, at(Z, {1})),
                             samples::truncated_polynomial(F2, 4, Z, at(Z, {1})), samples::product_field(F2, 2, Z),
                             samples::exterior_square(F2)};
  std::vector<AlgebraPtr> g2z;
  for (const auto& R : g2)
    if (R->group() == Z) g2z.push_back(R);
  std::vector<AlgebraPtr> f2{samples::ground(F2, Z), samples::truncated_polynomial(F2, 2, Z, at(Z, {1})),
                             samples::product_field(F2, 2, Z)};
  std::vector<RingMorphism> f2_morphisms;
  for (const auto& u : ring_morphisms(g2z[1], g2z[1])) f2_morphisms.push_back(u);
  AdjunctionReport fin = adjunction_check(samples::multiplication(2), f2, g2z, f2_morphisms);
  c.expect(fin.bijections_checked, "no Hom bijection was checked over F2");
  c.expect(fin.ok(), "adjunction over F2 fails");

  // Hom-set sizes against the oracle's enumeration.
  for (const auto& R : g2z)
    for (const auto& S : f2) {
      Corestriction cr = corestrict(R, samples::multiplication(2));
      AlgebraPtr E = extend_along(S, samples::multiplication(2));
      c.expect(oracle::ring_morphisms(*cr.ring, *S).size() == oracle::ring_morphisms(*R, *E).size(),
               "|Hom(cor R, S)| != |Hom(R, ext S)|");
      c.expect(oracle::ring_morphisms(*E, *R).size() ==
                   oracle::ring_morphisms(*S, *restrict_along(R, samples::multiplication(2))).size(),
               "|Hom(ext S, R)| != |Hom(S, res R)|");
    }

  TensorWitness w = tensor_witness(samples::laurent(), samples::from_trivial(Z));
  c.expect(w.mismatch, "tensor witness reports no mismatch");
  c.expect(!w.witness.empty(), "tensor witness is empty");
}

// ---------------------------------------------------------------------------

void freeness_suite(Checker& c) {
  GradedModule M = samples::split_idempotent_module();
  c.expect(freeness(M).free == Truth::no, "split idempotent module not certified non-free");
  c.expect(!brute::free_generator(M), "search found a free generator of the split module");
  GradedModule C = coarsen(M, samples::to_trivial(Z));
  FreenessResult fr = freeness(C);
  c.expect(fr.free == Truth::yes && fr.rank == 1u, "0-coarsening not certified free of rank 1");
  c.expect(brute::free_generator(C).has_value(), "search found no free generator of the coarsening");

  auto corpus = samples::principal_corpus();
  c.expect(corpus.size() == 5, "principal corpus does not have five samples");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    PrincipalSuiteReport r = principal_suite(corpus[i], samples::to_trivial(Z));
    const std::string tag = "principal sample " + std::to_string(i);
    c.expect(r.decomposition.free, tag + ": not free");
    c.expect(r.decomposition.summands.size() == r.decomposition.rank, tag + ": summands do not match rank");
    c.expect(r.rank_bound && r.decomposition.rank <= r.decomposition.generators, tag + ": rank above generators");
    c.expect(r.freeness_agrees && r.coarse.rank == r.decomposition.rank, tag + ": coarse route disagrees");
  }
}

// ---------------------------------------------------------------------------

void superfluous_counterexample(Checker& c) {
  SuperfluousCounterexample s = principal_superfluous(Q, Z, at(Z, {1}), samples::to_trivial(Z));
  c.expect(s.graded_superfluous, "<X> not certified graded superfluous");
  c.expect(!s.coarse_superfluous, "coarse <X> not refuted");
  c.expect(s.witness && *s.witness == Poly(Q, {Rational(1), Rational(1)}), "witness is not X + 1");
  if (s.witness) {
    // 1 = (X + 1) - X, while X + 1 is not a unit.
    Poly X = Poly::monomial(Q, Rational(1), 1);
    c.expect(*s.witness - X == Poly::constant(Q, Rational(1)), "<X> + <X + 1> does not contain 1");
    c.expect(!s.witness->is_unit(), "X + 1 generates everything");
  }

  // Coarse superfluous implies fine superfluous, by enumeration.
  for (const auto& [name, M] : samples::finite_field_modules()) {
    GradedModule C = coarsen(M, samples::to_trivial(M.group()));
    oracle::Action fine = oracle::action_of(M), coarse = oracle::action_of(C);
    for (const auto& L : oracle::graded_submodules(fine)) {
      bool sf = oracle::superfluous(fine, L).flag, sc = oracle::superfluous(coarse, L).flag;
      c.expect(!sc || sf, name + ": coarse superfluous but fine not");
      Submodule sub = submodule(M, Subspace(M.field(), M.dim(), [&] {
                                  std::vector<Vector> b;
                                  for (const auto& v : L) {
                                    Vector w;
                                    for (auto x : v) w.emplace_back(x);
                                    b.push_back(w);
                                  }
                                  return b;
                                }()));
      c.expect(small_submodule(sub.inclusion, SmallMode::superfluous).flag == sf, name + ": main path disagrees");
    }
  }
}

// ---------------------------------------------------------------------------

bool explicit_iso(const ModuleMorphism& u) {
  const GradedModule &S = u.source, &T = u.target;
  if (S.dim() != T.dim() || !inverse(u.matrix)) return false;
  for (std::size_t i = 0; i < S.actions().size(); ++i)
    if (!(u.matrix * S.action(i) == T.action(i) * u.matrix)) return false;
  for (std::size_t k = 0; k < T.dim(); ++k)
    for (std::size_t j = 0; j < S.dim(); ++j)
      if (u.matrix(k, j) != 0 && !(T.degree(k) == S.degree(j))) return false;
  return true;
}

void schanuel(Checker& c) {
  GradedModule k = samples::residue_module(samples::dual_numbers());
  for (std::size_t n : {1, 2}) {
    ExactSequence a = truncate(resolution(k, n), n);
    ExactSequence b = pad(a, at(Z, {1}));
    SchanuelResult s = schanuel_glue(a, b);
    const std::string tag = "n = " + std::to_string(n);
    c.expect(s.verified, tag + ": not verified");
    c.expect(explicit_iso(s.iso), tag + ": not a homogeneous invertible equivariant matrix");
    c.expect(hilbert(s.iso.source) == s.source_hilbert && hilbert(s.iso.target) == s.target_hilbert,
             tag + ": reported Hilbert functions are off");
    if (n == 1) {
      HilbertFunction want{{at(Z, {0}), 1}, {at(Z, {1}), 3}, {at(Z, {2}), 1}};
      c.expect(s.source_hilbert == want && s.target_hilbert == want, "n = 1: dimensions differ from {0:1,1:3,2:1}");
    }
  }
}

// ---------------------------------------------------------------------------

void dimension_invariance(Checker& c) {
  AlgebraPtr D2 = samples::dual_numbers(F2), DQ = samples::dual_numbers();
  AlgebraPtr G = samples::group_algebra(F2, C2);
  struct Pair {
    std::string name;
    GradedModule M;
    GroupHom psi;
  };
  std::vector<Pair> pairs{
      {"K over F2[X]/(X^2), Z -> 0", samples::residue_module(D2), samples::to_trivial(Z)},
      {"K over Q[X]/(X^2), Z -> Z/2", samples::residue_module(DQ), samples::reduction(2)},
      {"Q[X]/(X^2) regular, Z -> 0", GradedModule::regular(DQ), samples::to_trivial(Z)},
      {"F2[Z/2] regular, Z/2 -> 0", GradedModule::regular(G), samples::to_trivial(C2)},
      {"F2[Z/2] shifted, Z/2 -> 0", shift(GradedModule::regular(G), at(C2, {1})), samples::to_trivial(C2)},
      {"split idempotents, Z -> 0", samples::split_idempotent_module(), samples::to_trivial(Z)},
      {"K over F2[X]/(X^2), Z -> Z/3",
       samples::residue_module(samples::truncated_polynomial(F2, 2, Z, at(Z, {1}))), samples::reduction(3)},
  };
  std::size_t compared = 0, finite = 0;
  for (const auto& p : pairs) {
    DimensionComparison d = coarsen_dimension_compare(p.M, p.psi, 6);
    c.expect(d.pd_equal, p.name + ": pd differs");
    c.expect(d.fd_equal, p.name + ": fd differs");
    c.expect(d.betti_equal, p.name + ": betti tables differ");
    c.expect(d.betti_coarse.size() == 7 || resolution(p.M, 6).terminated, p.name + ": betti table not through 6");
    ++compared;
    if (kernel_data(p.psi).finite) {
      ++finite;
      c.expect(d.id_equal && *d.id_equal, p.name + ": id differs");
    }
  }
  c.expect(compared >= 4, "fewer than four pairs");
  c.expect(finite >= 1, "no finite-kernel pair");
}

// ---------------------------------------------------------------------------

void lambek_duality(Checker& c) {
  for (const auto& [name, M] : samples::finite_field_modules()) {
    GradedModule E = injective_cogenerator(M.ring());
    GradedModule H = graded_hom(M, E).module;
    c.expect(is_flat(M) == is_injective(H), name + ": flat != injective character module");
    c.expect(lambek_check(M).agree(), name + ": lambek_check disagrees");
    c.expect(dual(dual(M)) == M && is_isomorphism(double_dual_evaluation(M)), name + ": dual not involutive");
    for (const Subspace& s : graded_submodules(M)) {
      Submodule L = submodule(M, s);
      QuotientModule P = quotient_module(M, s);
      ModuleMorphism di = dual(L.inclusion), dp = dual(P.projection);
      bool exact = is_epimorphism(di) && is_monomorphism(dp) && compose(di, dp).matrix.is_zero() &&
                   kernel(di).module.dim() == image(dp).module.dim();
      c.expect(exact, name + ": dual of a short exact sequence is not exact");
    }
    c.expect(at_most(dimension(H, DimensionKind::injective, 6), dimension(M, DimensionKind::flat, 6)),
             name + ": id(HOM(M, E)) > fd(M)");
  }
}

// ---------------------------------------------------------------------------

void radical_identities(Checker& c) {
  std::size_t rings = 0;
  for (const auto& [name, R] : samples::finite_field_rings()) {
    if (R->field().characteristic() != 2 || R->dim() > 4) continue;
    ++rings;
    Subspace meet = Subspace::full(R->field(), R->dim());
    for (const auto& P : spec_enumerate(R)) meet = meet.intersect(P.space);
    GradedIdeal nil = nilradical(*R);
    c.expect(meet == nil.space, name + ": nil != intersection of primes");

    std::vector<oracle::Basis> primes = oracle::graded_primes(*R);
    c.expect(oracle::intersect_all(2, R->dim(), primes) == oracle::nilradical(*R),
             name + ": oracle nil != oracle intersection");
    c.expect(oracle::to_basis(nil.space) == oracle::nilradical(*R), name + ": nilradical disagrees with oracle");

    for (const Subspace& a : graded_submodules(GradedModule::regular(R))) {
      GradedIdeal r = radical(R, GradedIdeal{a});
      c.expect(radical(R, r) == r, name + ": radical not idempotent");
      c.expect(r.space.contains(a), name + ": ideal not inside its radical");
    }
  }
  c.expect(rings >= 5, "too few F2 samples");
}

// ---------------------------------------------------------------------------

void oracle_concordance(Checker& c) {
  for (const auto& [name, R] : samples::finite_field_rings()) {
    OracleDiff d = oracle_diff(R);
    for (const auto& [check, ok] : d.checks) c.expect(ok, name + ": " + check);
  }
  for (const auto& [name, M] : samples::finite_field_modules()) {
    OracleDiff d = oracle_diff(M);
    for (const auto& [check, ok] : d.checks) c.expect(ok, name + ": " + check);
  }
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"torsion dichotomy", 1, torsion_dichotomy},
      {"simplicity rigidity", 1, simplicity_rigidity},
      {"adjoint triple", 5, adjoint_triple},
      {"freeness", 2, freeness_suite},
      {"superfluous counterexample", 1, superfluous_counterexample},
      {"schanuel", 1, schanuel},
      {"dimension invariance", 5, dimension_invariance},
      {"lambek and duality", 2, lambek_duality},
      {"radical identities", 10, radical_identities},
      {"oracle concordance", 30, oracle_concordance},
  };
  const auto suite_start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& k = criteria[i];
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      k.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < k.limit_s;
    const bool ok = error.empty() && c.ok() && in_time;
    failed += !ok;
    std::printf("%s %2zu %-28s %8.3f s (limit %g s)  %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, k.name, secs, k.limit_s,
                c.summary().c_str(), error.empty() ? "" : "; exception: ", error.c_str());
    if (!in_time) std::printf("     over the time limit\n");
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  if (total >= 30) ++failed;
  std::printf("%s suite total %.3f s (limit 30 s), %d failing\n", total < 30 ? "PASS" : "FAIL", total, failed);
  return failed == 0 ? 0 : 1;
}
