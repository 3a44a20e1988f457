#include "gradex/concordance.hpp"

#include <algorithm>

#include "gradex/functors.hpp"
#include "gradex/oracles.hpp"

namespace gradex {

namespace {

bool same_sets(std::vector<oracle::Basis> a, std::vector<oracle::Basis> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool same_flag(Truth main, bool oracle_flag) { return main == Truth::undecided || main == to_truth(oracle_flag); }

}  // namespace

bool OracleDiff::agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

OracleDiff oracle_diff(const AlgebraPtr& R) {
  OracleDiff d;
  RingClass rc = classify_ring(*R);
  oracle::ClassifyTable table = oracle::exhaustive_classify(*R);
  d.checks["classify.simple"] = same_flag(rc.simple, table.simple);
  d.checks["classify.entire"] = same_flag(rc.entire, table.entire);
  d.checks["classify.reduced"] = same_flag(rc.reduced, table.reduced);

  bool elements = true;
  for (const auto& row : table.rows) {
    Vector x;
    for (auto c : row.coords) x.push_back(Rational(static_cast<long>(c)));
    ElementClass e = classify_element(*R, x);
    elements = elements && e.unit == row.unit && e.regular == row.regular && e.nilpotent == row.nilpotent &&
               e.homogeneous == row.homogeneous;
  }
  d.checks["classify.elements"] = elements;

  d.checks["nilradical"] = oracle::to_basis(nilradical(*R).space) == oracle::nilradical(*R);
  std::vector<oracle::Basis> primes;
  for (const auto& P : spec_enumerate(R)) primes.push_back(oracle::to_basis(P.space));
  d.checks["spec"] = same_sets(primes, oracle::graded_primes(*R));

  std::vector<oracle::Vec> main_homs;
  for (const auto& u : ring_morphisms(R, R)) main_homs.push_back(oracle::flatten(u.matrix));
  std::sort(main_homs.begin(), main_homs.end());
  d.checks["ring_morphisms"] = main_homs == oracle::ring_morphisms(*R, *R);
  return d;
}

OracleDiff oracle_diff(const GradedModule& M) {
  OracleDiff d;
  oracle::Action A = oracle::action_of(M);

  std::vector<oracle::Basis> subs;
  for (const auto& s : graded_submodules(M)) subs.push_back(oracle::to_basis(s));
  d.checks["submodules"] = same_sets(subs, oracle::graded_submodules(A));

  std::vector<oracle::Vec> main_homs;
  for (const auto& u : module_morphisms(M, M)) main_homs.push_back(oracle::flatten(u.matrix));
  std::sort(main_homs.begin(), main_homs.end());
  d.checks["module_morphisms"] = main_homs == oracle::module_morphisms(M, M);

  const std::pair<const char*, Subspace> parts[] = {{"radical", graded_radical(M)}, {"socle", graded_socle(M)}};
  for (const auto& [name, space] : parts) {
    ModuleMorphism inc = submodule(M, space).inclusion;
    std::vector<oracle::Vec> image;
    for (const auto& v : space.basis()) image.push_back(oracle::to_vec(v));
    SmallResult sup = small_submodule(inc, SmallMode::superfluous);
    SmallResult ess = small_submodule(inc, SmallMode::essential);
    d.checks[std::string("superfluous.") + name] = sup.flag == oracle::superfluous(A, image).flag && sup.agree;
    d.checks[std::string("essential.") + name] = ess.flag == oracle::essential(A, image).flag && ess.agree;
  }
  return d;
}

}  // namespace gradex
