#include "gradex/functors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gradex {

namespace {

void require_epi(const GroupHom& psi) {
  if (!hom_props(psi).epi) throw ValidationError("psi-epimorphism", "coarsening needs an epimorphism");
}

void require_mono(const GroupHom& phi) {
  if (!hom_props(phi).mono) throw ValidationError("phi-monomorphism", "phi must be a monomorphism");
}

Matrix inclusion_matrix(const Field& f, std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix m(f, n, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) m(idx[j], j) = 1;
  return m;
}

}  // namespace

void validate_ring_morphism(const RingMorphism& u) {
  const GradedAlgebra& R = *u.source;
  const GradedAlgebra& S = *u.target;
  if (!(R.group() == S.group())) throw ValidationError("morphism-group", "source and target grading groups differ");
  if (u.matrix.rows() != S.dim() || u.matrix.cols() != R.dim())
    throw ValidationError("morphism-shape", "matrix must be dim(target) x dim(source)");
  for (std::size_t k = 0; k < S.dim(); ++k)
    for (std::size_t j = 0; j < R.dim(); ++j)
      if (u.matrix(k, j) != 0 && !(S.degree(k) == R.degree(j)))
        throw ValidationError("morphism-degree", "entry (" + std::to_string(k) + "," + std::to_string(j) +
                                                     ") joins different degrees");
  if (u.matrix * R.unit() != S.unit()) throw ValidationError("morphism-unit", "unit is not preserved");
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = i; j < R.dim(); ++j) {
      Vector lhs = u.matrix * R.multiply(R.basis_vector(i), R.basis_vector(j));
      Vector rhs = S.multiply(u.matrix.column(i), u.matrix.column(j));
      if (lhs != rhs)
        throw ValidationError("morphism-multiplicative",
                              "products of x_" + std::to_string(i) + ", x_" + std::to_string(j) + " differ");
    }
}

bool is_ring_morphism(const RingMorphism& u) {
  try {
    validate_ring_morphism(u);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

RingMorphism identity_morphism(const AlgebraPtr& R) {
  return RingMorphism{R, R, Matrix::identity(R->field(), R->dim())};
}

RingMorphism compose(const RingMorphism& v, const RingMorphism& u) {
  if (!(*u.target == *v.source)) throw ValidationError("morphism-compose", "middle algebras differ");
  return RingMorphism{u.source, v.target, v.matrix * u.matrix};
}

bool operator==(const RingMorphism& a, const RingMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.matrix == b.matrix;
}

AlgebraPtr coarsen(const AlgebraPtr& R, const GroupHom& psi) {
  if (!(psi.source() == R->group())) throw ValidationError("psi-source", "psi must start at the grading group");
  require_epi(psi);
  std::vector<GroupElement> degs;
  for (const auto& g : R->degrees()) degs.push_back(psi(g));
  return GradedAlgebra::make(psi.target(), R->field(), degs, R->structure(), R->unit());
}

RingMorphism coarsen(const RingMorphism& u, const GroupHom& psi) {
  return RingMorphism{coarsen(u.source, psi), coarsen(u.target, psi), u.matrix};
}

CoarseningReport coarsening_report(const AlgebraPtr& R, const GroupHom& psi) {
  CoarseningReport rep;
  AlgebraPtr C = coarsen(R, psi);
  rep.fine = classify_ring(*R);
  rep.coarse = classify_ring(*C);
  rep.kernel_torsionfree = kernel_data(psi).torsionfree;
  auto implies = [](Truth a, Truth b) { return a != Truth::yes || b == Truth::yes; };
  rep.reflected = implies(rep.coarse.simple, rep.fine.simple) && implies(rep.coarse.entire, rep.fine.entire) &&
                  implies(rep.coarse.reduced, rep.fine.reduced);
  if (rep.kernel_torsionfree)
    rep.preserved = implies(rep.fine.entire, rep.coarse.entire) && implies(rep.fine.reduced, rep.coarse.reduced);
  // A homogeneous nilpotent v with v^k = 0 != v^(k-1) gives w = v^(k-1), w^2 = 0.
  GradedIdeal nil = nilradical(*C);
  for (const auto& v : nil.space.basis()) {
    Vector w = v;
    while (!is_zero(C->multiply(w, v))) w = C->multiply(w, v);
    if (!is_zero(w)) {
      rep.square_zero = w;
      break;
    }
  }
  return rep;
}

HomogeneityComparison compare_homogeneous_sets(const GradedAlgebra& R, const GroupHom& psi) {
  if (!(psi.source() == R.group())) throw ValidationError("psi-source", "psi must start at the grading group");
  HomogeneityComparison out;
  for (std::size_t i = 0; i < R.dim() && out.equal; ++i)
    for (std::size_t j = i + 1; j < R.dim(); ++j)
      if (!(R.degree(i) == R.degree(j)) && psi(R.degree(i)) == psi(R.degree(j))) {
        Vector w = R.basis_vector(i);
        w[j] = 1;
        out.equal = false;
        out.witness = w;
        break;
      }
  return out;
}

std::vector<std::size_t> restricted_indices(const GradedAlgebra& R, const GroupHom& phi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < R.dim(); ++i)
    if (phi.in_image(R.degree(i))) out.push_back(i);
  return out;
}

AlgebraPtr restrict_along(const AlgebraPtr& R, const GroupHom& phi) {
  if (!(phi.target() == R->group())) throw ValidationError("phi-target", "phi must land in the grading group");
  require_mono(phi);
  std::vector<std::size_t> kept = restricted_indices(*R, phi);
  const std::size_t m = kept.size();
  std::vector<GroupElement> degs;
  for (auto i : kept) degs.push_back(*phi.preimage(R->degree(i)));
  std::vector<Rational> c(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = R->c(kept[i], kept[j], kept[k]);
  Vector unit(m);
  for (std::size_t i = 0; i < m; ++i) unit[i] = R->unit()[kept[i]];
  return GradedAlgebra::make(phi.source(), R->field(), degs, c, unit);
}

RingMorphism restrict_along(const RingMorphism& u, const GroupHom& phi) {
  auto rows = restricted_indices(*u.target, phi);
  auto cols = restricted_indices(*u.source, phi);
  return RingMorphism{restrict_along(u.source, phi), restrict_along(u.target, phi),
                      u.matrix.select_rows(rows).select_columns(cols)};
}

AlgebraPtr extend_along(const AlgebraPtr& S, const GroupHom& phi) {
  if (!(phi.source() == S->group())) throw ValidationError("phi-source", "phi must start at the grading group");
  require_mono(phi);
  std::vector<GroupElement> degs;
  for (const auto& f : S->degrees()) degs.push_back(phi(f));
  return GradedAlgebra::make(phi.target(), S->field(), degs, S->structure(), S->unit());
}

RingMorphism extend_along(const RingMorphism& u, const GroupHom& phi) {
  return RingMorphism{extend_along(u.source, phi), extend_along(u.target, phi), u.matrix};
}

Corestriction corestrict(const AlgebraPtr& R, const GroupHom& phi) {
  if (!(phi.target() == R->group())) throw ValidationError("phi-target", "phi must land in the grading group");
  require_mono(phi);
  std::vector<Vector> outside;
  for (std::size_t i = 0; i < R->dim(); ++i)
    if (!phi.in_image(R->degree(i))) outside.push_back(R->basis_vector(i));
  Corestriction c;
  c.a_phi = ideal_generated(*R, outside);
  c.quotient = quotient_ring(R, c.a_phi);
  c.ring = restrict_along(c.quotient.ring, phi);
  Matrix proj(R->field(), c.quotient.kept.size(), R->dim());
  for (std::size_t j = 0; j < R->dim(); ++j) proj.set_column(j, c.quotient.project(R->basis_vector(j)));
  c.alpha = RingMorphism{R, extend_along(c.ring, phi), proj};
  return c;
}

RingMorphism corestrict(const RingMorphism& u, const GroupHom& phi) {
  Corestriction cr = corestrict(u.source, phi);
  Corestriction cs = corestrict(u.target, phi);
  Matrix lift(u.source->field(), u.source->dim(), cr.quotient.kept.size());
  for (std::size_t j = 0; j < cr.quotient.kept.size(); ++j) {
    Vector e(cr.quotient.kept.size());
    e[j] = 1;
    lift.set_column(j, cr.quotient.lift(e));
  }
  return RingMorphism{cr.ring, cs.ring, cs.alpha.matrix * u.matrix * lift};
}

bool degree_support_condition(const GradedAlgebra& R, const GroupHom& phi) {
  std::vector<GroupElement> supp = R.support();
  std::set<GroupElement> S(supp.begin(), supp.end());
  std::vector<GroupElement> out;
  for (const auto& g : supp)
    if (!phi.in_image(g)) out.push_back(g);
  for (const auto& g : out)
    for (const auto& h : out) {
      GroupElement s = R.group().add(g, h);
      if (S.count(s) && phi.in_image(s)) return false;
    }
  return true;
}

std::vector<RingMorphism> ring_morphisms(const AlgebraPtr& R, const AlgebraPtr& S, double cap) {
  const Field& f = R->field();
  if (!f.is_finite() || !(f == S->field())) throw ValidationError("field", "morphism enumeration needs one finite field");
  if (!(R->group() == S->group())) throw ValidationError("morphism-group", "grading groups differ");
  // Unknowns: entries (k, j) with deg y_k = deg x_j.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < R->dim(); ++j)
    for (std::size_t k = 0; k < S->dim(); ++k)
      if (S->degree(k) == R->degree(j)) slots.emplace_back(k, j);
  // Unital constraint: sum_j M(k, j) u_j = v_k.
  Matrix A(f, S->dim(), slots.size());
  for (std::size_t t = 0; t < slots.size(); ++t) A(slots[t].first, t) = R->unit()[slots[t].second];
  auto particular = solve(A, S->unit());
  if (!particular) return {};
  auto kernel = kernel_basis(A);
  double count = std::pow(double(f.characteristic()), double(kernel.size()));
  if (count > cap) throw SizeGuardError("too many candidate morphisms");
  std::vector<RingMorphism> out;
  std::vector<unsigned long> digits(kernel.size(), 0);
  const unsigned long p = f.characteristic();
  for (;;) {
    Vector x = *particular;
    for (std::size_t t = 0; t < kernel.size(); ++t)
      if (digits[t]) x = add(f, x, scale(f, Rational(digits[t]), kernel[t]));
    Matrix M(f, S->dim(), R->dim());
    for (std::size_t t = 0; t < slots.size(); ++t) M(slots[t].first, slots[t].second) = x[t];
    RingMorphism u{R, S, M};
    if (is_ring_morphism(u)) out.push_back(std::move(u));
    std::size_t t = 0;
    while (t < digits.size() && digits[t] == p - 1) digits[t++] = 0;
    if (t == digits.size()) break;
    ++digits[t];
  }
  return out;
}

MonoidCorestriction corestrict_monoid(const MonoidAlgebra& R, const GroupHom& phi, std::size_t bound) {
  if (!(phi.target() == R.group())) throw ValidationError("phi-target", "phi must land in the grading group");
  require_mono(phi);
  MonoidCorestriction out;
  if (auto g = R.unit_degree_outside(phi)) {
    out.zero = true;
    out.unit_degree = g;
    out.equals_restriction = Truth::no;  // the restriction keeps the unit in degree 0
    out.method = "unit";
    return out;
  }
  std::set<GroupElement> S;
  for (const auto& m : R.monoid().elements_up_to(bound))
    for (std::size_t i = 0; i < R.base()->dim(); ++i) S.insert(R.monomial_degree(i, m));
  std::vector<GroupElement> outside;
  for (const auto& g : S)
    if (!phi.in_image(g)) outside.push_back(g);
  for (const auto& g : outside)
    for (const auto& h : outside) {
      GroupElement s = R.group().add(g, h);
      if (S.count(s) && phi.in_image(s)) {
        out.violation = std::make_pair(g, h);
        bool entire = classify_ring(*R.base()).entire == Truth::yes;
        out.equals_restriction = entire ? Truth::no : Truth::undecided;
        out.method = "support-violation";
        return out;
      }
    }
  bool base_in_zero = true;
  for (const auto& g : R.base()->degrees()) base_in_zero = base_in_zero && g.is_zero();
  if (phi.source().is_trivial() && base_in_zero && R.mode() == GradingMode::fine) {
    // Degree support is a copy of M, so the condition says M meets -M only in 0.
    out.equals_restriction = to_truth(R.monoid().sharp());
    out.method = "sharpness";
  } else {
    out.equals_restriction = Truth::undecided;
    out.method = "bounded-search";
  }
  return out;
}

TensorWitness tensor_witness(const MonoidAlgebra& R, const GroupHom& phi, std::size_t max_bound) {
  if (R.base()->dim() != 1) throw ValidationError("tensor-witness", "base must be the ground field");
  if (!(phi.target() == R.group())) throw ValidationError("phi-target", "phi must land in the grading group");
  TensorWitness w;
  w.note = "R (x) R is identified with the monoid algebra of M x M; counts are truncated at the given bounds";
  for (std::size_t b = 1; b <= max_bound; ++b) {
    std::set<IntVector> elems = R.monoid().elements_up_to(b);
    std::vector<std::pair<IntVector, GroupElement>> degs;
    for (const auto& m : elems) degs.emplace_back(m, R.monomial_degree(0, m));
    std::size_t full = 0, restricted = 0;
    for (const auto& [m, gm] : degs)
      for (const auto& [n, gn] : degs) {
        bool in_m = phi.in_image(gm), in_n = phi.in_image(gn);
        if (phi.in_image(R.group().add(gm, gn))) {
          ++full;
          if (!(in_m && in_n) && w.witness.empty()) {
            auto show = [](const IntVector& v) {
              std::string s = "e_(";
              for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
              return s + ")";
            };
            w.witness = show(m) + " (x) " + show(n);
          }
        }
        if (in_m && in_n) ++restricted;
      }
    w.bounds.push_back(b);
    w.full_counts.push_back(full);
    w.restricted_counts.push_back(restricted);
  }
  w.mismatch = !w.witness.empty();
  return w;
}

namespace {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return *a == *b; }

void fail(AdjunctionReport& r, bool& flag, const std::string& what) {
  flag = false;
  r.failures.push_back(what);
}

}  // namespace

AdjunctionReport adjunction_check(const GroupHom& phi, const std::vector<AlgebraPtr>& f_samples,
                                  const std::vector<AlgebraPtr>& g_samples,
                                  const std::vector<RingMorphism>& g_morphisms) {
  AdjunctionReport rep;
  require_mono(phi);
  for (const auto& S : f_samples) {
    ++rep.samples;
    AlgebraPtr E = extend_along(S, phi);
    Corestriction ce = corestrict(E, phi);
    // Counit of (cor, ext) and unit of (ext, res) are identities.
    if (!same_algebra(ce.ring, S)) fail(rep, rep.triangles_ok, "cor(ext S) != S");
    if (!same_algebra(restrict_along(E, phi), S)) fail(rep, rep.triangles_ok, "res(ext S) != S");
    Matrix id = Matrix::identity(S->field(), S->dim());
    // ext(eps_S) o alpha_{ext S} = id
    if (!(id * ce.alpha.matrix == Matrix::identity(E->field(), E->dim())))
      fail(rep, rep.triangles_ok, "ext(eps) o alpha != id");
    // eps_{ext S} o ext(eta_S) = id, eps being the inclusion of ext(res(ext S)).
    Matrix incl = inclusion_matrix(E->field(), E->dim(), restricted_indices(*E, phi));
    if (!(incl * id == Matrix::identity(E->field(), E->dim())))
      fail(rep, rep.triangles_ok, "eps o ext(eta) != id");
  }
  for (const auto& R : g_samples) {
    ++rep.samples;
    Corestriction cr = corestrict(R, phi);
    if (!is_ring_morphism(cr.alpha)) fail(rep, rep.triangles_ok, "alpha is not a ring morphism");
    if (rank(cr.alpha.matrix) != cr.ring->dim()) fail(rep, rep.triangles_ok, "alpha is not surjective");
    // eps_{cor R} o cor(alpha_R) = id
    RingMorphism cor_alpha = corestrict(cr.alpha, phi);
    if (!same_algebra(cor_alpha.target, cr.ring)) fail(rep, rep.triangles_ok, "cor(ext(cor R)) != cor R");
    if (!(cor_alpha.matrix == Matrix::identity(R->field(), cr.ring->dim())))
      fail(rep, rep.triangles_ok, "eps o cor(alpha) != id");
    // res(eps_R) o eta_{res R} = id
    auto idx = restricted_indices(*R, phi);
    Matrix incl = inclusion_matrix(R->field(), R->dim(), idx);
    Matrix res_eps = incl.select_rows(idx);
    if (!(res_eps == Matrix::identity(R->field(), idx.size()))) fail(rep, rep.triangles_ok, "res(eps) o eta != id");
    RingMorphism eps{extend_along(restrict_along(R, phi), phi), R, incl};
    if (!is_ring_morphism(eps)) fail(rep, rep.triangles_ok, "counit inclusion is not a ring morphism");
  }
  for (const auto& u : g_morphisms) {
    validate_ring_morphism(u);
    Corestriction cs = corestrict(u.source, phi), ct = corestrict(u.target, phi);
    RingMorphism cu = corestrict(u, phi);
    if (!(ct.alpha.matrix * u.matrix == cu.matrix * cs.alpha.matrix))
      fail(rep, rep.naturality_ok, "alpha is not natural");
    auto is = restricted_indices(*u.source, phi), it = restricted_indices(*u.target, phi);
    Matrix es = inclusion_matrix(u.source->field(), u.source->dim(), is);
    Matrix et = inclusion_matrix(u.target->field(), u.target->dim(), it);
    if (!(u.matrix * es == et * restrict_along(u, phi).matrix))
      fail(rep, rep.naturality_ok, "counit inclusion is not natural");
  }
  for (const auto& R : g_samples) {
    if (!R->field().is_finite() || R->dim() > 4) continue;
    Corestriction cr = corestrict(R, phi);
    auto idx = restricted_indices(*R, phi);
    AlgebraPtr resR = restrict_along(R, phi);
    for (const auto& S : f_samples) {
      if (!(S->field() == R->field()) || S->dim() > 4) continue;
      rep.bijections_checked = true;
      AlgebraPtr E = extend_along(S, phi);
      // Hom(cor R, S) -> Hom(R, ext S), f |-> ext(f) o alpha_R
      auto A = ring_morphisms(cr.ring, S), B = ring_morphisms(R, E);
      std::set<std::vector<Rational>> images;
      bool ok = A.size() == B.size();
      for (const auto& f : A) {
        RingMorphism g{R, E, f.matrix * cr.alpha.matrix};
        if (!is_ring_morphism(g)) ok = false;
        Matrix gm = g.matrix;
        std::vector<Rational> key;
        for (std::size_t i = 0; i < gm.rows(); ++i)
          for (std::size_t j = 0; j < gm.cols(); ++j) key.push_back(gm(i, j));
        images.insert(key);
      }
      if (!ok || images.size() != A.size()) fail(rep, rep.bijections_ok, "Hom(cor R, S) -> Hom(R, ext S) not bijective");
      // Hom(ext S, R) -> Hom(S, res R), g |-> res(g) o eta_S
      auto C = ring_morphisms(E, R), D = ring_morphisms(S, resR);
      images.clear();
      ok = C.size() == D.size();
      for (const auto& g : C) {
        Matrix r = g.matrix.select_rows(idx);
        RingMorphism h{S, resR, r};
        if (!is_ring_morphism(h)) ok = false;
        std::vector<Rational> key;
        for (std::size_t i = 0; i < r.rows(); ++i)
          for (std::size_t j = 0; j < r.cols(); ++j) key.push_back(r(i, j));
        images.insert(key);
      }
      if (!ok || images.size() != C.size()) fail(rep, rep.bijections_ok, "Hom(ext S, R) -> Hom(S, res R) not bijective");
    }
  }
  return rep;
}

}  // namespace gradex
