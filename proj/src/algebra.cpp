#include "gradex/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gradex {

const char* fault_name(AlgebraError::Fault f) {
  switch (f) {
    case AlgebraError::Fault::shape: return "shape";
    case AlgebraError::Fault::grading: return "grading";
    case AlgebraError::Fault::commutativity: return "commutativity";
    case AlgebraError::Fault::associativity: return "associativity";
    default: return "unit";
  }
}

AlgebraError::AlgebraError(Fault fault, std::size_t i, std::size_t j, std::size_t k, const std::string& detail)
    : ValidationError(fault_name(fault), "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + ") " + detail),
      fault_(fault), i_(i), j_(j), k_(k) {}

StructureBuilder& StructureBuilder::set(std::size_t i, std::size_t j,
                                        std::vector<std::pair<std::size_t, Rational>> terms) {
  for (std::size_t k = 0; k < n_; ++k) {
    c_[(i * n_ + j) * n_ + k] = 0;
    c_[(j * n_ + i) * n_ + k] = 0;
  }
  for (auto& [k, v] : terms) {
    c_[(i * n_ + j) * n_ + k] += v;
    if (i != j) c_[(j * n_ + i) * n_ + k] += v;
  }
  return *this;
}

AlgebraPtr GradedAlgebra::make(FGAbelianGroup group, Field field, std::vector<GroupElement> degrees,
                               std::vector<Rational> structure, Vector unit) {
  using F = AlgebraError::Fault;
  const std::size_t n = degrees.size();
  if (structure.size() != n * n * n)
    throw AlgebraError(F::shape, 0, 0, 0, "expected " + std::to_string(n * n * n) + " structure constants");
  if (unit.size() != n) throw AlgebraError(F::shape, 0, 0, 0, "unit has wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (!group.contains(degrees[i])) degrees[i] = group.reduce(degrees[i].coords);
  for (auto& x : structure) x = field.reduce(x);
  for (auto& x : unit) x = field.reduce(x);

  auto R = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
  R->group_ = std::move(group);
  R->field_ = field;
  R->degrees_ = std::move(degrees);
  R->structure_ = std::move(structure);
  R->unit_ = std::move(unit);
  const GradedAlgebra& A = *R;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (A.c(i, j, k) != A.c(j, i, k))
          throw AlgebraError(F::commutativity, i, j, k, "x_i x_j != x_j x_i");
        if (A.c(i, j, k) != 0 && !(A.group_.add(A.degrees_[i], A.degrees_[j]) == A.degrees_[k]))
          throw AlgebraError(F::grading, i, j, k, "deg x_i + deg x_j != deg x_k");
      }
  // (x_i x_j) x_l == x_i (x_j x_l)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += A.c(i, j, k) * A.c(k, l, m);
            rhs += A.c(j, l, k) * A.c(i, k, m);
          }
          if (field.reduce(lhs) != field.reduce(rhs))
            throw AlgebraError(F::associativity, i, j, l, "(x_i x_j) x_l != x_i (x_j x_l)");
        }
  for (std::size_t i = 0; i < n; ++i)
    if (A.unit_[i] != 0 && !A.degrees_[i].is_zero())
      throw AlgebraError(F::unit, i, 0, 0, "unit has a component outside degree 0");
  R->basis_mult_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(field, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = A.c(i, j, k);
    R->basis_mult_.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < n; ++j)
    if (A.multiply(A.unit_, A.basis_vector(j)) != A.basis_vector(j))
      throw AlgebraError(F::unit, j, 0, 0, "unit does not fix x_j");
  return R;
}

Vector GradedAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v[i] = 1;
  return v;
}

Vector GradedAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != 0) r[k] += ab * c(i, j, k);
    }
  }
  for (auto& x : r) x = field_.reduce(x);
  return r;
}

Vector GradedAlgebra::power(const Vector& a, std::size_t e) const {
  Vector r = unit_, base = a;
  while (e) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

Matrix GradedAlgebra::mult_matrix(const Vector& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] != 0) m = m + basis_mult_[i].scaled(x[i]);
  return m;
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::set<GroupElement> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::vector<std::size_t> GradedAlgebra::component(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

std::map<GroupElement, Vector> GradedAlgebra::components(const Vector& x) const {
  std::map<GroupElement, Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    auto [it, inserted] = out.try_emplace(degrees_[i], Vector(dim()));
    it->second[i] = x[i];
  }
  return out;
}

bool GradedAlgebra::is_homogeneous(const Vector& x) const { return components(x).size() <= 1; }

std::optional<GroupElement> GradedAlgebra::degree_of(const Vector& x) const {
  auto comps = components(x);
  if (comps.size() != 1) return std::nullopt;
  return comps.begin()->first;
}

ElementClass classify_element(const GradedAlgebra& R, const Vector& x) {
  ElementClass e;
  // In a finite-dimensional algebra m_x is injective iff it is bijective.
  std::size_t r = rank(R.mult_matrix(x));
  e.unit = r == R.dim();
  e.regular = e.unit;
  e.nilpotent = is_zero(R.power(x, R.dim()));
  e.homogeneous = R.is_homogeneous(x);
  return e;
}

void for_each_in_component(const GradedAlgebra& R, const GroupElement& g,
                           const std::function<bool(const Vector&)>& fn) {
  if (!R.field().is_finite()) throw ValidationError("field", "component enumeration needs a finite field");
  const unsigned long p = R.field().characteristic();
  std::vector<std::size_t> idx = R.component(g);
  std::vector<unsigned long> digits(idx.size(), 0);
  for (;;) {
    Vector v(R.dim());
    for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = Rational(digits[t]);
    if (!fn(v)) return;
    std::size_t t = 0;
    while (t < idx.size() && digits[t] == p - 1) digits[t++] = 0;
    if (t == idx.size()) return;
    ++digits[t];
  }
}

namespace {

double homogeneous_count(const GradedAlgebra& R) {
  double total = 0;
  for (const auto& g : R.support())
    total += std::pow(double(R.field().characteristic()), double(R.component(g).size()));
  return total;
}

}  // namespace

RingClass classify_ring(const GradedAlgebra& R) {
  RingClass rc;
  if (R.dim() == 0) {
    rc.simple = Truth::no;
    rc.entire = Truth::no;
    rc.reduced = Truth::yes;
    rc.method = "criterion";
    return rc;
  }
  rc.reduced = to_truth(nilradical(R).dim() == 0);
  std::size_t max_comp = 0;
  for (const auto& g : R.support()) max_comp = std::max(max_comp, R.component(g).size());
  if (max_comp <= 1) {
    // Every nonzero homogeneous element is a scalar multiple of a basis vector.
    bool all_units = true;
    for (std::size_t i = 0; i < R.dim(); ++i)
      if (rank(R.basis_mult(i)) < R.dim()) all_units = false;
    rc.simple = rc.entire = to_truth(all_units);
    rc.method = "criterion";
  } else if (R.field().is_finite() && homogeneous_count(R) <= kHomogeneousEnumerationCap) {
    bool all_units = true;
    for (const auto& g : R.support()) {
      for_each_in_component(R, g, [&](const Vector& x) {
        if (is_zero(x)) return true;
        if (rank(R.mult_matrix(x)) < R.dim()) all_units = false;
        return all_units;
      });
      if (!all_units) break;
    }
    rc.simple = rc.entire = to_truth(all_units);
    rc.method = "exhaustive";
  } else {
    rc.method = "partial";
    bool witness = rc.reduced == Truth::no;
    for (std::size_t i = 0; i < R.dim() && !witness; ++i)
      if (rank(R.basis_mult(i)) < R.dim()) witness = true;
    if (witness) rc.simple = rc.entire = Truth::no;
  }
  if (rc.simple == Truth::yes && rc.entire != Truth::yes) throw std::logic_error("simple but not entire");
  if (rc.entire == Truth::yes && rc.reduced != Truth::yes) throw std::logic_error("entire but not reduced");
  return rc;
}

GradedIdeal ideal_generated(const GradedAlgebra& R, const std::vector<Vector>& gens) {
  std::vector<Vector> span;
  for (const auto& g : gens) {
    if (g.size() != R.dim()) throw ValidationError("ideal-generator", "generator has wrong length");
    if (!R.is_homogeneous(g)) throw ValidationError("ideal-generator", "generator is not homogeneous");
    for (std::size_t i = 0; i < R.dim(); ++i) span.push_back(R.multiply(R.basis_vector(i), g));
  }
  return GradedIdeal{Subspace(R.field(), R.dim(), span)};
}

bool is_graded_ideal(const GradedAlgebra& R, const Subspace& s) {
  for (const auto& b : s.basis()) {
    for (const auto& [g, comp] : R.components(b))
      if (!s.contains(comp)) return false;
    for (std::size_t i = 0; i < R.dim(); ++i)
      if (!s.contains(R.multiply(R.basis_vector(i), b))) return false;
  }
  return true;
}

std::map<GroupElement, Subspace> ideal_components(const GradedAlgebra& R, const GradedIdeal& a) {
  std::map<GroupElement, std::vector<Vector>> rows;
  for (const auto& b : a.space.basis())
    for (const auto& [g, comp] : R.components(b)) rows[g].push_back(comp);
  std::map<GroupElement, Subspace> out;
  for (const auto& g : R.support()) out.emplace(g, Subspace(R.field(), R.dim(), rows[g]));
  return out;
}

Subspace underlying_nilradical(const GradedAlgebra& R) {
  const Field& f = R.field();
  const std::size_t n = R.dim();
  if (f.is_rational()) {
    std::vector<Rational> tr(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) tr[k] += R.basis_mult(k)(i, i);
    Matrix form(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += R.c(i, j, k) * tr[k];
        form(i, j) = s;
      }
    return Subspace(f, n, kernel_basis(form));
  }
  const unsigned long p = f.characteristic();
  Matrix frob(f, n, n);
  for (std::size_t i = 0; i < n; ++i) frob.set_column(i, R.power(R.basis_vector(i), p));
  // Nilpotent x satisfy x^n = 0, so the p^k-th power with p^k >= n kills them.
  Matrix it = frob;
  for (unsigned long q = p; q < n; q *= p) it = frob * it;
  return Subspace(f, n, kernel_basis(it));
}

GradedIdeal nilradical(const GradedAlgebra& R) {
  Subspace N = underlying_nilradical(R);
  std::vector<Vector> rows;
  for (const auto& g : R.support()) {
    std::vector<Vector> comp;
    for (auto i : R.component(g)) comp.push_back(R.basis_vector(i));
    Subspace part = N.intersect(Subspace(R.field(), R.dim(), comp));
    rows.insert(rows.end(), part.basis().begin(), part.basis().end());
  }
  return GradedIdeal{Subspace(R.field(), R.dim(), rows)};
}

std::optional<GradedIdeal> zerodivisor_ideal(const GradedAlgebra& R) {
  std::vector<Vector> gens;
  std::size_t max_comp = 0;
  for (const auto& g : R.support()) max_comp = std::max(max_comp, R.component(g).size());
  if (max_comp <= 1) {
    for (std::size_t i = 0; i < R.dim(); ++i)
      if (rank(R.basis_mult(i)) < R.dim()) gens.push_back(R.basis_vector(i));
    return ideal_generated(R, gens);
  }
  if (!R.field().is_finite()) return std::nullopt;
  if (homogeneous_count(R) > kHomogeneousEnumerationCap) throw SizeGuardError("zerodivisor enumeration too large");
  for (const auto& g : R.support())
    for_each_in_component(R, g, [&](const Vector& x) {
      if (!is_zero(x) && rank(R.mult_matrix(x)) < R.dim()) gens.push_back(x);
      return true;
    });
  return ideal_generated(R, gens);
}

GradedIdeal graded_jacobson(const GradedAlgebra& R) {
  const Field& f = R.field();
  const std::size_t n = R.dim();
  Subspace N = underlying_nilradical(R);
  std::vector<std::size_t> outside = N.complement();
  std::vector<Vector> rows;
  for (const auto& g : R.support()) {
    std::vector<std::size_t> comp = R.component(g);
    std::vector<std::size_t> opp = R.component(R.group().neg(g));
    // Conditions: for every x_j of degree -g, x * x_j reduces to 0 modulo N.
    Matrix cond(f, opp.size() * outside.size(), comp.size());
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < opp.size(); ++b) {
        Vector red = N.reduce(R.multiply(R.basis_vector(comp[a]), R.basis_vector(opp[b])));
        for (std::size_t t = 0; t < outside.size(); ++t) cond(b * outside.size() + t, a) = red[outside[t]];
      }
    for (const auto& k : kernel_basis(cond)) {
      Vector v(n);
      for (std::size_t a = 0; a < comp.size(); ++a) v[comp[a]] = k[a];
      rows.push_back(v);
    }
  }
  return GradedIdeal{Subspace(f, n, rows)};
}

Vector Quotient::project(const Vector& v) const {
  Vector r = ideal.reduce(v);
  Vector out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) out[i] = r[kept[i]];
  return out;
}

Vector Quotient::lift(const Vector& w) const {
  Vector out(ideal.ambient());
  for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = w[i];
  return out;
}

Quotient quotient_ring(const AlgebraPtr& R, const GradedIdeal& a) {
  if (!is_graded_ideal(*R, a.space)) throw ValidationError("graded-ideal", "subspace is not a graded ideal");
  Quotient q;
  q.ideal = a.space;
  q.kept = a.space.complement();
  const std::size_t m = q.kept.size();
  std::vector<GroupElement> degs;
  for (auto i : q.kept) degs.push_back(R->degree(i));
  std::vector<Rational> c(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector prod = q.project(R->multiply(R->basis_vector(q.kept[i]), R->basis_vector(q.kept[j])));
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = prod[k];
    }
  q.ring = GradedAlgebra::make(R->group(), R->field(), degs, c, q.project(R->unit()));
  return q;
}

GradedIdeal radical(const AlgebraPtr& R, const GradedIdeal& a) {
  Quotient q = quotient_ring(R, a);
  GradedIdeal nil = nilradical(*q.ring);
  std::vector<Vector> rows = a.space.basis();
  for (const auto& b : nil.space.basis()) rows.push_back(q.lift(b));
  return GradedIdeal{Subspace(R->field(), R->dim(), rows)};
}

IdealClass ideal_class(const AlgebraPtr& R, const GradedIdeal& a) {
  RingClass rc = classify_ring(*quotient_ring(R, a).ring);
  return IdealClass{rc.simple, rc.entire, rc.reduced};
}

namespace {

// Echelon bases of every subspace of span{e_i : i in idx}.
std::vector<std::vector<Vector>> component_subspaces(const Field& f, std::size_t n,
                                                     const std::vector<std::size_t>& idx) {
  const unsigned long p = f.characteristic();
  const std::size_t d = idx.size();
  std::vector<std::vector<Vector>> out;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t t = 0; t < d; ++t)
      if (mask >> t & 1) piv.push_back(t);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < piv.size(); ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    std::vector<unsigned long> digits(free.size(), 0);
    for (;;) {
      std::vector<Vector> rows(piv.size(), Vector(n));
      for (std::size_t r = 0; r < piv.size(); ++r) rows[r][idx[piv[r]]] = 1;
      for (std::size_t t = 0; t < free.size(); ++t)
        rows[free[t].first][idx[free[t].second]] = Rational(digits[t]);
      out.push_back(std::move(rows));
      std::size_t t = 0;
      while (t < free.size() && digits[t] == p - 1) digits[t++] = 0;
      if (t == free.size()) break;
      ++digits[t];
    }
  }
  return out;
}

}  // namespace

std::vector<Subspace> graded_subspaces(const Field& f, const std::vector<GroupElement>& degrees,
                                       std::size_t cap) {
  if (!f.is_finite()) throw ValidationError("field", "subspace enumeration needs a finite field");
  const std::size_t n = degrees.size();
  std::set<GroupElement> degs(degrees.begin(), degrees.end());
  std::vector<std::vector<std::vector<Vector>>> per;
  double total = 1;
  for (const auto& g : degs) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (degrees[i] == g) idx.push_back(i);
    if (idx.size() > 16) throw SizeGuardError("graded component too large to enumerate");
    per.push_back(component_subspaces(f, n, idx));
    total *= double(per.back().size());
    if (total > double(cap)) throw SizeGuardError("more than " + std::to_string(cap) + " graded subspaces");
  }
  std::vector<Subspace> out;
  std::vector<std::size_t> choice(per.size(), 0);
  for (;;) {
    std::vector<Vector> rows;
    for (std::size_t c = 0; c < per.size(); ++c)
      rows.insert(rows.end(), per[c][choice[c]].begin(), per[c][choice[c]].end());
    out.emplace_back(f, n, rows);
    std::size_t c = 0;
    while (c < per.size() && choice[c] + 1 == per[c].size()) choice[c++] = 0;
    if (c == per.size()) break;
    ++choice[c];
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  return out;
}

std::vector<GradedIdeal> spec_enumerate(const AlgebraPtr& R) {
  if (!R->field().is_finite()) throw ValidationError("field", "spec enumeration needs a finite field");
  if (R->dim() > 6 || R->field().characteristic() > 3)
    throw SizeGuardError("spec enumeration limited to dim <= 6 and p <= 3");
  std::vector<GradedIdeal> out;
  for (auto& s : graded_subspaces(R->field(), R->degrees())) {
    if (!is_graded_ideal(*R, s)) continue;
    GradedIdeal a{s};
    if (ideal_class(R, a).prime == Truth::yes) out.push_back(a);
  }
  return out;
}

}  // namespace gradex
