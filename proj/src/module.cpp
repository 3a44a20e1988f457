#include "gradex/module.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace gradex {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Field& f, const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// Matrix whose columns are the given vectors, expressed as coordinates in s.
Matrix coordinates_matrix(const Subspace& s, const std::vector<Vector>& vs, const Field& f) {
  Matrix m(f, s.dim(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) m.set_column(j, s.coordinates(vs[j]));
  return m;
}

}  // namespace

GradedModule GradedModule::make(AlgebraPtr R, std::vector<GroupElement> degrees, std::vector<Matrix> action) {
  const std::size_t n = R->dim(), m = degrees.size();
  const Field& f = R->field();
  if (action.size() != n) throw ValidationError("module-shape", "need one action matrix per algebra basis element");
  for (auto& a : action)
    if (a.rows() != m || a.cols() != m || !(a.field() == f))
      throw ValidationError("module-shape", "action matrices must be square of the module dimension");
  for (auto& d : degrees) d = R->group().reduce(d.coords);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (action[i](k, j) != 0 && !(R->group().add(R->degree(i), degrees[j]) == degrees[k]))
          throw ValidationError("module-grading", triple(i, j, k) + " deg x_i + deg v_j != deg v_k");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix rhs(f, m, m);
      for (std::size_t k = 0; k < n; ++k)
        if (R->c(i, j, k) != 0) rhs = rhs + action[k].scaled(R->c(i, j, k));
      if (!(action[i] * action[j] == rhs))
        throw ValidationError("module-associativity", triple(i, j, 0) + " x_i (x_j v) != (x_i x_j) v");
    }
  Matrix u(f, m, m);
  for (std::size_t i = 0; i < n; ++i)
    if (R->unit()[i] != 0) u = u + action[i].scaled(R->unit()[i]);
  if (!(u == Matrix::identity(f, m))) throw ValidationError("module-unit", "1 does not act as the identity");
  GradedModule M;
  M.ring_ = std::move(R);
  M.degrees_ = std::move(degrees);
  M.action_ = std::move(action);
  return M;
}

GradedModule GradedModule::regular(const AlgebraPtr& R) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < R->dim(); ++i) act.push_back(R->basis_mult(i));
  return make(R, R->degrees(), act);
}

GradedModule GradedModule::zero(const AlgebraPtr& R) {
  return make(R, {}, std::vector<Matrix>(R->dim(), Matrix(R->field(), 0, 0)));
}

Vector GradedModule::basis_vector(std::size_t j) const {
  Vector v(dim());
  v[j] = 1;
  return v;
}

Matrix GradedModule::act_matrix(const Vector& r) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) m = m + action_[i].scaled(r[i]);
  return m;
}

Vector GradedModule::act(const Vector& r, const Vector& v) const { return act_matrix(r) * v; }

std::vector<std::size_t> GradedModule::component(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim(); ++j)
    if (degrees_[j] == g) out.push_back(j);
  return out;
}

std::vector<GroupElement> GradedModule::support() const {
  std::set<GroupElement> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::map<GroupElement, Vector> GradedModule::components(const Vector& v) const {
  std::map<GroupElement, Vector> out;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (v[j] == 0) continue;
    auto [it, inserted] = out.try_emplace(degrees_[j], Vector(dim()));
    it->second[j] = v[j];
  }
  return out;
}

bool GradedModule::is_homogeneous(const Vector& v) const { return components(v).size() <= 1; }

std::optional<GroupElement> GradedModule::degree_of(const Vector& v) const {
  auto c = components(v);
  if (c.size() != 1) return std::nullopt;
  return c.begin()->first;
}

void validate_module_morphism(const ModuleMorphism& u) {
  const GradedModule& M = u.source;
  const GradedModule& N = u.target;
  if (!(*M.ring() == *N.ring())) throw ValidationError("morphism-ring", "modules over different algebras");
  if (u.matrix.rows() != N.dim() || u.matrix.cols() != M.dim())
    throw ValidationError("morphism-shape", "matrix must be dim(target) x dim(source)");
  for (std::size_t k = 0; k < N.dim(); ++k)
    for (std::size_t j = 0; j < M.dim(); ++j)
      if (u.matrix(k, j) != 0 && !(N.degree(k) == M.degree(j)))
        throw ValidationError("morphism-degree", "entry (" + std::to_string(k) + "," + std::to_string(j) +
                                                     ") joins different degrees");
  for (std::size_t i = 0; i < M.ring()->dim(); ++i)
    if (!(u.matrix * M.action(i) == N.action(i) * u.matrix))
      throw ValidationError("morphism-equivariant", "fails to commute with x_" + std::to_string(i));
}

bool is_module_morphism(const ModuleMorphism& u) {
  try {
    validate_module_morphism(u);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

ModuleMorphism identity_morphism(const GradedModule& M) {
  return ModuleMorphism{M, M, Matrix::identity(M.field(), M.dim())};
}

ModuleMorphism compose(const ModuleMorphism& v, const ModuleMorphism& u) {
  if (!(u.target == v.source)) throw ValidationError("morphism-compose", "middle modules differ");
  return ModuleMorphism{u.source, v.target, v.matrix * u.matrix};
}

bool is_isomorphism(const ModuleMorphism& u) {
  return is_module_morphism(u) && u.matrix.is_square() && rank(u.matrix) == u.matrix.rows();
}
bool is_monomorphism(const ModuleMorphism& u) { return rank(u.matrix) == u.matrix.cols(); }
bool is_epimorphism(const ModuleMorphism& u) { return rank(u.matrix) == u.matrix.rows(); }

HilbertFunction hilbert(const GradedModule& M) {
  HilbertFunction h;
  for (const auto& d : M.degrees()) ++h[d];
  return h;
}

HilbertFunction hilbert(const GradedAlgebra& R) {
  HilbertFunction h;
  for (const auto& d : R.degrees()) ++h[d];
  return h;
}

HilbertFunction hilbert_sum(const HilbertFunction& a, const HilbertFunction& b) {
  HilbertFunction h = a;
  for (const auto& [g, n] : b) h[g] += n;
  return h;
}

std::string to_string(const HilbertFunction& h) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [g, n] : h) {
    if (n == 0) continue;
    os << (first ? "" : ", ") << g.to_string() << ": " << n;
    first = false;
  }
  os << '}';
  return os.str();
}

GradedModule shift(const GradedModule& M, const GroupElement& g) {
  std::vector<GroupElement> degs;
  for (const auto& d : M.degrees()) degs.push_back(M.group().sub(d, g));
  return GradedModule::make(M.ring(), degs, M.actions());
}

DirectSum direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw ValidationError("direct-sum", "need at least one summand");
  const AlgebraPtr& R = parts.front().ring();
  const Field& f = R->field();
  std::size_t total = 0;
  for (const auto& P : parts) {
    if (!(*P.ring() == *R)) throw ValidationError("direct-sum", "summands over different algebras");
    total += P.dim();
  }
  std::vector<GroupElement> degs;
  std::vector<Matrix> act(R->dim(), Matrix(f, total, total));
  std::size_t off = 0;
  for (const auto& P : parts) {
    degs.insert(degs.end(), P.degrees().begin(), P.degrees().end());
    for (std::size_t i = 0; i < R->dim(); ++i)
      for (std::size_t a = 0; a < P.dim(); ++a)
        for (std::size_t b = 0; b < P.dim(); ++b) act[i](off + a, off + b) = P.action(i)(a, b);
    off += P.dim();
  }
  DirectSum ds;
  ds.module = GradedModule::make(R, degs, act);
  off = 0;
  for (const auto& P : parts) {
    Matrix inc(f, total, P.dim()), pr(f, P.dim(), total);
    for (std::size_t a = 0; a < P.dim(); ++a) {
      inc(off + a, a) = 1;
      pr(a, off + a) = 1;
    }
    ds.inclusions.push_back(ModuleMorphism{P, ds.module, inc});
    ds.projections.push_back(ModuleMorphism{ds.module, P, pr});
    off += P.dim();
  }
  return ds;
}

Subspace generated_submodule(const GradedModule& M, const std::vector<Vector>& gens) {
  std::vector<Vector> span;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < M.ring()->dim(); ++i) span.push_back(M.action(i) * g);
  return Subspace(M.field(), M.dim(), span);
}

bool is_graded_submodule(const GradedModule& M, const Subspace& s) {
  for (const auto& b : s.basis()) {
    for (const auto& [g, c] : M.components(b))
      if (!s.contains(c)) return false;
    for (std::size_t i = 0; i < M.ring()->dim(); ++i)
      if (!s.contains(M.action(i) * b)) return false;
  }
  return true;
}

Submodule submodule(const GradedModule& M, const Subspace& s) {
  if (!is_graded_submodule(M, s)) throw ValidationError("graded-submodule", "subspace is not a graded submodule");
  const Field& f = M.field();
  const auto& B = s.basis();
  std::vector<GroupElement> degs;
  for (const auto& b : B) degs.push_back(M.degree_of(b).value());
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < M.ring()->dim(); ++i) {
    std::vector<Vector> imgs;
    for (const auto& b : B) imgs.push_back(M.action(i) * b);
    act.push_back(coordinates_matrix(s, imgs, f));
  }
  Submodule out;
  out.module = GradedModule::make(M.ring(), degs, act);
  out.inclusion = ModuleMorphism{out.module, M, Matrix::from_columns(f, B, M.dim())};
  return out;
}

QuotientModule quotient_module(const GradedModule& M, const Subspace& s) {
  if (!is_graded_submodule(M, s)) throw ValidationError("graded-submodule", "subspace is not a graded submodule");
  const Field& f = M.field();
  QuotientModule q;
  q.relations = s;
  q.kept = s.complement();
  const std::size_t m = q.kept.size();
  auto project = [&](const Vector& v) {
    Vector r = s.reduce(v), out(m);
    for (std::size_t t = 0; t < m; ++t) out[t] = r[q.kept[t]];
    return out;
  };
  std::vector<GroupElement> degs;
  for (auto j : q.kept) degs.push_back(M.degree(j));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < M.ring()->dim(); ++i) {
    Matrix a(f, m, m);
    for (std::size_t t = 0; t < m; ++t) a.set_column(t, project(M.action(i) * M.basis_vector(q.kept[t])));
    act.push_back(a);
  }
  q.module = GradedModule::make(M.ring(), degs, act);
  Matrix pr(f, m, M.dim());
  for (std::size_t j = 0; j < M.dim(); ++j) pr.set_column(j, project(M.basis_vector(j)));
  q.projection = ModuleMorphism{M, q.module, pr};
  return q;
}

Submodule kernel(const ModuleMorphism& u) {
  validate_module_morphism(u);
  return submodule(u.source, Subspace(u.source.field(), u.source.dim(), kernel_basis(u.matrix)));
}

Submodule image(const ModuleMorphism& u) {
  validate_module_morphism(u);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < u.matrix.cols(); ++j) cols.push_back(u.matrix.column(j));
  return submodule(u.target, Subspace(u.target.field(), u.target.dim(), cols));
}

QuotientModule cokernel(const ModuleMorphism& u) {
  validate_module_morphism(u);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < u.matrix.cols(); ++j) cols.push_back(u.matrix.column(j));
  return quotient_module(u.target, Subspace(u.target.field(), u.target.dim(), cols));
}

GradedModule coarsen(const GradedModule& M, const GroupHom& psi) {
  AlgebraPtr R = coarsen(M.ring(), psi);
  std::vector<GroupElement> degs;
  for (const auto& d : M.degrees()) degs.push_back(psi(d));
  return GradedModule::make(R, degs, M.actions());
}

ModuleMorphism coarsen(const ModuleMorphism& u, const GroupHom& psi) {
  return ModuleMorphism{coarsen(u.source, psi), coarsen(u.target, psi), u.matrix};
}

GradedModule quotient_of_ring(const AlgebraPtr& R, const GradedIdeal& a) {
  return quotient_module(GradedModule::regular(R), a.space).module;
}

GradedModule ideal_module(const AlgebraPtr& R, const GradedIdeal& a) {
  return submodule(GradedModule::regular(R), a.space).module;
}

std::vector<Matrix> hom_component(const GradedModule& M, const GradedModule& N, const GroupElement& g) {
  const Field& f = M.field();
  const GradedAlgebra& R = *M.ring();
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (k, j): v_j -> w_k
  for (std::size_t j = 0; j < M.dim(); ++j)
    for (std::size_t k = 0; k < N.dim(); ++k)
      if (N.degree(k) == M.group().add(M.degree(j), g)) slots.emplace_back(k, j);
  if (slots.empty()) return {};
  // Equations (A^N_i F - F A^M_i)(k, j) = 0.
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    const Matrix& AN = N.action(i);
    const Matrix& AM = M.action(i);
    std::vector<Vector> eq(N.dim() * M.dim(), Vector(slots.size()));
    for (std::size_t t = 0; t < slots.size(); ++t) {
      auto [k, j] = slots[t];
      // F = E_{kj}: (A^N F)(a, j) = A^N(a, k); (F A^M)(k, b) = A^M(j, b).
      for (std::size_t a = 0; a < N.dim(); ++a)
        if (AN(a, k) != 0) eq[a * M.dim() + j][t] = f.add(eq[a * M.dim() + j][t], AN(a, k));
      for (std::size_t b = 0; b < M.dim(); ++b)
        if (AM(j, b) != 0) eq[k * M.dim() + b][t] = f.sub(eq[k * M.dim() + b][t], AM(j, b));
    }
    for (auto& e : eq)
      if (!is_zero(e)) rows.push_back(std::move(e));
  }
  Matrix sys = rows.empty() ? Matrix(f, 0, slots.size()) : Matrix::from_rows(f, rows);
  std::vector<Matrix> out;
  for (const auto& k : kernel_basis(sys)) {
    Matrix F(f, N.dim(), M.dim());
    for (std::size_t t = 0; t < slots.size(); ++t) F(slots[t].first, slots[t].second) = k[t];
    out.push_back(F);
  }
  return out;
}

std::vector<ModuleMorphism> module_morphisms(const GradedModule& M, const GradedModule& N, double cap) {
  const Field& f = M.field();
  if (!f.is_finite()) throw ValidationError("field", "morphism enumeration needs a finite field");
  auto basis = hom_component(M, N, M.group().zero());
  const unsigned long p = f.characteristic();
  if (std::pow(double(p), double(basis.size())) > cap) throw SizeGuardError("too many module morphisms");
  std::vector<ModuleMorphism> out;
  std::vector<unsigned long> digits(basis.size(), 0);
  for (;;) {
    Matrix F(f, N.dim(), M.dim());
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (digits[t]) F = F + basis[t].scaled(Rational(digits[t]));
    out.push_back(ModuleMorphism{M, N, F});
    std::size_t t = 0;
    while (t < digits.size() && digits[t] == p - 1) digits[t++] = 0;
    if (t == digits.size()) break;
    ++digits[t];
  }
  std::sort(out.begin(), out.end(), [](const ModuleMorphism& a, const ModuleMorphism& b) {
    return flatten(a.matrix) < flatten(b.matrix);
  });
  return out;
}

Matrix HomModule::to_map(const Vector& v) const {
  Matrix m(module.field(), rows, cols);
  for (std::size_t j = 0; j < maps.size(); ++j)
    if (v[j] != 0) m = m + maps[j].scaled(v[j]);
  return m;
}

Vector HomModule::coordinates(const Matrix& f) const {
  Vector v = flatten(f);
  if (!span.contains(v)) throw ValidationError("hom-coordinates", "map is not a module morphism");
  return span.coordinates(v);
}

HomModule graded_hom(const GradedModule& M, const GradedModule& N) {
  const Field& f = M.field();
  const FGAbelianGroup& G = M.group();
  std::set<GroupElement> candidates;
  for (const auto& a : M.degrees())
    for (const auto& b : N.degrees()) candidates.insert(G.sub(b, a));
  std::vector<Vector> flat;
  for (const auto& g : candidates)
    for (const auto& F : hom_component(M, N, g)) flat.push_back(flatten(F));
  HomModule H;
  H.rows = N.dim();
  H.cols = M.dim();
  H.span = Subspace(f, N.dim() * M.dim(), flat);
  std::vector<GroupElement> degs;
  for (const auto& b : H.span.basis()) {
    Matrix F = unflatten(f, b, N.dim(), M.dim());
    H.maps.push_back(F);
    std::optional<GroupElement> d;
    for (std::size_t k = 0; k < N.dim() && !d; ++k)
      for (std::size_t j = 0; j < M.dim() && !d; ++j)
        if (F(k, j) != 0) d = G.sub(N.degree(k), M.degree(j));
    degs.push_back(*d);
  }
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < M.ring()->dim(); ++i) {
    Matrix a(f, H.maps.size(), H.maps.size());
    for (std::size_t j = 0; j < H.maps.size(); ++j) a.set_column(j, H.coordinates(N.action(i) * H.maps[j]));
    act.push_back(a);
  }
  H.module = GradedModule::make(M.ring(), degs, act);
  return H;
}

Vector TensorModule::pure(std::size_t a, std::size_t b) const {
  Vector e(quotient.projection.source.dim());
  e[a * right_dim + b] = 1;
  return quotient.projection.matrix * e;
}

TensorModule tensor(const GradedModule& M, const GradedModule& N) {
  if (!(*M.ring() == *N.ring())) throw ValidationError("tensor", "modules over different algebras");
  const Field& f = M.field();
  const GradedAlgebra& R = *M.ring();
  const std::size_t m = M.dim(), n = N.dim();
  std::vector<GroupElement> degs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) degs.push_back(M.group().add(M.degree(a), N.degree(b)));
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    Matrix A(f, m * n, m * n);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < m; ++k)
          if (M.action(i)(k, a) != 0) A(k * n + b, a * n + b) = M.action(i)(k, a);
    act.push_back(A);
  }
  GradedModule T0 = GradedModule::make(M.ring(), degs, act);
  std::vector<Vector> rel;
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector r(m * n);
        for (std::size_t k = 0; k < m; ++k) r[k * n + b] = f.add(r[k * n + b], M.action(i)(k, a));
        for (std::size_t l = 0; l < n; ++l) r[a * n + l] = f.sub(r[a * n + l], N.action(i)(l, b));
        if (!is_zero(r)) rel.push_back(r);
      }
  TensorModule T;
  T.right_dim = n;
  T.quotient = quotient_module(T0, Subspace(f, m * n, rel));
  T.module = T.quotient.module;
  return T;
}

AdjunctionIso hom_tensor_adjunction(const GradedModule& L, const GradedModule& M, const GradedModule& N) {
  const Field& f = L.field();
  TensorModule T = tensor(L, M);
  HomModule H1 = graded_hom(T.module, N);
  HomModule HM = graded_hom(M, N);
  HomModule H2 = graded_hom(L, HM.module);
  Matrix iso(f, H2.module.dim(), H1.module.dim());
  for (std::size_t j = 0; j < H1.maps.size(); ++j) {
    const Matrix& F = H1.maps[j];
    // Curried map: column a is the HOM(M, N)-coordinate vector of m |-> F(l_a (x) m).
    Matrix curried(f, HM.module.dim(), L.dim());
    for (std::size_t a = 0; a < L.dim(); ++a) {
      Matrix phi(f, N.dim(), M.dim());
      for (std::size_t b = 0; b < M.dim(); ++b) phi.set_column(b, F * T.pure(a, b));
      curried.set_column(a, HM.coordinates(phi));
    }
    iso.set_column(j, H2.coordinates(curried));
  }
  AdjunctionIso out{ModuleMorphism{H1.module, H2.module, iso}, false};
  out.verified = is_isomorphism(out.iso);
  return out;
}

std::size_t FreeSpec::rank() const {
  std::size_t r = 0;
  for (const auto& [g, n] : parts) r += n;
  return r;
}

std::vector<GroupElement> FreeSpec::generator_degrees(const FGAbelianGroup& G) const {
  std::vector<GroupElement> out;
  for (const auto& [g, n] : parts)
    for (std::size_t t = 0; t < n; ++t) out.push_back(G.neg(g));
  std::sort(out.begin(), out.end());
  return out;
}

FreeSpec FreeSpec::from_generator_degrees(const FGAbelianGroup& G, std::vector<GroupElement> degs) {
  std::map<GroupElement, std::size_t> count;
  for (const auto& d : degs) ++count[G.neg(d)];
  FreeSpec s;
  for (const auto& [g, n] : count) s.parts.emplace_back(g, n);
  return s;
}

GradedModule free_module(const AlgebraPtr& R, const std::vector<GroupElement>& generator_degrees) {
  if (generator_degrees.empty()) return GradedModule::zero(R);
  std::vector<GradedModule> parts;
  GradedModule reg = GradedModule::regular(R);
  for (const auto& d : generator_degrees) parts.push_back(shift(reg, R->group().neg(d)));
  return direct_sum(parts).module;
}

namespace {

// Columns x_i * m_e for every generator e: the map from the free module onto M.
Matrix free_map(const GradedModule& M, const std::vector<Vector>& gens) {
  const std::size_t n = M.ring()->dim();
  Matrix m(M.field(), M.dim(), gens.size() * n);
  for (std::size_t e = 0; e < gens.size(); ++e)
    for (std::size_t i = 0; i < n; ++i) m.set_column(e * n + i, M.action(i) * gens[e]);
  return m;
}

bool fits(const HilbertFunction& big, const HilbertFunction& small) {
  for (const auto& [g, n] : small) {
    auto it = big.find(g);
    if (n > 0 && (it == big.end() || it->second < n)) return false;
  }
  return true;
}

void candidate_specs(const FGAbelianGroup& G, const HilbertFunction& hR, HilbertFunction remaining,
                     const std::vector<GroupElement>& cands, std::size_t from, std::size_t left,
                     std::vector<GroupElement>& cur, std::vector<std::vector<GroupElement>>& out, std::size_t cap) {
  if (out.size() >= cap) return;
  if (left == 0) {
    bool empty = std::all_of(remaining.begin(), remaining.end(), [](const auto& kv) { return kv.second == 0; });
    if (empty) out.push_back(cur);
    return;
  }
  for (std::size_t c = from; c < cands.size(); ++c) {
    HilbertFunction sh;
    for (const auto& [s, n] : hR) sh[G.add(s, cands[c])] = n;
    if (!fits(remaining, sh)) continue;
    HilbertFunction next = remaining;
    for (const auto& [g, n] : sh) next[g] -= n;
    cur.push_back(cands[c]);
    candidate_specs(G, hR, next, cands, c, left - 1, cur, out, cap);
    cur.pop_back();
  }
}

}  // namespace

bool is_free_set(const GradedModule& M, const std::vector<Vector>& E) {
  for (const auto& e : E)
    if (!M.is_homogeneous(e) || is_zero(e)) return false;
  return rank(free_map(M, E)) == E.size() * M.ring()->dim();
}

std::vector<Vector> extend_to_basis(const GradedModule& M, const std::vector<Vector>& E, const std::vector<Vector>& F) {
  std::vector<Vector> B = E;
  for (const auto& x : F) {
    if (is_zero(x)) continue;
    if (!M.is_homogeneous(x)) throw ValidationError("basis-extension", "generating set must be homogeneous");
    if (!generated_submodule(M, B).contains(x)) B.push_back(x);
  }
  return B;
}

FreenessResult freeness(const GradedModule& M, std::uint64_t seed, std::uint64_t budget) {
  FreenessResult res;
  const AlgebraPtr& R = M.ring();
  const FGAbelianGroup& G = M.group();
  if (M.dim() == 0 || R->dim() == 0) {
    res.free = Truth::yes;
    res.rank = 0;
    res.spec = FreeSpec{};
    res.method = "zero";
    return res;
  }
  if (classify_ring(*R).simple == Truth::yes) {
    std::vector<Vector> F;
    for (std::size_t j = 0; j < M.dim(); ++j) F.push_back(M.basis_vector(j));
    res.basis = extend_to_basis(M, {}, F);
    std::vector<GroupElement> degs;
    for (const auto& b : res.basis) degs.push_back(*M.degree_of(b));
    res.spec = FreeSpec::from_generator_degrees(G, degs);
    res.rank = res.basis.size();
    res.free = Truth::yes;
    res.method = "greedy";
    if (!is_free_set(M, res.basis) || rank(free_map(M, res.basis)) != M.dim())
      throw std::logic_error("greedy basis extension failed over a simple ring");
    return res;
  }
  res.method = "intertwiner";
  if (M.dim() % R->dim() != 0) {
    res.free = Truth::no;
    return res;
  }
  const std::size_t t = M.dim() / R->dim();
  HilbertFunction hM = hilbert(M), hR = hilbert(*R);
  std::set<GroupElement> cset;
  for (const auto& [g, n] : hM)
    for (const auto& [s, k] : hR) cset.insert(G.sub(g, s));
  std::vector<GroupElement> cands(cset.begin(), cset.end());
  std::vector<std::vector<GroupElement>> specs;
  std::vector<GroupElement> cur;
  candidate_specs(G, hR, hM, cands, 0, t, cur, specs, 512);
  bool undecided = false;
  for (const auto& degs : specs) {
    // Parameters: a coordinate of m_e in the component M_{d_e}.
    std::vector<std::pair<std::size_t, std::size_t>> params;
    for (std::size_t e = 0; e < degs.size(); ++e)
      for (auto j : M.component(degs[e])) params.emplace_back(e, j);
    std::vector<Matrix> ks;
    for (auto [e, j] : params) {
      std::vector<Vector> gens(degs.size(), Vector(M.dim()));
      gens[e] = M.basis_vector(j);
      ks.push_back(free_map(M, gens));
    }
    Matrix zero(M.field(), M.dim(), M.dim());
    IntertwinerResult ir = invertible_intertwiner(zero, ks, seed, budget);
    if (ir.outcome == SearchOutcome::found) {
      const std::size_t n = R->dim();
      for (std::size_t e = 0; e < degs.size(); ++e) {
        Vector m(M.dim());
        for (std::size_t i = 0; i < n; ++i)
          if (R->unit()[i] != 0) m = add(M.field(), m, scale(M.field(), R->unit()[i], ir.matrix->column(e * n + i)));
        res.basis.push_back(m);
      }
      res.free = Truth::yes;
      res.spec = FreeSpec::from_generator_degrees(G, degs);
      res.rank = degs.size();
      return res;
    }
    if (ir.outcome == SearchOutcome::budget_exhausted) undecided = true;
  }
  res.free = undecided ? Truth::undecided : Truth::no;
  return res;
}

Truth is_monogeneous(const GradedModule& M, std::uint64_t seed) {
  if (M.dim() == 0) return Truth::yes;
  const Field& f = M.field();
  auto generates = [&](const Vector& v) { return generated_submodule(M, {v}).dim() == M.dim(); };
  if (f.is_finite()) {
    const unsigned long p = f.characteristic();
    bool complete = true;
    for (const auto& g : M.support()) {
      auto idx = M.component(g);
      if (std::pow(double(p), double(idx.size())) > 65536.0) {
        complete = false;
        continue;
      }
      std::vector<unsigned long> digits(idx.size(), 0);
      for (;;) {
        Vector v(M.dim());
        for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = Rational(digits[t]);
        if (generates(v)) return Truth::yes;
        std::size_t t = 0;
        while (t < idx.size() && digits[t] == p - 1) digits[t++] = 0;
        if (t == idx.size()) break;
        ++digits[t];
      }
    }
    return complete ? Truth::no : Truth::undecided;
  }
  if (M.dim() > M.ring()->dim()) return Truth::no;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-64, 64);
  for (const auto& g : M.support()) {
    auto idx = M.component(g);
    for (int trial = 0; trial < 8; ++trial) {
      Vector v(M.dim());
      for (auto j : idx) v[j] = Rational(dist(rng));
      if (generates(v)) return Truth::yes;
    }
  }
  return Truth::undecided;
}

Subspace graded_radical(const GradedModule& M) {
  GradedIdeal J = graded_jacobson(*M.ring());
  std::vector<Vector> span;
  for (const auto& j : J.space.basis()) {
    Matrix a = M.act_matrix(j);
    for (std::size_t b = 0; b < M.dim(); ++b) span.push_back(a.column(b));
  }
  return Subspace(M.field(), M.dim(), span);
}

Subspace graded_socle(const GradedModule& M) {
  GradedIdeal J = graded_jacobson(*M.ring());
  if (J.space.dim() == 0) return Subspace::full(M.field(), M.dim());
  Matrix stacked(M.field(), 0, M.dim());
  for (const auto& j : J.space.basis()) stacked = stacked.vcat(M.act_matrix(j));
  return Subspace(M.field(), M.dim(), kernel_basis(stacked));
}

std::vector<Subspace> graded_submodules(const GradedModule& M, std::size_t cap) {
  std::vector<Subspace> out;
  for (auto& s : graded_subspaces(M.field(), M.degrees(), cap))
    if (is_graded_submodule(M, s)) out.push_back(std::move(s));
  return out;
}

SmallResult small_submodule(const ModuleMorphism& u, SmallMode mode) {
  validate_module_morphism(u);
  if (!is_monomorphism(u)) throw ValidationError("monomorphism", "u must be injective");
  const GradedModule& N = u.target;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < u.matrix.cols(); ++j) cols.push_back(u.matrix.column(j));
  Subspace I(N.field(), N.dim(), cols);
  SmallResult res;
  res.method = "criterion";
  if (mode == SmallMode::superfluous) {
    res.flag = graded_radical(N).contains(I);
  } else {
    res.flag = I.contains(graded_socle(N));
  }
  if (!N.field().is_finite()) return res;
  std::vector<Subspace> subs;
  try {
    subs = graded_submodules(N);
  } catch (const SizeGuardError&) {
    res.guard_hit = true;
    return res;
  }
  res.exhaustive_run = true;
  bool flag = true;
  for (const auto& L : subs) {
    bool refutes = mode == SmallMode::superfluous ? (L.dim() < N.dim() && I.sum(L).dim() == N.dim())
                                                  : (L.dim() > 0 && I.intersect(L).dim() == 0);
    if (refutes) {
      flag = false;
      res.witness = L;
      break;
    }
  }
  res.agree = flag == res.flag;
  if (!res.agree) {
    res.flag = flag;
    res.method = "exhaustive";
  }
  return res;
}

}  // namespace gradex
