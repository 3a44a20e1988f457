#include "gradex/homological.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

namespace gradex {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// Matrix of a map into the submodule S, given the map into the ambient module.
Matrix into_submodule(const Submodule& S, const Matrix& m) {
  Subspace span(m.field(), S.inclusion.target.dim(), columns(S.inclusion.matrix));
  Matrix out(m.field(), S.module.dim(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vector c = m.column(j);
    if (!span.contains(c)) throw ValidationError("exactness", "map does not land in the kernel");
    out.set_column(j, span.coordinates(c));
  }
  return out;
}

// Homogeneous module morphism s : Q -> P with alpha o s = beta.
Matrix lift(const ModuleMorphism& alpha, const ModuleMorphism& beta) {
  const Field& f = alpha.matrix.field();
  auto basis = hom_component(beta.source, alpha.source, beta.source.group().zero());
  const Vector target = flatten(beta.matrix);
  Matrix sys(f, target.size(), basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) sys.set_column(t, flatten(alpha.matrix * basis[t]));
  auto sol = solve(sys, target);
  if (!sol) throw ValidationError("projective-lift", "no lift exists; a middle term is not projective");
  Matrix s(f, alpha.source.dim(), beta.source.dim());
  for (std::size_t t = 0; t < basis.size(); ++t)
    if ((*sol)[t] != 0) s = s + basis[t].scaled((*sol)[t]);
  return s;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Matrix stack(const Matrix& top, std::size_t extra_rows) {
  return top.vcat(Matrix(top.field(), extra_rows, top.cols()));
}

bool report_equal(const DimensionReport& a, const DimensionReport& b) {
  return a.value == b.value && a.cutoff == b.cutoff;
}

}  // namespace

FreeCover free_cover(const GradedModule& M, bool minimal) {
  FreeCover c;
  const Field& f = M.field();
  std::vector<std::size_t> order(M.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return M.degree(a) < M.degree(b); });
  Subspace covered = minimal ? graded_radical(M) : Subspace::zero(f, M.dim());
  for (auto j : order) {
    Vector e = M.basis_vector(j);
    if (minimal && covered.contains(e)) continue;
    c.generators.push_back(e);
    c.generator_degrees.push_back(M.degree(j));
    if (minimal) covered = covered.sum(generated_submodule(M, {e}));
  }
  c.free = free_module(M.ring(), c.generator_degrees);
  const std::size_t n = M.ring()->dim();
  Matrix m(f, M.dim(), c.generators.size() * n);
  for (std::size_t e = 0; e < c.generators.size(); ++e)
    for (std::size_t i = 0; i < n; ++i) m.set_column(e * n + i, M.action(i) * c.generators[e]);
  c.map = ModuleMorphism{c.free, M, m};
  return c;
}

FreeResolution resolution(const GradedModule& M, std::size_t cutoff, bool minimal) {
  if (cutoff > 32) throw ValidationError("cutoff", "resolution cutoff must be at most 32");
  FreeResolution r;
  r.target = M;
  r.cutoff = cutoff;
  r.minimal = minimal;
  GradedModule current = M;
  for (std::size_t i = 0; i <= cutoff; ++i) {
    if (current.dim() == 0) {
      r.terminated = true;
      if (i > 0) r.length = i - 1;
      break;
    }
    ResolutionStep step;
    step.cover = free_cover(current, minimal);
    step.differential =
        i == 0 ? step.cover.map.matrix : r.steps.back().kernel.inclusion.matrix * step.cover.map.matrix;
    step.kernel = kernel(step.cover.map);
    BettiRow row;
    for (const auto& d : step.cover.generator_degrees) ++row[d];
    r.betti.push_back(row);
    current = step.kernel.module;
    r.steps.push_back(std::move(step));
  }
  if (!r.terminated && current.dim() == 0) {
    r.terminated = true;
    r.length = r.steps.size() - 1;
  }
  return r;
}

bool FreeResolution::verify() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Matrix& d = steps[i].differential;
    if (i == 0 && rank(d) != target.dim()) return false;
    if (i > 0) {
      const Matrix& prev = steps[i - 1].differential;
      if (!(prev * d).is_zero()) return false;
      if (rank(d) != prev.cols() - rank(prev)) return false;
    }
  }
  return true;
}

std::string betti_table_text(const FreeResolution& r) {
  std::set<GroupElement> degs;
  for (const auto& row : r.betti)
    for (const auto& [g, n] : row) degs.insert(g);
  std::ostringstream os;
  os << std::setw(10) << "degree";
  for (std::size_t i = 0; i < r.betti.size(); ++i) os << std::setw(5) << i;
  os << '\n';
  for (const auto& g : degs) {
    os << std::setw(10) << g.to_string();
    for (const auto& row : r.betti) {
      auto it = row.find(g);
      os << std::setw(5) << (it == row.end() ? std::string("-") : std::to_string(it->second));
    }
    os << '\n';
  }
  if (!r.terminated) os << "(not terminated by step " << r.cutoff << ")\n";
  return os.str();
}

bool is_projective(const GradedModule& M) {
  if (M.dim() == 0) return true;
  FreeCover c = free_cover(M, true);
  try {
    lift(c.map, identity_morphism(M));
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

GradedModule dual(const GradedModule& M) {
  std::vector<GroupElement> degs;
  for (const auto& d : M.degrees()) degs.push_back(M.group().neg(d));
  std::vector<Matrix> act;
  for (const auto& a : M.actions()) act.push_back(a.transpose());
  return GradedModule::make(M.ring(), degs, act);
}

ModuleMorphism dual(const ModuleMorphism& u) {
  return ModuleMorphism{dual(u.target), dual(u.source), u.matrix.transpose()};
}

bool is_injective(const GradedModule& M) { return is_projective(dual(M)); }

bool is_flat(const GradedModule& M) { return is_projective(M); }

GradedModule injective_cogenerator(const AlgebraPtr& R) { return dual(GradedModule::regular(R)); }

ModuleMorphism double_dual_evaluation(const GradedModule& M) {
  ModuleMorphism ev{M, dual(dual(M)), Matrix::identity(M.field(), M.dim())};
  validate_module_morphism(ev);
  return ev;
}

bool cogenerator_detects(const ModuleMorphism& u) {
  if (u.matrix.is_zero()) return true;
  GradedModule E = injective_cogenerator(u.source.ring());
  HomModule H = graded_hom(u.target, E);
  for (const auto& f : H.maps)
    if (!(f * u.matrix).is_zero()) return true;
  return false;
}

namespace {

struct Embedding {
  GradedModule injective;
  ModuleMorphism map;  // M -> sum of shifted copies of E, injective
};

// m |-> (r |-> f_t(r m)) for functionals f_t generating dual(M).
Embedding cogenerator_embedding(const GradedModule& M) {
  const AlgebraPtr& R = M.ring();
  const Field& f = M.field();
  const std::size_t n = R->dim();
  FreeCover c = free_cover(dual(M), true);
  GradedModule E = injective_cogenerator(R);
  std::vector<GradedModule> parts;
  for (const auto& d : c.generator_degrees) parts.push_back(shift(E, d));
  Embedding emb;
  if (parts.empty()) {
    emb.injective = GradedModule::zero(R);
    emb.map = ModuleMorphism{M, emb.injective, Matrix(f, 0, M.dim())};
    return emb;
  }
  emb.injective = direct_sum(parts).module;
  Matrix m(f, parts.size() * n, M.dim());
  for (std::size_t t = 0; t < c.generators.size(); ++t) {
    const Vector& ft = c.generators[t];
    for (std::size_t i = 0; i < n; ++i) {
      // Row (t, i): v_j |-> f_t(x_i v_j).
      Vector row = M.action(i).transpose() * ft;
      for (std::size_t j = 0; j < M.dim(); ++j) m(t * n + i, j) = row[j];
    }
  }
  emb.map = ModuleMorphism{M, emb.injective, m};
  validate_module_morphism(emb.map);
  if (rank(m) != M.dim()) throw std::logic_error("cogenerator embedding is not injective");
  return emb;
}

}  // namespace

bool is_injective_direct(const GradedModule& M) {
  if (M.dim() == 0) return true;
  Embedding emb = cogenerator_embedding(M);
  const Field& f = M.field();
  auto basis = hom_component(emb.injective, M, M.group().zero());
  const Vector target = flatten(Matrix::identity(f, M.dim()));
  Matrix sys(f, target.size(), basis.size());
  for (std::size_t t = 0; t < basis.size(); ++t) sys.set_column(t, flatten(basis[t] * emb.map.matrix));
  return solve(sys, target).has_value();
}

std::string to_string(DimensionKind k) {
  switch (k) {
    case DimensionKind::projective: return "projective";
    case DimensionKind::injective: return "injective";
    default: return "flat";
  }
}

std::string DimensionReport::to_string() const {
  return value ? std::to_string(*value) : "≥" + std::to_string(cutoff);
}

bool at_most(const DimensionReport& a, const DimensionReport& b) {
  if (a.value && b.value) return *a.value <= *b.value;
  if (!a.value && b.value) return a.cutoff <= *b.value;
  return true;
}

DimensionReport dimension(const GradedModule& M, DimensionKind kind, std::size_t cutoff) {
  DimensionReport rep;
  rep.kind = kind;
  rep.cutoff = cutoff;
  if (kind == DimensionKind::injective) {
    DimensionReport p = dimension(dual(M), DimensionKind::projective, cutoff);
    rep.value = p.value;
    return rep;
  }
  auto test = kind == DimensionKind::projective ? is_projective : is_flat;
  if (cutoff == 0) return rep;
  if (test(M)) {
    rep.value = 0;
    return rep;
  }
  FreeResolution r = resolution(M, cutoff - 1, true);
  for (std::size_t n = 1; n < cutoff && n <= r.steps.size(); ++n) {
    if (test(r.steps[n - 1].kernel.module)) {
      rep.value = n;
      return rep;
    }
  }
  return rep;
}

DimensionReport injective_dimension_direct(const GradedModule& M, std::size_t cutoff) {
  DimensionReport rep;
  rep.kind = DimensionKind::injective;
  rep.cutoff = cutoff;
  GradedModule C = M;
  for (std::size_t n = 0; n < cutoff; ++n) {
    if (is_injective_direct(C)) {
      rep.value = n;
      return rep;
    }
    Embedding emb = cogenerator_embedding(C);
    C = cokernel(emb.map).module;
  }
  return rep;
}

Submodule ExactSequence::kernel() const {
  if (maps.empty()) throw ValidationError("exactness", "sequence has no free terms");
  return gradex::kernel(maps.back());
}

void ExactSequence::validate() const {
  if (maps.empty()) throw ValidationError("exactness", "sequence has no free terms");
  for (const auto& m : maps) validate_module_morphism(m);
  if (!(maps[0].target == target)) throw ValidationError("exactness", "P_0 does not map to the target");
  if (rank(maps[0].matrix) != target.dim()) throw ValidationError("exactness", "P_0 -> M is not surjective");
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (!(maps[i].target == maps[i - 1].source)) throw ValidationError("exactness", "maps do not compose");
    const Matrix& prev = maps[i - 1].matrix;
    if (!(prev * maps[i].matrix).is_zero() || rank(maps[i].matrix) != prev.cols() - rank(prev))
      throw ValidationError("exactness", "not exact at P_" + std::to_string(i - 1));
  }
}

ExactSequence truncate(const FreeResolution& r, std::size_t n) {
  if (n == 0 || n > r.steps.size()) throw ValidationError("truncation", "resolution too short for this length");
  ExactSequence s;
  s.target = r.target;
  for (std::size_t i = 0; i < n; ++i) {
    const GradedModule& src = r.steps[i].cover.free;
    const GradedModule& dst = i == 0 ? r.target : r.steps[i - 1].cover.free;
    s.maps.push_back(ModuleMorphism{src, dst, r.steps[i].differential});
  }
  return s;
}

ExactSequence pad(const ExactSequence& s, const GroupElement& d) {
  s.validate();
  const AlgebraPtr& R = s.target.ring();
  GradedModule F = free_module(R, {d});
  ExactSequence out;
  out.target = s.target;
  const GradedModule& P0 = s.maps[0].source;
  GradedModule P0x = direct_sum({P0, F}).module;
  out.maps.push_back(ModuleMorphism{P0x, s.target, s.maps[0].matrix.hcat(Matrix(s.target.field(), s.target.dim(), F.dim()))});
  if (s.length() >= 2) {
    const GradedModule& P1 = s.maps[1].source;
    GradedModule P1x = direct_sum({P1, F}).module;
    Matrix d1 = block_diagonal(s.maps[1].matrix, Matrix::identity(F.field(), F.dim()));
    out.maps.push_back(ModuleMorphism{P1x, P0x, d1});
    if (s.length() >= 3) out.maps.push_back(ModuleMorphism{s.maps[2].source, P1x, stack(s.maps[2].matrix, F.dim())});
    for (std::size_t i = 3; i < s.length(); ++i) out.maps.push_back(s.maps[i]);
  }
  out.validate();
  return out;
}

namespace {

struct Glue {
  ModuleMorphism iso;     // K + Q -> L + P
  Submodule K, L;
};

Glue glue_one(const ModuleMorphism& alpha, const ModuleMorphism& beta) {
  const Field& f = alpha.matrix.field();
  const GradedModule& P = alpha.source;
  const GradedModule& Q = beta.source;
  Matrix s = lift(alpha, beta);  // Q -> P, alpha s = beta
  Matrix t = lift(beta, alpha);  // P -> Q, beta t = alpha
  Glue g;
  g.K = kernel(alpha);
  g.L = kernel(beta);
  const Matrix& iK = g.K.inclusion.matrix;
  GradedModule X = direct_sum({g.K.module, Q}).module;
  GradedModule Y = direct_sum({g.L.module, P}).module;
  // (k, q) |-> (q - t(k + s q), k + s q) through the fibre product of alpha and beta.
  Matrix topleft = into_submodule(g.L, (t * iK).scaled(-1));
  Matrix topright = into_submodule(g.L, Matrix::identity(f, Q.dim()) - t * s);
  Matrix top = topleft.hcat(topright);
  Matrix bottom = iK.hcat(s);
  g.iso = ModuleMorphism{X, Y, top.vcat(bottom)};
  return g;
}

SchanuelResult glue(const ExactSequence& a, const ExactSequence& b) {
  const std::size_t n = a.length();
  if (n == 1) {
    Glue g = glue_one(a.maps[0], b.maps[0]);
    SchanuelResult res;
    res.iso = g.iso;
    return res;
  }
  const Field& f = a.target.field();
  Glue g = glue_one(a.maps[0], b.maps[0]);
  const GradedModule& X = g.iso.source;  // K_0 + Q_0
  const GradedModule& Q0 = b.maps[0].source;
  const GradedModule& P0 = a.maps[0].source;
  auto theta_inv = inverse(g.iso.matrix);
  if (!theta_inv) throw std::logic_error("fibre-product gluing is not invertible");

  ExactSequence a2, b2;
  a2.target = X;
  b2.target = X;
  GradedModule P1Q0 = direct_sum({a.maps[1].source, Q0}).module;
  a2.maps.push_back(ModuleMorphism{
      P1Q0, X, block_diagonal(into_submodule(g.K, a.maps[1].matrix), Matrix::identity(f, Q0.dim()))});
  GradedModule Q1P0 = direct_sum({b.maps[1].source, P0}).module;
  Matrix toY = block_diagonal(into_submodule(g.L, b.maps[1].matrix), Matrix::identity(f, P0.dim()));
  b2.maps.push_back(ModuleMorphism{Q1P0, X, *theta_inv * toY});
  if (n >= 3) {
    a2.maps.push_back(ModuleMorphism{a.maps[2].source, P1Q0, stack(a.maps[2].matrix, Q0.dim())});
    b2.maps.push_back(ModuleMorphism{b.maps[2].source, Q1P0, stack(b.maps[2].matrix, P0.dim())});
  }
  for (std::size_t i = 3; i < n; ++i) {
    a2.maps.push_back(a.maps[i]);
    b2.maps.push_back(b.maps[i]);
  }
  a2.validate();
  b2.validate();
  return glue(a2, b2);
}

}  // namespace

SchanuelResult schanuel_glue(const ExactSequence& a, const ExactSequence& b) {
  a.validate();
  b.validate();
  if (!(a.target == b.target)) throw ValidationError("schanuel-target", "sequences resolve different modules");
  if (a.length() != b.length()) throw ValidationError("schanuel-length", "sequences have different lengths");
  SchanuelResult res = glue(a, b);
  res.source_hilbert = hilbert(res.iso.source);
  res.target_hilbert = hilbert(res.iso.target);
  res.verified = is_isomorphism(res.iso);
  return res;
}

DimensionComparison coarsen_dimension_compare(const GradedModule& M, const GroupHom& psi, std::size_t cutoff) {
  DimensionComparison c;
  GradedModule Mc = coarsen(M, psi);
  c.pd_fine = dimension(M, DimensionKind::projective, cutoff);
  c.pd_coarse = dimension(Mc, DimensionKind::projective, cutoff);
  c.fd_fine = dimension(M, DimensionKind::flat, cutoff);
  c.fd_coarse = dimension(Mc, DimensionKind::flat, cutoff);
  c.pd_equal = report_equal(c.pd_fine, c.pd_coarse);
  c.fd_equal = report_equal(c.fd_fine, c.fd_coarse);
  FreeResolution rf = resolution(M, cutoff, true);
  FreeResolution rc = resolution(Mc, cutoff, true);
  for (const auto& row : rf.betti) {
    BettiRow pushed;
    for (const auto& [g, n] : row) pushed[psi(g)] += n;
    c.betti_fine_pushed.push_back(pushed);
  }
  c.betti_coarse = rc.betti;
  c.betti_equal = c.betti_fine_pushed == c.betti_coarse;
  if (kernel_data(psi).finite) {
    c.id_fine = dimension(M, DimensionKind::injective, cutoff);
    c.id_coarse = dimension(Mc, DimensionKind::injective, cutoff);
    c.id_equal = report_equal(*c.id_fine, *c.id_coarse);
  } else {
    c.note = "kernel of psi is infinite; injective dimensions are not compared";
  }
  return c;
}

LambekCheck lambek_check(const GradedModule& M) {
  LambekCheck l;
  l.flat = is_flat(M);
  l.hom_injective = is_injective(graded_hom(M, injective_cogenerator(M.ring())).module);
  return l;
}

}  // namespace gradex
