#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradex/algebra.hpp"
#include "gradex/functors.hpp"

namespace gradex {

using HilbertFunction = std::map<GroupElement, std::size_t>;

/// Finite-dimensional graded module with a homogeneous basis v_j; action(i) is
/// the matrix of x_i, column j holding x_i * v_j.
class GradedModule {
 public:
  GradedModule() = default;
  /// Throws ValidationError ("module-grading", "module-associativity", "module-unit").
  static GradedModule make(AlgebraPtr R, std::vector<GroupElement> degrees, std::vector<Matrix> action);
  /// R as a module over itself.
  static GradedModule regular(const AlgebraPtr& R);
  static GradedModule zero(const AlgebraPtr& R);

  const AlgebraPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const FGAbelianGroup& group() const { return ring_->group(); }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t j) const { return degrees_[j]; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }

  Vector basis_vector(std::size_t j) const;
  Matrix act_matrix(const Vector& r) const;
  Vector act(const Vector& r, const Vector& v) const;
  std::vector<std::size_t> component(const GroupElement& g) const;
  std::vector<GroupElement> support() const;
  std::map<GroupElement, Vector> components(const Vector& v) const;
  bool is_homogeneous(const Vector& v) const;
  std::optional<GroupElement> degree_of(const Vector& v) const;

  bool operator==(const GradedModule& o) const {
    return *ring_ == *o.ring_ && degrees_ == o.degrees_ && action_ == o.action_;
  }

 private:
  AlgebraPtr ring_;
  std::vector<GroupElement> degrees_;
  std::vector<Matrix> action_;
};

/// Degree-preserving R-linear map; column j is the image of v_j.
struct ModuleMorphism {
  GradedModule source, target;
  Matrix matrix;
};

void validate_module_morphism(const ModuleMorphism& u);
bool is_module_morphism(const ModuleMorphism& u);
ModuleMorphism identity_morphism(const GradedModule& M);
ModuleMorphism compose(const ModuleMorphism& v, const ModuleMorphism& u);  // v o u
bool is_isomorphism(const ModuleMorphism& u);
bool is_monomorphism(const ModuleMorphism& u);
bool is_epimorphism(const ModuleMorphism& u);

HilbertFunction hilbert(const GradedModule& M);
HilbertFunction hilbert(const GradedAlgebra& R);
HilbertFunction hilbert_sum(const HilbertFunction& a, const HilbertFunction& b);
std::string to_string(const HilbertFunction& h);

/// M(g): the element of degree d in M has degree d - g in M(g).
GradedModule shift(const GradedModule& M, const GroupElement& g);

struct DirectSum {
  GradedModule module;
  std::vector<ModuleMorphism> inclusions, projections;
};
DirectSum direct_sum(const std::vector<GradedModule>& parts);

struct Submodule {
  GradedModule module;
  ModuleMorphism inclusion;
};
struct QuotientModule {
  GradedModule module;
  ModuleMorphism projection;
  Subspace relations;
  std::vector<std::size_t> kept;
};

/// The submodule with the given graded subspace as underlying space.
Submodule submodule(const GradedModule& M, const Subspace& s);
Subspace generated_submodule(const GradedModule& M, const std::vector<Vector>& gens);
bool is_graded_submodule(const GradedModule& M, const Subspace& s);
QuotientModule quotient_module(const GradedModule& M, const Subspace& s);

Submodule kernel(const ModuleMorphism& u);
Submodule image(const ModuleMorphism& u);
QuotientModule cokernel(const ModuleMorphism& u);

/// Coarsening of modules and morphisms along an epimorphism.
GradedModule coarsen(const GradedModule& M, const GroupHom& psi);
ModuleMorphism coarsen(const ModuleMorphism& u, const GroupHom& psi);

/// Module obtained from an algebra quotient R/a.
GradedModule quotient_of_ring(const AlgebraPtr& R, const GradedIdeal& a);
/// Module given by an ideal of R.
GradedModule ideal_module(const AlgebraPtr& R, const GradedIdeal& a);

/// Degree-g part of HOM(M, N): morphisms M -> N(g), as matrices.
std::vector<Matrix> hom_component(const GradedModule& M, const GradedModule& N, const GroupElement& g);
/// All degree-0 module morphisms M -> N (finite fields), canonical order.
std::vector<ModuleMorphism> module_morphisms(const GradedModule& M, const GradedModule& N, double cap = 1 << 20);

struct HomModule {
  GradedModule module;
  std::vector<Matrix> maps;  // basis element j is maps[j], of degree module.degree(j)
  Subspace span;             // flattened maps, echelon basis equal to `maps`
  std::size_t rows = 0, cols = 0;
  Matrix to_map(const Vector& v) const;
  /// Coordinates of a map M -> N that lies in the span.
  Vector coordinates(const Matrix& f) const;
};
HomModule graded_hom(const GradedModule& M, const GradedModule& N);

struct TensorModule {
  GradedModule module;
  QuotientModule quotient;   // of the K-tensor product by the bilinearity relations
  std::size_t right_dim = 0;
  /// Class of v_a (x) w_b.
  Vector pure(std::size_t a, std::size_t b) const;
};
TensorModule tensor(const GradedModule& M, const GradedModule& N);

struct AdjunctionIso {
  ModuleMorphism iso;  // HOM(L (x) M, N) -> HOM(L, HOM(M, N))
  bool verified = false;
};
/// The currying map f |-> (l |-> (m |-> f(l (x) m))), checked to be an isomorphism.
AdjunctionIso hom_tensor_adjunction(const GradedModule& L, const GradedModule& M, const GradedModule& N);

/// Summands R(shift) with multiplicity; the generator of R(g) has degree -g.
struct FreeSpec {
  std::vector<std::pair<GroupElement, std::size_t>> parts;  // (shift, multiplicity), canonical order
  std::size_t rank() const;
  std::vector<GroupElement> generator_degrees(const FGAbelianGroup& G) const;
  static FreeSpec from_generator_degrees(const FGAbelianGroup& G, std::vector<GroupElement> degs);
  bool operator==(const FreeSpec&) const = default;
};

/// The free module sum of R(-d) over the generator degrees, with basis x_i e_t
/// laid out generator by generator.
GradedModule free_module(const AlgebraPtr& R, const std::vector<GroupElement>& generator_degrees);

struct FreenessResult {
  Truth free = Truth::undecided;
  std::optional<FreeSpec> spec;
  std::vector<Vector> basis;  // homogeneous basis of M when free
  std::optional<std::size_t> rank;
  std::string method;
};

FreenessResult freeness(const GradedModule& M, std::uint64_t seed = 0x5eed, std::uint64_t budget = 4096);
/// Greedy extension of a free set E inside a generating set F (R simple); the
/// result is a basis of M.
std::vector<Vector> extend_to_basis(const GradedModule& M, const std::vector<Vector>& E, const std::vector<Vector>& F);
/// Is E free: no nontrivial homogeneous relation sum r_e e = 0?
bool is_free_set(const GradedModule& M, const std::vector<Vector>& E);
Truth is_monogeneous(const GradedModule& M, std::uint64_t seed = 0x5eed);

/// Graded radical J*M and graded socle ann_M(J), J the graded Jacobson radical of R.
Subspace graded_radical(const GradedModule& M);
Subspace graded_socle(const GradedModule& M);
/// All graded submodules (finite fields).
std::vector<Subspace> graded_submodules(const GradedModule& M, std::size_t cap = 1 << 16);

enum class SmallMode { superfluous, essential };

struct SmallResult {
  bool flag = false;
  std::string method;               // "criterion" or "exhaustive"
  std::optional<Subspace> witness;  // refuting submodule, from enumeration
  bool exhaustive_run = false;
  bool agree = true;                // criterion and enumeration coincide
  bool guard_hit = false;
};

SmallResult small_submodule(const ModuleMorphism& u, SmallMode mode);

}  // namespace gradex
