#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradex/algebra.hpp"
#include "gradex/monoid.hpp"

namespace gradex {

/// Degree-preserving unital multiplicative linear map; column j is the image of x_j.
struct RingMorphism {
  AlgebraPtr source, target;
  Matrix matrix;
};

/// Throws ValidationError naming the failed property.
void validate_ring_morphism(const RingMorphism& u);
bool is_ring_morphism(const RingMorphism& u);
RingMorphism identity_morphism(const AlgebraPtr& R);
RingMorphism compose(const RingMorphism& v, const RingMorphism& u);  // v o u
bool operator==(const RingMorphism& a, const RingMorphism& b);

/// Same algebra with degrees pushed through an epimorphism psi.
AlgebraPtr coarsen(const AlgebraPtr& R, const GroupHom& psi);
RingMorphism coarsen(const RingMorphism& u, const GroupHom& psi);

struct CoarseningReport {
  RingClass fine, coarse;
  bool kernel_torsionfree = false;
  bool reflected = true;  // every decided coarse flag also holds for R
  bool preserved = true;  // torsionfree kernel: entire and reduced carry over to the coarsening
  /// Nonzero coarse-homogeneous element with square zero, when the coarsening is not reduced.
  std::optional<Vector> square_zero;
};

CoarseningReport coarsening_report(const AlgebraPtr& R, const GroupHom& psi);

struct HomogeneityComparison {
  bool equal = true;
  /// Sum of two basis vectors whose distinct degrees merge under psi.
  std::optional<Vector> witness;
};

/// Fine and coarse homogeneous elements coincide exactly when psi is injective
/// on the degree support.
HomogeneityComparison compare_homogeneous_sets(const GradedAlgebra& R, const GroupHom& psi);

/// Subalgebra of components with degree in im(phi), regraded over the source of phi.
AlgebraPtr restrict_along(const AlgebraPtr& R, const GroupHom& phi);
/// Basis indices of R whose degree lies in im(phi), in order.
std::vector<std::size_t> restricted_indices(const GradedAlgebra& R, const GroupHom& phi);
RingMorphism restrict_along(const RingMorphism& u, const GroupHom& phi);

/// Same algebra with degrees relabelled through the monomorphism phi.
AlgebraPtr extend_along(const AlgebraPtr& S, const GroupHom& phi);
RingMorphism extend_along(const RingMorphism& u, const GroupHom& phi);

struct Corestriction {
  AlgebraPtr ring;        // over the source of phi
  GradedIdeal a_phi;      // generated by the components outside im(phi)
  Quotient quotient;      // R / a_phi
  RingMorphism alpha;     // R -> extend(ring), surjective
};

Corestriction corestrict(const AlgebraPtr& R, const GroupHom& phi);
/// Induced map between corestrictions.
RingMorphism corestrict(const RingMorphism& u, const GroupHom& phi);

/// (S \ im + S \ im) meets S and im(phi) nowhere, S the degree support.
bool degree_support_condition(const GradedAlgebra& R, const GroupHom& phi);

/// All graded ring morphisms R -> S (finite fields); throws SizeGuardError past `cap`
/// candidate maps.
std::vector<RingMorphism> ring_morphisms(const AlgebraPtr& R, const AlgebraPtr& S, double cap = 1 << 20);

struct MonoidCorestriction {
  bool zero = false;                        // a homogeneous unit lies outside im(phi)
  std::optional<GroupElement> unit_degree;  // its degree
  Truth equals_restriction = Truth::undecided;
  std::string method;
  std::optional<std::pair<GroupElement, GroupElement>> violation;  // degrees g, h outside im with g+h inside
};

MonoidCorestriction corestrict_monoid(const MonoidAlgebra& R, const GroupHom& phi, std::size_t bound = 6);

struct TensorWitness {
  std::vector<std::size_t> bounds;
  std::vector<std::size_t> full_counts;        // dim of (R (x) R) in degrees im(phi), truncated
  std::vector<std::size_t> restricted_counts;  // dim of R_(phi) (x) R_(phi), truncated
  std::string witness;
  bool mismatch = false;
  std::string note;
};

/// Compares (R (x)_K R)_(phi) with R_(phi) (x)_K R_(phi) on monomials of growing size.
TensorWitness tensor_witness(const MonoidAlgebra& R, const GroupHom& phi, std::size_t max_bound = 4);

struct AdjunctionReport {
  bool triangles_ok = true;
  bool naturality_ok = true;
  bool bijections_checked = false;
  bool bijections_ok = true;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return triangles_ok && naturality_ok && bijections_ok; }
};

/// Checks the corestriction / extension / restriction adjoint triple on samples:
/// `f_samples` are graded over the source of phi, `g_samples` over its target,
/// `g_morphisms` are sample morphisms between G-graded algebras.
AdjunctionReport adjunction_check(const GroupHom& phi, const std::vector<AlgebraPtr>& f_samples,
                                  const std::vector<AlgebraPtr>& g_samples,
                                  const std::vector<RingMorphism>& g_morphisms = {});

}  // namespace gradex
