#pragma once

#include <string>
#include <vector>

#include "gradex/functors.hpp"
#include "gradex/module.hpp"
#include "gradex/monoid.hpp"
#include "gradex/principal.hpp"

/// Standard rings, modules and group maps used by the tests and the CLI.
namespace gradex::samples {

/// K[X]/(X^n) with deg X = g.
AlgebraPtr truncated_polynomial(const Field& f, std::size_t n, const FGAbelianGroup& G, const GroupElement& g);
/// K[X]/(X^2), deg X = 1 in Z.
AlgebraPtr dual_numbers(const Field& f = Field::rationals());
/// K[X]/(X^n - a) with deg X = g, where n g = 0.
AlgebraPtr pure_extension(const Field& f, std::size_t n, const Rational& a, const FGAbelianGroup& G,
                          const GroupElement& g);
/// Q[X]/(X^2 + 1) graded by Z/2 with deg X = 1.
AlgebraPtr gaussian_z2();
/// Group algebra K[A] of a finite group, finely graded by A.
AlgebraPtr group_algebra(const Field& f, const FGAbelianGroup& A);
/// K^k with orthogonal idempotents, everything in degree 0 of G.
AlgebraPtr product_field(const Field& f, std::size_t k, const FGAbelianGroup& G);
/// K[X, Y]/(X^2, Y^2) graded by Z^2.
AlgebraPtr exterior_square(const Field& f);
/// The ground field K concentrated in degree 0 of G.
AlgebraPtr ground(const Field& f, const FGAbelianGroup& G);

/// Laurent algebra K[Z], finely graded.
MonoidAlgebra laurent(const Field& f = Field::rationals());
/// K[N] with the coarse grading.
MonoidAlgebra polynomial_coarse(const Field& f = Field::rationals());

/// Z -> Z/n reduction, G -> 0, Z -> Z multiplication by k, 0 -> Z.
GroupHom reduction(long n);
GroupHom to_trivial(const FGAbelianGroup& G);
GroupHom multiplication(long k);
GroupHom from_trivial(const FGAbelianGroup& G);

/// R / J with J the graded Jacobson radical.
GradedModule residue_module(const AlgebraPtr& R);
/// Module over K x K (Z-graded, everything in degree 0) with the two idempotent
/// parts placed in degrees 0 and 1.
GradedModule split_idempotent_module(const Field& f = Field::prime(2));

/// Principal presentations over K[X] with deg X = 1 in Z.
std::vector<PrincipalPresentation> principal_corpus(const Field& f = Field::rationals());

struct NamedAlgebra {
  std::string name;
  AlgebraPtr ring;
};
struct NamedModule {
  std::string name;
  GradedModule module;
};
/// Small algebras over F_2 and F_3 (dim <= 4).
std::vector<NamedAlgebra> finite_field_rings();
/// Modules over the finite-field rings: regular, residue, radical, shifts, sums.
std::vector<NamedModule> finite_field_modules();

}  // namespace gradex::samples
