#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradex/abgroup.hpp"
#include "gradex/errors.hpp"
#include "gradex/linalg.hpp"

namespace gradex {

class AlgebraError : public ValidationError {
 public:
  enum class Fault { shape, grading, commutativity, associativity, unit };
  AlgebraError(Fault fault, std::size_t i, std::size_t j, std::size_t k, const std::string& detail);
  Fault fault() const { return fault_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  Fault fault_;
  std::size_t i_, j_, k_;
};

const char* fault_name(AlgebraError::Fault f);

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional commutative algebra with a homogeneous basis:
/// x_i * x_j = sum_k c(i,j,k) x_k.
class GradedAlgebra {
 public:
  /// `structure` is indexed (i*n + j)*n + k. Throws AlgebraError on any violation.
  static AlgebraPtr make(FGAbelianGroup group, Field field, std::vector<GroupElement> degrees,
                         std::vector<Rational> structure, Vector unit);

  const FGAbelianGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_[i]; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Rational>& structure() const { return structure_; }
  const Vector& unit() const { return unit_; }

  Vector zero() const { return Vector(dim()); }
  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector power(const Vector& a, std::size_t e) const;
  /// Multiplication by x; column j is x * x_j.
  Matrix mult_matrix(const Vector& x) const;
  const Matrix& basis_mult(std::size_t i) const { return basis_mult_[i]; }

  /// Distinct basis degrees in canonical order.
  std::vector<GroupElement> support() const;
  std::vector<std::size_t> component(const GroupElement& g) const;
  std::map<GroupElement, Vector> components(const Vector& x) const;
  bool is_homogeneous(const Vector& x) const;
  /// Degree of a nonzero homogeneous element.
  std::optional<GroupElement> degree_of(const Vector& x) const;

  bool operator==(const GradedAlgebra& o) const {
    return group_ == o.group_ && field_ == o.field_ && degrees_ == o.degrees_ &&
           structure_ == o.structure_ && unit_ == o.unit_;
  }

 private:
  GradedAlgebra() = default;
  FGAbelianGroup group_;
  Field field_;
  std::vector<GroupElement> degrees_;
  std::vector<Rational> structure_;
  Vector unit_;
  std::vector<Matrix> basis_mult_;
};

/// Helper for building structure constants: sets x_i x_j = x_j x_i = sum coeffs.
class StructureBuilder {
 public:
  explicit StructureBuilder(std::size_t n) : n_(n), c_(n * n * n) {}
  StructureBuilder& set(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, Rational>> terms);
  std::vector<Rational> build() const { return c_; }

 private:
  std::size_t n_;
  std::vector<Rational> c_;
};

struct ElementClass {
  bool unit = false, regular = false, nilpotent = false, homogeneous = false;
};

ElementClass classify_element(const GradedAlgebra& R, const Vector& x);

struct RingClass {
  Truth simple = Truth::undecided, entire = Truth::undecided, reduced = Truth::undecided;
  std::string method;  // "criterion", "exhaustive" or "partial"
};

/// Largest number of homogeneous elements the exhaustive path will enumerate.
inline constexpr double kHomogeneousEnumerationCap = 1 << 20;

RingClass classify_ring(const GradedAlgebra& R);

/// Calls fn on every element of R_g (finite fields only); stops when fn returns false.
void for_each_in_component(const GradedAlgebra& R, const GroupElement& g,
                           const std::function<bool(const Vector&)>& fn);

/// Graded ideal stored as a subspace of R whose echelon basis is homogeneous.
struct GradedIdeal {
  Subspace space;
  std::size_t dim() const { return space.dim(); }
  bool contains(const Vector& v) const { return space.contains(v); }
  bool operator==(const GradedIdeal& o) const { return space == o.space; }
  bool operator<(const GradedIdeal& o) const { return space < o.space; }
};

/// Rejects non-homogeneous generators.
GradedIdeal ideal_generated(const GradedAlgebra& R, const std::vector<Vector>& gens);
bool is_graded_ideal(const GradedAlgebra& R, const Subspace& s);
/// Homogeneous components of a subspace of R that is known to be graded.
std::map<GroupElement, Subspace> ideal_components(const GradedAlgebra& R, const GradedIdeal& a);

/// Nilradical of the underlying ring (not necessarily graded).
Subspace underlying_nilradical(const GradedAlgebra& R);
/// Ideal generated by the nilpotent homogeneous elements.
GradedIdeal nilradical(const GradedAlgebra& R);
/// Ideal generated by homogeneous zerodivisors; nullopt when undecided.
std::optional<GradedIdeal> zerodivisor_ideal(const GradedAlgebra& R);
/// Intersection of all graded maximal ideals.
GradedIdeal graded_jacobson(const GradedAlgebra& R);

struct Quotient {
  AlgebraPtr ring;
  Subspace ideal;
  std::vector<std::size_t> kept;  // basis indices of R that survive
  Vector project(const Vector& v) const;
  Vector lift(const Vector& w) const;
};

Quotient quotient_ring(const AlgebraPtr& R, const GradedIdeal& a);
GradedIdeal radical(const AlgebraPtr& R, const GradedIdeal& a);

struct IdealClass {
  Truth maximal = Truth::undecided, prime = Truth::undecided, perfect = Truth::undecided;
};
IdealClass ideal_class(const AlgebraPtr& R, const GradedIdeal& a);

/// All subspaces of F^n spanned by vectors homogeneous for the given basis
/// degrees (finite fields); throws SizeGuardError beyond `cap`.
std::vector<Subspace> graded_subspaces(const Field& f, const std::vector<GroupElement>& degrees,
                                       std::size_t cap = 1 << 16);
/// All graded prime ideals; desk scale only (dim <= 6, p <= 3).
std::vector<GradedIdeal> spec_enumerate(const AlgebraPtr& R);

}  // namespace gradex
