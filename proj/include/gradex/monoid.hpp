#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gradex/algebra.hpp"

namespace gradex {

/// Feasible point of { A x = b, x >= 0 } by exact phase-one simplex (Bland's rule).
std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A,
                                                 const std::vector<Rational>& b);

/// Submonoid of Z^d generated by finitely many vectors.
class AffineMonoid {
 public:
  AffineMonoid() = default;
  /// Zero generators are dropped and duplicates removed.
  AffineMonoid(std::size_t ambient_dim, std::vector<IntVector> generators);

  std::size_t ambient_dim() const { return d_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  /// The subgroup of Z^d generated by M, in normal form.
  const FGAbelianGroup& diff_group() const { return diff_; }
  /// Columns form a Z-basis of diff(M) inside Z^d.
  const IntMatrix& diff_basis() const { return diff_basis_; }
  /// Coordinates of m (which must lie in diff(M)) in the diff_basis.
  IntVector diff_coordinates(const IntVector& m) const;

  /// Sharp means the only invertible element is 0; always decided here.
  bool sharp() const { return sharp_; }
  /// "lp" when the cone is pointed, "search" or "lp-witness" otherwise.
  const std::string& sharp_method() const { return sharp_method_; }
  /// Nonnegative integer coefficients, not all zero, with sum c_i g_i = 0.
  const std::optional<IntVector>& unit_relation() const { return witness_; }

  /// Generators lying in the group of units M*.
  const std::vector<std::size_t>& unit_generators() const { return unit_gens_; }
  bool is_unit(const IntVector& m) const;
  bool is_group() const { return unit_gens_.size() == gens_.size(); }
  /// Membership by bounded search (coefficient sum <= bound): yes or undecided,
  /// or no when m is outside diff(M).
  Truth contains(const IntVector& m, std::size_t bound = 16) const;
  /// Every element with generator coefficient sum <= bound.
  std::set<IntVector> elements_up_to(std::size_t bound) const;

  bool operator==(const AffineMonoid& o) const { return d_ == o.d_ && gens_ == o.gens_; }

 private:
  std::size_t d_ = 0;
  std::vector<IntVector> gens_;
  FGAbelianGroup diff_;
  IntMatrix diff_basis_;
  bool sharp_ = true;
  std::string sharp_method_ = "lp";
  std::optional<IntVector> witness_;
  std::vector<std::size_t> unit_gens_;
};

enum class GradingMode { fine, coarse, d };

/// Element of R[M]: finitely many monomials r e_m, zero coefficients dropped.
using MonoidElement = std::map<IntVector, Vector>;

/// R[M] with deg(r e_m) = deg(r) + d(m), where d is (0, m) in fine mode, 0 in
/// coarse mode and a user matrix in d mode.
class MonoidAlgebra {
 public:
  MonoidAlgebra(AlgebraPtr base, AffineMonoid monoid, GradingMode mode, IntMatrix d = {});

  const AlgebraPtr& base() const { return base_; }
  const AffineMonoid& monoid() const { return monoid_; }
  GradingMode mode() const { return mode_; }
  const IntMatrix& d_matrix() const { return d_; }
  const FGAbelianGroup& group() const { return group_; }

  GroupElement monomial_degree(std::size_t base_index, const IntVector& m) const;
  MonoidElement monomial(const Vector& r, const IntVector& m) const;
  MonoidElement one() const { return monomial(base_->unit(), IntVector(monoid_.ambient_dim())); }
  MonoidElement multiply(const MonoidElement& a, const MonoidElement& b) const;
  MonoidElement add(const MonoidElement& a, const MonoidElement& b) const;
  std::optional<GroupElement> degree_of(const MonoidElement& x) const;
  bool is_homogeneous(const MonoidElement& x) const;

  RingClass classify() const;
  Truth is_unit(const MonoidElement& x) const;
  /// Is there a homogeneous unit of degree outside the image of phi (witness degree)?
  std::optional<GroupElement> unit_degree_outside(const GroupHom& phi) const;

 private:
  AlgebraPtr base_;
  AffineMonoid monoid_;
  GradingMode mode_;
  IntMatrix d_;
  FGAbelianGroup group_;
};

std::string to_string(GradingMode m);

}  // namespace gradex
