#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradex/abgroup.hpp"
#include "gradex/field.hpp"
#include "gradex/polynomial.hpp"

namespace gradex {

/// Entry c X^k of a homogeneous generator column.
struct Monomial {
  Rational coeff;
  std::size_t exponent = 0;
  bool operator==(const Monomial&) const = default;
};
using PrincipalEntry = std::optional<Monomial>;

/// Graded submodule of the free K[X]-module with generators e_r of degree
/// ambient[r], spanned by homogeneous columns with monomial entries.
struct PrincipalPresentation {
  FGAbelianGroup group;
  Field field;
  GroupElement var_degree;                       // deg X, of infinite order
  std::vector<GroupElement> ambient;             // deg e_r
  std::vector<std::vector<PrincipalEntry>> gens;  // gens[j][r]

  /// Throws ValidationError ("variable-order", "column-homogeneous", "principal-shape").
  void validate() const;
  /// Degree of a nonzero column.
  std::optional<GroupElement> column_degree(std::size_t j) const;
};

/// Summand a(shift) with a = <X^exponent>, coming from the echelon column
/// whose leading entry sits in row pivot_row.
struct PrincipalSummand {
  GroupElement shift;
  std::size_t exponent = 0;
  std::size_t pivot_row = 0;
  std::vector<PrincipalEntry> column;
};

struct PrincipalDecomposition {
  std::vector<PrincipalSummand> summands;
  std::size_t rank = 0;
  std::size_t generators = 0;
  bool free = true;
};

/// Homogeneous column reduction, generators processed in index order.
PrincipalDecomposition decompose(const PrincipalPresentation& P);

struct CoarseFreeness {
  bool free = true;
  std::size_t rank = 0;
  std::vector<std::vector<Poly>> basis;  // echelon columns over K[X]
  bool fine_basis_homogeneous = true;    // the graded basis stays homogeneous after coarsening
  GroupElement coarse_var_degree;
};

/// Ungraded route: Euclidean column reduction over K[X] of the coarsened module.
CoarseFreeness coarse_freeness(const PrincipalPresentation& P, const GroupHom& psi);

struct SuperfluousCounterexample {
  bool graded_superfluous = false;
  std::string graded_certificate;
  bool coarse_superfluous = false;
  std::optional<Poly> witness;  // generator of L with <X> + L = R, L != R
  std::string note;
};

/// <X> -> K[X] with deg X = var_degree, before and after coarsening along psi.
SuperfluousCounterexample principal_superfluous(const Field& f, const FGAbelianGroup& G,
                                                const GroupElement& var_degree, const GroupHom& psi);

struct PrincipalSuiteReport {
  PrincipalDecomposition decomposition;
  CoarseFreeness coarse;
  bool freeness_agrees = false;
  bool rank_bound = false;  // rank <= number of generators
  std::optional<SuperfluousCounterexample> superfluous;
};

PrincipalSuiteReport principal_suite(const PrincipalPresentation& P, const GroupHom& psi);

std::string to_string(const PrincipalEntry& e);

}  // namespace gradex
