#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradex/algebra.hpp"
#include "gradex/module.hpp"

/// Brute-force reference implementations over F_p. They read structure
/// constants and action matrices but do all arithmetic themselves in machine
/// integers, without the linear-algebra layer.
namespace gradex::oracle {

using Vec = std::vector<std::int64_t>;
using Basis = std::vector<Vec>;  // reduced echelon basis

/// Action data of a graded module in machine integers.
struct Action {
  std::int64_t p = 0;
  std::vector<GroupElement> degrees;
  std::vector<std::vector<Vec>> act;  // act[i][k][j]: coefficient of v_k in x_i v_j
  std::size_t dim() const { return degrees.size(); }
};

Action action_of(const GradedModule& M);
Action action_of(const GradedAlgebra& R);  // regular module

struct ElementRow {
  Vec coords;
  bool unit = false, regular = false, nilpotent = false, homogeneous = false;
};

struct ClassifyTable {
  std::vector<ElementRow> rows;  // lexicographic in coordinates
  bool simple = false, entire = false, reduced = true;
};

/// Throws SizeGuardError when p^dim exceeds `cap`.
ClassifyTable exhaustive_classify(const GradedAlgebra& R, double cap = 1 << 20);

/// All graded submodules, by closure from homogeneous elements; canonical order.
std::vector<Basis> graded_submodules(const Action& M, std::size_t cap = 1 << 16);

/// All degree-0 module morphisms N x M matrices, flattened row-major, sorted.
std::vector<Vec> module_morphisms(const GradedModule& M, const GradedModule& N, double cap = 1 << 20);
/// All graded unital multiplicative maps R -> S, flattened row-major, sorted.
std::vector<Vec> ring_morphisms(const GradedAlgebra& R, const GradedAlgebra& S, double cap = 1 << 20);

struct SmallAnswer {
  bool flag = false;
  std::optional<Basis> witness;
};
/// I given by any spanning set of the image of u inside N.
SmallAnswer superfluous(const Action& N, const std::vector<Vec>& image);
SmallAnswer essential(const Action& N, const std::vector<Vec>& image);

/// Span of the nilpotent homogeneous elements.
Basis nilradical(const GradedAlgebra& R);
/// Graded prime ideals, canonical order.
std::vector<Basis> graded_primes(const GradedAlgebra& R);
/// Intersection of a nonempty list of subspaces of F_p^n (the whole space for an empty list).
Basis intersect_all(std::int64_t p, std::size_t n, const std::vector<Basis>& spaces);

/// Conversions for comparing with main-path objects.
Vec to_vec(const Vector& v);
Basis to_basis(const Subspace& s);
Vec flatten(const Matrix& m);
Basis rref(std::int64_t p, std::vector<Vec> rows, std::size_t n);

}  // namespace gradex::oracle
