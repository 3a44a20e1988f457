#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradex/module.hpp"

namespace gradex {

struct FreeCover {
  std::vector<GroupElement> generator_degrees;
  std::vector<Vector> generators;  // homogeneous elements of M
  GradedModule free;
  ModuleMorphism map;              // free -> M, surjective
};

/// Minimal mode scans basis vectors by degree and then index, keeping those
/// outside J M plus the submodule generated so far (J the graded Jacobson
/// radical); otherwise every basis vector of M becomes a generator.
FreeCover free_cover(const GradedModule& M, bool minimal = true);

using BettiRow = std::map<GroupElement, std::size_t>;  // generator degree -> rank

struct ResolutionStep {
  FreeCover cover;        // P_i -> (previous kernel)
  Matrix differential;    // P_i -> P_{i-1} (step 0: P_0 -> M)
  Submodule kernel;       // kernel of the differential
};

struct FreeResolution {
  GradedModule target;
  std::vector<ResolutionStep> steps;
  std::size_t cutoff = 0;
  bool minimal = true;
  bool terminated = false;            // some kernel vanished within the cutoff
  std::optional<std::size_t> length;  // index of the last nonzero free term
  std::vector<BettiRow> betti;
  /// Consecutive composites vanish and every step is exact, checked by rank counts.
  bool verify() const;
};

/// Resolves M up to free term P_cutoff; throws ValidationError past 32.
FreeResolution resolution(const GradedModule& M, std::size_t cutoff = 8, bool minimal = true);
std::string betti_table_text(const FreeResolution& r);

/// Splitting of a free cover decides projectivity.
bool is_projective(const GradedModule& M);
/// Graded dual: (M*)_g = Hom_K(M_{-g}, K), action by transposes.
GradedModule dual(const GradedModule& M);
/// u* : N* -> M*.
ModuleMorphism dual(const ModuleMorphism& u);
bool is_injective(const GradedModule& M);
/// Flat and projective coincide for these modules.
bool is_flat(const GradedModule& M);
/// E = dual(R).
GradedModule injective_cogenerator(const AlgebraPtr& R);
/// Canonical evaluation M -> M**, validated as a module isomorphism.
ModuleMorphism double_dual_evaluation(const GradedModule& M);
/// HOM(u, E) != 0 whenever u != 0 (faithfulness on the given morphism).
bool cogenerator_detects(const ModuleMorphism& u);

/// Direct check of injectivity: the embedding of M into a sum of shifted
/// copies of E admits a retraction.
bool is_injective_direct(const GradedModule& M);

enum class DimensionKind { projective, injective, flat };
std::string to_string(DimensionKind k);

struct DimensionReport {
  DimensionKind kind = DimensionKind::projective;
  std::optional<std::size_t> value;  // nullopt means ">= cutoff"
  std::size_t cutoff = 0;
  std::string to_string() const;
  bool operator==(const DimensionReport&) const = default;
};

/// Reports compare as cutoff-bounded values: an exact value is below any lower bound at least as large.
bool at_most(const DimensionReport& a, const DimensionReport& b);

DimensionReport dimension(const GradedModule& M, DimensionKind kind, std::size_t cutoff = 8);
/// Injective dimension from an explicit coresolution by shifted copies of E.
DimensionReport injective_dimension_direct(const GradedModule& M, std::size_t cutoff = 8);

/// 0 -> K -> P_{n-1} -> ... -> P_0 -> M -> 0 with free P_i; maps[0] : P_0 -> M,
/// maps[i] : P_i -> P_{i-1}.
struct ExactSequence {
  GradedModule target;
  std::vector<ModuleMorphism> maps;
  std::size_t length() const { return maps.size(); }
  Submodule kernel() const;
  /// Throws ValidationError("exactness", ...) unless the sequence is exact.
  void validate() const;
};

ExactSequence truncate(const FreeResolution& r, std::size_t n);
/// Adds a free summand with generator in degree d to P_0, mapped to zero.
ExactSequence pad(const ExactSequence& s, const GroupElement& d);

struct SchanuelResult {
  ModuleMorphism iso;  // K + Q_{n-1} + P_{n-2} + ... -> L + P_{n-1} + Q_{n-2} + ...
  bool verified = false;
  HilbertFunction source_hilbert, target_hilbert;
};

/// Glues two truncated resolutions of the same module: fibre product for n = 1,
/// then recursion on the padded sequences.
SchanuelResult schanuel_glue(const ExactSequence& a, const ExactSequence& b);

struct DimensionComparison {
  DimensionReport pd_fine, pd_coarse, fd_fine, fd_coarse;
  std::optional<DimensionReport> id_fine, id_coarse;
  std::vector<BettiRow> betti_fine_pushed, betti_coarse;
  bool pd_equal = false, fd_equal = false, betti_equal = false;
  std::optional<bool> id_equal;
  std::string note;
  bool ok() const { return pd_equal && fd_equal && betti_equal && id_equal.value_or(true); }
};

DimensionComparison coarsen_dimension_compare(const GradedModule& M, const GroupHom& psi, std::size_t cutoff = 8);

struct LambekCheck {
  bool flat = false;
  bool hom_injective = false;
  bool agree() const { return flat == hom_injective; }
};
/// is_flat(M) against is_injective(HOM(M, E)).
LambekCheck lambek_check(const GradedModule& M);

}  // namespace gradex
