#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace gradex {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  /// Horizontal concatenation [this | other].
  IntMatrix hcat(const IntMatrix& other) const;
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  Integer determinant() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  IntMatrix U, D, V;
  std::size_t rank = 0;
  Integer diagonal(std::size_t i) const { return D(i, i); }
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Integer solution of A x = b, if any.
std::optional<IntVector> integer_solve(const IntMatrix& A, const IntVector& b);
/// Z-basis (as columns) of the integer kernel of A.
IntMatrix integer_kernel(const IntMatrix& A);
/// Z-basis (as columns) of the lattice spanned by the columns of A.
IntMatrix lattice_basis(const IntMatrix& A);

/// Element of a finitely generated abelian group in invariant-factor coordinates:
/// free coordinates first, then one coordinate per torsion factor.
struct GroupElement {
  IntVector coords;

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return coords < o.coords; }
  bool is_zero() const;
  std::string to_string() const;
};

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_i | d_{i+1}, d_i >= 2.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;
  FGAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion);

  static FGAbelianGroup trivial() { return {}; }
  static FGAbelianGroup integers(std::size_t n = 1) { return FGAbelianGroup(n, {}); }
  static FGAbelianGroup cyclic(long n);

  /// Normal form of Z^n / (column span of relations). `coordinate_map`, when
  /// given, receives the matrix sending old coordinates to new ones.
  static FGAbelianGroup from_presentation(const IntMatrix& relations,
                                          IntMatrix* coordinate_map = nullptr);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t ngens() const { return free_rank_ + torsion_.size(); }
  bool is_torsionfree() const { return torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return ngens() == 0; }
  /// Order, or nullopt when infinite.
  std::optional<Integer> order() const;

  /// Relation matrix diag(0,..,0,d_1,..,d_k) (ngens x ngens).
  IntMatrix relations() const;

  GroupElement zero() const;
  GroupElement element(IntVector coords) const;  // reduces
  GroupElement reduce(IntVector coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(const Integer& k, const GroupElement& a) const;
  bool contains(const GroupElement& g) const;  // canonical and right length
  /// Order of g, nullopt when infinite.
  std::optional<Integer> element_order(const GroupElement& g) const;
  /// All elements in lexicographic order (finite groups only).
  std::vector<GroupElement> elements() const;

  /// Direct sum this + other; coordinates of (a, b) are given by `pair`.
  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;
  GroupElement pair(const FGAbelianGroup& other, const GroupElement& a, const GroupElement& b) const;

  bool operator==(const FGAbelianGroup&) const = default;
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Homomorphism given by an integer matrix acting on coordinate columns.
class GroupHom {
 public:
  GroupHom() = default;
  /// Throws ValidationError when the matrix does not respect torsion relations.
  GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

  static GroupHom identity(const FGAbelianGroup& g);
  static GroupHom zero(const FGAbelianGroup& s, const FGAbelianGroup& t);

  const FGAbelianGroup& source() const { return source_; }
  const FGAbelianGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& g) const;
  /// this o other
  GroupHom compose(const GroupHom& other) const;

  bool in_image(const GroupElement& h) const;
  /// Some preimage of h, if h lies in the image.
  std::optional<GroupElement> preimage(const GroupElement& h) const;

  bool operator==(const GroupHom&) const = default;

 private:
  FGAbelianGroup source_, target_;
  IntMatrix matrix_;
};

struct KernelData {
  FGAbelianGroup kernel;
  GroupHom inclusion;
  bool torsionfree = true;
  bool finite = false;
  std::optional<Integer> order;  // nullopt = infinite
};

KernelData kernel_data(const GroupHom& h);

struct HomProps {
  bool epi = false, mono = false, iso = false;
};

HomProps hom_props(const GroupHom& h);
/// Normal form of target / image(h).
FGAbelianGroup cokernel(const GroupHom& h, IntMatrix* coordinate_map = nullptr);

/// Listed degrees g with psi(g) = h, in canonical (lexicographic) order.
std::vector<GroupElement> fiber_filter(const GroupHom& psi, const std::vector<GroupElement>& degrees,
                                       const GroupElement& h);

}  // namespace gradex
