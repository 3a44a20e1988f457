#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradex/field.hpp"

namespace gradex {

using Vector = std::vector<Rational>;

bool is_zero(const Vector& v);

/// Dense matrix over a Field, row-major; entries are kept canonical.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_columns(Field f, const std::vector<Vector>& cols, std::size_t rows = 0);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  Matrix hcat(const Matrix& o) const;
  Matrix vcat(const Matrix& o) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form (zero rows dropped)
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon rref(const Matrix& A);
std::size_t rank(const Matrix& A);
/// Basis of {x : A x = 0}, one vector per free column of the reduced echelon form.
std::vector<Vector> kernel_basis(const Matrix& A);
std::optional<Vector> solve(const Matrix& A, const Vector& b);
/// Particular solution of A X = B (column by column), if every column is solvable.
std::optional<Matrix> solve_matrix(const Matrix& A, const Matrix& B);
std::optional<Matrix> inverse(const Matrix& A);
Rational determinant(const Matrix& A);

Vector add(const Field& f, const Vector& a, const Vector& b);
Vector sub(const Field& f, const Vector& a, const Vector& b);
Vector scale(const Field& f, const Rational& c, const Vector& a);

/// Subspace of F^n stored by its reduced echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient, const std::vector<Vector>& spanning);
  static Subspace zero(Field f, std::size_t ambient) { return Subspace(f, ambient, {}); }
  static Subspace full(Field f, std::size_t ambient);

  const Field& field() const { return f_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the echelon basis onto the non-pivot coordinates.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coefficients c with v = sum c_i basis_i (v must lie in the subspace).
  Vector coordinates(const Vector& v) const;
  /// Coordinate indices not used as pivots; they index a basis of the quotient.
  std::vector<std::size_t> complement() const;
  bool contains(const Subspace& o) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

enum class SearchOutcome { found, proven_none, budget_exhausted };
enum class SearchMode { automatic, exhaustive, randomized };

struct IntertwinerResult {
  SearchOutcome outcome = SearchOutcome::budget_exhausted;
  std::optional<Matrix> matrix;
  std::uint64_t samples = 0;
};

/// Looks for an invertible member of { P + sum t_i K_i }.
IntertwinerResult invertible_intertwiner(const Matrix& particular, const std::vector<Matrix>& kernel,
                                         std::uint64_t seed, std::uint64_t budget = 4096,
                                         SearchMode mode = SearchMode::automatic);

}  // namespace gradex
