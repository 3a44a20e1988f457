#include "gradex/linalg.hpp"

#include <random>

#include "gradex/errors.hpp"

namespace gradex {

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("matrix-shape", "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, const std::vector<Vector>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ValidationError("matrix-shape", "ragged matrix");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = f.reduce(cols[j][i]);
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = f_.reduce(v[i]);
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix-shape", "product dimension mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  if (f_.is_finite())
    for (auto& x : r.data_) x = f_.reduce(x);
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw ValidationError("matrix-shape", "matrix-vector dimension mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    r[i] = f_.reduce(r[i]);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix-shape", "sum mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix-shape", "difference mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.sub(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x = f_.mul(c, x);
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw ValidationError("matrix-shape", "hcat mismatch");
  Matrix r(f_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw ValidationError("matrix-shape", "vcat mismatch");
  Matrix r(f_, rows_ + o.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
  return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix r(f_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(rows[i], j);
  return r;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix r(f_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Echelon rref(const Matrix& A) {
  const Field& f = A.field();
  Matrix m = A;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  return Echelon{m.select_rows(keep), pivots};
}

std::size_t rank(const Matrix& A) { return rref(A).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& A) {
  const Field& f = A.field();
  Echelon e = rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vector v(A.cols());
    v[c] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, c));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& A, const Vector& b) {
  if (b.size() != A.rows()) throw ValidationError("matrix-shape", "solve rhs mismatch");
  Matrix aug = A.hcat(Matrix::from_columns(A.field(), {b}, A.rows()));
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == A.cols()) return std::nullopt;
  Vector x(A.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, A.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& A, const Matrix& B) {
  if (B.rows() != A.rows()) throw ValidationError("matrix-shape", "solve rhs mismatch");
  Echelon e = rref(A.hcat(B));
  Matrix X(A.field(), A.cols(), B.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= A.cols()) return std::nullopt;
    for (std::size_t j = 0; j < B.cols(); ++j) X(e.pivots[r], j) = e.reduced(r, A.cols() + j);
  }
  return X;
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (!A.is_square()) return std::nullopt;
  const std::size_t n = A.rows();
  if (n == 0) return A;
  Echelon e = rref(A.hcat(Matrix::identity(A.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = n + j;
  return e.reduced.select_columns(cols);
}

Rational determinant(const Matrix& A) {
  if (!A.is_square()) throw ValidationError("matrix-shape", "determinant of non-square matrix");
  const Field& f = A.field();
  Matrix m = A;
  const std::size_t n = m.rows();
  Rational det = f.from_int(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Rational inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

Vector add(const Field& f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector sub(const Field& f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector scale(const Field& f, const Rational& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Subspace::Subspace(Field f, std::size_t ambient, const std::vector<Vector>& spanning) : f_(f), n_(ambient) {
  if (spanning.empty()) return;
  Echelon e = rref(Matrix::from_rows(f, spanning, ambient));
  pivots_ = e.pivots;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis_.push_back(e.reduced.row(r));
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector v(ambient);
    v[i] = 1;
    rows.push_back(v);
  }
  return Subspace(f, ambient, rows);
}

Vector Subspace::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rational c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (basis_[i][j] != 0) r[j] = f_.sub(r[j], f_.mul(c, basis_[i][j]));
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return gradex::is_zero(reduce(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<std::size_t> Subspace::complement() const {
  std::vector<bool> used(n_, false);
  for (auto p : pivots_) used[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(f_, n_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (basis_.empty() || o.basis_.empty()) return zero(f_, n_);
  std::vector<Vector> cols = basis_;
  for (const auto& v : o.basis_) cols.push_back(scale(f_, f_.from_int(-1), v));
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(Matrix::from_columns(f_, cols, n_))) {
    Vector x(n_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (k[i] != 0) x = add(f_, x, scale(f_, k[i], basis_[i]));
    out.push_back(x);
  }
  return Subspace(f_, n_, out);
}

namespace {

Matrix combine(const Matrix& p, const std::vector<Matrix>& ks, const std::vector<Rational>& t) {
  Matrix m = p;
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (t[i] != 0) m = m + ks[i].scaled(t[i]);
  return m;
}

// Iterates t over {lo..hi}^k; returns the first point where the member is invertible.
std::optional<Matrix> grid_search(const Matrix& p, const std::vector<Matrix>& ks, long lo, long hi,
                                  std::uint64_t& samples) {
  const std::size_t k = ks.size();
  std::vector<long> idx(k, lo);
  for (;;) {
    std::vector<Rational> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = p.field().from_int(idx[i]);
    Matrix m = combine(p, ks, t);
    ++samples;
    if (determinant(m) != 0) return m;
    std::size_t i = 0;
    while (i < k && idx[i] == hi) idx[i++] = lo;
    if (i == k) return std::nullopt;
    ++idx[i];
  }
}

}  // namespace

IntertwinerResult invertible_intertwiner(const Matrix& particular, const std::vector<Matrix>& kernel,
                                         std::uint64_t seed, std::uint64_t budget, SearchMode mode) {
  IntertwinerResult res;
  const Field& f = particular.field();
  const std::size_t k = kernel.size();
  if (!particular.is_square()) {
    res.outcome = SearchOutcome::proven_none;
    return res;
  }
  if (k == 0) {
    res.samples = 1;
    if (determinant(particular) != 0) {
      res.outcome = SearchOutcome::found;
      res.matrix = particular;
    } else {
      res.outcome = SearchOutcome::proven_none;
    }
    return res;
  }
  if (f.is_finite()) {
    const unsigned long p = f.characteristic();
    double members = 1;
    for (std::size_t i = 0; i < k; ++i) members *= double(p);
    bool exhaustive = mode == SearchMode::exhaustive || (mode == SearchMode::automatic && members <= 65536.0);
    if (exhaustive) {
      auto m = grid_search(particular, kernel, 0, long(p) - 1, res.samples);
      res.outcome = m ? SearchOutcome::found : SearchOutcome::proven_none;
      res.matrix = m;
      return res;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> dist(0, p - 1);
    for (std::uint64_t s = 0; s < budget; ++s) {
      std::vector<Rational> t(k);
      for (auto& x : t) x = Rational(dist(rng));
      Matrix m = combine(particular, kernel, t);
      ++res.samples;
      if (determinant(m) != 0) {
        res.outcome = SearchOutcome::found;
        res.matrix = m;
        return res;
      }
    }
    res.outcome = SearchOutcome::budget_exhausted;
    return res;
  }
  // Over Q, small solution spaces are settled exactly: det is a polynomial of
  // degree <= n in each t_i, so vanishing on {0..n}^k forces it to be zero.
  double grid = 1;
  for (std::size_t i = 0; i < k; ++i) grid *= double(particular.rows() + 1);
  if (k <= 3 && mode != SearchMode::randomized && grid <= 4.0 * double(budget)) {
    auto m = grid_search(particular, kernel, 0, long(particular.rows()), res.samples);
    res.outcome = m ? SearchOutcome::found : SearchOutcome::proven_none;
    res.matrix = m;
    return res;
  }
  std::mt19937_64 rng(seed);
  long range = 1;
  for (std::uint64_t s = 0; s < budget; ++s) {
    if (s > 0 && s % 16 == 0 && range < (1L << 20)) range *= 2;
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<Rational> t(k);
    for (auto& x : t) x = Rational(dist(rng));
    Matrix m = combine(particular, kernel, t);
    ++res.samples;
    if (determinant(m) != 0) {
      res.outcome = SearchOutcome::found;
      res.matrix = m;
      return res;
    }
  }
  if (k <= 3 && mode != SearchMode::randomized) {
    auto m = grid_search(particular, kernel, 0, long(particular.rows()), res.samples);
    res.outcome = m ? SearchOutcome::found : SearchOutcome::proven_none;
    res.matrix = m;
    return res;
  }
  res.outcome = SearchOutcome::budget_exhausted;
  return res;
}

}  // namespace gradex
