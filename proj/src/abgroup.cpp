#include "gradex/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gradex/errors.hpp"

namespace gradex {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("matrix-shape", "ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix-shape", "integer matrix product mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw ValidationError("matrix-shape", "integer matrix-vector mismatch");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw ValidationError("matrix-shape", "hcat row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix r(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
  return r;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw ValidationError("matrix-shape", "determinant of non-square matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = *this;
  const std::size_t n = rows_;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

namespace {

struct SnfWork {
  IntMatrix D, U, Uinv, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row_i -= q * row_t
  void row_sub(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(i, j) -= q * D(t, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) -= q * U(t, j);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, t) += q * Uinv(r, i);
  }
  // col_j -= q * col_t
  void col_sub(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, j) -= q * D(i, t);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, j) -= q * V(i, t);
  }
  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(t, j) = -D(t, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(t, j) = -U(t, j);
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, t) = -Uinv(r, t);
  }
};

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

SmithForm smith_impl(const IntMatrix& A, IntMatrix* uinv_out) {
  const std::size_t m = A.rows(), n = A.cols();
  SnfWork w{A, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Bring a minimal nonzero entry of the trailing block to (t, t).
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (w.D(i, j) != 0 && (pi == m || abs(w.D(i, j)) < abs(w.D(pi, pj)))) pi = i, pj = j;
    if (pi == m) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (w.D(i, t) != 0) {
          w.row_sub(i, t, tdiv(w.D(i, t), w.D(t, t)));
          if (w.D(i, t) != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (w.D(t, j) != 0) {
          w.col_sub(j, t, tdiv(w.D(t, j), w.D(t, t)));
          if (w.D(t, j) != 0) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (w.D(i, t) != 0 && abs(w.D(i, t)) < abs(w.D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.D(t, j) != 0 && abs(w.D(t, j)) < abs(w.D(bi, bj))) bi = t, bj = j;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (w.D(i, j) % w.D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.row_sub(t, bad, Integer(-1));
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  if (uinv_out) *uinv_out = w.Uinv;
  SmithForm f{std::move(w.U), std::move(w.D), std::move(w.V), t};
  return f;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) { return smith_impl(A, nullptr); }

std::optional<IntVector> integer_solve(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw ValidationError("matrix-shape", "integer_solve rhs mismatch");
  SmithForm f = smith_normal_form(A);
  IntVector c = f.U * b;
  IntVector y(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < f.rank) {
      if (c[i] % f.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / f.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f.V * y;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  std::vector<std::size_t> cols;
  for (std::size_t j = f.rank; j < A.cols(); ++j) cols.push_back(j);
  return f.V.select_columns(cols);
}

IntMatrix lattice_basis(const IntMatrix& A) {
  SmithForm f = smith_normal_form(A);
  IntMatrix av = A * f.V;
  std::vector<std::size_t> cols(f.rank);
  std::iota(cols.begin(), cols.end(), 0);
  return av.select_columns(cols);
}

bool GroupElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Integer& c) { return c == 0; });
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
  os << ')';
  return os.str();
}

FGAbelianGroup::FGAbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw ValidationError("torsion-factor", "torsion factor " + torsion_[i].get_str() + " < 2");
    if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
      throw ValidationError("torsion-divisibility", "torsion factors must form a divisibility chain");
  }
}

FGAbelianGroup FGAbelianGroup::cyclic(long n) {
  if (n == 0) return integers(1);
  if (n == 1) return trivial();
  return FGAbelianGroup(0, {Integer(n)});
}

FGAbelianGroup FGAbelianGroup::from_presentation(const IntMatrix& rel, IntMatrix* coordinate_map) {
  const std::size_t n = rel.rows();
  SmithForm f = smith_normal_form(rel);
  std::vector<std::size_t> free_rows, torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= f.rank) {
      free_rows.push_back(i);
    } else if (f.D(i, i) != 1) {
      torsion_rows.push_back(i);
      torsion.push_back(f.D(i, i));
    }
  }
  if (coordinate_map) {
    IntMatrix map(free_rows.size() + torsion_rows.size(), n);
    std::size_t r = 0;
    for (auto rows : {&free_rows, &torsion_rows})
      for (std::size_t i : *rows) {
        for (std::size_t j = 0; j < n; ++j) map(r, j) = f.U(i, j);
        ++r;
      }
    *coordinate_map = std::move(map);
  }
  return FGAbelianGroup(free_rows.size(), std::move(torsion));
}

std::optional<Integer> FGAbelianGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

IntMatrix FGAbelianGroup::relations() const {
  IntMatrix r(ngens(), ngens());
  for (std::size_t i = 0; i < torsion_.size(); ++i) r(free_rank_ + i, free_rank_ + i) = torsion_[i];
  return r;
}

GroupElement FGAbelianGroup::zero() const { return GroupElement{IntVector(ngens())}; }

GroupElement FGAbelianGroup::reduce(IntVector c) const {
  if (c.size() != ngens())
    throw ValidationError("degree-length", "degree has " + std::to_string(c.size()) +
                                               " coordinates, group needs " + std::to_string(ngens()));
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer& x = c[free_rank_ + i];
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion_[i].get_mpz_t());
  }
  return GroupElement{std::move(c)};
}

GroupElement FGAbelianGroup::element(IntVector coords) const { return reduce(std::move(coords)); }

GroupElement FGAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  IntVector c(ngens());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return reduce(std::move(c));
}

GroupElement FGAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  IntVector c(ngens());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
  return reduce(std::move(c));
}

GroupElement FGAbelianGroup::neg(const GroupElement& a) const { return sub(zero(), a); }

GroupElement FGAbelianGroup::scale(const Integer& k, const GroupElement& a) const {
  IntVector c(ngens());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
  return reduce(std::move(c));
}

bool FGAbelianGroup::contains(const GroupElement& g) const {
  if (g.coords.size() != ngens()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const Integer& x = g.coords[free_rank_ + i];
    if (x < 0 || x >= torsion_[i]) return false;
  }
  return true;
}

std::optional<Integer> FGAbelianGroup::element_order(const GroupElement& g) const {
  for (std::size_t i = 0; i < free_rank_; ++i)
    if (g.coords[i] != 0) return std::nullopt;
  Integer o = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer d = torsion_[i] / gcd(torsion_[i], g.coords[free_rank_ + i]);
    o = lcm(o, d);
  }
  return o;
}

std::vector<GroupElement> FGAbelianGroup::elements() const {
  if (!is_finite()) throw SizeGuardError("cannot enumerate an infinite group");
  std::vector<GroupElement> out;
  IntVector c(ngens());
  for (;;) {
    out.push_back(GroupElement{c});
    std::size_t i = ngens();
    while (i > 0) {
      --i;
      if (++c[i] < torsion_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (ngens() == 0) return out;
  }
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& o) const {
  IntMatrix rel(ngens() + o.ngens(), ngens() + o.ngens());
  IntMatrix a = relations(), b = o.relations();
  for (std::size_t i = 0; i < ngens(); ++i) rel(i, i) = a(i, i);
  for (std::size_t i = 0; i < o.ngens(); ++i) rel(ngens() + i, ngens() + i) = b(i, i);
  if (torsion_.empty() || o.torsion_.empty()) {
    std::vector<Integer> t = torsion_.empty() ? o.torsion_ : torsion_;
    return FGAbelianGroup(free_rank_ + o.free_rank_, t);
  }
  return from_presentation(rel);
}

GroupElement FGAbelianGroup::pair(const FGAbelianGroup& o, const GroupElement& a,
                                  const GroupElement& b) const {
  IntVector c(ngens() + o.ngens());
  for (std::size_t i = 0; i < ngens(); ++i) c[i] = a.coords[i];
  for (std::size_t i = 0; i < o.ngens(); ++i) c[ngens() + i] = b.coords[i];
  if (torsion_.empty() || o.torsion_.empty()) {
    // Concatenate free parts, then the (single) torsion part.
    IntVector out;
    for (std::size_t i = 0; i < free_rank_; ++i) out.push_back(a.coords[i]);
    for (std::size_t i = 0; i < o.free_rank_; ++i) out.push_back(b.coords[i]);
    for (std::size_t i = 0; i < torsion_.size(); ++i) out.push_back(a.coords[free_rank_ + i]);
    for (std::size_t i = 0; i < o.torsion_.size(); ++i) out.push_back(b.coords[o.free_rank_ + i]);
    return direct_sum(o).reduce(std::move(out));
  }
  IntMatrix rel(ngens() + o.ngens(), ngens() + o.ngens());
  IntMatrix ra = relations(), rb = o.relations();
  for (std::size_t i = 0; i < ngens(); ++i) rel(i, i) = ra(i, i);
  for (std::size_t i = 0; i < o.ngens(); ++i) rel(ngens() + i, ngens() + i) = rb(i, i);
  IntMatrix map;
  FGAbelianGroup s = from_presentation(rel, &map);
  return s.reduce(map * c);
}

std::string FGAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : "+") << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupHom::GroupHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
    throw ValidationError("hom-shape", "matrix must be " + std::to_string(target_.ngens()) + "x" +
                                           std::to_string(source_.ngens()));
  // Each source torsion relation must map to zero.
  for (std::size_t i = 0; i < source_.torsion().size(); ++i) {
    std::size_t col = source_.free_rank() + i;
    IntVector img = matrix_.column(col);
    for (auto& x : img) x *= source_.torsion()[i];
    if (!target_.reduce(img).is_zero())
      throw ValidationError("hom-well-defined",
                            "generator " + std::to_string(col) + " violates its torsion relation");
  }
}

GroupHom GroupHom::identity(const FGAbelianGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.ngens()));
}

GroupHom GroupHom::zero(const FGAbelianGroup& s, const FGAbelianGroup& t) {
  return GroupHom(s, t, IntMatrix(t.ngens(), s.ngens()));
}

GroupElement GroupHom::operator()(const GroupElement& g) const { return target_.reduce(matrix_ * g.coords); }

GroupHom GroupHom::compose(const GroupHom& other) const {
  if (!(other.target_ == source_)) throw ValidationError("hom-compose", "group mismatch");
  return GroupHom(other.source_, target_, matrix_ * other.matrix_);
}

std::optional<GroupElement> GroupHom::preimage(const GroupElement& h) const {
  IntMatrix m = matrix_.hcat(target_.relations());
  auto x = integer_solve(m, h.coords);
  if (!x) return std::nullopt;
  IntVector s(x->begin(), x->begin() + source_.ngens());
  return source_.reduce(std::move(s));
}

bool GroupHom::in_image(const GroupElement& h) const { return preimage(h).has_value(); }

KernelData kernel_data(const GroupHom& h) {
  const FGAbelianGroup& S = h.source();
  const FGAbelianGroup& T = h.target();
  const std::size_t s = S.ngens(), t = T.ngens();
  // x in Z^s with A x in the relation lattice of T.
  IntMatrix rel_t = T.relations();
  IntMatrix neg_rel(t, t);
  for (std::size_t i = 0; i < t; ++i) neg_rel(i, i) = -rel_t(i, i);
  IntMatrix k = integer_kernel(h.matrix().hcat(neg_rel));
  IntMatrix gens(s, k.cols());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) gens(i, j) = k(i, j);
  IntMatrix basis = lattice_basis(gens);
  const std::size_t r = basis.cols();
  // Source torsion relations in lattice coordinates.
  IntMatrix rel_coords(r, S.torsion().size());
  for (std::size_t i = 0; i < S.torsion().size(); ++i) {
    IntVector c(s);
    c[S.free_rank() + i] = S.torsion()[i];
    auto sol = integer_solve(basis, c);
    if (!sol) throw std::logic_error("kernel lattice misses a torsion relation");
    for (std::size_t j = 0; j < r; ++j) rel_coords(j, i) = (*sol)[j];
  }
  IntMatrix uinv;
  SmithForm f = smith_impl(rel_coords, &uinv);
  std::vector<std::size_t> free_rows, torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < r; ++i) {
    if (i >= f.rank) {
      free_rows.push_back(i);
    } else if (f.D(i, i) != 1) {
      torsion_rows.push_back(i);
      torsion.push_back(f.D(i, i));
    }
  }
  FGAbelianGroup K(free_rows.size(), torsion);
  std::vector<std::size_t> cols = free_rows;
  cols.insert(cols.end(), torsion_rows.begin(), torsion_rows.end());
  IntMatrix incl = basis * uinv.select_columns(cols);
  for (std::size_t j = 0; j < incl.cols(); ++j) {
    GroupElement e = S.reduce(incl.column(j));
    for (std::size_t i = 0; i < s; ++i) incl(i, j) = e.coords[i];
  }
  KernelData out{K, GroupHom(K, S, incl), K.is_torsionfree(), K.is_finite(), K.order()};
  return out;
}

FGAbelianGroup cokernel(const GroupHom& h, IntMatrix* coordinate_map) {
  return FGAbelianGroup::from_presentation(h.matrix().hcat(h.target().relations()), coordinate_map);
}

HomProps hom_props(const GroupHom& h) {
  HomProps p;
  p.epi = cokernel(h).is_trivial();
  p.mono = kernel_data(h).kernel.is_trivial();
  p.iso = p.epi && p.mono;
  return p;
}

std::vector<GroupElement> fiber_filter(const GroupHom& psi, const std::vector<GroupElement>& degrees,
                                       const GroupElement& h) {
  if (!hom_props(psi).epi) throw ValidationError("psi-epimorphism", "fiber_filter needs an epimorphism");
  std::vector<GroupElement> out;
  for (const auto& g : degrees)
    if (psi(g) == h) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gradex
