#include "gradex/monoid.hpp"

#include <algorithm>

namespace gradex {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A,
                                                 const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A.front().size() : 0;
  // Tableau columns: n originals, m artificials, rhs.
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(n + m + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = s * A[i][j];
    T[i][n + i] = 1;
    T[i][n + m] = s * b[i];
    basis[i] = n + i;
  }
  const std::size_t total = n + m;
  for (;;) {
    // Reduced cost of column j for the objective "sum of artificials".
    std::size_t enter = total;
    for (std::size_t j = 0; j < total && enter == total; ++j) {
      bool in_basis = std::find(basis.begin(), basis.end(), j) != basis.end();
      if (in_basis) continue;
      Rational cost = j >= n ? 1 : 0;
      for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) cost -= T[i][j];
      if (cost < 0) enter = j;
    }
    if (enter == total) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][total] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen for phase one
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      if (T[i][total] != 0) return std::nullopt;
    } else {
      x[basis[i]] = T[i][total];
    }
  }
  return x;
}

namespace {

IntVector scale_to_integers(const std::vector<Rational>& x) {
  Integer l = 1;
  for (const auto& q : x) l = lcm(l, q.get_den());
  IntVector out;
  for (const auto& q : x) out.push_back(Integer(q * l));
  Integer g = 0;
  for (const auto& v : out) g = gcd(g, v);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

void enumerate_combinations(std::size_t k, std::size_t bound,
                            const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> c(k, 0);
  // Iterate all c with sum <= bound in graded order.
  for (std::size_t total = 0; total <= bound; ++total) {
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) -> bool {
      if (i + 1 == k) {
        c[i] = left;
        return fn(c);
      }
      for (std::size_t v = 0; v <= left; ++v) {
        c[i] = v;
        if (!rec(i + 1, left - v)) return false;
      }
      return true;
    };
    if (k == 0) return void(fn(c));
    if (!rec(0, total)) return;
  }
}

}  // namespace

namespace {

// Column Hermite form of a full-column-rank integer matrix: lower echelon with
// positive pivots and earlier entries of each pivot row reduced modulo the pivot.
IntMatrix hermite_columns(IntMatrix B) {
  const std::size_t d = B.rows(), r = B.cols();
  auto combine = [&](std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& u,
                     const Integer& v) {
    for (std::size_t i = 0; i < d; ++i) {
      Integer x = B(i, a), y = B(i, b);
      B(i, a) = s * x + t * y;
      B(i, b) = u * x + v * y;
    }
  };
  std::size_t col = 0;
  for (std::size_t i = 0; i < d && col < r; ++i) {
    for (std::size_t j = col + 1; j < r; ++j) {
      if (B(i, j) == 0) continue;
      Integer a = B(i, col), b = B(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      combine(col, j, s, t, Integer(-b / g), Integer(a / g));
    }
    if (B(i, col) == 0) continue;
    if (B(i, col) < 0)
      for (std::size_t k = 0; k < d; ++k) B(k, col) = -B(k, col);
    for (std::size_t j = 0; j < col; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), B(i, j).get_mpz_t(), B(i, col).get_mpz_t());
      for (std::size_t k = 0; k < d; ++k) B(k, j) -= q * B(k, col);
    }
    ++col;
  }
  return B;
}

}  // namespace

AffineMonoid::AffineMonoid(std::size_t ambient_dim, std::vector<IntVector> generators) : d_(ambient_dim) {
  for (auto& g : generators) {
    if (g.size() != d_) throw ValidationError("monoid-generator", "generator has wrong dimension");
    bool zero = std::all_of(g.begin(), g.end(), [](const Integer& v) { return v == 0; });
    if (!zero && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
  const std::size_t k = gens_.size();
  IntMatrix G(d_, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d_; ++i) G(i, j) = gens_[j][i];
  diff_basis_ = hermite_columns(lattice_basis(G));
  diff_ = FGAbelianGroup::integers(diff_basis_.cols());

  // g_i is a unit iff some x >= 0 with x_i >= 1 has G x = 0 (substitute x_i = 1 + y_i).
  std::vector<std::vector<Rational>> A(d_, std::vector<Rational>(k));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < k; ++j) A[i][j] = Rational(gens_[j][i]);
  std::optional<std::vector<Rational>> lp_point;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> b(d_);
    for (std::size_t i = 0; i < d_; ++i) b[i] = Rational(-gens_[t][i]);
    if (auto y = lp_feasible(A, b)) {
      unit_gens_.push_back(t);
      if (!lp_point) {
        (*y)[t] += 1;
        lp_point = *y;
      }
    }
  }
  sharp_ = unit_gens_.empty();
  if (!sharp_) {
    enumerate_combinations(k, 16, [&](const std::vector<std::size_t>& c) {
      bool nonzero = false;
      IntVector s(d_);
      for (std::size_t j = 0; j < k; ++j) {
        if (c[j] == 0) continue;
        nonzero = true;
        for (std::size_t i = 0; i < d_; ++i) s[i] += c[j] * gens_[j][i];
      }
      if (!nonzero) return true;
      if (std::all_of(s.begin(), s.end(), [](const Integer& v) { return v == 0; })) {
        witness_ = IntVector(c.begin(), c.end());
        return false;
      }
      return true;
    });
    sharp_method_ = "search";
    if (!witness_) {
      witness_ = scale_to_integers(*lp_point);
      sharp_method_ = "lp-witness";
    }
  }
}

IntVector AffineMonoid::diff_coordinates(const IntVector& m) const {
  auto x = integer_solve(diff_basis_, m);
  if (!x) throw ValidationError("monoid-element", "vector outside the difference group");
  return *x;
}

bool AffineMonoid::is_unit(const IntVector& m) const {
  IntMatrix U(d_, unit_gens_.size());
  for (std::size_t j = 0; j < unit_gens_.size(); ++j)
    for (std::size_t i = 0; i < d_; ++i) U(i, j) = gens_[unit_gens_[j]][i];
  return integer_solve(U, m).has_value();
}

Truth AffineMonoid::contains(const IntVector& m, std::size_t bound) const {
  if (m.size() != d_) return Truth::no;
  if (std::all_of(m.begin(), m.end(), [](const Integer& v) { return v == 0; })) return Truth::yes;
  if (!integer_solve(diff_basis_, m)) return Truth::no;
  bool found = false;
  enumerate_combinations(gens_.size(), bound, [&](const std::vector<std::size_t>& c) {
    IntVector s(d_);
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::size_t i = 0; i < d_; ++i) s[i] += c[j] * gens_[j][i];
    found = s == m;
    return !found;
  });
  return found ? Truth::yes : Truth::undecided;
}

std::set<IntVector> AffineMonoid::elements_up_to(std::size_t bound) const {
  std::set<IntVector> out;
  enumerate_combinations(gens_.size(), bound, [&](const std::vector<std::size_t>& c) {
    IntVector s(d_);
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::size_t i = 0; i < d_; ++i) s[i] += c[j] * gens_[j][i];
    out.insert(s);
    return true;
  });
  return out;
}

std::string to_string(GradingMode m) {
  switch (m) {
    case GradingMode::fine: return "fine";
    case GradingMode::coarse: return "coarse";
    default: return "d";
  }
}

MonoidAlgebra::MonoidAlgebra(AlgebraPtr base, AffineMonoid monoid, GradingMode mode, IntMatrix d)
    : base_(std::move(base)), monoid_(std::move(monoid)), mode_(mode), d_(std::move(d)) {
  const FGAbelianGroup& G = base_->group();
  if (mode_ == GradingMode::fine) {
    group_ = G.direct_sum(monoid_.diff_group());
  } else {
    group_ = G;
  }
  if (mode_ == GradingMode::d) {
    if (d_.rows() != G.ngens() || d_.cols() != monoid_.ambient_dim())
      throw ValidationError("grading-matrix", "d must be " + std::to_string(G.ngens()) + "x" +
                                                  std::to_string(monoid_.ambient_dim()));
  }
}

GroupElement MonoidAlgebra::monomial_degree(std::size_t base_index, const IntVector& m) const {
  const FGAbelianGroup& G = base_->group();
  const GroupElement& r = base_->degree(base_index);
  switch (mode_) {
    case GradingMode::fine:
      return G.pair(monoid_.diff_group(), r, GroupElement{monoid_.diff_coordinates(m)});
    case GradingMode::coarse: return r;
    default: return G.add(r, G.reduce(d_ * m));
  }
}

MonoidElement MonoidAlgebra::monomial(const Vector& r, const IntVector& m) const {
  if (monoid_.contains(m, 32) == Truth::no) throw ValidationError("monoid-element", "exponent outside M");
  MonoidElement x;
  if (!is_zero(r)) x.emplace(m, r);
  return x;
}

MonoidElement MonoidAlgebra::multiply(const MonoidElement& a, const MonoidElement& b) const {
  MonoidElement out;
  const Field& f = base_->field();
  for (const auto& [m, r] : a)
    for (const auto& [n, s] : b) {
      IntVector mn(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) mn[i] = m[i] + n[i];
      Vector prod = base_->multiply(r, s);
      auto [it, inserted] = out.try_emplace(mn, Vector(base_->dim()));
      it->second = gradex::add(f, it->second, prod);
    }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

MonoidElement MonoidAlgebra::add(const MonoidElement& a, const MonoidElement& b) const {
  MonoidElement out = a;
  for (const auto& [m, s] : b) {
    auto [it, inserted] = out.try_emplace(m, Vector(base_->dim()));
    it->second = gradex::add(base_->field(), it->second, s);
    if (is_zero(it->second)) out.erase(it);
  }
  return out;
}

std::optional<GroupElement> MonoidAlgebra::degree_of(const MonoidElement& x) const {
  std::optional<GroupElement> deg;
  for (const auto& [m, r] : x)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      GroupElement g = monomial_degree(i, m);
      if (deg && !(*deg == g)) return std::nullopt;
      deg = g;
    }
  return deg;
}

bool MonoidAlgebra::is_homogeneous(const MonoidElement& x) const { return x.empty() || degree_of(x).has_value(); }

RingClass MonoidAlgebra::classify() const {
  RingClass base = classify_ring(*base_);
  RingClass rc;
  rc.method = "from-base-ring";
  rc.entire = base.entire;
  rc.reduced = base.reduced;
  if (base_->dim() == 0) {
    rc.simple = Truth::no;
  } else if (base.simple == Truth::no || !monoid_.is_group()) {
    rc.simple = Truth::no;
  } else if (base.simple == Truth::yes && (mode_ == GradingMode::fine || monoid_.generators().empty())) {
    rc.simple = Truth::yes;
  } else {
    rc.simple = Truth::undecided;
  }
  return rc;
}

Truth MonoidAlgebra::is_unit(const MonoidElement& x) const {
  if (x.empty()) return to_truth(base_->dim() == 0);
  if (x.size() == 1) {
    const auto& [m, r] = *x.begin();
    return to_truth(classify_element(*base_, r).unit && monoid_.is_unit(m));
  }
  // Several monomials: with R reduced and M sharp the units are exactly R^*.
  if (monoid_.sharp() && classify_ring(*base_).reduced == Truth::yes) return Truth::no;
  return Truth::undecided;
}

std::optional<GroupElement> MonoidAlgebra::unit_degree_outside(const GroupHom& phi) const {
  if (!(phi.target() == group_)) throw ValidationError("phi-target", "phi must land in the grading group");
  std::vector<GroupElement> candidates;
  for (std::size_t i = 0; i < base_->dim(); ++i)
    if (rank(base_->basis_mult(i)) == base_->dim())
      candidates.push_back(monomial_degree(i, IntVector(monoid_.ambient_dim())));
  std::size_t unit_index = 0;
  while (unit_index < base_->dim() && base_->unit()[unit_index] == 0) ++unit_index;
  if (unit_index < base_->dim()) {
    for (auto t : monoid_.unit_generators()) {
      // deg(1 * e_m) = deg(1) + d(m), with deg(1) = 0.
      candidates.push_back(monomial_degree(unit_index, monoid_.generators()[t]));
    }
  }
  for (const auto& g : candidates) {
    if (!phi.in_image(group_.reduce(g.coords))) return g;
  }
  return std::nullopt;
}

}  // namespace gradex
