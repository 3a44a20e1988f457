#include "gradex/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace gradex::oracle {

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  // Fermat: a^(p-2).
  std::int64_t r = 1, b = md(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t small(const Rational& q, std::int64_t p) {
  if (q.get_den() != 1) throw std::logic_error("oracle expects reduced scalars in F_p");
  return md(q.get_num().get_si(), p);
}

std::int64_t modulus(const Field& f) {
  if (!f.is_finite()) throw ValidationError("field", "oracles run over finite fields only");
  return static_cast<std::int64_t>(f.characteristic());
}

bool zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

// Calls fn on every vector of F_p^k in lexicographic order; stops when fn returns false.
template <class Fn>
void for_each_vector(std::int64_t p, std::size_t k, Fn fn) {
  Vec v(k, 0);
  for (;;) {
    if (!fn(v)) return;
    std::size_t t = k;
    while (t > 0 && v[t - 1] == p - 1) v[--t] = 0;
    if (t == 0) return;
    ++v[t - 1];
  }
}

Vec apply(const std::vector<Vec>& A, const Vec& v, std::int64_t p) {
  Vec out(A.size(), 0);
  for (std::size_t k = 0; k < A.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += A[k][j] * v[j] % p;
    out[k] = s % p;
  }
  return out;
}

bool in_span(const Basis& B, const Vec& v, std::int64_t p) {
  std::vector<Vec> rows = B;
  rows.push_back(v);
  return rref(p, rows, v.size()).size() == B.size();
}

Basis closure(const Action& M, Basis B, const Vec& extra) {
  std::vector<Vec> rows = B;
  rows.push_back(extra);
  B = rref(M.p, rows, M.dim());
  for (;;) {
    std::vector<Vec> grown = B;
    for (const auto& A : M.act)
      for (const auto& b : B) grown.push_back(apply(A, b, M.p));
    Basis next = rref(M.p, grown, M.dim());
    if (next.size() == B.size()) return next;
    B = std::move(next);
  }
}

struct Mult {
  std::int64_t p;
  std::size_t n;
  const GradedAlgebra& R;
  Vec operator()(const Vec& a, const Vec& b) const {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[j]) continue;
        const std::int64_t ab = a[i] * b[j] % p;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = R.c(i, j, k);
          if (c != 0) out[k] = (out[k] + ab * small(c, p)) % p;
        }
      }
    }
    return out;
  }
};

bool homogeneous(const std::vector<GroupElement>& degs, const Vec& v) {
  const GroupElement* d = nullptr;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j]) continue;
    if (d && !(*d == degs[j])) return false;
    d = &degs[j];
  }
  return true;
}

// All nonzero homogeneous vectors, grouped by degree.
std::vector<Vec> homogeneous_vectors(std::int64_t p, const std::vector<GroupElement>& degs) {
  std::map<GroupElement, std::vector<std::size_t>> comp;
  for (std::size_t j = 0; j < degs.size(); ++j) comp[degs[j]].push_back(j);
  std::vector<Vec> out;
  for (const auto& [g, idx] : comp)
    for_each_vector(p, idx.size(), [&](const Vec& c) {
      if (zero(c)) return true;
      Vec v(degs.size(), 0);
      for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = c[t];
      out.push_back(v);
      return true;
    });
  return out;
}

}  // namespace

Basis rref(std::int64_t p, std::vector<Vec> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && md(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::int64_t inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = md(x, p) * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::int64_t f = md(rows[i][c], p);
      if (!f) continue;
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = md(rows[i][k] - f * rows[r][k], p);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

Vec to_vec(const Vector& v) {
  Vec out;
  for (const auto& q : v) out.push_back(q.get_num().get_si());
  return out;
}

Basis to_basis(const Subspace& s) {
  Basis b;
  for (const auto& v : s.basis()) b.push_back(to_vec(v));
  return b;
}

Vec flatten(const Matrix& m) {
  Vec out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_num().get_si());
  return out;
}

Action action_of(const GradedModule& M) {
  Action a;
  a.p = modulus(M.field());
  a.degrees = M.degrees();
  for (const auto& A : M.actions()) {
    std::vector<Vec> rows(M.dim(), Vec(M.dim()));
    for (std::size_t k = 0; k < M.dim(); ++k)
      for (std::size_t j = 0; j < M.dim(); ++j) rows[k][j] = small(A(k, j), a.p);
    a.act.push_back(rows);
  }
  return a;
}

Action action_of(const GradedAlgebra& R) {
  Action a;
  a.p = modulus(R.field());
  a.degrees = R.degrees();
  const std::size_t n = R.dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> rows(n, Vec(n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) rows[k][j] = small(R.c(i, j, k), a.p);
    a.act.push_back(rows);
  }
  return a;
}

ClassifyTable exhaustive_classify(const GradedAlgebra& R, double cap) {
  const std::int64_t p = modulus(R.field());
  const std::size_t n = R.dim();
  ClassifyTable t;
  if (n == 0) {
    t.simple = t.entire = false;
    t.reduced = true;
    return t;
  }
  if (std::pow(double(p), double(n)) > cap) throw SizeGuardError("exhaustive classification beyond the cap");
  Mult mul{p, n, R};
  Vec one;
  for (const auto& u : R.unit()) one.push_back(small(u, p));
  std::vector<Vec> all;
  for_each_vector(p, n, [&](const Vec& v) {
    all.push_back(v);
    return true;
  });
  t.simple = t.entire = t.reduced = true;
  for (const auto& x : all) {
    ElementRow row;
    row.coords = x;
    row.homogeneous = homogeneous(R.degrees(), x);
    row.unit = std::any_of(all.begin(), all.end(), [&](const Vec& y) { return mul(x, y) == one; });
    row.regular = std::none_of(all.begin(), all.end(), [&](const Vec& y) { return !zero(y) && zero(mul(x, y)); });
    Vec pw = x;
    for (std::size_t k = 0; k <= n && !row.nilpotent; ++k) {
      if (zero(pw)) row.nilpotent = true;
      else pw = mul(pw, x);
    }
    if (row.homogeneous && !zero(x)) {
      t.simple = t.simple && row.unit;
      t.entire = t.entire && row.regular;
      t.reduced = t.reduced && !row.nilpotent;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<Basis> graded_submodules(const Action& M, std::size_t cap) {
  const std::vector<Vec> hom = homogeneous_vectors(M.p, M.degrees);
  std::set<Basis> seen{Basis{}};
  std::queue<Basis> todo;
  todo.push(Basis{});
  while (!todo.empty()) {
    Basis S = todo.front();
    todo.pop();
    for (const auto& h : hom) {
      if (in_span(S, h, M.p)) continue;
      Basis T = closure(M, S, h);
      if (seen.insert(T).second) {
        if (seen.size() > cap) throw SizeGuardError("too many graded submodules");
        todo.push(T);
      }
    }
  }
  std::vector<Basis> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Basis& a, const Basis& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Vec> module_morphisms(const GradedModule& M, const GradedModule& N, double cap) {
  const Action a = action_of(M), b = action_of(N);
  const std::int64_t p = a.p;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t k = 0; k < N.dim(); ++k)
    for (std::size_t j = 0; j < M.dim(); ++j)
      if (N.degree(k) == M.degree(j)) slots.emplace_back(k, j);
  if (std::pow(double(p), double(slots.size())) > cap) throw SizeGuardError("too many candidate morphisms");
  std::vector<Vec> out;
  for_each_vector(p, slots.size(), [&](const Vec& c) {
    std::vector<Vec> F(N.dim(), Vec(M.dim(), 0));
    for (std::size_t t = 0; t < slots.size(); ++t) F[slots[t].first][slots[t].second] = c[t];
    bool ok = true;
    for (std::size_t i = 0; i < a.act.size() && ok; ++i)
      for (std::size_t k = 0; k < N.dim() && ok; ++k)
        for (std::size_t j = 0; j < M.dim() && ok; ++j) {
          std::int64_t lhs = 0, rhs = 0;
          for (std::size_t l = 0; l < N.dim(); ++l) lhs += b.act[i][k][l] * F[l][j];
          for (std::size_t l = 0; l < M.dim(); ++l) rhs += F[k][l] * a.act[i][l][j];
          ok = md(lhs - rhs, p) == 0;
        }
    if (ok) {
      Vec flat;
      for (const auto& row : F) flat.insert(flat.end(), row.begin(), row.end());
      out.push_back(flat);
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> ring_morphisms(const GradedAlgebra& R, const GradedAlgebra& S, double cap) {
  const std::int64_t p = modulus(R.field());
  const std::size_t n = R.dim(), m = S.dim();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (S.degree(k) == R.degree(j)) slots.emplace_back(k, j);
  if (std::pow(double(p), double(slots.size())) > cap) throw SizeGuardError("too many candidate ring maps");
  Mult mulS{p, m, S};
  Vec oneR, oneS;
  for (const auto& u : R.unit()) oneR.push_back(small(u, p));
  for (const auto& u : S.unit()) oneS.push_back(small(u, p));
  std::vector<Vec> out;
  for_each_vector(p, slots.size(), [&](const Vec& c) {
    std::vector<Vec> F(m, Vec(n, 0));
    for (std::size_t t = 0; t < slots.size(); ++t) F[slots[t].first][slots[t].second] = c[t];
    auto image = [&](const Vec& x) {
      Vec y(m, 0);
      for (std::size_t k = 0; k < m; ++k) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s += F[k][j] * x[j];
        y[k] = md(s, p);
      }
      return y;
    };
    if (image(oneR) != oneS) return true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec prod(n, 0);
        for (std::size_t k = 0; k < n; ++k) prod[k] = small(R.c(i, j, k), p);
        Vec ei(n, 0), ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        if (image(prod) != mulS(image(ei), image(ej))) return true;
      }
    Vec flat;
    for (const auto& row : F) flat.insert(flat.end(), row.begin(), row.end());
    out.push_back(flat);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

SmallAnswer superfluous(const Action& N, const std::vector<Vec>& image) {
  const Basis I = rref(N.p, image, N.dim());
  SmallAnswer ans;
  ans.flag = true;
  for (const auto& L : graded_submodules(N)) {
    if (L.size() == N.dim()) continue;
    std::vector<Vec> rows = I;
    rows.insert(rows.end(), L.begin(), L.end());
    if (rref(N.p, rows, N.dim()).size() == N.dim()) {
      ans.flag = false;
      ans.witness = L;
      break;
    }
  }
  return ans;
}

SmallAnswer essential(const Action& N, const std::vector<Vec>& image) {
  const Basis I = rref(N.p, image, N.dim());
  SmallAnswer ans;
  ans.flag = true;
  for (const auto& L : graded_submodules(N)) {
    if (L.empty()) continue;
    std::vector<Vec> rows = I;
    rows.insert(rows.end(), L.begin(), L.end());
    // dim(I cap L) = dim I + dim L - dim(I + L)
    if (I.size() + L.size() == rref(N.p, rows, N.dim()).size()) {
      ans.flag = false;
      ans.witness = L;
      break;
    }
  }
  return ans;
}

Basis nilradical(const GradedAlgebra& R) {
  const std::int64_t p = modulus(R.field());
  const std::size_t n = R.dim();
  Mult mul{p, n, R};
  std::vector<Vec> nil;
  for (const auto& x : homogeneous_vectors(p, R.degrees())) {
    Vec pw = x;
    for (std::size_t k = 0; k <= n; ++k) {
      if (zero(pw)) {
        nil.push_back(x);
        break;
      }
      pw = mul(pw, x);
    }
  }
  return rref(p, nil, n);
}

std::vector<Basis> graded_primes(const GradedAlgebra& R) {
  const Action A = action_of(R);
  const std::int64_t p = A.p;
  const std::size_t n = R.dim();
  Mult mul{p, n, R};
  const std::vector<Vec> hom = homogeneous_vectors(p, R.degrees());
  std::vector<Basis> out;
  for (const auto& P : graded_submodules(A)) {
    if (P.size() == n) continue;
    bool prime = true;
    for (std::size_t a = 0; a < hom.size() && prime; ++a) {
      if (in_span(P, hom[a], p)) continue;
      for (std::size_t b = a; b < hom.size() && prime; ++b)
        if (!in_span(P, hom[b], p) && in_span(P, mul(hom[a], hom[b]), p)) prime = false;
    }
    if (prime) out.push_back(P);
  }
  return out;
}

Basis intersect_all(std::int64_t p, std::size_t n, const std::vector<Basis>& spaces) {
  // Work with annihilators: the intersection is the annihilator of the sum of annihilators.
  auto annihilator = [&](const Basis& B) {
    std::vector<std::size_t> pivots;
    for (const auto& b : B) {
      std::size_t c = 0;
      while (b[c] == 0) ++c;
      pivots.push_back(c);
    }
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
      if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
      Vec v(n, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < B.size(); ++r) v[pivots[r]] = md(-B[r][f], p);
      out.push_back(v);
    }
    return rref(p, out, n);
  };
  std::vector<Vec> ann;
  for (const auto& B : spaces) {
    Basis a = annihilator(B);
    ann.insert(ann.end(), a.begin(), a.end());
  }
  return annihilator(rref(p, ann, n));
}

}  // namespace gradex::oracle
