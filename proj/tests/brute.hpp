#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>

#include "gradex/module.hpp"
#include "gradex/oracles.hpp"

/// Enumeration helpers for finite fields, in machine integers.
namespace brute {

using gradex::oracle::Vec;

inline void for_each_vec(std::int64_t p, std::size_t n, const std::function<void(const Vec&)>& fn) {
  Vec v(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(v);
      return;
    }
    for (std::int64_t c = 0; c < p; ++c) {
      v[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

/// r * m where r is given in ring coordinates, using the action table.
inline Vec act(const gradex::oracle::Action& M, std::int64_t p, const Vec& r, const Vec& m) {
  Vec out(M.dim(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (r[i] == 0 || m[j] == 0) continue;
      for (std::size_t k = 0; k < M.dim(); ++k) out[k] = (out[k] + r[i] * m[j] % p * M.act[i][k][j]) % p;
    }
  return out;
}

inline bool homogeneous(const std::vector<gradex::GroupElement>& degrees, const Vec& v) {
  std::optional<gradex::GroupElement> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (seen && !(*seen == degrees[i])) return false;
    seen = degrees[i];
  }
  return true;
}

/// A homogeneous m with r |-> r m bijective, found by trying every element.
inline std::optional<Vec> free_generator(const gradex::GradedModule& M) {
  if (M.dim() != M.ring()->dim()) return std::nullopt;
  gradex::oracle::Action A = gradex::oracle::action_of(M);
  const std::int64_t p = A.p;
  std::optional<Vec> found;
  for_each_vec(p, M.dim(), [&](const Vec& m) {
    if (found || !homogeneous(A.degrees, m)) return;
    std::set<Vec> images;
    for_each_vec(p, M.ring()->dim(), [&](const Vec& r) { images.insert(act(A, p, r, m)); });
    std::size_t total = 1;
    for (std::size_t i = 0; i < M.dim(); ++i) total *= static_cast<std::size_t>(p);
    if (images.size() == total) found = m;
  });
  return found;
}

}  // namespace brute
