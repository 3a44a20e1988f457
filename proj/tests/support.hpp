#pragma once

#include <initializer_list>
#include <vector>

#include "gradex/abgroup.hpp"
#include "gradex/field.hpp"
#include "gradex/linalg.hpp"

namespace testing {

inline gradex::IntVector iv(std::initializer_list<long> xs) {
  gradex::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline gradex::GroupElement el(const gradex::FGAbelianGroup& G, std::initializer_list<long> xs) {
  return G.reduce(iv(xs));
}

inline gradex::Vector vec(std::initializer_list<long> xs) {
  gradex::Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline gradex::IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<gradex::IntVector> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    r.push_back(iv(row));
    cols = row.size();
  }
  return gradex::IntMatrix::from_rows(r, cols);
}

inline gradex::Matrix mat(const gradex::Field& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<gradex::Vector> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    gradex::Vector v;
    for (long x : row) v.push_back(f.from_int(x));
    r.push_back(v);
    cols = row.size();
  }
  return gradex::Matrix::from_rows(f, r, cols);
}

inline const gradex::FGAbelianGroup Z = gradex::FGAbelianGroup::integers(1);

}  // namespace testing
