#ifndef HILLPOLY_LINSOLVE_HPP
#define HILLPOLY_LINSOLVE_HPP

#include <vector>

#include "hillpoly/rational.hpp"

namespace hillpoly {

/// Dense row-major rational matrix.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
  Rational& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  const Rational& operator()(int i, int j) const {
    return data[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(RationalMatrix& m);

/// Basis of {v : M v = 0}, one vector per free column, read off the RREF.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

}  // namespace hillpoly

#endif  // HILLPOLY_LINSOLVE_HPP
