#pragma once

#include <cstddef>
#include <vector>

#include <boost/rational.hpp>

namespace gbds {

  using Rational = boost::rational<long long>;
  using Matrix   = std::vector<std::vector<Rational>>;

  //! Reduced row echelon form in place; returns the pivot column of each
  //! nonzero row.
  inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
      std::size_t p = row;
      while (p < m.size() && m[p][c] == Rational(0)) {
        ++p;
      }
      if (p == m.size()) {
        continue;
      }
      std::swap(m[p], m[row]);
      Rational inv = Rational(1) / m[row][c];
      for (auto& x : m[row]) {
        x *= inv;
      }
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != row && m[r][c] != Rational(0)) {
          Rational f = m[r][c];
          for (std::size_t k = 0; k < cols; ++k) {
            m[r][k] -= f * m[row][k];
          }
        }
      }
      pivots.push_back(c);
      ++row;
    }
    return pivots;
  }

  //! A basis of {x : m x = 0}, one vector per free column.
  inline std::vector<std::vector<Rational>> kernel_basis(Matrix m, std::size_t cols) {
    auto                      pivots = rref(m, cols);
    std::vector<bool>         is_pivot(cols, false);
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) {
        continue;
      }
      std::vector<Rational> v(cols, Rational(0));
      v[f] = Rational(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        v[pivots[r]] = -m[r][f];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  inline std::size_t rank(Matrix m, std::size_t cols) {
    return rref(m, cols).size();
  }

}  // namespace gbds
