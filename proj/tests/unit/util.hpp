#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grasshilb/matrix.hpp"

namespace testutil {

using grasshilb::Rational;
using grasshilb::RationalMatrix;

// Small integers in [-bound, bound], with a fraction of zeros to vary ranks.
inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                    int bound = 4, int zero_percent = 30) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(rng() % 100) < zero_percent) continue;
      m(r, c) = Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound,
                         static_cast<unsigned long>(rng() % 3 + 1));
      m(r, c).canonicalize();
    }
  return m;
}

inline std::vector<Rational> random_vector(std::size_t size, std::mt19937_64& rng, int bound = 5) {
  std::vector<Rational> v(size);
  bool nonzero = false;
  while (!nonzero)
    for (auto& x : v) {
      x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
      nonzero = nonzero || sgn(x) != 0;
    }
  return v;
}

}  // namespace testutil
