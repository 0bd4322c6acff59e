#pragma once

#include <lapacke.h>

#include <cstddef>
#include <string>
#include <vector>

#include "eqlab/errors.hpp"

namespace eqlab {

struct Eigenpairs {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // unit 2-norm, one per value
};

/// Lowest `count` eigenpairs of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, via LAPACK's MRRR driver (dstevr).
inline Eigenpairs lowest_eigenpairs(std::vector<double> diagonal, std::vector<double> off_diagonal,
                                    std::size_t count) {
  const std::size_t n = diagonal.size();
  if (n == 0 || off_diagonal.size() + 1 != n) {
    throw DomainError("bound-states", "inconsistent tridiagonal dimensions");
  }
  if (count == 0 || count > n) throw DomainError("bound-states", "requested eigenpair count out of range");

  off_diagonal.push_back(0.0);  // dstevr uses e as workspace of length n
  lapack_int found = 0;
  std::vector<double> w(n);
  std::vector<double> z(n * count);
  std::vector<lapack_int> support(2 * count);
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', static_cast<lapack_int>(n), diagonal.data(), off_diagonal.data(),
      0.0, 0.0, 1, static_cast<lapack_int>(count), 0.0, &found, w.data(), z.data(),
      static_cast<lapack_int>(n), support.data());
  if (info != 0 || found != static_cast<lapack_int>(count)) {
    throw ConvergenceError("bound-states", "dstevr failed (info = " + std::to_string(info) + ")");
  }
  Eigenpairs out;
  out.values.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(count));
  out.vectors.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.vectors[k].assign(z.begin() + static_cast<std::ptrdiff_t>(k * n),
                          z.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  }
  return out;
}

}  // namespace eqlab
