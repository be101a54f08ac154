#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "pcx/group.hpp"
#include "pcx/pcmatrix.hpp"
#include "pcx/sampling.hpp"

namespace pcx::test {

/// |x - y| against an absolute tolerance; the values in these tests are
/// all of magnitude around one.
inline bool close(double x, double y, double tol = 1e-9) {
  return std::fabs(x - y) <= tol;
}

/// A random pairwise-comparisons matrix: free upper triangle from the
/// group's sampler, identity diagonal, reciprocal lower triangle.
inline PCMatrix random_pc_matrix(const Group& g, std::size_t n, Rng& rng) {
  ElemSampler sample = g.default_sampler();
  std::vector<Elem> entries(n * n, g.identity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem e = sample(rng);
      entries[i * n + j] = e;
      entries[j * n + i] = g.inverse(e);
    }
  }
  return PCMatrix(g, n, std::move(entries));
}

/// A consistent matrix built from a weight vector: a_ij = w_i * w_j^-1.
inline PCMatrix random_consistent_matrix(const Group& g, std::size_t n, Rng& rng) {
  ElemSampler sample = g.default_sampler();
  std::vector<Elem> w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(sample(rng));
  std::vector<Elem> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries.push_back(g.op(w[i], g.inverse(w[j])));
  return PCMatrix(g, n, std::move(entries));
}

}  // namespace pcx::test
