#pragma once

#include <vector>

#include "wqe/matrix.hpp"
#include "wqe/rng.hpp"
#include "wqe/states.hpp"

namespace wqe::test {

inline Mat diag(std::vector<double> entries) {
  const int d = static_cast<int>(entries.size());
  Mat m = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = entries[i];
  return m;
}

inline Mat from_rows(int d, std::vector<cxd> entries) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = entries[static_cast<size_t>(i) * d + j];
  return m;
}

inline Rng rng_for(std::uint64_t seed, std::uint64_t index = 0) {
  return Rng(RngStream{seed, index});
}

}  // namespace wqe::test
