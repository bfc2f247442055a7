#pragma once

#include <vector>

#include "wqe/matrix.hpp"

namespace wqe {

// Kronecker product with the LEFT factor as the slow index:
// tensor(A, B)[(i*dB + k), (j*dB + l)] = A(i,j) * B(k,l).
Mat tensor(const Mat& a, const Mat& b);
Mat tensor(const Mat& a, const Mat& b, const Mat& c);

// Trace out every factor not listed in `keep` (indices into shape, any
// order; result factors stay in ascending original order).
Mat partial_trace(const Mat& m, const SubsystemShape& shape, std::vector<int> keep);

// Operator acting on one factor, identity on the rest.
Mat embed_factor(const Mat& op, const SubsystemShape& shape, int factor);

}  // namespace wqe
