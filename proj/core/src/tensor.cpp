#include "wqe/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace wqe {

Mat tensor(const Mat& a, const Mat& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  Mat out(ar * br, ac * bc);
  for (Eigen::Index j = 0; j < ac; ++j)
    for (Eigen::Index i = 0; i < ar; ++i)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

Mat tensor(const Mat& a, const Mat& b, const Mat& c) { return tensor(tensor(a, b), c); }

namespace {

// Linear offsets of the kept (resp. traced) digit tuples inside the full
// mixed-radix row index. Kept and traced digits occupy disjoint positions, so
// a full index is offsets_keep[a] + offsets_trace[t].
std::vector<Eigen::Index> digit_offsets(const SubsystemShape& shape,
                                        const std::vector<int>& factors) {
  std::vector<Eigen::Index> strides(shape.factors());
  Eigen::Index s = 1;
  for (int f = shape.factors() - 1; f >= 0; --f) {
    strides[f] = s;
    s *= shape.local_dims[f];
  }
  Eigen::Index count = 1;
  for (int f : factors) count *= shape.local_dims[f];

  std::vector<Eigen::Index> offsets(count, 0);
  Eigen::Index repeat = 1;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const int f = *it;
    const int d = shape.local_dims[f];
    for (Eigen::Index idx = 0; idx < count; ++idx) {
      const Eigen::Index digit = (idx / repeat) % d;
      offsets[idx] += digit * strides[f];
    }
    repeat *= d;
  }
  return offsets;
}

}  // namespace

Mat partial_trace(const Mat& m, const SubsystemShape& shape, std::vector<int> keep) {
  if (m.rows() != m.cols() || m.rows() != shape.dim()) {
    std::ostringstream os;
    os << "partial_trace: matrix dim " << m.rows() << " does not match shape dim "
       << shape.dim();
    throw ShapeError(os.str());
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw ShapeError("partial_trace: keep set must be non-empty");
  for (int f : keep)
    if (f < 0 || f >= shape.factors())
      throw ShapeError("partial_trace: keep index out of range");

  std::vector<int> traced;
  for (int f = 0; f < shape.factors(); ++f)
    if (!std::binary_search(keep.begin(), keep.end(), f)) traced.push_back(f);
  if (traced.empty()) return m;

  const auto keep_off = digit_offsets(shape, keep);
  const auto trace_off = digit_offsets(shape, traced);
  const Eigen::Index dk = static_cast<Eigen::Index>(keep_off.size());

  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index b : trace_off)
    for (Eigen::Index j = 0; j < dk; ++j)
      for (Eigen::Index i = 0; i < dk; ++i)
        out(i, j) += m(keep_off[i] + b, keep_off[j] + b);
  return out;
}

Mat embed_factor(const Mat& op, const SubsystemShape& shape, int factor) {
  if (factor < 0 || factor >= shape.factors())
    throw ShapeError("embed_factor: factor index out of range");
  if (op.rows() != shape.local_dims[factor])
    throw ShapeError("embed_factor: operator dim does not match factor dim");
  Mat out = factor == 0 ? op : Mat::Identity(shape.local_dims[0], shape.local_dims[0]);
  for (int f = 1; f < shape.factors(); ++f) {
    const int d = shape.local_dims[f];
    out = tensor(out, f == factor ? op : Mat::Identity(d, d));
  }
  return out;
}

}  // namespace wqe
