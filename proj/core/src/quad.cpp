#include "wqe/quad.hpp"

#include <cmath>
#include <functional>

#include <unsupported/Eigen/MatrixFunctions>

namespace wqe {

namespace {

using Integrand = std::function<Mat(double)>;

constexpr int kMaxDepth = 28;

Mat simpson(const Mat& fa, const Mat& fm, const Mat& fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

Mat adaptive_step(const Integrand& f, double a, double b, const Mat& fa, const Mat& fm,
                  const Mat& fb, const Mat& whole, double tol, int depth) {
  if (depth > kMaxDepth)
    throw OracleFailureError("quad_oracle: adaptive Simpson exceeded max subdivisions");
  const double m = 0.5 * (a + b);
  const Mat fl = f(0.5 * (a + m));
  const Mat fr = f(0.5 * (m + b));
  const Mat left = simpson(fa, fl, fm, m - a);
  const Mat right = simpson(fm, fr, fb, b - m);
  const Mat delta = left + right - whole;
  if (delta.norm() <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, m, fa, fl, fm, left, 0.5 * tol, depth + 1) +
         adaptive_step(f, m, b, fm, fr, fb, right, 0.5 * tol, depth + 1);
}

Mat adaptive_simpson(const Integrand& f, double a, double b, double tol) {
  const Mat fa = f(a);
  const Mat fm = f(0.5 * (a + b));
  const Mat fb = f(b);
  const Mat whole = simpson(fa, fm, fb, b - a);
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

Mat quad_oracle_lieb_t(const Mat& a, const Mat& b, double tol) {
  const Eigen::Index n = a.rows();
  const Mat id = Mat::Identity(n, n);
  const Integrand f = [&](double t) -> Mat {
    const Mat c = (1.0 - t) * a + t * id;
    const Mat cinv = c.partialPivLu().solve(id);
    return cinv * b * cinv;
  };
  return adaptive_simpson(f, 0.0, 1.0, tol);
}

Mat quad_oracle_k_w(const Mat& z, const Mat& w, double tol) {
  const Integrand f = [&](double s) -> Mat {
    const Mat left = (s * z).exp();
    const Mat right = ((1.0 - s) * z).exp();
    return left * w * right;
  };
  return adaptive_simpson(f, 0.0, 1.0, tol);
}

Mat series_k_w(const Mat& z, const Mat& w, int order) {
  const Eigen::Index d = z.rows();
  // Powers of Z up to `order`.
  std::vector<Mat> zp(order + 1);
  zp[0] = Mat::Identity(d, d);
  for (int k = 1; k <= order; ++k) zp[k] = zp[k - 1] * z;

  Mat sum = Mat::Zero(d, d);
  double inv_fact = 1.0;  // 1/(n+1)! running value
  for (int n = 0; n <= order; ++n) {
    inv_fact /= static_cast<double>(n + 1);
    Mat inner = Mat::Zero(d, d);
    for (int l = 0; l <= n; ++l) inner += zp[n - l] * w * zp[l];
    sum += inv_fact * inner;
  }
  return sum;
}

}  // namespace wqe
