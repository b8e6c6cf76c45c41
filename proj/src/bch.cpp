#include "defeng/bch.hpp"

namespace defeng {

Mat mat_exp_nilpotent(const Mat& n) {
  if (n.rows() != n.cols()) throw InputError("matrix exponential of non-square matrix");
  Mat result = Mat::identity(n.rows());
  Mat power = Mat::identity(n.rows());
  for (int k = 1; !power.is_zero(); ++k) {
    if (k > 64) throw UnsupportedError("matrix exponential: input is not nilpotent");
    power = power * n;
    result = result + power.scaled(Rat(1) / factorial(k));
  }
  return result;
}

Mat mat_log_unipotent(const Mat& u) {
  if (u.rows() != u.cols()) throw InputError("matrix logarithm of non-square matrix");
  const Mat n = u - Mat::identity(u.rows());
  Mat result(u.rows(), u.rows());
  Mat power = Mat::identity(u.rows());
  for (int k = 1; ; ++k) {
    if (k > 64) throw UnsupportedError("matrix logarithm: input is not unipotent");
    power = power * n;
    if (power.is_zero()) break;
    const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    result = result + power.scaled(sign / Rat(k));
  }
  return result;
}

Mat bch_matrix(const Mat& x, const Mat& y, int nil_index) {
  return bch<Mat>(
      x, y, nil_index, [](const Mat& a, const Mat& b) { return a + b; },
      [](const Rat& c, const Mat& a) { return a.scaled(c); },
      [](const Mat& a) { return a.is_zero(); },
      [](const Mat& a, const Mat& b) { return a * b - b * a; });
}

}  // namespace defeng
