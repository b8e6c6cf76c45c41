#include "defeng/matrix.hpp"

#include <algorithm>

namespace defeng {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch in addition");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch in subtraction");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Mat m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged row in matrix literal");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, size_t rows) {
  Mat m(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("ragged column in matrix literal");
    for (size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(size_t r) const {
  Vec v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Mat::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw InputError("matrix shape mismatch in product");
  Mat p(rows_, other.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (a == 0) continue;
      for (size_t c = 0; c < other.cols_; ++c) {
        const Rat& b = other.at(k, c);
        if (b != 0) p.at(r, c) += a * b;
      }
    }
  return p;
}

Mat Mat::operator+(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix shape mismatch in sum");
  Mat s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + other.data_[i];
  return s;
}

Mat Mat::operator-(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix shape mismatch in difference");
  Mat s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - other.data_[i];
  return s;
}

Mat Mat::scaled(const Rat& c) const {
  Mat s(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = c * data_[i];
  return s;
}

Vec Mat::apply(const Vec& x) const {
  if (x.size() != cols_) throw InputError("matrix/vector shape mismatch");
  Vec y(rows_, Rat(0));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && x[c] != 0) y[r] += at(r, c) * x[c];
  return y;
}

Mat Mat::hcat(const Mat& other) const {
  if (rows_ != other.rows_) throw InputError("matrix row mismatch in concatenation");
  Mat h(rows_, cols_ + other.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) h.at(r, c) = at(r, c);
    for (size_t c = 0; c < other.cols_; ++c) h.at(r, cols_ + c) = other.at(r, c);
  }
  return h;
}

Rref rref(const Mat& m) {
  Rref out;
  out.reduced = m;
  Mat& a = out.reduced;
  size_t lead = 0;
  for (size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // pivot: smallest |num|·den among nonzero candidates, lowest row on ties
    size_t best = a.rows();
    BigInt best_measure = 0;
    for (size_t r = lead; r < a.rows(); ++r) {
      if (a.at(r, col) == 0) continue;
      BigInt measure = pivot_measure(a.at(r, col));
      if (best == a.rows() || measure < best_measure) {
        best = r;
        best_measure = measure;
      }
    }
    if (best == a.rows()) continue;
    if (best != lead)
      for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(lead, c), a.at(best, c));
    const Rat inv_pivot = Rat(1) / a.at(lead, col);
    for (size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv_pivot;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col) == 0) continue;
      const Rat factor = a.at(r, col);
      for (size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(lead, c);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  return out;
}

size_t rank(const Mat& m) { return rref(m).rank(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols(), Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[rr.pivot_cols[r]] = -rr.reduced.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side shape mismatch");
  Mat aug = m.hcat(Mat::from_cols({b}, m.rows()));
  const Rref rr = rref(aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), Rat(0));
  for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
    x[rr.pivot_cols[r]] = rr.reduced.at(r, m.cols());
  return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw InputError("solve_matrix: shape mismatch");
  Mat aug = m.hcat(b);
  const Rref rr = rref(aug);
  for (size_t p : rr.pivot_cols)
    if (p >= m.cols()) return std::nullopt;
  Mat x(m.cols(), b.cols());
  for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
    for (size_t c = 0; c < b.cols(); ++c)
      x.at(rr.pivot_cols[r], c) = rr.reduced.at(r, m.cols() + c);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  Mat aug = m.hcat(Mat::identity(m.rows()));
  const Rref rr = rref(aug);
  if (rr.rank() != m.rows()) return std::nullopt;
  for (size_t r = 0; r < m.rows(); ++r)
    if (rr.pivot_cols[r] != r) return std::nullopt;
  Mat inv(m.rows(), m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.rows(); ++c) inv.at(r, c) = rr.reduced.at(r, m.cols() + c);
  return inv;
}

std::vector<size_t> independent_columns(const Mat& m) {
  return rref(m).pivot_cols;
}

}  // namespace defeng
