#pragma once

#include <optional>
#include <vector>

#include "defeng/rational.hpp"

namespace defeng {

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense matrix over ℚ, row-major. Desk-scale sizes; no sparsity.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static Mat identity(size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

  Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;

  bool is_zero() const;
  bool operator==(const Mat& other) const;

  Mat transpose() const;
  Mat operator*(const Mat& other) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat scaled(const Rat& c) const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  // Horizontal concatenation [this | other].
  Mat hcat(const Mat& other) const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> data_;
};

struct Rref {
  Mat reduced;
  std::vector<size_t> pivot_cols;
  size_t rank() const { return pivot_cols.size(); }
};

// Reduced row echelon form; pivot choice minimizes |num|·den within the column
// (ties: lowest row) to control coefficient growth.
Rref rref(const Mat& m);

size_t rank(const Mat& m);

// Basis of ker(m), one vector per free column in increasing column order
// (the echelon completion; deterministic).
std::vector<Vec> kernel_basis(const Mat& m);

// A solution of m·x = b with free variables set to zero, or nullopt when the
// system is inconsistent. Shape mismatch is an input error.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Solves m·X = B columnwise; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& b);

// Inverse of a square full-rank matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// Indices of a maximal independent subset of the columns, in increasing order.
std::vector<size_t> independent_columns(const Mat& m);

}  // namespace defeng
