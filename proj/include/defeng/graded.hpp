#pragma once

#include <map>
#include <string>
#include <vector>

#include "defeng/matrix.hpp"

namespace defeng {

// Finitely supported graded ℚ-vector space with named basis vectors.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::map<int, std::vector<std::string>> labels);

  size_t dim(int degree) const;
  const std::vector<std::string>& labels(int degree) const;
  const std::map<int, std::vector<std::string>>& components() const { return labels_; }
  std::vector<int> degrees() const;
  size_t total_dim() const;

  // Index of a label within its degree; input error if absent.
  size_t index_of(int degree, const std::string& label) const;
  bool operator==(const GradedSpace& other) const { return labels_ == other.labels_; }

 private:
  std::map<int, std::vector<std::string>> labels_;
  static const std::vector<std::string> kEmpty;
};

// Degree-homogeneous linear map between graded spaces, stored blockwise.
// Missing block = zero. Block at n maps source degree n to target degree
// n + shift.
class LinearMap {
 public:
  LinearMap() : shift_(0) {}
  LinearMap(GradedSpace source, GradedSpace target, int shift,
            std::map<int, Mat> blocks);

  static LinearMap zero(const GradedSpace& source, const GradedSpace& target, int shift);
  static LinearMap identity(const GradedSpace& space);

  const GradedSpace& source() const { return source_; }
  const GradedSpace& target() const { return target_; }
  int shift() const { return shift_; }

  // Always well-shaped (zero when absent from storage).
  Mat block(int degree) const;
  const std::map<int, Mat>& stored_blocks() const { return blocks_; }

  Vec apply(int degree, const Vec& x) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  LinearMap scaled(const Rat& c) const;
  bool is_zero() const;

 private:
  GradedSpace source_, target_;
  int shift_;
  std::map<int, Mat> blocks_;
};

// Graded space with a square-zero degree +1 differential (checked).
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(GradedSpace space, LinearMap differential);

  const GradedSpace& space() const { return space_; }
  const LinearMap& differential() const { return d_; }
  Mat d_block(int degree) const { return d_.block(degree); }

 private:
  GradedSpace space_;
  LinearMap d_;
};

// H^n presented by cycle representatives and a projection matrix P with
// P·rep_i = e_i and P·(im d^{n-1}) = 0; P applied to any cycle gives its
// class coordinates.
struct CohomologyPresentation {
  int degree = 0;
  size_t dimension = 0;
  std::vector<Vec> representatives;  // in C^n coordinates
  Mat projection;                    // dim H × dim C^n

  Vec project(const Vec& cycle) const { return projection.apply(cycle); }
};

CohomologyPresentation cohomology(const CochainComplex& complex, int degree);

struct QuasiIsoReport {
  bool is_quasi_iso = true;
  struct DegreeEntry {
    int degree;
    size_t source_dim, target_dim;
    size_t induced_rank;
    bool bijective;
  };
  std::vector<DegreeEntry> entries;
};

// f must be a chain map of shift 0 between the two complexes; a non-chain-map
// is an input error naming the offending degree.
QuasiIsoReport is_quasi_iso(const CochainComplex& source, const CochainComplex& target,
                            const LinearMap& f);

}  // namespace defeng
