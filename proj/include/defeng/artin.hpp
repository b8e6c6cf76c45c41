#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "defeng/matrix.hpp"

namespace defeng {

// Local Artinian ℚ-algebra A = ℚ ⊕ m_A, presented by a basis of the maximal
// ideal with a nilpotent multiplication table. Only m_A is stored; the unit
// is implicit.
class ArtinAlgebra;
using ArtinPtr = std::shared_ptr<const ArtinAlgebra>;

class ArtinAlgebra {
 public:
  // Explicit table: mult[i][j] = coordinates of e_i·e_j over the m-basis.
  // Verifies commutativity, associativity and nilpotency; computes the true
  // nilpotency index. Non-nilpotent tables are input errors.
  static ArtinPtr build(std::string name, std::vector<std::string> m_basis,
                        std::vector<std::vector<Vec>> mult);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& m_basis() const { return m_basis_; }
  size_t dim() const { return m_basis_.size(); }
  int nil_index() const { return nil_index_; }

  // e_i · e_j in m-basis coordinates.
  const Vec& mult(size_t i, size_t j) const { return mult_[i][j]; }
  // product of two m_A elements given by coordinate vectors
  Vec mult_elems(const Vec& a, const Vec& b) const;

  size_t index_of(const std::string& label) const;

  // Adapted filtration data: adapted basis columns T (std coords), its
  // inverse, and the m-adic weight of each adapted basis vector.
  const Mat& adapted() const { return adapted_; }
  const Mat& adapted_inv() const { return adapted_inv_; }
  const std::vector<int>& weights() const { return weights_; }

 private:
  ArtinAlgebra() = default;
  std::string name_;
  std::vector<std::string> m_basis_;
  std::vector<std::vector<Vec>> mult_;
  int nil_index_ = 2;
  Mat adapted_, adapted_inv_;
  std::vector<int> weights_;
};

// Parses "k[t]/(t^n)" (2 <= n <= 8) and "k[x,y]/(x,y)^n" shapes.
ArtinPtr make_artin(const std::string& spec);

// 𝕜[t]/(t^k): the curvilinear test rings used by the lifting calculus.
ArtinPtr curvilinear_artin(int order);

// 𝕜[ε]: dual numbers.
ArtinPtr dual_numbers();

}  // namespace defeng
