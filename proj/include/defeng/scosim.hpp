#pragma once

#include "defeng/dgla.hpp"

namespace defeng {

// Finite tower g_0, ..., g_N of DGLAs with face maps δ_k : g_{n-1} → g_n for
// 1 <= n <= N, 0 <= k <= n, satisfying the semicosimplicial identities
// δ_h δ_k = δ_{k+1} δ_h (h <= k).
class Tower {
 public:
  // Validates face-map morphism property and the identities; throws on the
  // first violation.
  static Tower build(std::vector<DglaPtr> levels,
                     std::vector<std::vector<LinearMap>> faces);

  size_t top_level() const { return levels_.size() - 1; }
  const DglaPtr& level(size_t n) const { return levels_.at(n); }
  // δ_k into level n
  const LinearMap& face(size_t n, size_t k) const { return faces_.at(n - 1).at(k); }

  // Structure map along a strictly monotone injection [p] → [n] given by the
  // ordered image tuple; composed from faces via the unique descending
  // factorization.
  LinearMap structure_map(size_t p, size_t n, const std::vector<size_t>& image) const;

 private:
  std::vector<DglaPtr> levels_;
  std::vector<std::vector<LinearMap>> faces_;
};

// Report-style validation used by the CLI (does not throw on ident
// violations).
ValidationReport check_semicosimplicial(const std::vector<DglaPtr>& levels,
                                        const std::vector<std::vector<LinearMap>>& faces);

// Total complex of the tower's double complex: bidegree (n, p) contributes to
// total degree n + p; differential = internal d + (−1)^p Σ (−1)^k δ_k.
struct CechComplex {
  CochainComplex complex;
  // flat index bookkeeping: per total degree m, the list of (level, internal
  // degree, basis index) in flat order
  std::map<int, std::vector<std::tuple<size_t, int, size_t>>> layout;

  // embed a level-n internal-degree-p coordinate vector into total degree n+p
  Vec embed(size_t level, int internal_degree, const Vec& coords) const;
  // extract the (level, internal degree) component of a total-degree vector
  Vec component(size_t level, int internal_degree, const Vec& total) const;
};

CechComplex cech_complex(const Tower& tower);

}  // namespace defeng
