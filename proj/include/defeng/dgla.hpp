#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "defeng/graded.hpp"

namespace defeng {

// One finding of a validation pass; empty list = valid.
struct Violation {
  std::string identity;  // "shape", "antisymmetry", "jacobi", "leibniz", ...
  std::string witness;   // human-readable witness (basis triple, degrees, ...)
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Sparse bracket entry on basis elements: [e_i^(p), e_j^(q)] = value in L^{p+q}.
struct BracketEntry {
  int p, q;
  size_t i, j;
  Vec value;
};

// Raw DGLA data before validation. Entries for (q,p,j,i) missing from the
// input are completed by graded antisymmetry.
struct DglaData {
  GradedSpace space;
  std::map<int, Mat> differential_blocks;
  std::vector<BracketEntry> brackets;
};

class Dgla;
using DglaPtr = std::shared_ptr<const Dgla>;

// Homogeneous element of a DGLA.
struct GElem {
  int degree = 0;
  Vec coords;

  bool is_zero() const { return vec_is_zero(coords); }
};

enum class CheckLevel {
  kFull,   // antisymmetry + Jacobi + Leibniz on all basis pairs/triples
  kBasic,  // antisymmetry + Leibniz (Jacobi skipped; for large derived DGLAs)
};

class Dgla {
 public:
  // Validates d²=0 plus the Lie identities at the requested level and throws
  // InputError with the first violation on failure.
  static DglaPtr build(DglaData data, CheckLevel level = CheckLevel::kFull);

  const CochainComplex& complex() const { return complex_; }
  const GradedSpace& space() const { return complex_.space(); }

  // Structure constants [e_i^(p), e_j^(q)] as a vector in L^{p+q}.
  Vec bracket_basis(int p, size_t i, int q, size_t j) const;

  GElem d(const GElem& x) const;
  GElem bracket(const GElem& x, const GElem& y) const;
  GElem zero(int degree) const;
  GElem basis_elem(int degree, size_t i) const;

  bool is_abelian() const;

 private:
  Dgla() = default;
  CochainComplex complex_;
  // brackets_[{p,q}][i*dim(q)+j] = coords in degree p+q
  std::map<std::pair<int, int>, std::vector<Vec>> brackets_;
  friend ValidationReport check_axioms(const DglaData& data, CheckLevel level);
};

// Full validation report (does not throw on identity failures; shape problems
// are still input errors because the tables cannot be interpreted).
ValidationReport check_axioms(const DglaData& data, CheckLevel level = CheckLevel::kFull);

// DGLA morphism: degree-0 chain map preserving brackets (both checked).
struct DglaMorphism {
  DglaPtr source;
  DglaPtr target;
  LinearMap map;
};

DglaMorphism make_dgla_morphism(DglaPtr source, DglaPtr target, LinearMap map);
ValidationReport check_dgla_morphism(const DglaPtr& source, const DglaPtr& target,
                                     const LinearMap& map);

// The induced graded Lie algebra on cohomology, returned as a DGLA with zero
// differential on basis "h{p}_{k}". Also returns the per-degree presentations
// used, so callers can project classes consistently.
struct CohomologyDgla {
  DglaPtr algebra;
  std::map<int, CohomologyPresentation> presentations;
};

CohomologyDgla cohomology_bracket(const DglaPtr& dgla);

}  // namespace defeng
