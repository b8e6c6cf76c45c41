#pragma once

#include "defeng/dgla.hpp"

namespace defeng {

// Degree-2 pairing data: for each degree p, a matrix P_p of shape
// dim L^p × dim L^{2-p} with (x, y) = xᵀ·P_p·y for x ∈ L^p, y ∈ L^{2-p}.
struct CyclicPairing {
  DglaPtr dgla;
  std::map<int, Mat> matrices;
};

struct PairingReport {
  ValidationReport validation;
  // informational: per degree p, whether H^p × H^{2-p} is a perfect pairing
  std::map<int, bool> perfect_on_h;
};

// Checks: symmetry (x,y) = (y,x); d-compatibility (dx,y) = (-1)^{|x|+1}(x,dy);
// invariance ([x,y],z) = (x,[y,z]); non-degeneracy on cohomology = the induced
// H^p × H^{2-p} matrix has full (min-side) rank. Entries paired across degrees
// p + q != 2 are shape errors.
PairingReport check_cyclic_pairing(const CyclicPairing& pairing);

}  // namespace defeng
