#pragma once

#include <optional>
#include <random>

#include "defeng/tensor.hpp"

namespace defeng {

// dx + ½[x,x] for a degree-1 element; zero iff x is Maurer-Cartan.
TensorElem mc_residual(const TensorElem& x);

// H¹ presentation plus the brute-force dual-numbers count it must match.
struct TangentSpace {
  CohomologyPresentation h1;
  size_t oracle_dimension;  // dim {x in L¹ : dx=0} − rank(d⁰) over k[ε]
};

TangentSpace tangent_space(const DglaPtr& dgla);

// Class of −½[z,z] in H² for a cycle representative z of the class ξ.
Vec primary_obstruction(const DglaPtr& dgla, const CohomologyPresentation& h1,
                        const CohomologyPresentation& h2, const Vec& xi_class);

struct LiftingState {
  Vec tangent_class;           // coordinates in H¹
  int order = 2;               // requested k
  bool success = false;
  int failed_order = 0;        // stage at which the lift failed (if !success)
  std::vector<Vec> solution;   // x_1..x_{k-1} in L¹ coordinates (when success)
  std::optional<Vec> obstruction;  // class in H² at the failing order
};

// Order-by-order lift of ξ·t to an MC element over 𝕜[t]/(t^k); stage
// equations d x_i = −½ Σ_{a+b=i}[x_a,x_b], minimal-support echelon solutions.
LiftingState lift_order(const DglaPtr& dgla, const CohomologyPresentation& h1,
                        const Vec& xi_class, int order);

struct QuadraticitySample {
  Vec xi_class;
  bool lifts_order3 = false;
  bool lifts_orderK = false;
  bool violation = false;  // lifts to 3 but not to K
};

struct QuadraticityReport {
  int order_k = 8;
  std::vector<QuadraticitySample> samples;
  bool violation_found = false;
  bool all_obstructions_primary = true;  // no sample passed order 3 and failed later
  std::string note;
};

// Samples: an H¹ basis plus seeded random rational combinations. Flags any
// class lifting to order 3 but not to order K (a quadraticity violation,
// certifying non-formality). Curvilinear liftability only.
QuadraticityReport quadraticity_probe(const DglaPtr& dgla, int order_k,
                                      unsigned seed, size_t n_random = 8);

struct HomotopyAbelianReport {
  bool bracket_on_h_zero = true;
  std::string bracket_witness;  // first nonzero induced bracket, if any
  bool all_samples_lift = true;
  std::optional<Vec> non_lifting_class;
  bool passed = true;  // necessary conditions only; passing certifies nothing
  std::string note;
};

HomotopyAbelianReport homotopy_abelian_probe(const DglaPtr& dgla, unsigned seed,
                                             size_t n_random = 6);

struct GaugeEquivalence {
  bool equivalent = false;
  int failed_weight = 0;          // stage at which the solve failed
  std::optional<TensorElem> witness;  // gauge element a with e^a * x = y
};

// Equivalence tester for MC elements over a general Artinian base: stagewise
// linear solves along the m_A-adic filtration, exact final verification.
GaugeEquivalence mc_gauge_equivalent(const TensorElem& x, const TensorElem& y);

// Seeded random rational with small numerator/denominator.
Rat random_rat(std::mt19937_64& rng, int num_range = 4, int den_range = 3);

}  // namespace defeng
