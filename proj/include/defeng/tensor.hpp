#pragma once

#include "defeng/artin.hpp"
#include "defeng/dgla.hpp"

namespace defeng {

// Homogeneous element of L ⊗ m_A: rows indexed by the degree's basis of L,
// columns by the m_A basis.
struct TensorElem {
  DglaPtr dgla;
  ArtinPtr artin;
  int degree = 0;
  Mat coords;  // dim L^degree × dim m_A

  bool is_zero() const { return coords.is_zero(); }
};

TensorElem tensor_zero(const DglaPtr& dgla, const ArtinPtr& artin, int degree);
TensorElem tensor_add(const TensorElem& a, const TensorElem& b);
TensorElem tensor_sub(const TensorElem& a, const TensorElem& b);
TensorElem tensor_scale(const Rat& c, const TensorElem& a);

// d ⊗ id
TensorElem tensor_d(const TensorElem& x);

// [x ⊗ a, y ⊗ b] = [x,y] ⊗ ab
TensorElem tensor_bracket(const TensorElem& x, const TensorElem& y);

// BCH product of degree-0 elements (coefficients in m_A force nilpotency).
TensorElem tensor_bch(const TensorElem& x, const TensorElem& y);

// Gauge action e^a * l of a degree-0 element on a degree-1 element:
// l + Σ_{k≥0} ad_a^k/(k+1)! ([a,l] − da).
TensorElem gauge_act(const TensorElem& a, const TensorElem& l);

// Component of x of m-adic weight exactly k (adapted-basis splitting).
TensorElem weight_component(const TensorElem& x, int k);
// Lowest weight with a nonzero component; nil_index if x = 0.
int lowest_weight(const TensorElem& x);

// Flattened ℚ-coordinates (row-major) for assembling linear systems.
Vec tensor_flatten(const TensorElem& x);
TensorElem tensor_unflatten(const DglaPtr& dgla, const ArtinPtr& artin, int degree,
                            const Vec& flat);

}  // namespace defeng
