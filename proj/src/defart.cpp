#include "defeng/defart.hpp"

#include <sstream>

namespace defeng {

TensorElem mc_residual(const TensorElem& x) {
  if (x.degree != 1) throw InputError("mc_residual requires a degree-1 element");
  return tensor_add(tensor_d(x),
                    tensor_scale(Rat(1) / Rat(2), tensor_bracket(x, x)));
}

TangentSpace tangent_space(const DglaPtr& dgla) {
  TangentSpace out;
  out.h1 = cohomology(dgla->complex(), 1);
  // independent recount over k[ε]: MC(k[ε]) = ker d¹ (the bracket vanishes on
  // ε²), gauge orbits translate by im d⁰
  const Mat d1 = dgla->complex().d_block(1);
  const Mat d0 = dgla->complex().d_block(0);
  const size_t cycles = kernel_basis(d1).size();
  out.oracle_dimension = cycles - rank(d0);
  return out;
}

namespace {

// representative cycle of a class
Vec class_rep(const CohomologyPresentation& h, const Vec& cls) {
  if (cls.size() != h.dimension) throw InputError("class coordinate size mismatch");
  Vec rep(h.representatives.empty() ? 0 : h.representatives[0].size(), Rat(0));
  if (h.representatives.empty()) return rep;
  for (size_t i = 0; i < h.dimension; ++i)
    if (cls[i] != 0) rep = vec_add(rep, vec_scale(cls[i], h.representatives[i]));
  return rep;
}

}  // namespace

Vec primary_obstruction(const DglaPtr& dgla, const CohomologyPresentation& h1,
                        const CohomologyPresentation& h2, const Vec& xi_class) {
  const Vec z = class_rep(h1, xi_class);
  const GElem zz = dgla->bracket(GElem{1, z}, GElem{1, z});
  const Vec ob = vec_scale(Rat(-1) / Rat(2), zz.coords);
  // −½[z,z] is a cycle whenever z is (Leibniz); internal invariant
  if (!vec_is_zero(dgla->complex().d_block(2).apply(ob)))
    throw std::logic_error("primary obstruction is not a cycle");
  return h2.project(ob);
}

LiftingState lift_order(const DglaPtr& dgla, const CohomologyPresentation& h1,
                        const Vec& xi_class, int order) {
  if (order < 2 || order > kMaxBchWeight)
    throw UnsupportedError("lift order outside supported range [2," +
                           std::to_string(kMaxBchWeight) + "]");
  LiftingState state;
  state.tangent_class = xi_class;
  state.order = order;

  const CohomologyPresentation h2 = cohomology(dgla->complex(), 2);
  const Mat d1 = dgla->complex().d_block(1);

  std::vector<Vec> x;  // x[i] = coefficient of t^{i+1}
  x.push_back(class_rep(h1, xi_class));

  for (int stage = 2; stage < order; ++stage) {
    // c = ½ Σ_{a+b=stage, a,b>=1} [x_a, x_b]
    GElem c = dgla->zero(2);
    for (int a = 1; a < stage; ++a) {
      const int b = stage - a;
      const GElem term = dgla->bracket(GElem{1, x[static_cast<size_t>(a - 1)]},
                                       GElem{1, x[static_cast<size_t>(b - 1)]});
      c.coords = vec_add(c.coords, term.coords);
    }
    c.coords = vec_scale(Rat(1) / Rat(2), c.coords);
    if (!vec_is_zero(dgla->complex().d_block(2).apply(c.coords)))
      throw std::logic_error("lift stage right-hand side is not a cycle");
    // solve d x_stage = −c (free variables zero: minimal support in echelon order)
    const auto sol = solve(d1, vec_scale(Rat(-1), c.coords));
    if (!sol) {
      state.success = false;
      state.failed_order = stage;
      state.obstruction = h2.project(vec_scale(Rat(-1), c.coords));
      return state;
    }
    x.push_back(*sol);
  }
  state.success = true;
  state.solution = x;
  return state;
}

Rat random_rat(std::mt19937_64& rng, int num_range, int den_range) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rat(num(rng)) / Rat(den(rng));
}

namespace {

std::vector<Vec> probe_samples(size_t h1_dim, unsigned seed, size_t n_random) {
  std::vector<Vec> samples;
  samples.push_back(Vec(h1_dim, Rat(0)));  // the zero class
  for (size_t i = 0; i < h1_dim; ++i) {
    Vec e(h1_dim, Rat(0));
    e[i] = 1;
    samples.push_back(e);
  }
  std::mt19937_64 rng(seed);
  for (size_t r = 0; r < n_random; ++r) {
    Vec v(h1_dim, Rat(0));
    for (size_t i = 0; i < h1_dim; ++i) v[i] = random_rat(rng);
    samples.push_back(v);
  }
  return samples;
}

}  // namespace

QuadraticityReport quadraticity_probe(const DglaPtr& dgla, int order_k, unsigned seed,
                                      size_t n_random) {
  if (order_k > kMaxBchWeight)
    throw UnsupportedError("quadraticity probe order exceeds supported range");
  QuadraticityReport report;
  report.order_k = order_k;
  const CohomologyPresentation h1 = cohomology(dgla->complex(), 1);
  for (const Vec& cls : probe_samples(h1.dimension, seed, n_random)) {
    QuadraticitySample sample;
    sample.xi_class = cls;
    sample.lifts_order3 = lift_order(dgla, h1, cls, 3).success;
    sample.lifts_orderK = lift_order(dgla, h1, cls, order_k).success;
    sample.violation = sample.lifts_order3 && !sample.lifts_orderK;
    if (sample.violation) {
      report.violation_found = true;
      report.all_obstructions_primary = false;
    }
    report.samples.push_back(std::move(sample));
  }
  report.note = report.violation_found
                    ? "quadraticity violated: a class lifts to order 3 but not to order " +
                          std::to_string(order_k) + " (certifies non-formality)"
                    : "no violation found along curvilinear bases; this is a necessary "
                      "condition only and certifies nothing";
  return report;
}

HomotopyAbelianReport homotopy_abelian_probe(const DglaPtr& dgla, unsigned seed,
                                             size_t n_random) {
  HomotopyAbelianReport report;
  const CohomologyDgla h = cohomology_bracket(dgla);
  if (!h.algebra->is_abelian()) {
    report.bracket_on_h_zero = false;
    report.passed = false;
    // find a witness pair
    const GradedSpace& hs = h.algebra->space();
    for (int p : hs.degrees())
      for (int q : hs.degrees())
        for (size_t i = 0; i < hs.dim(p); ++i)
          for (size_t j = 0; j < hs.dim(q); ++j)
            if (!vec_is_zero(h.algebra->bracket_basis(p, i, q, j)) &&
                report.bracket_witness.empty()) {
              std::ostringstream os;
              os << "([" << hs.labels(p)[i] << "], [" << hs.labels(q)[j]
                 << "]) has nonzero induced bracket";
              report.bracket_witness = os.str();
            }
  }
  const CohomologyPresentation h1 = cohomology(dgla->complex(), 1);
  for (const Vec& cls : probe_samples(h1.dimension, seed, n_random)) {
    if (!lift_order(dgla, h1, cls, kMaxBchWeight).success) {
      report.all_samples_lift = false;
      report.non_lifting_class = cls;
      report.passed = false;
      break;
    }
  }
  report.note = report.passed
                    ? "necessary conditions hold; passing certifies nothing"
                    : "failed a necessary condition: not homotopy abelian";
  return report;
}

GaugeEquivalence mc_gauge_equivalent(const TensorElem& x, const TensorElem& y) {
  if (x.dgla != y.dgla || x.artin != y.artin)
    throw InputError("gauge equivalence requires elements over the same algebras");
  if (x.degree != 1 || y.degree != 1)
    throw InputError("gauge equivalence applies to degree-1 elements");

  GaugeEquivalence out;
  const DglaPtr dgla = x.dgla;
  const ArtinPtr artin = x.artin;
  const Mat d0 = dgla->complex().d_block(0);

  TensorElem a = tensor_zero(dgla, artin, 0);
  TensorElem current = x;
  for (int stage = 1; stage < artin->nil_index(); ++stage) {
    const TensorElem residual = tensor_sub(current, y);
    if (residual.is_zero()) break;
    if (lowest_weight(residual) > stage) continue;
    // stage system: d(Δa)^(stage) = (current − y)^(stage), columnwise in the
    // adapted basis (brackets with Δa only touch weights > stage)
    const TensorElem target = weight_component(residual, stage);
    Mat delta_coords(dgla->space().dim(0), artin->dim());
    bool solvable = true;
    // adapted columns of weight == stage
    const Mat target_adapted = target.coords * artin->adapted_inv().transpose();
    Mat delta_adapted(dgla->space().dim(0), artin->dim());
    for (size_t j = 0; j < artin->dim() && solvable; ++j) {
      if (artin->weights()[j] != stage) continue;
      const Vec rhs = target_adapted.col(j);
      const auto sol = solve(d0, rhs);
      if (!sol) {
        solvable = false;
        break;
      }
      for (size_t i = 0; i < sol->size(); ++i) delta_adapted.at(i, j) = (*sol)[i];
    }
    if (!solvable) {
      out.equivalent = false;
      out.failed_weight = stage;
      return out;
    }
    TensorElem delta{dgla, artin, 0, delta_adapted * artin->adapted().transpose()};
    current = gauge_act(delta, current);
    a = tensor_bch(delta, a);
  }
  if (tensor_sub(current, y).is_zero()) {
    // exact verification of the assembled witness
    if (!tensor_sub(gauge_act(a, x), y).is_zero())
      throw std::logic_error("gauge equivalence witness failed verification");
    out.equivalent = true;
    out.witness = a;
  } else {
    out.equivalent = false;
    out.failed_weight = artin->nil_index();
  }
  return out;
}

}  // namespace defeng
