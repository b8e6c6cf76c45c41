#include "defeng/tensor.hpp"

#include "defeng/bch.hpp"

namespace defeng {

namespace {

void check_same_context(const TensorElem& a, const TensorElem& b) {
  if (a.dgla != b.dgla || a.artin != b.artin)
    throw InputError("tensor elements over different algebras");
}

}  // namespace

TensorElem tensor_zero(const DglaPtr& dgla, const ArtinPtr& artin, int degree) {
  return {dgla, artin, degree, Mat(dgla->space().dim(degree), artin->dim())};
}

TensorElem tensor_add(const TensorElem& a, const TensorElem& b) {
  check_same_context(a, b);
  if (a.degree != b.degree) throw InputError("tensor element degree mismatch in sum");
  return {a.dgla, a.artin, a.degree, a.coords + b.coords};
}

TensorElem tensor_sub(const TensorElem& a, const TensorElem& b) {
  check_same_context(a, b);
  if (a.degree != b.degree) throw InputError("tensor element degree mismatch");
  return {a.dgla, a.artin, a.degree, a.coords - b.coords};
}

TensorElem tensor_scale(const Rat& c, const TensorElem& a) {
  return {a.dgla, a.artin, a.degree, a.coords.scaled(c)};
}

TensorElem tensor_d(const TensorElem& x) {
  return {x.dgla, x.artin, x.degree + 1,
          x.dgla->complex().d_block(x.degree) * x.coords};
}

TensorElem tensor_bracket(const TensorElem& x, const TensorElem& y) {
  check_same_context(x, y);
  const ArtinAlgebra& art = *x.artin;
  TensorElem out = tensor_zero(x.dgla, x.artin, x.degree + y.degree);
  const size_t s = art.dim();
  for (size_t i = 0; i < x.coords.rows(); ++i)
    for (size_t a = 0; a < s; ++a) {
      if (x.coords.at(i, a) == 0) continue;
      for (size_t j = 0; j < y.coords.rows(); ++j)
        for (size_t b = 0; b < s; ++b) {
          if (y.coords.at(j, b) == 0) continue;
          const Rat scalar = x.coords.at(i, a) * y.coords.at(j, b);
          const Vec lie = x.dgla->bracket_basis(x.degree, i, y.degree, j);
          if (vec_is_zero(lie)) continue;
          const Vec& prod = art.mult(a, b);
          for (size_t k = 0; k < lie.size(); ++k) {
            if (lie[k] == 0) continue;
            for (size_t c = 0; c < s; ++c)
              if (prod[c] != 0) out.coords.at(k, c) += scalar * lie[k] * prod[c];
          }
        }
    }
  return out;
}

TensorElem tensor_bch(const TensorElem& x, const TensorElem& y) {
  check_same_context(x, y);
  if (x.degree != 0 || y.degree != 0)
    throw InputError("bch requires degree-0 elements");
  return bch<TensorElem>(
      x, y, x.artin->nil_index(), tensor_add,
      [](const Rat& c, const TensorElem& t) { return tensor_scale(c, t); },
      [](const TensorElem& t) { return t.is_zero(); },
      [](const TensorElem& u, const TensorElem& v) { return tensor_bracket(u, v); });
}

TensorElem gauge_act(const TensorElem& a, const TensorElem& l) {
  check_same_context(a, l);
  if (a.degree != 0) throw InputError("gauge element must have degree 0");
  if (l.degree != 1) throw InputError("gauge action target must have degree 1");
  if (a.artin->nil_index() > max_nil_index())
    throw UnsupportedError("gauge action exceeds ENGINE_MAX_NIL");
  const TensorElem seed = tensor_sub(tensor_bracket(a, l), tensor_d(a));
  return gauge_series<TensorElem>(
      l, seed, tensor_add,
      [](const Rat& c, const TensorElem& t) { return tensor_scale(c, t); },
      [](const TensorElem& t) { return t.is_zero(); },
      [&a](const TensorElem& t) { return tensor_bracket(a, t); });
}

TensorElem weight_component(const TensorElem& x, int k) {
  const ArtinAlgebra& art = *x.artin;
  // coords in adapted basis: ĉ = c · (T^{-1})ᵀ ; zero all weights != k; back
  Mat adapted_coords = x.coords * art.adapted_inv().transpose();
  for (size_t j = 0; j < art.dim(); ++j)
    if (art.weights()[j] != k)
      for (size_t i = 0; i < adapted_coords.rows(); ++i) adapted_coords.at(i, j) = 0;
  return {x.dgla, x.artin, x.degree, adapted_coords * art.adapted().transpose()};
}

int lowest_weight(const TensorElem& x) {
  const ArtinAlgebra& art = *x.artin;
  const Mat adapted_coords = x.coords * art.adapted_inv().transpose();
  int lowest = art.nil_index();
  for (size_t j = 0; j < art.dim(); ++j)
    for (size_t i = 0; i < adapted_coords.rows(); ++i)
      if (adapted_coords.at(i, j) != 0) lowest = std::min(lowest, art.weights()[j]);
  return lowest;
}

Vec tensor_flatten(const TensorElem& x) {
  Vec flat;
  flat.reserve(x.coords.rows() * x.coords.cols());
  for (size_t i = 0; i < x.coords.rows(); ++i)
    for (size_t j = 0; j < x.coords.cols(); ++j) flat.push_back(x.coords.at(i, j));
  return flat;
}

TensorElem tensor_unflatten(const DglaPtr& dgla, const ArtinPtr& artin, int degree,
                            const Vec& flat) {
  TensorElem out = tensor_zero(dgla, artin, degree);
  if (flat.size() != out.coords.rows() * out.coords.cols())
    throw InputError("tensor unflatten size mismatch");
  size_t idx = 0;
  for (size_t i = 0; i < out.coords.rows(); ++i)
    for (size_t j = 0; j < out.coords.cols(); ++j) out.coords.at(i, j) = flat[idx++];
  return out;
}

}  // namespace defeng
