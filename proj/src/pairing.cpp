#include "defeng/pairing.hpp"

#include <set>
#include <sstream>

namespace defeng {

namespace {

Rat pair_basis(const CyclicPairing& pairing, int p, size_t i, size_t j) {
  auto it = pairing.matrices.find(p);
  if (it == pairing.matrices.end()) return Rat(0);
  return it->second.at(i, j);
}

Rat pair_elems(const CyclicPairing& pairing, const GElem& x, const GElem& y) {
  if (x.degree + y.degree != 2) return Rat(0);
  Rat total(0);
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (size_t j = 0; j < y.coords.size(); ++j)
      if (y.coords[j] != 0)
        total += x.coords[i] * y.coords[j] * pair_basis(pairing, x.degree, i, j);
  }
  return total;
}

}  // namespace

PairingReport check_cyclic_pairing(const CyclicPairing& pairing) {
  const Dgla& L = *pairing.dgla;
  const GradedSpace& s = L.space();
  for (const auto& [p, m] : pairing.matrices) {
    if (m.rows() != s.dim(p) || m.cols() != s.dim(2 - p))
      throw InputError("pairing matrix at degree " + std::to_string(p) +
                       " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " +
                       std::to_string(s.dim(p)) + "x" + std::to_string(s.dim(2 - p)) +
                       " (pairing must have degree 2)");
  }

  PairingReport report;
  const std::vector<int> degrees = s.degrees();

  // symmetry: (x,y) = (y,x) on basis pairs
  for (int p : degrees) {
    const int q = 2 - p;
    if (s.dim(q) == 0) continue;
    for (size_t i = 0; i < s.dim(p); ++i)
      for (size_t j = 0; j < s.dim(q); ++j)
        if (pair_basis(pairing, p, i, j) != pair_basis(pairing, q, j, i)) {
          std::ostringstream os;
          os << "(" << s.labels(p)[i] << "[" << p << "], " << s.labels(q)[j] << "["
             << q << "])";
          report.validation.violations.push_back({"symmetry", os.str()});
        }
  }

  // d-compatibility: (dx, y) = (-1)^{|x|+1} (x, dy)
  for (int p : degrees)
    for (int q : degrees) {
      if (p + 1 + q != 2) continue;
      for (size_t i = 0; i < s.dim(p); ++i)
        for (size_t j = 0; j < s.dim(q); ++j) {
          const GElem dx = L.d(L.basis_elem(p, i));
          const GElem dy = L.d(L.basis_elem(q, j));
          const Rat lhs = pair_elems(pairing, dx, L.basis_elem(q, j));
          const Rat rhs_sign = (p + 1) % 2 == 0 ? Rat(1) : Rat(-1);
          const Rat rhs = rhs_sign * pair_elems(pairing, L.basis_elem(p, i), dy);
          if (lhs != rhs) {
            std::ostringstream os;
            os << "(d " << s.labels(p)[i] << "[" << p << "], " << s.labels(q)[j]
               << "[" << q << "])";
            report.validation.violations.push_back({"d-compatibility", os.str()});
          }
        }
    }

  // invariance: ([x,y],z) = (x,[y,z])
  for (int p : degrees)
    for (int q : degrees)
      for (int r : degrees) {
        if (p + q + r != 2) continue;
        for (size_t i = 0; i < s.dim(p); ++i)
          for (size_t j = 0; j < s.dim(q); ++j)
            for (size_t k = 0; k < s.dim(r); ++k) {
              const GElem x = L.basis_elem(p, i), y = L.basis_elem(q, j),
                          z = L.basis_elem(r, k);
              const Rat lhs = pair_elems(pairing, L.bracket(x, y), z);
              const Rat rhs = pair_elems(pairing, x, L.bracket(y, z));
              if (lhs != rhs) {
                std::ostringstream os;
                os << "([" << s.labels(p)[i] << "," << s.labels(q)[j] << "], "
                   << s.labels(r)[k] << ")";
                report.validation.violations.push_back({"invariance", os.str()});
              }
            }
      }

  // non-degeneracy on cohomology
  std::map<int, CohomologyPresentation> h;
  std::set<int> pair_degrees;
  for (int p : degrees) {
    pair_degrees.insert(p);
    pair_degrees.insert(2 - p);
  }
  for (int p : pair_degrees) h.emplace(p, cohomology(L.complex(), p));
  for (int p : pair_degrees) {
    const auto& hp = h.at(p);
    const auto& hq = h.at(2 - p);
    if (hp.dimension == 0 && hq.dimension == 0) continue;
    Mat induced(hp.dimension, hq.dimension);
    for (size_t i = 0; i < hp.dimension; ++i)
      for (size_t j = 0; j < hq.dimension; ++j)
        induced.at(i, j) = pair_elems(pairing, GElem{p, hp.representatives[i]},
                                      GElem{2 - p, hq.representatives[j]});
    const size_t r = rank(induced);
    const size_t min_side = std::min(hp.dimension, hq.dimension);
    report.perfect_on_h[p] = (hp.dimension == hq.dimension) && (r == hp.dimension);
    if (r < min_side) {
      std::ostringstream os;
      os << "H^" << p << " x H^" << (2 - p) << " induced rank " << r << " < "
         << min_side;
      report.validation.violations.push_back({"non-degeneracy", os.str()});
    }
  }
  return report;
}

}  // namespace defeng
