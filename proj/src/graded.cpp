#include "defeng/graded.hpp"

#include <algorithm>
#include <set>

namespace defeng {

const std::vector<std::string> GradedSpace::kEmpty;

GradedSpace::GradedSpace(std::map<int, std::vector<std::string>> labels)
    : labels_(std::move(labels)) {
  for (auto it = labels_.begin(); it != labels_.end();) {
    if (it->second.empty()) {
      it = labels_.erase(it);
      continue;
    }
    std::set<std::string> seen;
    for (const auto& l : it->second)
      if (!seen.insert(l).second)
        throw InputError("duplicate basis label '" + l + "' in degree " +
                         std::to_string(it->first));
    ++it;
  }
}

size_t GradedSpace::dim(int degree) const {
  auto it = labels_.find(degree);
  return it == labels_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& GradedSpace::labels(int degree) const {
  auto it = labels_.find(degree);
  return it == labels_.end() ? kEmpty : it->second;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> ds;
  for (const auto& [deg, _] : labels_) ds.push_back(deg);
  return ds;
}

size_t GradedSpace::total_dim() const {
  size_t total = 0;
  for (const auto& [_, ls] : labels_) total += ls.size();
  return total;
}

size_t GradedSpace::index_of(int degree, const std::string& label) const {
  const auto& ls = labels(degree);
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end())
    throw InputError("unknown basis label '" + label + "' in degree " +
                     std::to_string(degree));
  return static_cast<size_t>(it - ls.begin());
}

LinearMap::LinearMap(GradedSpace source, GradedSpace target, int shift,
                     std::map<int, Mat> blocks)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift),
      blocks_(std::move(blocks)) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    const int n = it->first;
    const Mat& b = it->second;
    if (b.rows() != target_.dim(n + shift_) || b.cols() != source_.dim(n))
      throw InputError("linear map block at degree " + std::to_string(n) +
                       " has shape " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()) + ", expected " +
                       std::to_string(target_.dim(n + shift_)) + "x" +
                       std::to_string(source_.dim(n)));
    if (b.is_zero() || b.empty_shape())
      it = blocks_.erase(it);
    else
      ++it;
  }
}

LinearMap LinearMap::zero(const GradedSpace& source, const GradedSpace& target,
                          int shift) {
  return LinearMap(source, target, shift, {});
}

LinearMap LinearMap::identity(const GradedSpace& space) {
  std::map<int, Mat> blocks;
  for (int d : space.degrees()) blocks.emplace(d, Mat::identity(space.dim(d)));
  return LinearMap(space, space, 0, std::move(blocks));
}

Mat LinearMap::block(int degree) const {
  auto it = blocks_.find(degree);
  if (it != blocks_.end()) return it->second;
  return Mat(target_.dim(degree + shift_), source_.dim(degree));
}

Vec LinearMap::apply(int degree, const Vec& x) const {
  return block(degree).apply(x);
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (!(inner.target_ == source_))
    throw InputError("linear map composition: inner target != outer source");
  std::map<int, Mat> blocks;
  for (int n : inner.source_.degrees()) {
    Mat b = block(n + inner.shift_) * inner.block(n);
    if (!b.is_zero()) blocks.emplace(n, std::move(b));
  }
  return LinearMap(inner.source_, target_, shift_ + inner.shift_, std::move(blocks));
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_) || shift_ != other.shift_)
    throw InputError("linear map sum: incompatible maps");
  std::map<int, Mat> blocks;
  for (int n : source_.degrees()) {
    Mat b = block(n) + other.block(n);
    if (!b.is_zero()) blocks.emplace(n, std::move(b));
  }
  return LinearMap(source_, target_, shift_, std::move(blocks));
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  return *this + other.scaled(Rat(-1));
}

LinearMap LinearMap::scaled(const Rat& c) const {
  std::map<int, Mat> blocks;
  for (const auto& [n, b] : blocks_) {
    Mat s = b.scaled(c);
    if (!s.is_zero()) blocks.emplace(n, std::move(s));
  }
  return LinearMap(source_, target_, shift_, std::move(blocks));
}

bool LinearMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

CochainComplex::CochainComplex(GradedSpace space, LinearMap differential)
    : space_(std::move(space)), d_(std::move(differential)) {
  if (!(d_.source() == space_) || !(d_.target() == space_))
    throw InputError("differential must be an endomap of the complex's space");
  if (d_.shift() != 1) throw InputError("differential must have degree shift +1");
  for (int n : space_.degrees()) {
    Mat dd = d_.block(n + 1) * d_.block(n);
    if (!dd.is_zero())
      throw InputError("d∘d != 0 starting at degree " + std::to_string(n));
  }
}

CohomologyPresentation cohomology(const CochainComplex& complex, int degree) {
  CohomologyPresentation pres;
  pres.degree = degree;
  const size_t dim_n = complex.space().dim(degree);
  pres.projection = Mat(0, dim_n);
  if (dim_n == 0) return pres;

  const Mat d_out = complex.d_block(degree);
  const Mat d_in = complex.d_block(degree - 1);

  const std::vector<Vec> cycles = kernel_basis(d_out);

  // independent columns of d_in span the boundaries
  std::vector<Vec> boundary_basis;
  for (size_t c : independent_columns(d_in)) boundary_basis.push_back(d_in.col(c));

  // extend the boundary basis by cycles, echelon-greedy in cycle order
  std::vector<Vec> accumulated = boundary_basis;
  std::vector<Vec> reps;
  Mat acc_mat = Mat::from_cols(accumulated, dim_n);
  size_t acc_rank = rank(acc_mat);
  for (const Vec& z : cycles) {
    Mat candidate = acc_mat.hcat(Mat::from_cols({z}, dim_n));
    const size_t r = rank(candidate);
    if (r > acc_rank) {
      reps.push_back(z);
      acc_mat = std::move(candidate);
      acc_rank = r;
    }
  }
  pres.dimension = reps.size();
  pres.representatives = reps;

  // projection: P·U = [I_h | 0] for U = [reps | boundaries]
  if (!reps.empty()) {
    std::vector<Vec> u_cols = reps;
    for (const auto& b : boundary_basis) u_cols.push_back(b);
    const Mat u = Mat::from_cols(u_cols, dim_n);
    Mat rhs(u.cols(), reps.size());
    for (size_t i = 0; i < reps.size(); ++i) rhs.at(i, i) = 1;
    const auto x = solve_matrix(u.transpose(), rhs);
    if (!x) throw std::logic_error("cohomology projection solve failed");
    pres.projection = x->transpose();
  }
  return pres;
}

QuasiIsoReport is_quasi_iso(const CochainComplex& source, const CochainComplex& target,
                            const LinearMap& f) {
  if (!(f.source() == source.space()) || !(f.target() == target.space()) ||
      f.shift() != 0)
    throw InputError("quasi-isomorphism check requires a degree-0 map between the complexes");
  for (int n : source.space().degrees()) {
    const Mat lhs = target.d_block(n) * f.block(n);
    const Mat rhs = f.block(n + 1) * source.d_block(n);
    if (!(lhs == rhs))
      throw InputError("not a chain map at degree " + std::to_string(n));
  }

  QuasiIsoReport report;
  std::set<int> degrees;
  for (int n : source.space().degrees()) degrees.insert(n);
  for (int n : target.space().degrees()) degrees.insert(n);
  for (int n : degrees) {
    const CohomologyPresentation hs = cohomology(source, n);
    const CohomologyPresentation ht = cohomology(target, n);
    Mat induced(ht.dimension, hs.dimension);
    for (size_t j = 0; j < hs.dimension; ++j) {
      const Vec image = f.apply(n, hs.representatives[j]);
      const Vec coords = ht.project(image);
      for (size_t i = 0; i < ht.dimension; ++i) induced.at(i, j) = coords[i];
    }
    const size_t r = rank(induced);
    const bool bij = (hs.dimension == ht.dimension) && (r == hs.dimension);
    report.entries.push_back({n, hs.dimension, ht.dimension, r, bij});
    if (!bij) report.is_quasi_iso = false;
  }
  return report;
}

}  // namespace defeng
