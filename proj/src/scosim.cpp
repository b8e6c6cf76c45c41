#include "defeng/scosim.hpp"

#include <algorithm>

namespace defeng {

ValidationReport check_semicosimplicial(const std::vector<DglaPtr>& levels,
                                        const std::vector<std::vector<LinearMap>>& faces) {
  ValidationReport report;
  if (levels.size() < 3)
    throw InputError("tower needs levels g_0..g_N with N >= 2");
  if (faces.size() != levels.size() - 1)
    throw InputError("tower needs face maps for levels 1..N");
  for (size_t n = 1; n < levels.size(); ++n) {
    if (faces[n - 1].size() != n + 1)
      throw InputError("level " + std::to_string(n) + " needs " +
                       std::to_string(n + 1) + " face maps");
    for (size_t k = 0; k <= n; ++k) {
      const LinearMap& f = faces[n - 1][k];
      if (!(f.source() == levels[n - 1]->space()) || !(f.target() == levels[n]->space()) ||
          f.shift() != 0)
        throw InputError("face δ_" + std::to_string(k) + " into level " +
                         std::to_string(n) + " has wrong source/target");
      const ValidationReport morphism =
          check_dgla_morphism(levels[n - 1], levels[n], f);
      for (const auto& v : morphism.violations)
        report.violations.push_back(
            {"face-morphism", "δ_" + std::to_string(k) + " into level " +
                                  std::to_string(n) + ": " + v.identity + " at " +
                                  v.witness});
    }
  }
  // δ_h δ_k = δ_{k+1} δ_h for h <= k, on all composable levels
  for (size_t n = 1; n + 1 < levels.size(); ++n)
    for (size_t k = 0; k <= n; ++k)
      for (size_t h = 0; h <= k; ++h) {
        const LinearMap lhs = faces[n][h].compose(faces[n - 1][k]);
        const LinearMap rhs = faces[n][k + 1].compose(faces[n - 1][h]);
        if (!(lhs - rhs).is_zero())
          report.violations.push_back(
              {"semicosimplicial-identity",
               "(h,k) = (" + std::to_string(h) + "," + std::to_string(k) +
                   ") at level " + std::to_string(n + 1)});
      }
  return report;
}

Tower Tower::build(std::vector<DglaPtr> levels, std::vector<std::vector<LinearMap>> faces) {
  const ValidationReport report = check_semicosimplicial(levels, faces);
  if (!report.ok())
    throw InputError("tower " + report.violations.front().identity + " violation: " +
                     report.violations.front().witness);
  Tower tower;
  tower.levels_ = std::move(levels);
  tower.faces_ = std::move(faces);
  return tower;
}

LinearMap Tower::structure_map(size_t p, size_t n, const std::vector<size_t>& image) const {
  if (image.size() != p + 1 || n > top_level())
    throw InputError("structure map: malformed injection");
  for (size_t i = 0; i < image.size(); ++i) {
    if (image[i] > n) throw InputError("structure map image out of range");
    if (i > 0 && image[i] <= image[i - 1])
      throw InputError("structure map image not strictly increasing");
  }
  // Insert the missing vertices in increasing order; inserting value v into
  // the current image uses face index = #{current entries < v}. This realizes
  // the unique descending factorization into faces.
  std::vector<size_t> missing;
  for (size_t v = 0; v <= n; ++v)
    if (std::find(image.begin(), image.end(), v) == image.end()) missing.push_back(v);
  LinearMap acc = LinearMap::identity(levels_.at(p)->space());
  std::vector<size_t> current_image = image;
  size_t current = p;
  for (size_t v : missing) {
    const size_t k = static_cast<size_t>(
        std::count_if(current_image.begin(), current_image.end(),
                      [&](size_t w) { return w < v; }));
    acc = face(current + 1, k).compose(acc);
    current_image.insert(current_image.begin() + static_cast<long>(k), v);
    ++current;
  }
  if (current != n) throw std::logic_error("structure map composition level mismatch");
  return acc;
}

CechComplex cech_complex(const Tower& tower) {
  CechComplex out;

  // collect components per total degree
  std::map<int, std::vector<std::tuple<size_t, int, size_t>>> layout;
  std::map<int, std::vector<std::string>> labels;
  for (size_t n = 0; n <= tower.top_level(); ++n) {
    const GradedSpace& s = tower.level(n)->space();
    for (int p : s.degrees()) {
      const int m = static_cast<int>(n) + p;
      for (size_t i = 0; i < s.dim(p); ++i) {
        layout[m].push_back({n, p, i});
        labels[m].push_back("n" + std::to_string(n) + "|" + s.labels(p)[i]);
      }
    }
  }
  const GradedSpace total_space(labels);

  auto flat_index = [&](int m, size_t level, int p, size_t i) -> size_t {
    const auto& entries = layout.at(m);
    for (size_t idx = 0; idx < entries.size(); ++idx)
      if (entries[idx] == std::make_tuple(level, p, i)) return idx;
    throw std::logic_error("cech layout lookup failed");
  };

  std::map<int, Mat> d_blocks;
  for (const auto& [m, entries] : layout) {
    const size_t target_dim = total_space.dim(m + 1);
    if (target_dim == 0) continue;
    Mat block(target_dim, entries.size());
    for (size_t col = 0; col < entries.size(); ++col) {
      const auto [n, p, i] = entries[col];
      // internal differential: (n, p) → (n, p+1)
      {
        Vec e(tower.level(n)->space().dim(p), Rat(0));
        e[i] = 1;
        const Vec dv = tower.level(n)->complex().d_block(p).apply(e);
        for (size_t r = 0; r < dv.size(); ++r)
          if (dv[r] != 0) block.at(flat_index(m + 1, n, p + 1, r), col) += dv[r];
      }
      // horizontal: (−1)^p Σ_k (−1)^k δ_k : (n, p) → (n+1, p)
      if (n + 1 <= tower.top_level()) {
        Vec e(tower.level(n)->space().dim(p), Rat(0));
        e[i] = 1;
        const Rat sign_p = (p % 2 == 0) ? Rat(1) : Rat(-1);
        for (size_t k = 0; k <= n + 1; ++k) {
          const Vec fv = tower.face(n + 1, k).apply(p, e);
          const Rat sign = sign_p * ((k % 2 == 0) ? Rat(1) : Rat(-1));
          for (size_t r = 0; r < fv.size(); ++r)
            if (fv[r] != 0)
              block.at(flat_index(m + 1, n + 1, p, r), col) += sign * fv[r];
        }
      }
    }
    if (!block.is_zero()) d_blocks.emplace(m, std::move(block));
  }

  out.layout = std::move(layout);
  out.complex = CochainComplex(
      total_space, LinearMap(total_space, total_space, 1, std::move(d_blocks)));
  return out;
}

Vec CechComplex::embed(size_t level, int internal_degree, const Vec& coords) const {
  const int m = static_cast<int>(level) + internal_degree;
  auto it = layout.find(m);
  const size_t total = complex.space().dim(m);
  Vec out(total, Rat(0));
  if (it == layout.end()) {
    if (!vec_is_zero(coords)) throw InputError("embed: no such component");
    return out;
  }
  size_t seen = 0;
  for (size_t idx = 0; idx < it->second.size(); ++idx) {
    const auto& [n, p, i] = it->second[idx];
    if (n == level && p == internal_degree) {
      out[idx] = coords.at(i);
      ++seen;
    }
  }
  if (seen != coords.size()) throw InputError("embed: component size mismatch");
  return out;
}

Vec CechComplex::component(size_t level, int internal_degree, const Vec& total) const {
  const int m = static_cast<int>(level) + internal_degree;
  auto it = layout.find(m);
  if (it == layout.end()) return {};
  if (total.size() != it->second.size())
    throw InputError("component: total vector size mismatch");
  std::vector<Rat> out;
  for (size_t idx = 0; idx < it->second.size(); ++idx) {
    const auto& [n, p, i] = it->second[idx];
    (void)i;
    if (n == level && p == internal_degree) out.push_back(total[idx]);
  }
  return out;
}

}  // namespace defeng
