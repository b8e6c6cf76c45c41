#include "defeng/dgla.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace defeng {

namespace {

Rat koszul_sign(int p, int q) { return (p * q) % 2 == 0 ? Rat(1) : Rat(-1); }

std::string triple_witness(const GradedSpace& s, int p, size_t i, int q, size_t j,
                           std::optional<std::pair<int, size_t>> third = std::nullopt) {
  std::ostringstream os;
  os << "(" << s.labels(p)[i] << "[" << p << "], " << s.labels(q)[j] << "[" << q << "]";
  if (third) os << ", " << s.labels(third->first)[third->second] << "[" << third->first << "]";
  os << ")";
  return os.str();
}

// Expands sparse entries to the full table, completing missing mirror entries
// by graded antisymmetry. Inconsistent duplicates are reported later by the
// antisymmetry check.
std::map<std::pair<int, int>, std::vector<Vec>> expand_table(const DglaData& data) {
  const GradedSpace& s = data.space;
  std::map<std::pair<int, int>, std::vector<Vec>> table;
  auto ensure = [&](int p, int q) -> std::vector<Vec>& {
    auto key = std::make_pair(p, q);
    auto it = table.find(key);
    if (it == table.end()) {
      it = table.emplace(key, std::vector<Vec>(s.dim(p) * s.dim(q),
                                               Vec(s.dim(p + q), Rat(0)))).first;
    }
    return it->second;
  };
  std::set<std::tuple<int, int, size_t, size_t>> given;
  for (const auto& e : data.brackets) {
    if (s.dim(e.p) <= e.i || s.dim(e.q) <= e.j)
      throw InputError("bracket entry index out of range in degrees (" +
                       std::to_string(e.p) + "," + std::to_string(e.q) + ")");
    if (e.value.size() != s.dim(e.p + e.q))
      throw InputError("bracket entry value has wrong dimension in degree " +
                       std::to_string(e.p + e.q));
    ensure(e.p, e.q)[e.i * s.dim(e.q) + e.j] = e.value;
    given.insert({e.p, e.q, e.i, e.j});
  }
  // mirror by the sign rule where the transpose entry was not given
  for (const auto& e : data.brackets) {
    if (given.count({e.q, e.p, e.j, e.i})) continue;
    ensure(e.q, e.p)[e.j * s.dim(e.p) + e.i] =
        vec_scale(-koszul_sign(e.p, e.q), e.value);
    given.insert({e.q, e.p, e.j, e.i});
  }
  return table;
}

Vec table_bracket(const std::map<std::pair<int, int>, std::vector<Vec>>& table,
                  const GradedSpace& s, int p, size_t i, int q, size_t j) {
  auto it = table.find({p, q});
  if (it == table.end()) return Vec(s.dim(p + q), Rat(0));
  return it->second[i * s.dim(q) + j];
}

Vec elem_bracket(const std::map<std::pair<int, int>, std::vector<Vec>>& table,
                 const GradedSpace& s, int p, const Vec& x, int q, const Vec& y) {
  Vec out(s.dim(p + q), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      const Vec b = table_bracket(table, s, p, i, q, j);
      for (size_t k = 0; k < out.size(); ++k)
        if (b[k] != 0) out[k] += x[i] * y[j] * b[k];
    }
  }
  return out;
}

void run_checks(const DglaData& data,
                const std::map<std::pair<int, int>, std::vector<Vec>>& table,
                CheckLevel level, ValidationReport& report) {
  const GradedSpace& s = data.space;
  const std::vector<int> degrees = s.degrees();

  LinearMap d(s, s, 1, data.differential_blocks);
  for (int n : degrees) {
    if (!(d.block(n + 1) * d.block(n)).is_zero())
      report.violations.push_back({"square-zero", "d∘d != 0 from degree " + std::to_string(n)});
  }

  // antisymmetry on all basis pairs
  for (int p : degrees)
    for (int q : degrees) {
      if (s.dim(p + q) == 0) continue;
      for (size_t i = 0; i < s.dim(p); ++i)
        for (size_t j = 0; j < s.dim(q); ++j) {
          const Vec lhs = table_bracket(table, s, p, i, q, j);
          const Vec rhs = vec_scale(-koszul_sign(p, q), table_bracket(table, s, q, j, p, i));
          if (lhs != rhs)
            report.violations.push_back(
                {"antisymmetry", triple_witness(s, p, i, q, j)});
        }
    }

  // Leibniz on all basis pairs: d[x,y] = [dx,y] + (-1)^p [x,dy]
  for (int p : degrees)
    for (int q : degrees) {
      for (size_t i = 0; i < s.dim(p); ++i)
        for (size_t j = 0; j < s.dim(q); ++j) {
          const Vec br = table_bracket(table, s, p, i, q, j);
          const Vec lhs = d.block(p + q).apply(br);
          Vec dx(s.dim(p + 1), Rat(0));
          {
            Vec ei(s.dim(p), Rat(0));
            ei[i] = 1;
            dx = d.block(p).apply(ei);
          }
          Vec dy(s.dim(q + 1), Rat(0));
          {
            Vec ej(s.dim(q), Rat(0));
            ej[j] = 1;
            dy = d.block(q).apply(ej);
          }
          Vec rhs = elem_bracket(table, s, p + 1, dx, q, [&] {
            Vec ej(s.dim(q), Rat(0));
            ej[j] = 1;
            return ej;
          }());
          Vec ei(s.dim(p), Rat(0));
          ei[i] = 1;
          const Vec second = elem_bracket(table, s, p, ei, q + 1, dy);
          rhs = vec_add(rhs, vec_scale(p % 2 == 0 ? Rat(1) : Rat(-1), second));
          if (lhs != rhs)
            report.violations.push_back({"leibniz", triple_witness(s, p, i, q, j)});
        }
    }

  if (level == CheckLevel::kFull) {
    // graded Jacobi on all basis triples:
    // [x,[y,z]] = [[x,y],z] + (-1)^{pq} [y,[x,z]]
    for (int p : degrees)
      for (int q : degrees)
        for (int r : degrees) {
          if (s.dim(p + q + r) == 0) continue;
          for (size_t i = 0; i < s.dim(p); ++i)
            for (size_t j = 0; j < s.dim(q); ++j)
              for (size_t k = 0; k < s.dim(r); ++k) {
                Vec ei(s.dim(p), Rat(0)), ej(s.dim(q), Rat(0)), ek(s.dim(r), Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                const Vec yz = table_bracket(table, s, q, j, r, k);
                const Vec lhs = elem_bracket(table, s, p, ei, q + r, yz);
                const Vec xy = table_bracket(table, s, p, i, q, j);
                Vec rhs = elem_bracket(table, s, p + q, xy, r, ek);
                const Vec xz = table_bracket(table, s, p, i, r, k);
                const Vec second = elem_bracket(table, s, q, ej, p + r, xz);
                rhs = vec_add(rhs, vec_scale(koszul_sign(p, q), second));
                if (lhs != rhs)
                  report.violations.push_back(
                      {"jacobi", triple_witness(s, p, i, q, j, std::make_pair(r, k))});
              }
        }
  }
}

}  // namespace

ValidationReport check_axioms(const DglaData& data, CheckLevel level) {
  ValidationReport report;
  const auto table = expand_table(data);  // throws InputError on shape problems
  run_checks(data, table, level, report);
  return report;
}

DglaPtr Dgla::build(DglaData data, CheckLevel level) {
  const auto table = expand_table(data);
  ValidationReport report;
  run_checks(data, table, level, report);
  if (!report.ok())
    throw InputError("DGLA " + report.violations.front().identity + " violation at " +
                     report.violations.front().witness);
  auto dgla = std::shared_ptr<Dgla>(new Dgla());
  dgla->complex_ = CochainComplex(
      data.space, LinearMap(data.space, data.space, 1, data.differential_blocks));
  dgla->brackets_ = table;
  return dgla;
}

Vec Dgla::bracket_basis(int p, size_t i, int q, size_t j) const {
  auto it = brackets_.find({p, q});
  if (it == brackets_.end()) return Vec(space().dim(p + q), Rat(0));
  return it->second[i * space().dim(q) + j];
}

GElem Dgla::d(const GElem& x) const {
  return {x.degree + 1, complex_.d_block(x.degree).apply(x.coords)};
}

GElem Dgla::bracket(const GElem& x, const GElem& y) const {
  GElem out = zero(x.degree + y.degree);
  for (size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (size_t j = 0; j < y.coords.size(); ++j) {
      if (y.coords[j] == 0) continue;
      const Vec b = bracket_basis(x.degree, i, y.degree, j);
      for (size_t k = 0; k < out.coords.size(); ++k)
        if (b[k] != 0) out.coords[k] += x.coords[i] * y.coords[j] * b[k];
    }
  }
  return out;
}

GElem Dgla::zero(int degree) const {
  return {degree, Vec(space().dim(degree), Rat(0))};
}

GElem Dgla::basis_elem(int degree, size_t i) const {
  GElem e = zero(degree);
  e.coords[i] = 1;
  return e;
}

bool Dgla::is_abelian() const {
  for (const auto& [pq, entries] : brackets_)
    for (const auto& v : entries)
      if (!vec_is_zero(v)) return false;
  return true;
}

ValidationReport check_dgla_morphism(const DglaPtr& source, const DglaPtr& target,
                                     const LinearMap& map) {
  ValidationReport report;
  if (!(map.source() == source->space()) || !(map.target() == target->space()) ||
      map.shift() != 0)
    throw InputError("DGLA morphism must be a degree-0 map between the given algebras");
  for (int n : source->space().degrees()) {
    const Mat lhs = target->complex().d_block(n) * map.block(n);
    const Mat rhs = map.block(n + 1) * source->complex().d_block(n);
    if (!(lhs == rhs))
      report.violations.push_back({"chain-map", "degree " + std::to_string(n)});
  }
  for (int p : source->space().degrees())
    for (int q : source->space().degrees())
      for (size_t i = 0; i < source->space().dim(p); ++i)
        for (size_t j = 0; j < source->space().dim(q); ++j) {
          const Vec br = source->bracket_basis(p, i, q, j);
          const Vec lhs = map.block(p + q).apply(br);
          GElem fi{p, map.apply(p, [&] {
                     Vec e(source->space().dim(p), Rat(0));
                     e[i] = 1;
                     return e;
                   }())};
          GElem fj{q, map.apply(q, [&] {
                     Vec e(source->space().dim(q), Rat(0));
                     e[j] = 1;
                     return e;
                   }())};
          const Vec rhs = target->bracket(fi, fj).coords;
          if (lhs != rhs)
            report.violations.push_back(
                {"bracket-preservation",
                 triple_witness(source->space(), p, i, q, j)});
        }
  return report;
}

DglaMorphism make_dgla_morphism(DglaPtr source, DglaPtr target, LinearMap map) {
  const ValidationReport report = check_dgla_morphism(source, target, map);
  if (!report.ok())
    throw InputError("DGLA morphism " + report.violations.front().identity +
                     " violation at " + report.violations.front().witness);
  return DglaMorphism{std::move(source), std::move(target), std::move(map)};
}

CohomologyDgla cohomology_bracket(const DglaPtr& dgla) {
  CohomologyDgla out;
  std::map<int, std::vector<std::string>> labels;
  for (int n : dgla->space().degrees()) {
    CohomologyPresentation pres = cohomology(dgla->complex(), n);
    if (pres.dimension > 0) {
      std::vector<std::string> ls;
      for (size_t k = 0; k < pres.dimension; ++k)
        ls.push_back("h" + std::to_string(n) + "_" + std::to_string(k));
      labels[n] = ls;
    }
    out.presentations.emplace(n, std::move(pres));
  }
  DglaData data;
  data.space = GradedSpace(labels);
  for (const auto& [p, hp] : out.presentations) {
    if (hp.dimension == 0) continue;
    for (const auto& [q, hq] : out.presentations) {
      if (hq.dimension == 0) continue;
      auto target = out.presentations.find(p + q);
      for (size_t i = 0; i < hp.dimension; ++i)
        for (size_t j = 0; j < hq.dimension; ++j) {
          GElem zi{p, hp.representatives[i]};
          GElem zj{q, hq.representatives[j]};
          const GElem br = dgla->bracket(zi, zj);
          Vec value(data.space.dim(p + q), Rat(0));
          if (target != out.presentations.end() && target->second.dimension > 0)
            value = target->second.project(br.coords);
          data.brackets.push_back({p, q, i, j, value});
        }
    }
  }
  out.algebra = Dgla::build(std::move(data), CheckLevel::kFull);
  return out;
}

}  // namespace defeng
