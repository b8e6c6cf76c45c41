#include "defeng/artin.hpp"

#include <algorithm>

#include "defeng/bch.hpp"

namespace defeng {

namespace {

// Span basis (as independent column indices in echelon order) of a set of
// vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, size_t dim) {
  if (vectors.empty()) return {};
  const Mat m = Mat::from_cols(vectors, dim);
  std::vector<Vec> basis;
  for (size_t c : independent_columns(m)) basis.push_back(m.col(c));
  return basis;
}

}  // namespace

Vec ArtinAlgebra::mult_elems(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw InputError("artin element coordinate size mismatch");
  Vec out(dim(), Rat(0));
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const Vec& mij = mult_[i][j];
      for (size_t k = 0; k < dim(); ++k)
        if (mij[k] != 0) out[k] += a[i] * b[j] * mij[k];
    }
  }
  return out;
}

size_t ArtinAlgebra::index_of(const std::string& label) const {
  auto it = std::find(m_basis_.begin(), m_basis_.end(), label);
  if (it == m_basis_.end())
    throw InputError("unknown maximal-ideal basis label '" + label + "'");
  return static_cast<size_t>(it - m_basis_.begin());
}

ArtinPtr ArtinAlgebra::build(std::string name, std::vector<std::string> m_basis,
                             std::vector<std::vector<Vec>> mult) {
  const size_t s = m_basis.size();
  if (s == 0) throw InputError("artin algebra needs a nonempty maximal ideal basis");
  if (mult.size() != s)
    throw InputError("artin multiplication table has wrong row count");
  for (const auto& row : mult) {
    if (row.size() != s) throw InputError("artin multiplication table has wrong column count");
    for (const auto& v : row)
      if (v.size() != s) throw InputError("artin multiplication entry has wrong dimension");
  }

  auto algebra = std::shared_ptr<ArtinAlgebra>(new ArtinAlgebra());
  algebra->name_ = std::move(name);
  algebra->m_basis_ = std::move(m_basis);
  algebra->mult_ = std::move(mult);

  // commutativity and associativity on the basis
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      if (algebra->mult_[i][j] != algebra->mult_[j][i])
        throw InputError("artin table not commutative at (" + algebra->m_basis_[i] +
                         "," + algebra->m_basis_[j] + ")");
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j)
      for (size_t k = 0; k < s; ++k) {
        Vec ek(s, Rat(0));
        ek[k] = 1;
        const Vec lhs = algebra->mult_elems(algebra->mult_[i][j], ek);
        Vec ei(s, Rat(0));
        ei[i] = 1;
        const Vec rhs = algebra->mult_elems(ei, algebra->mult_[j][k]);
        if (lhs != rhs)
          throw InputError("artin table not associative at (" + algebra->m_basis_[i] +
                           "," + algebra->m_basis_[j] + "," + algebra->m_basis_[k] + ")");
      }

  // m-adic filtration: m^1 ⊇ m^2 ⊇ ...; nilpotency means it reaches 0
  std::vector<std::vector<Vec>> powers;
  std::vector<Vec> m1;
  for (size_t i = 0; i < s; ++i) {
    Vec e(s, Rat(0));
    e[i] = 1;
    m1.push_back(e);
  }
  powers.push_back(m1);
  while (!powers.back().empty()) {
    if (static_cast<int>(powers.size()) > kMaxBchWeight)
      throw InputError("artin table is not nilpotent within the supported index (" +
                       std::to_string(kMaxBchWeight) + ")");
    std::vector<Vec> products;
    for (size_t i = 0; i < s; ++i)
      for (const Vec& v : powers.back()) {
        Vec ei(s, Rat(0));
        ei[i] = 1;
        Vec p = algebra->mult_elems(ei, v);
        if (!vec_is_zero(p)) products.push_back(std::move(p));
      }
    powers.push_back(span_basis(products, s));
  }
  algebra->nil_index_ = static_cast<int>(powers.size());

  // adapted basis: extend from the deepest power upward
  std::vector<Vec> adapted_cols;
  std::vector<int> weights;
  Mat acc(s, 0);
  size_t acc_rank = 0;
  for (int k = static_cast<int>(powers.size()) - 1; k >= 0; --k) {
    for (const Vec& v : powers[static_cast<size_t>(k)]) {
      Mat candidate = acc.hcat(Mat::from_cols({v}, s));
      const size_t r = rank(candidate);
      if (r > acc_rank) {
        adapted_cols.push_back(v);
        weights.push_back(k + 1);
        acc = std::move(candidate);
        acc_rank = r;
      }
    }
  }
  if (acc_rank != s) throw std::logic_error("artin adapted basis construction failed");
  algebra->adapted_ = Mat::from_cols(adapted_cols, s);
  algebra->adapted_inv_ = *inverse(algebra->adapted_);
  algebra->weights_ = std::move(weights);

  if (algebra->nil_index_ > max_nil_index())
    throw UnsupportedError("artin algebra nilpotency index " +
                           std::to_string(algebra->nil_index_) +
                           " exceeds ENGINE_MAX_NIL");
  return algebra;
}

ArtinPtr curvilinear_artin(int order) {
  if (order < 2 || order > kMaxBchWeight)
    throw UnsupportedError("curvilinear base k[t]/(t^" + std::to_string(order) +
                           ") outside supported range [2," +
                           std::to_string(kMaxBchWeight) + "]");
  const size_t s = static_cast<size_t>(order - 1);
  std::vector<std::string> labels;
  for (size_t i = 1; i <= s; ++i)
    labels.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
  std::vector<std::vector<Vec>> mult(s, std::vector<Vec>(s, Vec(s, Rat(0))));
  for (size_t i = 1; i <= s; ++i)
    for (size_t j = 1; j <= s; ++j)
      if (i + j <= s) mult[i - 1][j - 1][i + j - 1] = 1;
  return ArtinAlgebra::build("k[t]/(t^" + std::to_string(order) + ")", labels, mult);
}

ArtinPtr dual_numbers() { return curvilinear_artin(2); }

ArtinPtr make_artin(const std::string& spec) {
  std::string body;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);

  // k[t]/(t^n)
  if (body.rfind("k[t]/(t^", 0) == 0 && body.back() == ')') {
    const std::string num = body.substr(8, body.size() - 9);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed artin spec '" + spec + "'");
    return curvilinear_artin(std::stoi(num));
  }

  // k[x,y]/(x,y)^n : basis x^a y^b with 1 <= a+b <= n-1
  if (body.rfind("k[x,y]/(x,y)^", 0) == 0) {
    const std::string num = body.substr(13);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("malformed artin spec '" + spec + "'");
    const int n = std::stoi(num);
    if (n < 2 || n > kMaxBchWeight)
      throw UnsupportedError("artin spec '" + spec + "' outside supported range");
    std::vector<std::pair<int, int>> monomials;
    for (int total = 1; total < n; ++total)
      for (int a = total; a >= 0; --a) monomials.push_back({a, total - a});
    const size_t s = monomials.size();
    auto label = [](std::pair<int, int> m) {
      std::string l;
      if (m.first > 0) l += (m.first == 1) ? "x" : "x^" + std::to_string(m.first);
      if (m.second > 0) l += (m.second == 1) ? "y" : "y^" + std::to_string(m.second);
      return l;
    };
    std::vector<std::string> labels;
    for (auto m : monomials) labels.push_back(label(m));
    std::vector<std::vector<Vec>> mult(s, std::vector<Vec>(s, Vec(s, Rat(0))));
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j) {
        const std::pair<int, int> prod{monomials[i].first + monomials[j].first,
                                       monomials[i].second + monomials[j].second};
        if (prod.first + prod.second < n) {
          auto it = std::find(monomials.begin(), monomials.end(), prod);
          mult[i][j][static_cast<size_t>(it - monomials.begin())] = 1;
        }
      }
    return ArtinAlgebra::build(body, labels, mult);
  }

  throw InputError("unsupported artin spec '" + spec +
                   "' (expected k[t]/(t^n), k[x,y]/(x,y)^n, or an explicit table)");
}

}  // namespace defeng
