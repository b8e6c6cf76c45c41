#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "defeng/matrix.hpp"

namespace defeng {

inline constexpr int kMaxBchWeight = 8;

inline int max_nil_index() {
  if (const char* env = std::getenv("ENGINE_MAX_NIL")) {
    const int v = std::atoi(env);
    if (v >= 2 && v <= kMaxBchWeight) return v;
  }
  return kMaxBchWeight;
}

inline Rat factorial(int n) {
  Rat f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Baker–Campbell–Hausdorff product by the Dynkin series, truncated at weight
// nil_index: all iterated brackets of total weight >= nil_index must vanish
// for the result to be exact (guaranteed for coefficients in the maximal
// ideal of an Artinian ring of that index).
//
// T needs +, scalar multiple and a zero test; Bracket(x, y) -> T.
template <class T, class Add, class Scale, class IsZero, class Bracket>
T bch(const T& x, const T& y, int nil_index, Add add, Scale scale, IsZero is_zero,
      Bracket bracket) {
  if (nil_index > kMaxBchWeight)
    throw UnsupportedError("bch: nilpotency index " + std::to_string(nil_index) +
                           " exceeds supported weight " + std::to_string(kMaxBchWeight));
  if (nil_index > max_nil_index())
    throw UnsupportedError("bch: nilpotency index exceeds ENGINE_MAX_NIL");

  T total = add(x, y);

  // Dynkin: sum over n >= 1 and tuples (r_1,s_1),...,(r_n,s_n), r_i+s_i >= 1,
  // of (-1)^(n-1)/n * [x^(r_1) y^(s_1) ... ] / (m * prod r_i! s_i!), where the
  // bracketing is right-nested and m is the total weight. Weight-1 terms are
  // the x + y above.
  struct Block {
    int r, s;
  };
  std::vector<Block> blocks;

  const auto evaluate_tuple = [&](int m) {
    // word letters: true = x, false = y
    std::vector<bool> word;
    word.reserve(m);
    for (const auto& b : blocks) {
      for (int t = 0; t < b.r; ++t) word.push_back(true);
      for (int t = 0; t < b.s; ++t) word.push_back(false);
    }
    // right-nested commutator [w1,[w2,...,[w_{m-1}, w_m]...]; words whose last
    // two letters agree vanish identically
    if (word[m - 1] == word[m - 2]) return;
    T acc = word[m - 1] ? x : y;
    for (int idx = m - 2; idx >= 0; --idx) acc = bracket(word[idx] ? x : y, acc);
    if (is_zero(acc)) return;
    const int n_blocks = static_cast<int>(blocks.size());
    Rat denom = Rat(n_blocks) * Rat(m);
    for (const auto& b : blocks) denom *= factorial(b.r) * factorial(b.s);
    const Rat coeff = ((n_blocks - 1) % 2 == 0 ? Rat(1) : Rat(-1)) / denom;
    total = add(total, scale(coeff, acc));
  };

  std::function<void(int, int)> enumerate = [&](int m, int weight_left) {
    if (weight_left == 0) {
      evaluate_tuple(m);
      return;
    }
    for (int r = 0; r <= weight_left; ++r)
      for (int s = 0; r + s <= weight_left; ++s) {
        if (r + s == 0) continue;
        blocks.push_back({r, s});
        enumerate(m, weight_left - r - s);
        blocks.pop_back();
      }
  };
  for (int m = 2; m <= nil_index; ++m) enumerate(m, m);
  return total;
}

// Gauge series e^a * l = l + sum_{k>=0} ad_a^k / (k+1)! ([a,l] - da); the
// series terminates by nilpotency (capped at 2*kMaxBchWeight iterations, with
// a hard error if it has not vanished by then).
template <class T, class Add, class Scale, class IsZero, class AdA>
T gauge_series(const T& l, const T& bracket_al_minus_da, Add add, Scale scale,
               IsZero is_zero, AdA ad_a) {
  T result = l;
  T term = bracket_al_minus_da;
  for (int k = 0; !is_zero(term); ++k) {
    if (k > 2 * kMaxBchWeight)
      throw UnsupportedError("gauge series did not terminate (input not nilpotent?)");
    result = add(result, scale(Rat(1) / factorial(k + 1), term));
    term = ad_a(term);
  }
  return result;
}

// Nilpotent matrix exponential/logarithm, used as the independent oracle for
// the Dynkin series.
Mat mat_exp_nilpotent(const Mat& n);
Mat mat_log_unipotent(const Mat& u);  // u = I + nilpotent
Mat bch_matrix(const Mat& x, const Mat& y, int nil_index);

}  // namespace defeng
