#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace defeng {

// Exact arithmetic throughout: every scalar in the engine is a rational in
// lowest terms with positive denominator (mpq invariant).
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Raised on malformed user input (parse errors, shape mismatches, bad specs).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds an engine limit (nilpotency index, polynomial
// degree, search-space caps).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return Rat(num) / Rat(den);
}

inline Rat rat_of_long(long long n) { return Rat(n); }

// Parses "p", "-p", "p/q" with optional surrounding whitespace.
Rat parse_rat(const std::string& text);

// Canonical form "p" or "p/q" (q > 1), matching the wire format.
std::string rat_str(const Rat& value);

// Pivot-size measure |numerator| * denominator, used for pivot selection.
BigInt pivot_measure(const Rat& value);

}  // namespace defeng
