#include "defeng/rational.hpp"

#include <cctype>

namespace defeng {

Rat parse_rat(const std::string& text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body = text.substr(begin, end - begin);
  if (body.empty()) throw InputError("empty rational literal");

  const auto check_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  const size_t slash = body.find('/');
  try {
    if (slash == std::string::npos) {
      if (!check_int(body)) throw InputError("malformed rational literal '" + body + "'");
      return Rat(BigInt(body));
    }
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
      throw InputError("malformed rational literal '" + body + "'");
    return make_rat(BigInt(num), BigInt(den));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed rational literal '" + body + "'");
  }
}

std::string rat_str(const Rat& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt pivot_measure(const Rat& value) {
  return abs(numerator(value)) * denominator(value);
}

}  // namespace defeng
