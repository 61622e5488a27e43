#include "lck/rational.hpp"

#include <cctype>

namespace lck {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw InputError(where.empty() ? msg : where + ": " + msg);
}

}  // namespace

Scalar parse_scalar(const std::string& text, const std::string& where) {
  std::string s = text;
  if (s.empty()) fail(where, "empty rational literal");
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    fail(where, "malformed rational literal \"" + text + "\" (expected \"p\" or \"p/q\")");
  Integer n(num), d(den);
  if (d == 0) fail(where, "division by zero in rational literal \"" + text + "\"");
  if (negative) n = -n;
  return Scalar(n, d);
}

std::string scalar_str(const Scalar& s) {
  std::string out = numerator(s).str();
  if (denominator(s) != 1) out += "/" + denominator(s).str();
  return out;
}

}  // namespace lck
