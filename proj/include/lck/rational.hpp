#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lck {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. Everything in the library computes over these;
// there is no floating point anywhere in the core.
using Scalar = boost::multiprecision::cpp_rational;

// Malformed user input (files, CLI arguments, catalog parameters).
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parses "p" or "p/q" with q a positive integer. `where` is prepended to
// error messages so parse failures carry the field path.
Scalar parse_scalar(const std::string& text, const std::string& where = "");

// Formats as "p" or "p/q" (denominator omitted when 1).
std::string scalar_str(const Scalar& s);

inline int sign_of(const Scalar& s) { return s.sign(); }

}  // namespace lck
