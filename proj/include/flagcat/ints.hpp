#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace flagcat {

// All counts, dimensions and multiplicities are exact integers; no floating
// point anywhere in the engine.
using Int = boost::multiprecision::cpp_int;

// An exhaustive search was asked to run above its configured limit.
class bound_error : public std::runtime_error {
 public:
  explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input; the message names the offending token.
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// Exact arithmetic produced an impossible value (negative multiplicity,
// inexact division, failed support assertion). Indicates a bug, not bad data.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

Int factorial(int m);

// Binomial coefficient; zero when k < 0, x < 0 or k > x.
Int binomial(long long x, long long k);

// Exact quotient; throws consistency_error on a nonzero remainder.
Int exact_div(const Int& num, const Int& den, const char* context);

}  // namespace flagcat
