#include "flagcat/ints.hpp"

namespace flagcat {

Int factorial(int m) {
  Int r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

Int binomial(long long x, long long k) {
  if (k < 0 || x < 0 || k > x) return 0;
  if (k > x - k) k = x - k;
  Int num = 1;
  for (long long i = 0; i < k; ++i) {
    num *= Int(x - i);
    num /= Int(i + 1);  // exact: product of j consecutive integers is divisible by j!
  }
  return num;
}

Int exact_div(const Int& num, const Int& den, const char* context) {
  if (den == 0 || num % den != 0)
    throw consistency_error(std::string("inexact division in ") + context);
  return num / den;
}

}  // namespace flagcat
